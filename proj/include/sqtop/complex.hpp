#pragma once
// Finite abstract simplicial complexes on labeled vertices 1..m (ghost
// vertices allowed), stored as bit masks per dimension in lexicographic
// order. Complexes are immutable after construction and cheap to copy.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace sqtop {

using VertexMask = std::uint64_t;
inline constexpr int kMaxVertices = 64;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << (v - 1); }

constexpr VertexMask full_mask(int m) {
    return m >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << m) - 1;
}

std::vector<int> mask_vertices(VertexMask f);
VertexMask mask_from_vertices(const std::vector<int>& vs);
int mask_dimension(VertexMask f);  // |f| - 1, so -1 for the empty face

// Lexicographic order on the increasing vertex tuples of two faces.
bool simplex_lex_less(VertexMask a, VertexMask b);

std::string simplex_to_string(VertexMask f);  // "[1,4,5]", "[]" for the empty face

class SimplicialComplex {
public:
    // The empty complex {∅}, possibly with ghost vertices.
    explicit SimplicialComplex(int ghost_vertices = 0);

    static SimplicialComplex from_facets(int m,
                                         const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_facet_masks(int m,
                                              const std::vector<VertexMask>& facets);
    // Faces must already be downward closed (the empty face is implied).
    static SimplicialComplex from_closed_faces(int m, std::vector<VertexMask> faces,
                                               std::vector<int> labels = {});

    int vertex_count() const;
    int dimension() const;  // -1 for {∅}
    bool has_face(VertexMask f) const;
    const std::vector<VertexMask>& faces(int j) const;  // empty list out of range
    std::size_t face_count(int j) const { return faces(j).size(); }
    // Position of f among the j-faces in canonical order, -1 if absent.
    int face_index(int j, VertexMask f) const;
    const std::vector<VertexMask>& facets() const;  // maximal nonempty faces
    std::size_t total_faces() const;                // nonempty faces

    std::vector<long> f_vector() const;
    long euler_characteristic() const;
    long reduced_euler_characteristic() const { return euler_characteristic() - 1; }
    bool is_connected() const;
    bool is_ghost(int v) const;
    std::vector<int> ghost_vertices() const;

    SimplicialComplex full_subcomplex(VertexMask j) const;
    SimplicialComplex link(int v) const;
    SimplicialComplex star(int v) const;

    // Original vertex labels carried through full_subcomplex/link;
    // labels()[i] is the label of vertex i+1.
    const std::vector<int>& labels() const;

    bool same_faces(const SimplicialComplex& other) const;
    bool shares_data(const SimplicialComplex& other) const { return d_ == other.d_; }

private:
    struct Data {
        int m = 0;
        std::vector<std::vector<VertexMask>> by_dim;  // by_dim[j+1] = j-faces
        std::unordered_set<VertexMask> face_set;      // nonempty faces
        std::vector<VertexMask> maximal;              // facets, lex order
        std::vector<int> labels;
    };
    std::shared_ptr<const Data> d_;

    explicit SimplicialComplex(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static SimplicialComplex build(int m, std::vector<VertexMask> closed_faces,
                                   std::vector<int> labels);
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Named complexes used throughout.
SimplicialComplex p26();
SimplicialComplex simplex_complex(int n);   // Δ^n on n+1 vertices
SimplicialComplex boundary_complex(int n);  // ∂Δ^n, the (n-1)-sphere
SimplicialComplex points_complex(int k);    // k disjoint vertices
SimplicialComplex cycle_complex(int n);     // n-gon, n >= 3
SimplicialComplex cone_complex(const SimplicialComplex& k);  // apex is vertex m+1
SimplicialComplex empty_complex(int ghost_vertices = 0);

// Registry lookup for strings like "P26", "boundary:3", "points:2",
// "cone:P26", "empty:2", "point". Returns nullopt for unknown names.
std::optional<SimplicialComplex> named_complex(const std::string& spec);

}  // namespace sqtop
