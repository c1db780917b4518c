#pragma once
// Simplicial cochain complexes over F2, reduced and unreduced: coboundary
// matrices, Betti numbers, explicit cohomology bases with class reduction,
// and the Alexander-Whitney cup product.

#include <map>
#include <vector>

#include "sqtop/complex.hpp"
#include "sqtop/f2.hpp"

namespace sqtop {

// A cochain of degree j on a complex: an F2 vector indexed by the j-faces
// in canonical order. Degree -1 is the dual of the empty face.
class Cochain {
public:
    Cochain(SimplicialComplex k, int degree, BitVector coeffs);

    static Cochain zero(const SimplicialComplex& k, int degree);
    static Cochain dual(const SimplicialComplex& k, VertexMask face);
    // Sum of duals; all faces must exist in k and have the same dimension.
    static Cochain sum_of_duals(const SimplicialComplex& k,
                                const std::vector<VertexMask>& faces);

    const SimplicialComplex& complex() const { return k_; }
    int degree() const { return degree_; }
    const BitVector& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.none(); }
    bool value_on(VertexMask face) const;
    std::vector<VertexMask> support() const;

    Cochain& operator+=(const Cochain& other);
    friend Cochain operator+(Cochain a, const Cochain& b) {
        a += b;
        return a;
    }
    bool operator==(const Cochain& other) const {
        return degree_ == other.degree_ && coeffs_ == other.coeffs_ &&
               k_.same_faces(other.k_);
    }

private:
    SimplicialComplex k_;
    int degree_;
    BitVector coeffs_;
};

// Matrix of δ: C^j -> C^{j+1}; rows are (j+1)-faces, columns are j-faces.
// j = -1 (reduced only) gives the augmentation column.
BitMatrix coboundary_matrix(const SimplicialComplex& k, int j, bool reduced = true);

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
bool is_coboundary(const Cochain& c, bool reduced = true);

// Alexander-Whitney product: value on [v0..v_{p+q}] is
// a(front p-face) * b(back q-face). Vertex order is the natural one.
Cochain cup(const Cochain& a, const Cochain& b);

// Restriction of a cochain to the full subcomplex on j.
Cochain restrict_to(const Cochain& c, VertexMask j);

// Nonzero Betti numbers by degree.
std::map<int, long> betti(const SimplicialComplex& k, bool reduced = true);

// Per-degree cocycle representatives plus reduction of any cocycle to its
// class coordinates modulo coboundaries.
class CohomologyBasis {
public:
    CohomologyBasis(SimplicialComplex k, bool reduced = true);

    const SimplicialComplex& complex() const { return k_; }
    bool reduced() const { return reduced_; }
    int min_degree() const { return reduced_ ? -1 : 0; }
    int max_degree() const { return k_.dimension(); }

    std::size_t dim(int degree) const;
    std::vector<Cochain> representatives(int degree) const;
    BitVector reduce(const Cochain& cocycle) const;
    std::map<int, long> betti_map() const;

private:
    SimplicialComplex k_;
    bool reduced_;
    std::vector<QuotientBasis> levels_;  // index degree - min_degree
};

}  // namespace sqtop
