#include "sqtop/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace sqtop {

std::vector<int> mask_vertices(VertexMask f) {
    std::vector<int> vs;
    while (f) {
        int v = std::countr_zero(f) + 1;
        vs.push_back(v);
        f &= f - 1;
    }
    return vs;
}

VertexMask mask_from_vertices(const std::vector<int>& vs) {
    VertexMask f = 0;
    for (int v : vs) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        VertexMask b = vertex_bit(v);
        if (f & b)
            throw std::invalid_argument("repeated vertex in simplex: " + std::to_string(v));
        f |= b;
    }
    return f;
}

int mask_dimension(VertexMask f) { return std::popcount(f) - 1; }

bool simplex_lex_less(VertexMask a, VertexMask b) {
    VertexMask d = a ^ b;
    if (!d)
        return false;
    // The face owning the lowest differing vertex is lexicographically first.
    return a & (d & -d);
}

std::string simplex_to_string(VertexMask f) {
    std::string s = "[";
    bool first = true;
    for (int v : mask_vertices(f)) {
        if (!first)
            s += ',';
        first = false;
        s += std::to_string(v);
    }
    s += ']';
    return s;
}

SimplicialComplex::SimplicialComplex(int ghost_vertices) {
    *this = build(ghost_vertices, {}, {});
}

SimplicialComplex SimplicialComplex::build(int m, std::vector<VertexMask> closed_faces,
                                           std::vector<int> labels) {
    if (m < 0 || m > kMaxVertices)
        throw std::invalid_argument("vertex count out of range");
    auto d = std::make_shared<Data>();
    d->m = m;

    std::sort(closed_faces.begin(), closed_faces.end());
    closed_faces.erase(std::unique(closed_faces.begin(), closed_faces.end()),
                       closed_faces.end());

    int dim = -1;
    for (VertexMask f : closed_faces)
        dim = std::max(dim, mask_dimension(f));
    d->by_dim.assign(dim + 2, {});
    d->by_dim[0].push_back(0);
    for (VertexMask f : closed_faces) {
        if (f == 0)
            continue;
        if (f & ~full_mask(m))
            throw std::invalid_argument("face uses a vertex beyond m");
        d->face_set.insert(f);
        d->by_dim[mask_dimension(f) + 1].push_back(f);
    }
    for (auto& level : d->by_dim)
        std::sort(level.begin(), level.end(), simplex_lex_less);

    for (VertexMask f : closed_faces) {
        if (f == 0)
            continue;
        bool maximal = true;
        for (int v = 1; v <= m && maximal; ++v)
            if (!(f & vertex_bit(v)) && d->face_set.count(f | vertex_bit(v)))
                maximal = false;
        if (maximal)
            d->maximal.push_back(f);
    }
    std::sort(d->maximal.begin(), d->maximal.end(), simplex_lex_less);

    if (labels.empty()) {
        labels.resize(m);
        std::iota(labels.begin(), labels.end(), 1);
    }
    if (static_cast<int>(labels.size()) != m)
        throw std::invalid_argument("label list size must equal m");
    d->labels = std::move(labels);

    return SimplicialComplex(std::move(d));
}

SimplicialComplex SimplicialComplex::from_facets(
    int m, const std::vector<std::vector<int>>& facets) {
    std::vector<VertexMask> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets)
        masks.push_back(mask_from_vertices(f));
    return from_facet_masks(m, masks);
}

SimplicialComplex SimplicialComplex::from_facet_masks(
    int m, const std::vector<VertexMask>& facets) {
    if (m < 0 || m > kMaxVertices)
        throw std::invalid_argument("vertex count out of range");
    std::unordered_set<VertexMask> all;
    for (VertexMask f : facets) {
        if (f & ~full_mask(m))
            throw std::invalid_argument("facet vertex exceeds the vertex count");
        // Enumerate the subsets of f.
        VertexMask s = f;
        while (true) {
            all.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & f;
        }
    }
    return build(m, std::vector<VertexMask>(all.begin(), all.end()), {});
}

SimplicialComplex SimplicialComplex::from_closed_faces(int m,
                                                       std::vector<VertexMask> faces,
                                                       std::vector<int> labels) {
    return build(m, std::move(faces), std::move(labels));
}

int SimplicialComplex::vertex_count() const { return d_->m; }

int SimplicialComplex::dimension() const {
    return static_cast<int>(d_->by_dim.size()) - 2;
}

bool SimplicialComplex::has_face(VertexMask f) const {
    return f == 0 || d_->face_set.count(f) != 0;
}

const std::vector<VertexMask>& SimplicialComplex::faces(int j) const {
    static const std::vector<VertexMask> none;
    if (j < -1 || j + 1 >= static_cast<int>(d_->by_dim.size()))
        return none;
    return d_->by_dim[j + 1];
}

int SimplicialComplex::face_index(int j, VertexMask f) const {
    const auto& level = faces(j);
    auto it = std::lower_bound(level.begin(), level.end(), f, simplex_lex_less);
    if (it == level.end() || *it != f)
        return -1;
    return static_cast<int>(it - level.begin());
}

const std::vector<VertexMask>& SimplicialComplex::facets() const {
    return d_->maximal;
}

std::size_t SimplicialComplex::total_faces() const { return d_->face_set.size(); }

std::vector<long> SimplicialComplex::f_vector() const {
    std::vector<long> f;
    for (int j = 0; j <= dimension(); ++j)
        f.push_back(static_cast<long>(face_count(j)));
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int j = 0; j <= dimension(); ++j)
        chi += (j % 2 == 0 ? 1 : -1) * static_cast<long>(face_count(j));
    return chi;
}

bool SimplicialComplex::is_connected() const {
    const auto& verts = faces(0);
    if (verts.empty())
        return false;
    std::vector<int> comp(d_->m + 1, -1);
    std::vector<int> stack;
    int root = mask_vertices(verts[0])[0];
    comp[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (VertexMask e : faces(1)) {
            if (!(e & vertex_bit(v)))
                continue;
            int w = mask_vertices(e ^ vertex_bit(v))[0];
            if (comp[w] == -1) {
                comp[w] = 0;
                stack.push_back(w);
            }
        }
    }
    for (VertexMask vm : verts)
        if (comp[mask_vertices(vm)[0]] == -1)
            return false;
    return true;
}

bool SimplicialComplex::is_ghost(int v) const {
    if (v < 1 || v > d_->m)
        throw std::invalid_argument("vertex id out of range");
    return !has_face(vertex_bit(v));
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
    std::vector<int> gs;
    for (int v = 1; v <= d_->m; ++v)
        if (!has_face(vertex_bit(v)))
            gs.push_back(v);
    return gs;
}

namespace {

// Compress the bits of f onto the positions selected by the mask "universe",
// renumbering to 1..|universe|.
VertexMask compress_mask(VertexMask f, VertexMask universe) {
    VertexMask out = 0;
    int pos = 0;
    while (universe) {
        VertexMask low = universe & -universe;
        if (f & low)
            out |= VertexMask{1} << pos;
        ++pos;
        universe &= universe - 1;
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::full_subcomplex(VertexMask j) const {
    if (j & ~full_mask(d_->m))
        throw std::invalid_argument("full_subcomplex: subset not within [m]");
    std::vector<VertexMask> kept;
    for (int deg = 0; deg <= dimension(); ++deg)
        for (VertexMask f : faces(deg))
            if ((f & ~j) == 0)
                kept.push_back(compress_mask(f, j));
    std::vector<int> labels;
    for (int v : mask_vertices(j))
        labels.push_back(d_->labels[v - 1]);
    return build(std::popcount(j), std::move(kept), std::move(labels));
}

SimplicialComplex SimplicialComplex::link(int v) const {
    if (v < 1 || v > d_->m)
        throw std::invalid_argument("vertex id out of range");
    const VertexMask vb = vertex_bit(v);
    const VertexMask universe = full_mask(d_->m) & ~vb;
    std::vector<VertexMask> kept;
    for (int deg = 0; deg <= dimension(); ++deg)
        for (VertexMask f : faces(deg))
            if (!(f & vb) && has_face(f | vb))
                kept.push_back(compress_mask(f, universe));
    std::vector<int> labels;
    for (int w = 1; w <= d_->m; ++w)
        if (w != v)
            labels.push_back(d_->labels[w - 1]);
    return build(d_->m - 1, std::move(kept), std::move(labels));
}

SimplicialComplex SimplicialComplex::star(int v) const {
    if (v < 1 || v > d_->m)
        throw std::invalid_argument("vertex id out of range");
    const VertexMask vb = vertex_bit(v);
    std::vector<VertexMask> kept;
    for (int deg = 0; deg <= dimension(); ++deg)
        for (VertexMask f : faces(deg))
            if (has_face(f | vb))
                kept.push_back(f);
    return build(d_->m, std::move(kept), d_->labels);
}

const std::vector<int>& SimplicialComplex::labels() const { return d_->labels; }

bool SimplicialComplex::same_faces(const SimplicialComplex& other) const {
    if (shares_data(other))
        return true;
    return d_->m == other.d_->m && d_->by_dim == other.d_->by_dim;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int ma = a.vertex_count(), mb = b.vertex_count();
    if (ma + mb > kMaxVertices)
        throw std::invalid_argument("join: too many vertices");
    std::vector<VertexMask> faces;
    for (int da = -1; da <= a.dimension(); ++da)
        for (VertexMask fa : a.faces(da))
            for (int db = -1; db <= b.dimension(); ++db)
                for (VertexMask fb : b.faces(db))
                    faces.push_back(fa | (fb << ma));
    return SimplicialComplex::from_closed_faces(ma + mb, std::move(faces));
}

SimplicialComplex p26() {
    static const std::vector<std::vector<int>> facets = {
        {1, 2, 3}, {1, 2, 6}, {1, 3, 5}, {1, 4, 5}, {1, 4, 6},
        {2, 3, 4}, {2, 4, 5}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}};
    return SimplicialComplex::from_facets(6, facets);
}

SimplicialComplex simplex_complex(int n) {
    if (n < 0)
        throw std::invalid_argument("simplex: dimension must be >= 0");
    return SimplicialComplex::from_facet_masks(n + 1, {full_mask(n + 1)});
}

SimplicialComplex boundary_complex(int n) {
    if (n < 1)
        throw std::invalid_argument("boundary: dimension must be >= 1");
    const VertexMask full = full_mask(n + 1);
    std::vector<VertexMask> facets;
    for (int v = 1; v <= n + 1; ++v)
        facets.push_back(full & ~vertex_bit(v));
    return SimplicialComplex::from_facet_masks(n + 1, facets);
}

SimplicialComplex points_complex(int k) {
    if (k < 0)
        throw std::invalid_argument("points: count must be >= 0");
    std::vector<VertexMask> facets;
    for (int v = 1; v <= k; ++v)
        facets.push_back(vertex_bit(v));
    return SimplicialComplex::from_facet_masks(k, facets);
}

SimplicialComplex cycle_complex(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<VertexMask> facets;
    for (int v = 1; v < n; ++v)
        facets.push_back(vertex_bit(v) | vertex_bit(v + 1));
    facets.push_back(vertex_bit(n) | vertex_bit(1));
    return SimplicialComplex::from_facet_masks(n, facets);
}

SimplicialComplex cone_complex(const SimplicialComplex& k) {
    return join(k, points_complex(1));
}

SimplicialComplex empty_complex(int ghost_vertices) {
    return SimplicialComplex(ghost_vertices);
}

std::optional<SimplicialComplex> named_complex(const std::string& spec) {
    auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg =
        colon == std::string::npos ? std::string() : spec.substr(colon + 1);

    auto int_arg = [&](int dflt) {
        if (arg.empty())
            return dflt;
        return std::stoi(arg);
    };

    try {
        if (name == "P26" && arg.empty())
            return p26();
        if (name == "point" && arg.empty())
            return points_complex(1);
        if (name == "empty")
            return empty_complex(int_arg(0));
        if (name == "simplex" && !arg.empty())
            return simplex_complex(int_arg(0));
        if (name == "boundary" && !arg.empty())
            return boundary_complex(int_arg(0));
        if (name == "points" && !arg.empty())
            return points_complex(int_arg(0));
        if (name == "cycle" && !arg.empty())
            return cycle_complex(int_arg(0));
        if (name == "cone" && !arg.empty()) {
            auto inner = named_complex(arg);
            if (!inner)
                return std::nullopt;
            return cone_complex(*inner);
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace sqtop
