#include "sqtop/cochain.hpp"

#include <bit>
#include <stdexcept>

namespace sqtop {

Cochain::Cochain(SimplicialComplex k, int degree, BitVector coeffs)
    : k_(std::move(k)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < -1)
        throw std::invalid_argument("cochain degree must be >= -1");
    if (coeffs_.size() != k_.face_count(degree_))
        throw std::invalid_argument("cochain length does not match the face count");
}

Cochain Cochain::zero(const SimplicialComplex& k, int degree) {
    return Cochain(k, degree, BitVector(k.face_count(degree)));
}

Cochain Cochain::dual(const SimplicialComplex& k, VertexMask face) {
    const int j = mask_dimension(face);
    const int idx = k.face_index(j, face);
    if (idx < 0)
        throw std::invalid_argument("dual of a non-face: " + simplex_to_string(face));
    BitVector v(k.face_count(j));
    v.set(static_cast<std::size_t>(idx));
    return Cochain(k, j, std::move(v));
}

Cochain Cochain::sum_of_duals(const SimplicialComplex& k,
                              const std::vector<VertexMask>& faces) {
    if (faces.empty())
        throw std::invalid_argument("sum_of_duals: no faces (degree is ambiguous)");
    const int j = mask_dimension(faces.front());
    BitVector v(k.face_count(j));
    for (VertexMask f : faces) {
        if (mask_dimension(f) != j)
            throw std::invalid_argument("sum_of_duals: mixed degrees");
        const int idx = k.face_index(j, f);
        if (idx < 0)
            throw std::invalid_argument("dual of a non-face: " + simplex_to_string(f));
        v.flip(static_cast<std::size_t>(idx));
    }
    return Cochain(k, j, std::move(v));
}

bool Cochain::value_on(VertexMask face) const {
    const int idx = k_.face_index(degree_, face);
    if (idx < 0)
        throw std::invalid_argument("cochain evaluated on a non-face");
    return coeffs_.get(static_cast<std::size_t>(idx));
}

std::vector<VertexMask> Cochain::support() const {
    std::vector<VertexMask> out;
    const auto& level = k_.faces(degree_);
    for (std::size_t i = 0; i < level.size(); ++i)
        if (coeffs_.get(i))
            out.push_back(level[i]);
    return out;
}

Cochain& Cochain::operator+=(const Cochain& other) {
    if (degree_ != other.degree_ || !k_.same_faces(other.k_))
        throw std::invalid_argument("cochain addition: complex or degree mismatch");
    coeffs_ ^= other.coeffs_;
    return *this;
}

BitMatrix coboundary_matrix(const SimplicialComplex& k, int j, bool reduced) {
    if (j < -1 || (!reduced && j < 0))
        throw std::invalid_argument("coboundary degree out of range");
    const auto& source = k.faces(j);
    const auto& target = k.faces(j + 1);
    BitMatrix m(target.size(), source.size());
    for (std::size_t s = 0; s < target.size(); ++s) {
        VertexMask f = target[s];
        VertexMask rest = f;
        while (rest) {
            const VertexMask low = rest & (~rest + 1);
            const int t = k.face_index(j, f ^ low);
            if (t >= 0)
                m.set(s, static_cast<std::size_t>(t));
            rest ^= low;
        }
    }
    return m;
}

Cochain coboundary(const Cochain& c) {
    const SimplicialComplex& k = c.complex();
    const int j = c.degree();
    BitVector out(k.face_count(j + 1));
    const auto& target = k.faces(j + 1);
    for (std::size_t s = 0; s < target.size(); ++s) {
        VertexMask f = target[s];
        bool val = false;
        if (j == -1) {
            val = c.coeffs().get(0);
        } else {
            VertexMask rest = f;
            while (rest) {
                const VertexMask low = rest & (~rest + 1);
                const int t = k.face_index(j, f ^ low);
                if (t >= 0)
                    val ^= c.coeffs().get(static_cast<std::size_t>(t));
                rest ^= low;
            }
        }
        if (val)
            out.set(s);
    }
    return Cochain(k, j + 1, std::move(out));
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

bool is_coboundary(const Cochain& c, bool reduced) {
    const SimplicialComplex& k = c.complex();
    const int j = c.degree();
    if (j == -1)
        return c.is_zero();
    if (j - 1 < -1 || (!reduced && j - 1 < 0))
        return c.is_zero();
    const BitMatrix delta = coboundary_matrix(k, j - 1, reduced);
    return solve_in_span(delta.columns(), c.coeffs()).has_value();
}

Cochain cup(const Cochain& a, const Cochain& b) {
    if (!a.complex().same_faces(b.complex()))
        throw std::invalid_argument("cup: complex mismatch");
    const int p = a.degree(), q = b.degree();
    if (p < 0 || q < 0)
        throw std::invalid_argument("cup: degrees must be >= 0");
    const SimplicialComplex& k = a.complex();
    BitVector out(k.face_count(p + q));
    const auto& level = k.faces(p + q);
    for (std::size_t s = 0; s < level.size(); ++s) {
        const auto vs = mask_vertices(level[s]);
        VertexMask front = 0, back = 0;
        for (int i = 0; i <= p; ++i)
            front |= vertex_bit(vs[static_cast<std::size_t>(i)]);
        for (int i = p; i <= p + q; ++i)
            back |= vertex_bit(vs[static_cast<std::size_t>(i)]);
        if (a.value_on(front) && b.value_on(back))
            out.set(s);
    }
    return Cochain(k, p + q, std::move(out));
}

Cochain restrict_to(const Cochain& c, VertexMask j) {
    const SimplicialComplex sub = c.complex().full_subcomplex(j);
    const auto keep = mask_vertices(j);
    BitVector out(sub.face_count(c.degree()));
    const auto& level = sub.faces(c.degree());
    for (std::size_t i = 0; i < level.size(); ++i) {
        // Translate the face of the subcomplex back to the ambient labels.
        VertexMask ambient = 0;
        for (int v : mask_vertices(level[i]))
            ambient |= vertex_bit(keep[static_cast<std::size_t>(v - 1)]);
        if (c.value_on(ambient))
            out.set(i);
    }
    return Cochain(sub, c.degree(), std::move(out));
}

std::map<int, long> betti(const SimplicialComplex& k, bool reduced) {
    std::map<int, long> out;
    const int lo = reduced ? -1 : 0;
    std::size_t prev_rank = 0;
    for (int j = lo; j <= k.dimension(); ++j) {
        const BitMatrix delta = coboundary_matrix(k, j, reduced);
        const std::size_t r = rank(delta);
        const long dim_ker = static_cast<long>(k.face_count(j)) - static_cast<long>(r);
        const long b = dim_ker - static_cast<long>(prev_rank);
        if (b != 0)
            out[j] = b;
        prev_rank = r;
    }
    return out;
}

CohomologyBasis::CohomologyBasis(SimplicialComplex k, bool reduced)
    : k_(std::move(k)), reduced_(reduced) {
    const int lo = min_degree();
    std::vector<BitVector> prev_image;  // columns of the previous coboundary
    for (int j = lo; j <= k_.dimension(); ++j) {
        const BitMatrix delta = coboundary_matrix(k_, j, reduced_);
        levels_.emplace_back(k_.face_count(j), kernel_basis(delta), prev_image);
        prev_image = delta.columns();
    }
}

std::size_t CohomologyBasis::dim(int degree) const {
    const int idx = degree - min_degree();
    if (idx < 0 || idx >= static_cast<int>(levels_.size()))
        return 0;
    return levels_[static_cast<std::size_t>(idx)].dim();
}

std::vector<Cochain> CohomologyBasis::representatives(int degree) const {
    std::vector<Cochain> out;
    const int idx = degree - min_degree();
    if (idx < 0 || idx >= static_cast<int>(levels_.size()))
        return out;
    for (const auto& v : levels_[static_cast<std::size_t>(idx)].representatives())
        out.emplace_back(k_, degree, v);
    return out;
}

BitVector CohomologyBasis::reduce(const Cochain& cocycle) const {
    if (!cocycle.complex().same_faces(k_))
        throw std::invalid_argument("reduce: cochain lives on another complex");
    const int idx = cocycle.degree() - min_degree();
    if (idx < 0 || idx >= static_cast<int>(levels_.size())) {
        if (!cocycle.is_zero())
            throw std::invalid_argument("reduce: nonzero cochain outside the degree range");
        return BitVector(0);
    }
    return levels_[static_cast<std::size_t>(idx)].reduce(cocycle.coeffs());
}

std::map<int, long> CohomologyBasis::betti_map() const {
    std::map<int, long> out;
    for (int j = min_degree(); j <= max_degree(); ++j)
        if (dim(j) > 0)
            out[j] = static_cast<long>(dim(j));
    return out;
}

}  // namespace sqtop
