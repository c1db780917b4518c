#include "sqtop/steenrod.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace sqtop {

bool is_admissible_pair(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w;
    w.reserve(u.size() + v.size());
    std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(w));
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1])
            return false;  // U and V intersect
    auto pos_in_w = [&](int x) {
        return static_cast<int>(std::lower_bound(w.begin(), w.end(), x) - w.begin()) + 1;
    };
    for (int x : u)
        if ((pos_in_w(x) & 1) != (x & 1))
            return false;
    for (int x : v)
        if ((pos_in_w(x) & 1) == (x & 1))
            return false;
    return true;
}

namespace {

void combinations(int ground, int size, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn, int start) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    for (int x = start; x <= ground - (size - 1 - static_cast<int>(cur.size())); ++x) {
        cur.push_back(x);
        combinations(ground, size, cur, fn, x + 1);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IndexPair> admissible_index_pairs(int n, int j) {
    if (n < 0 || j < 0)
        throw std::invalid_argument("admissible_index_pairs: n, j must be >= 0");
    std::vector<IndexPair> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    const int ground = j + n;  // positions 0..j+n
    std::vector<int> cu, cv;
    combinations(ground, n, cu, [&](const std::vector<int>& u) {
        combinations(ground, n, cv, [&](const std::vector<int>& v) {
            if (is_admissible_pair(u, v))
                out.push_back({u, v});
        }, 0);
    }, 0);
    return out;
}

namespace {

// Face of s obtained by deleting the vertices at the given 0-based
// positions. Positions are increasing, so deleting from the highest down
// never shifts the lower ones.
VertexMask delete_positions(const std::vector<int>& vertices,
                            const std::vector<int>& positions) {
    VertexMask f = 0;
    std::size_t pi = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (pi < positions.size() && static_cast<int>(i) == positions[pi]) {
            ++pi;
            continue;
        }
        f |= vertex_bit(vertices[i]);
    }
    return f;
}

}  // namespace

Cochain sq_cochain(int n, const Cochain& c) {
    if (n < 0)
        throw std::invalid_argument("sq_cochain: n must be >= 0");
    if (c.degree() < 0)
        throw std::invalid_argument("sq_cochain: cochain degree must be >= 0");
    const SimplicialComplex& k = c.complex();
    const int j = c.degree();
    const int target = j + n;
    BitVector out(k.face_count(target));
    if (target > k.dimension())
        return Cochain(k, target, std::move(out));

    const auto pairs = admissible_index_pairs(n, j);
    const auto& level = k.faces(target);
    for (std::size_t s = 0; s < level.size(); ++s) {
        const auto vs = mask_vertices(level[s]);
        bool val = false;
        for (const auto& p : pairs) {
            if (c.value_on(delete_positions(vs, p.u)) &&
                c.value_on(delete_positions(vs, p.v)))
                val = !val;
        }
        if (val)
            out.set(s);
    }
    return Cochain(k, target, std::move(out));
}

Cochain sq_cochain_pasting(int n, const Cochain& c) {
    if (n < 0)
        throw std::invalid_argument("sq_cochain: n must be >= 0");
    if (c.degree() < 0)
        throw std::invalid_argument("sq_cochain: cochain degree must be >= 0");
    const SimplicialComplex& k = c.complex();
    const int j = c.degree();
    const int target = j + n;
    BitVector out(k.face_count(target));
    const auto supp = c.support();
    for (VertexMask x : supp) {
        for (VertexMask y : supp) {
            const VertexMask s = x | y;
            if (std::popcount(s) != target + 1)
                continue;
            const int idx = k.face_index(target, s);
            if (idx < 0)
                continue;  // the pasting lands on no generator of C^{j+n}(K)
            // V = positions of S \ support(x), U = positions of S \ support(y).
            std::vector<int> u, v;
            const auto zs = mask_vertices(s);
            for (std::size_t p = 0; p < zs.size(); ++p) {
                const VertexMask b = vertex_bit(zs[p]);
                if (!(x & b))
                    v.push_back(static_cast<int>(p));
                if (!(y & b))
                    u.push_back(static_cast<int>(p));
            }
            if (is_admissible_pair(u, v))
                out.flip(static_cast<std::size_t>(idx));
        }
    }
    return Cochain(k, target, std::move(out));
}

Cochain sq1_cochain_special(const Cochain& c) {
    if (c.degree() < 0)
        throw std::invalid_argument("sq1_cochain_special: degree must be >= 0");
    const SimplicialComplex& k = c.complex();
    const int j = c.degree();
    BitVector out(k.face_count(j + 1));
    const auto& level = k.faces(j + 1);
    for (std::size_t s = 0; s < level.size(); ++s) {
        const auto vs = mask_vertices(level[s]);
        bool val = false;
        for (int u = 0; u <= j + 1; ++u)
            for (int v = u + 1; v <= j + 1; ++v) {
                if ((u + v) % 2 != 0)
                    continue;
                if (c.value_on(delete_positions(vs, {u})) &&
                    c.value_on(delete_positions(vs, {v})))
                    val = !val;
            }
        if (val)
            out.set(s);
    }
    return Cochain(k, j + 1, std::move(out));
}

SteenrodMatrix sq_matrix(const CohomologyBasis& basis, int n, int j) {
    if (n < 0)
        throw std::invalid_argument("sq_matrix: n must be >= 0");
    const std::size_t cols = basis.dim(j);
    const std::size_t rows = basis.dim(j + n);
    SteenrodMatrix sm;
    sm.n = n;
    sm.source_degree = j;
    if (j < 0) {
        // Classes in degree -1 (the empty complex) carry only Sq^0.
        sm.matrix = (n == 0) ? BitMatrix::identity(cols) : BitMatrix(rows, cols);
        return sm;
    }
    sm.matrix = BitMatrix(rows, cols);
    const auto reps = basis.representatives(j);
    for (std::size_t col = 0; col < reps.size(); ++col) {
        const Cochain image = sq_cochain(n, reps[col]);
        if (!is_cocycle(image))
            throw std::logic_error("sq_matrix: image of a cocycle is not a cocycle");
        const BitVector coords = basis.reduce(image);
        for (std::size_t r = 0; r < rows; ++r)
            if (coords.get(r))
                sm.matrix.set(r, col);
    }
    return sm;
}

SteenrodProfile sq_profile(const SimplicialComplex& k) {
    SteenrodProfile profile;
    const CohomologyBasis basis(k, true);
    for (int j = 1; j <= k.dimension(); ++j) {
        if (basis.dim(j) == 0)
            continue;
        for (int n = 1; n <= j; ++n) {
            if (basis.dim(j + n) == 0)
                continue;
            const auto r = static_cast<long>(rank(sq_matrix(basis, n, j).matrix));
            if (r > 0)
                profile.push_back({n, j, r});
        }
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

}  // namespace sqtop
