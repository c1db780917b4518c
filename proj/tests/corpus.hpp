#pragma once
// Shared test utilities: seeded random complexes and small independent
// oracles that deliberately avoid the library's bitmask machinery.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"

namespace testutil {

using FaceSet = std::set<std::set<int>>;

// Downward closure computed over std::set, independent of the library.
inline FaceSet closure_oracle(const std::vector<std::vector<int>>& facets) {
    FaceSet faces;
    faces.insert(std::set<int>{});
    for (const auto& facet : facets) {
        const std::size_t n = facet.size();
        for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
            std::set<int> f;
            for (std::size_t i = 0; i < n; ++i)
                if (bits & (std::size_t{1} << i))
                    f.insert(facet[i]);
            faces.insert(std::move(f));
        }
    }
    return faces;
}

inline FaceSet faces_of(const sqtop::SimplicialComplex& k) {
    FaceSet out;
    out.insert(std::set<int>{});
    for (int j = 0; j <= k.dimension(); ++j)
        for (sqtop::VertexMask f : k.faces(j)) {
            const auto vs = sqtop::mask_vertices(f);
            out.insert(std::set<int>(vs.begin(), vs.end()));
        }
    return out;
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

inline sqtop::SimplicialComplex random_complex(std::mt19937& rng, int min_m, int max_m) {
    std::uniform_int_distribution<int> mdist(min_m, max_m);
    const int m = mdist(rng);
    std::uniform_int_distribution<int> count_dist(1, 3 * m);
    std::uniform_int_distribution<int> size_dist(1, std::min(m, 4));
    std::uniform_int_distribution<int> vdist(1, m);
    std::vector<std::vector<int>> facets;
    const int nf = count_dist(rng);
    for (int i = 0; i < nf; ++i) {
        std::set<int> s;
        const int sz = size_dist(rng);
        while (static_cast<int>(s.size()) < sz)
            s.insert(vdist(rng));
        facets.emplace_back(s.begin(), s.end());
    }
    return sqtop::SimplicialComplex::from_facets(m, facets);
}

// Complexes with guaranteed interesting cohomology, for property suites
// that need nonzero classes to exercise.
inline std::vector<sqtop::SimplicialComplex> structured_corpus() {
    using namespace sqtop;
    std::vector<SimplicialComplex> out;
    out.push_back(p26());
    out.push_back(boundary_complex(2));
    out.push_back(boundary_complex(3));
    out.push_back(cycle_complex(4));
    out.push_back(cycle_complex(5));
    out.push_back(join(points_complex(2), points_complex(2)));
    out.push_back(join(cycle_complex(4), points_complex(2)));
    out.push_back(join(points_complex(3), points_complex(2)));
    out.push_back(points_complex(3));
    return out;
}

// A random cochain of the given degree, possibly zero.
inline sqtop::Cochain random_cochain(std::mt19937& rng, const sqtop::SimplicialComplex& k,
                                     int degree) {
    sqtop::BitVector v(k.face_count(degree));
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (coin(rng))
            v.set(i);
    return sqtop::Cochain(k, degree, std::move(v));
}

}  // namespace testutil
