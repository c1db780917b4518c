#include "sqtop/moment_angle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

#include "sqtop/cochain.hpp"

namespace sqtop {

namespace {

std::vector<VertexMask> non_face_subsets(const SimplicialComplex& k,
                                         const MomentAngleOptions& opts) {
    const int m = k.vertex_count();
    if (m > opts.vertex_cap)
        throw VertexCapError("moment-angle computation over " + std::to_string(m) +
                             " vertices exceeds the cap of " +
                             std::to_string(opts.vertex_cap));
    std::vector<VertexMask> subsets;
    for (VertexMask j = 1; m > 0 && j <= full_mask(m); ++j)
        if (!k.has_face(j))
            subsets.push_back(j);
    std::sort(subsets.begin(), subsets.end(), [](VertexMask a, VertexMask b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb)
            return ca < cb;
        return a < b;
    });
    return subsets;
}

// Runs fn(index) over [0, count) on opts.jobs threads; each slot is
// written exactly once, so the merged result is order-independent.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const int nworkers =
        static_cast<int>(std::min(static_cast<std::size_t>(jobs), count));
    for (int w = 0; w < nworkers; ++w)
        workers.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                fn(i);
        });
    for (auto& t : workers)
        t.join();
}

}  // namespace

HochsterTable hochster_table(const SimplicialComplex& k, const MomentAngleOptions& opts) {
    const auto subsets = non_face_subsets(k, opts);
    HochsterTable table;
    table.entries.resize(subsets.size());
    parallel_for(subsets.size(), opts.jobs, [&](std::size_t i) {
        table.entries[i].subset = subsets[i];
        table.entries[i].reduced_betti = betti(k.full_subcomplex(subsets[i]), true);
    });
    return table;
}

std::map<int, long> za_betti(const SimplicialComplex& k, const MomentAngleOptions& opts) {
    const HochsterTable table = hochster_table(k, opts);
    std::map<int, long> out;
    out[0] = 1;  // Z_K is connected
    for (const auto& e : table.entries) {
        const int shift = std::popcount(e.subset) + 1;
        for (const auto& [deg, dim] : e.reduced_betti)
            out[deg + shift] += dim;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ZkSqProfile za_sq_profile(const SimplicialComplex& k, const MomentAngleOptions& opts) {
    const auto subsets = non_face_subsets(k, opts);
    ZkSqProfile profile;
    profile.summands.resize(subsets.size());
    parallel_for(subsets.size(), opts.jobs, [&](std::size_t i) {
        auto& summand = profile.summands[i];
        summand.subset = subsets[i];
        const SimplicialComplex sub = k.full_subcomplex(subsets[i]);
        const CohomologyBasis basis(sub, true);
        for (int j = 1; j <= sub.dimension(); ++j) {
            if (basis.dim(j) == 0)
                continue;
            for (int n = 1; n <= j; ++n) {
                if (basis.dim(j + n) == 0)
                    continue;
                SteenrodMatrix sm = sq_matrix(basis, n, j);
                if (rank(sm.matrix) > 0)
                    summand.matrices.push_back(std::move(sm));
            }
        }
    });

    std::map<std::pair<int, int>, long> agg;
    for (const auto& s : profile.summands) {
        const int shift = std::popcount(s.subset) + 1;
        for (const auto& sm : s.matrices)
            agg[{sm.n, sm.source_degree + shift}] +=
                static_cast<long>(rank(sm.matrix));
    }
    for (const auto& [key, r] : agg)
        profile.aggregate.push_back({key.first, key.second, r});
    std::sort(profile.aggregate.begin(), profile.aggregate.end());
    return profile;
}

std::vector<ProfileEntry> sq_dim_bound_violations(const SimplicialComplex& k,
                                                  const ZkSqProfile& profile) {
    const int bound = k.dimension() / 2;
    std::vector<ProfileEntry> bad;
    for (const auto& e : profile.aggregate)
        if (e.n > bound)
            bad.push_back(e);
    return bad;
}

bool sq_dim_bound_check(const SimplicialComplex& k, const MomentAngleOptions& opts) {
    return sq_dim_bound_violations(k, za_sq_profile(k, opts)).empty();
}

std::vector<ProfileEntry> low_degree_sq1_violations(const ZkSqProfile& profile) {
    std::vector<ProfileEntry> bad;
    for (const auto& e : profile.aggregate)
        if (e.n == 1 && e.degree <= 7)
            bad.push_back(e);
    return bad;
}

bool low_degree_sq1_check(const SimplicialComplex& k, const MomentAngleOptions& opts) {
    return low_degree_sq1_violations(za_sq_profile(k, opts)).empty();
}

}  // namespace sqtop
