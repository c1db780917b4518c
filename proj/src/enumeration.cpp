#include "sqtop/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "sqtop/cochain.hpp"

namespace sqtop {

namespace {

void check_range(int n, const EnumerationOptions& opts) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("enumeration supports 1 <= n <= 6");
    if (n == 6 && !opts.allow_six)
        throw std::invalid_argument(
            "the n=6 enumeration is a long run; pass the explicit flag to allow it");
}

// Nonempty subsets of [n] ordered by (cardinality, numeric value); a set
// may be present only when all its one-smaller subsets already are.
std::vector<VertexMask> subset_order(int n) {
    std::vector<VertexMask> order;
    for (VertexMask s = 1; s <= full_mask(n); ++s)
        order.push_back(s);
    std::stable_sort(order.begin(), order.end(), [](VertexMask a, VertexMask b) {
        return std::popcount(a) < std::popcount(b);
    });
    return order;
}

bool may_insert(std::uint64_t family, VertexMask s) {
    if (std::popcount(s) == 1)
        return true;
    VertexMask rest = s;
    while (rest) {
        const VertexMask low = rest & (~rest + 1);
        if (!((family >> (s ^ low)) & 1))
            return false;
        rest ^= low;
    }
    return true;
}

// family has bit s set when the subset with mask s is a face.
void dfs(const std::vector<VertexMask>& order, std::size_t idx, std::uint64_t family,
         const std::function<void(std::uint64_t)>& sink) {
    if (idx == order.size()) {
        sink(family);
        return;
    }
    const VertexMask s = order[idx];
    dfs(order, idx + 1, family, sink);
    if (may_insert(family, s))
        dfs(order, idx + 1, family | (std::uint64_t{1} << s), sink);
}

SimplicialComplex complex_from_family(int n, std::uint64_t family) {
    std::vector<VertexMask> faces;
    for (VertexMask s = 1; s <= full_mask(n); ++s)
        if ((family >> s) & 1)
            faces.push_back(s);
    return SimplicialComplex::from_closed_faces(n, std::move(faces));
}

// Splits the enumeration at the singleton level into 2^n tasks whose
// concatenation in index order reproduces the sequential DFS order.
struct TaskSplit {
    std::vector<VertexMask> order;   // non-singleton subsets, rank order
    int n = 0;

    std::uint64_t family_for_task(std::uint64_t task) const {
        std::uint64_t family = 0;
        for (int i = 0; i < n; ++i)
            if ((task >> (n - 1 - i)) & 1)
                family |= std::uint64_t{1} << vertex_bit(i + 1);
        return family;
    }
};

TaskSplit make_split(int n) {
    TaskSplit split;
    split.n = n;
    for (VertexMask s : subset_order(n))
        if (std::popcount(s) > 1)
            split.order.push_back(s);
    return split;
}

template <typename PerLeaf>
void run_tasks(int n, int jobs, std::vector<std::vector<ScanHit>>& hits,
               std::atomic<std::uint64_t>& total, const PerLeaf& per_leaf) {
    const TaskSplit split = make_split(n);
    const std::uint64_t ntasks = std::uint64_t{1} << n;
    hits.assign(ntasks, {});

    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (std::uint64_t t = next.fetch_add(1); t < ntasks; t = next.fetch_add(1)) {
            dfs(split.order, 0, split.family_for_task(t), [&](std::uint64_t family) {
                total.fetch_add(1, std::memory_order_relaxed);
                per_leaf(family, hits[t]);
            });
        }
    };
    const int nworkers = std::max(1, std::min<int>(jobs, static_cast<int>(ntasks)));
    if (nworkers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
}

SteenrodProfile profile_entries(const SimplicialComplex& k, bool only_sq1) {
    // Betti prune: a (j, n) pair contributes only when both the source and
    // the target group are nonzero.
    const auto b = betti(k, true);
    auto dim_at = [&](int d) {
        auto it = b.find(d);
        return it == b.end() ? 0l : it->second;
    };
    bool possible = false;
    for (int j = 1; j <= k.dimension() && !possible; ++j)
        for (int n = 1; n <= (only_sq1 ? 1 : j) && !possible; ++n)
            if (dim_at(j) > 0 && dim_at(j + n) > 0)
                possible = true;
    if (!possible)
        return {};

    SteenrodProfile entries;
    const CohomologyBasis basis(k, true);
    for (int j = 1; j <= k.dimension(); ++j) {
        if (basis.dim(j) == 0)
            continue;
        for (int n = 1; n <= (only_sq1 ? 1 : j); ++n) {
            if (n > j || basis.dim(j + n) == 0)
                continue;
            const auto r = static_cast<long>(rank(sq_matrix(basis, n, j).matrix));
            if (r > 0)
                entries.push_back({n, j, r});
        }
    }
    std::sort(entries.begin(), entries.end());
    return entries;
}

ScanResult scan(int n, const EnumerationOptions& opts, bool only_sq1) {
    check_range(n, opts);
    std::vector<std::vector<ScanHit>> hits;
    std::atomic<std::uint64_t> total{0};
    run_tasks(n, opts.jobs, hits, total,
              [&](std::uint64_t family, std::vector<ScanHit>& out) {
                  const SimplicialComplex k = complex_from_family(n, family);
                  auto entries = profile_entries(k, only_sq1);
                  if (!entries.empty())
                      out.push_back({k, std::move(entries)});
              });
    ScanResult result;
    result.scanned = total.load();
    for (auto& chunk : hits)
        for (auto& h : chunk)
            result.hits.push_back(std::move(h));
    return result;
}

}  // namespace

void enumerate_complexes(int n, const std::function<void(const SimplicialComplex&)>& yield,
                         const EnumerationOptions& opts) {
    check_range(n, opts);
    const auto order = subset_order(n);
    dfs(order, 0, 0, [&](std::uint64_t family) { yield(complex_from_family(n, family)); });
}

std::uint64_t count_complexes(int n, const EnumerationOptions& opts) {
    check_range(n, opts);
    const auto order = subset_order(n);
    std::uint64_t count = 0;
    dfs(order, 0, 0, [&](std::uint64_t) { ++count; });
    return count;
}

ScanResult scan_sq1(int n, const EnumerationOptions& opts) {
    return scan(n, opts, true);
}

ScanResult scan_sq_full(int n, const EnumerationOptions& opts) {
    return scan(n, opts, false);
}

}  // namespace sqtop
