#pragma once
// Additive cohomology and Steenrod profile of the moment-angle complex Z_K
// via the Hochster-type splitting over non-face vertex subsets, plus the
// dimension-bound checkers.

#include <map>
#include <stdexcept>
#include <vector>

#include "sqtop/complex.hpp"
#include "sqtop/steenrod.hpp"

namespace sqtop {

class VertexCapError : public std::runtime_error {
public:
    explicit VertexCapError(const std::string& what) : std::runtime_error(what) {}
};

struct MomentAngleOptions {
    int vertex_cap = 16;
    int jobs = 1;
};

// Map J -> reduced Betti data of K_J for every J ∉ K, ordered by
// (|J|, bitmask). Subsets that are faces are contractible and omitted;
// entries may carry empty Betti maps.
struct HochsterTable {
    struct Entry {
        VertexMask subset = 0;
        std::map<int, long> reduced_betti;
    };
    std::vector<Entry> entries;
};

HochsterTable hochster_table(const SimplicialComplex& k,
                             const MomentAngleOptions& opts = {});

// dim H^n(Z_K) = [n=0] + Σ_{J∉K} dim H̃^{n-|J|-1}(K_J).
std::map<int, long> za_betti(const SimplicialComplex& k,
                             const MomentAngleOptions& opts = {});

// Per-summand Steenrod matrices of the K_J, degrees shifted by |J|+1, and
// the aggregated profile. Operations never cross summands.
struct ZkSqProfile {
    struct Summand {
        VertexMask subset = 0;
        std::vector<SteenrodMatrix> matrices;  // positive-rank ones only
    };
    std::vector<Summand> summands;
    SteenrodProfile aggregate;  // degree field is the Z_K degree j+|J|+1
};

ZkSqProfile za_sq_profile(const SimplicialComplex& k,
                          const MomentAngleOptions& opts = {});

// Entries violating Sq^n = 0 for n > floor(dim K / 2); empty means pass.
std::vector<ProfileEntry> sq_dim_bound_violations(const SimplicialComplex& k,
                                                  const ZkSqProfile& profile);
bool sq_dim_bound_check(const SimplicialComplex& k,
                        const MomentAngleOptions& opts = {});

// Entries (1, D <= 7, r), which would contradict the degree bound for Sq^1.
std::vector<ProfileEntry> low_degree_sq1_violations(const ZkSqProfile& profile);
bool low_degree_sq1_check(const SimplicialComplex& k,
                          const MomentAngleOptions& opts = {});

}  // namespace sqtop
