#pragma once
// Exhaustive generation of all labeled simplicial complexes on <= n
// vertices (ghost vertices included, no isomorphism reduction) and the
// Sq^1 scan over them.

#include <cstdint>
#include <functional>
#include <vector>

#include "sqtop/complex.hpp"
#include "sqtop/steenrod.hpp"

namespace sqtop {

struct EnumerationOptions {
    bool allow_six = false;  // n = 6 is a long run and must be asked for
    int jobs = 1;
};

// Yields every downward-closed family of nonempty subsets of [n] (the empty
// face is implicit) exactly once, in a deterministic order.
void enumerate_complexes(int n, const std::function<void(const SimplicialComplex&)>& yield,
                         const EnumerationOptions& opts = {});

std::uint64_t count_complexes(int n, const EnumerationOptions& opts = {});

struct ScanHit {
    SimplicialComplex complex;
    SteenrodProfile entries;
};

struct ScanResult {
    std::uint64_t scanned = 0;
    std::vector<ScanHit> hits;
};

// Complexes on n vertices whose profile has an n=1 entry in any degree.
// A (complex, degree) pair is skipped only when the source or target
// cohomology group vanishes, which forces a zero matrix.
ScanResult scan_sq1(int n, const EnumerationOptions& opts = {});

// Same scan for all operation indices, not just Sq^1.
ScanResult scan_sq_full(int n, const EnumerationOptions& opts = {});

}  // namespace sqtop
