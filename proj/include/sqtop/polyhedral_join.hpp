#pragma once
// Polyhedral joins of simplicial pairs, substitution and composition
// complexes, the sequential construction, predicted cohomology and
// Steenrod profiles from the wedge splitting, and cocycle propagation.

#include <map>
#include <stdexcept>
#include <vector>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"
#include "sqtop/steenrod.hpp"

namespace sqtop {

// Pair (K_i, L_i) with faces(L_i) ⊆ faces(K_i). L_i may be the empty
// complex {∅} (taken on zero vertices is fine).
struct ComplexPair {
    SimplicialComplex big;
    SimplicialComplex sub;
};

enum class LabelingMode {
    Block,              // blocks laid out consecutively
    PaperSubstitution,  // first copy of block i is vertex i, extras appended
};

// Bijection (block i, copy j) -> flattened vertex id.
class JoinLabeling {
public:
    JoinLabeling(LabelingMode mode, std::vector<int> block_sizes);
    int flatten(int block, int copy) const;  // both 1-based
    int total() const { return total_; }
    LabelingMode mode() const { return mode_; }
    int block_size(int block) const { return sizes_[static_cast<std::size_t>(block - 1)]; }

private:
    LabelingMode mode_;
    std::vector<int> sizes_;
    std::vector<std::vector<int>> flat_;
    int total_ = 0;
};

// Faces are disjoint unions ⊔σ_i with σ_i a face of K_i and
// {i : σ_i ∉ L_i} a face of K.
SimplicialComplex polyhedral_join(const SimplicialComplex& k,
                                  const std::vector<ComplexPair>& pairs,
                                  LabelingMode mode = LabelingMode::Block);

// K⟨K_1,...,K_m⟩, every L_i = {∅}.
SimplicialComplex substitution(const SimplicialComplex& k,
                               const std::vector<SimplicialComplex>& subs,
                               LabelingMode mode = LabelingMode::PaperSubstitution);

// [K^0, K^1, ..., K^m]; K^i substitutes K_i into vertex i of K^{i-1}.
std::vector<SimplicialComplex> substitution_sequence(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs);

// K(L_1,...,L_m): polyhedral join against full simplices on the L_i vertex sets.
SimplicialComplex composition(const SimplicialComplex& k,
                              const std::vector<SimplicialComplex>& links);

// Reduced Betti prediction b(K) + Σ_i b(link_{K^{i-1}}(v_i) * K_i) from the
// wedge splitting; requires K connected.
std::map<int, long> predicted_betti_substitution(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs);

// Shifted tensor-product dimensions of K * L_1 * ... * L_m.
std::map<int, long> predicted_betti_composition(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& links);

// Profile of the substitution complex predicted from the wedge summands,
// with the join summands' Sq matrices assembled from the factors' matrices
// via the Cartan rule. Requires K connected.
SteenrodProfile predicted_sq_profile_substitution(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs);

// Exact Steenrod profile of A * B computed from the factor matrices.
SteenrodProfile join_sq_profile(const SimplicialComplex& a,
                                const SimplicialComplex& b);

// Convolution of reduced Betti maps under join (degree shift 1), with
// degree -1 entries participating.
std::map<int, long> join_betti_convolution(const std::map<int, long>& a,
                                           const std::map<int, long>& b);

class ExtendCocycleError : public std::runtime_error {
public:
    enum class Reason { NotACocycle, ClassIsZero };
    ExtendCocycleError(Reason r, const std::string& what)
        : std::runtime_error(what), reason(r) {}
    Reason reason;
};

// Copy-replacement extension of a cocycle x on K to the substitution
// complex: every vertex of every support simplex ranges over all copies in
// its block. The result is verified to be a cocycle representing a nonzero
// class whenever [x] is nonzero; failure throws ExtendCocycleError.
Cochain extend_cocycle_substitution(const SimplicialComplex& k,
                                    const std::vector<SimplicialComplex>& subs,
                                    const Cochain& x);

struct FullSubcomplexCopy {
    VertexMask subset = 0;
    int block = 0;  // 0 for the K-copy, i >= 1 for the K_i block
};

// The diagonal K-copy {v_{1,k_1},...,v_{m,k_m}} (default all k_j = 1) and
// every block {v_{i,*}}; each verified to be a full subcomplex isomorphic
// to its model under the labeling.
std::vector<FullSubcomplexCopy> locate_full_subcomplexes(
    const SimplicialComplex& k, const std::vector<SimplicialComplex>& subs,
    const std::vector<int>& copy_choice = {});

}  // namespace sqtop
