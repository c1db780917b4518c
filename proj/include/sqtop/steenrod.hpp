#pragma once
// Cochain-level Steenrod squares: admissible index-pair enumeration,
// evaluation of Sq^n on cochains, the specialized Sq^1 formula, induced
// matrices on cohomology, and whole-complex profiles.

#include <vector>

#include "sqtop/cochain.hpp"

namespace sqtop {

// A pair (U,V) of disjoint strictly increasing n-tuples of 0-based
// positions in {0..j+n} subject to the alternating parity conditions:
// the 1-based rank of u_i in U∪V has the parity of u_i, the rank of v_i
// the opposite parity of v_i.
struct IndexPair {
    std::vector<int> u, v;
    bool operator==(const IndexPair&) const = default;
};

bool is_admissible_pair(const std::vector<int>& u, const std::vector<int>& v);

// All admissible pairs over the ground set {0..j+n}, in lexicographic
// (U,V) order. n = 0 yields exactly the empty pair.
std::vector<IndexPair> admissible_index_pairs(int n, int j);

// Sq^n(c), evaluated simplex by simplex: the coefficient on a (j+n)-face s
// is the sum over admissible (U,V) of c(s minus positions U) * c(s minus
// positions V). Degrees beyond dim K give the zero cochain.
Cochain sq_cochain(int n, const Cochain& c);

// The generator-driven pasting evaluation of the same operation; kept as
// an independent route for cross-checking. Pastings whose union of
// supports is not a face contribute nothing.
Cochain sq_cochain_pasting(int n, const Cochain& c);

// Sq^1 via the specialized sum over 0 <= u < v <= j+1 with u+v even.
// Agrees with sq_cochain(1, c) exactly.
Cochain sq1_cochain_special(const Cochain& c);

struct SteenrodMatrix {
    int n = 0;
    int source_degree = 0;
    BitMatrix matrix;  // from the H^j basis to the H^{j+n} basis
};

// Applies Sq^n to each degree-j representative and reduces into the
// degree-(j+n) basis. Throws std::logic_error if an image fails to be a
// cocycle (that would be a formula bug, not a user error).
SteenrodMatrix sq_matrix(const CohomologyBasis& basis, int n, int j);

struct ProfileEntry {
    int n = 0;
    int degree = 0;  // source degree
    long rank = 0;
    auto operator<=>(const ProfileEntry&) const = default;
};

// Entries (n, j, rank) with 1 <= n <= j and positive rank, sorted.
using SteenrodProfile = std::vector<ProfileEntry>;

SteenrodProfile sq_profile(const SimplicialComplex& k);

}  // namespace sqtop
