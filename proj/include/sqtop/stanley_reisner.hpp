#pragma once
// The face ring F2[K] = F2[x_1..x_m]/I_K with generator degree d in {1,2},
// its total Steenrod action Sq(x_i) = x_i + x_i^2, graded bases, and the
// A-ideal checker.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqtop/complex.hpp"
#include "sqtop/f2.hpp"

namespace sqtop {

// Exponent vector over the m variables.
using Monomial = std::vector<int>;

VertexMask monomial_support(const Monomial& mono);
int monomial_degree(const Monomial& mono);  // polynomial degree
std::string monomial_to_string(const Monomial& mono);  // "x1^2*x3"

// An F2 sum of monomials of one polynomial degree; canonical form keeps the
// terms sorted descending so that x1^k comes first.
struct SRElement {
    std::vector<Monomial> terms;
    bool operator==(const SRElement&) const = default;
};

SRElement sr_canonical(std::vector<Monomial> terms);  // sort + cancel pairs
SRElement sr_add(const SRElement& a, const SRElement& b);

// All degree-k monomials whose support is a face of k, in canonical order.
std::vector<Monomial> monomial_basis(const SimplicialComplex& k, int degree);

// Drop the monomials whose support is a non-face.
SRElement sr_reduce(const SimplicialComplex& k, const SRElement& e);

// Expansion of prod_i (x_i + x_i^2)^{e_i} with binomial parity by Lucas;
// the term with extra exponent vector t lands in Sq^{d*|t|}. Keys are the
// operation indices n, values the monomial lists.
std::map<int, std::vector<Monomial>> sq_total_monomial(const Monomial& mono,
                                                       int gen_degree);

// Matrix of Sq^n from the monomial basis in topological degree topo to
// degree topo+n, after reduction mod I_K. topo must be divisible by the
// generator degree; an inexpressible target degree gives a 0-row matrix.
BitMatrix sq_graded_matrix(const SimplicialComplex& k, int n, int topo_degree,
                           int gen_degree);

// Minimal non-faces of k, ascending by (size, lex).
std::vector<VertexMask> minimal_non_faces(const SimplicialComplex& k);

// Checks Sq(I_K) ⊆ I_K on every minimal generator times every monomial of
// polynomial degree up to max_degree; returns a violating multiple if one
// exists (that would indicate a bug).
struct AIdealViolation {
    Monomial multiple;
    int operation = 0;
};
std::optional<AIdealViolation> a_ideal_violation(const SimplicialComplex& k,
                                                 int gen_degree, int max_degree);
bool verify_a_ideal(const SimplicialComplex& k, int gen_degree, int max_degree);

}  // namespace sqtop
