// Acceptance checklist: every criterion prints one PASS/FAIL line; the
// process exits nonzero if any fails. The optional six-vertex scan runs
// only with --six.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"
#include "sqtop/enumeration.hpp"
#include "sqtop/moment_angle.hpp"
#include "sqtop/polyhedral_join.hpp"
#include "sqtop/stanley_reisner.hpp"
#include "sqtop/steenrod.hpp"

using namespace sqtop;

namespace {

int g_checks = 0;
std::vector<std::string> g_failures;

void expect(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok)
        g_failures.push_back(what);
}

template <typename T>
std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string show_map(const std::map<int, long>& m) {
    std::ostringstream os;
    os << "{";
    for (const auto& [k, v] : m)
        os << k << ":" << v << ",";
    os << "}";
    return os.str();
}

Cochain p26_x(const SimplicialComplex& k) {
    return Cochain::sum_of_duals(
        k, {mask_from_vertices({1, 4}), mask_from_vertices({1, 6}),
            mask_from_vertices({2, 5}), mask_from_vertices({2, 6}),
            mask_from_vertices({4, 5})});
}

Cochain p26_xprime(const SimplicialComplex& k) {
    std::vector<VertexMask> duals;
    for (auto vs : {std::vector<int>{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4},
                    {2, 5}, {2, 6}, {3, 4}, {4, 6}})
        duals.push_back(mask_from_vertices(vs));
    return Cochain::sum_of_duals(k, duals);
}

std::vector<VertexMask> sorted_masks(std::vector<std::vector<int>> vss) {
    std::vector<VertexMask> out;
    for (const auto& vs : vss)
        out.push_back(mask_from_vertices(vs));
    std::sort(out.begin(), out.end(), simplex_lex_less);
    return out;
}

SimplicialComplex random_complex(std::mt19937& rng, int min_m, int max_m) {
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
    return SimplicialComplex::from_facets(m, facets);
}

BitVector reduce_or_zero(const CohomologyBasis& basis, const Cochain& c) {
    return basis.reduce(c);
}

// ---- criterion bodies -------------------------------------------------

void criterion1_p26_ground_truth() {
    const auto k = p26();
    expect(betti(k, true) == std::map<int, long>{{1, 1}, {2, 1}},
           "reduced betti of P26 is " + show_map(betti(k, true)));

    const auto x = p26_x(k);
    const auto xp = p26_xprime(k);
    expect(sq_cochain(1, x).support() == sorted_masks({{1, 4, 5}}),
           "Sq^1(x) != [1,4,5]*");
    expect(sq_cochain(1, xp).support() ==
               sorted_masks({{1, 2, 6}, {1, 4, 6}, {3, 4, 6}}),
           "Sq^1(x') != [1,2,6]*+[1,4,6]*+[3,4,6]*");

    const CohomologyBasis basis(k, true);
    const auto cx = basis.reduce(sq_cochain(1, x));
    const auto cxp = basis.reduce(sq_cochain(1, xp));
    expect(cx.any(), "Sq^1(x) class is zero");
    expect(cx == cxp, "Sq^1(x) and Sq^1(x') classes differ");
}

void criterion2_moment_angle_p26() {
    const auto k = p26();
    expect(za_betti(k) == std::map<int, long>{{0, 1}, {5, 10}, {6, 15},
                                              {7, 6}, {8, 1}, {9, 1}},
           "za betti of P26 is " + show_map(za_betti(k)));
    const auto profile = za_sq_profile(k).aggregate;
    expect(profile == SteenrodProfile{{1, 8, 1}},
           "za profile of P26 has " + show(profile.size()) + " entries");
}

double criterion3_scan_small(bool* ok_out) {
    const auto start = std::chrono::steady_clock::now();
    const auto r5 = scan_sq1(5);
    const auto r4 = scan_sq1(4);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(r5.hits.empty(), "five-vertex scan found hits");
    expect(r4.hits.empty(), "four-vertex scan found hits");
    expect(r5.scanned == 7580, "five-vertex count is " + show(r5.scanned));
    expect(elapsed < 60.0, "small scan took " + show(elapsed) + "s");
    *ok_out = true;
    return elapsed;
}

void criterion3_scan_six() {
    EnumerationOptions opts;
    opts.allow_six = true;
    const auto r6 = scan_sq1(6, opts);
    expect(!r6.hits.empty(), "six-vertex scan found nothing");
    bool found_p26 = false;
    const auto model = p26();
    for (const auto& h : r6.hits)
        if (h.complex.same_faces(model))
            found_p26 = true;
    expect(found_p26, "six-vertex scan does not contain P26 itself");
}

void criterion4_substitution_propagation() {
    const auto k = p26();
    std::vector<SimplicialComplex> subs(6, points_complex(1));
    subs[0] = points_complex(2);

    const auto s = substitution(k, subs);
    std::set<VertexMask> facets(s.facets().begin(), s.facets().end());
    std::set<VertexMask> expected(k.facets().begin(), k.facets().end());
    for (auto f : {std::vector<int>{2, 3, 7}, {2, 6, 7}, {3, 5, 7}, {4, 5, 7}, {4, 6, 7}})
        expected.insert(mask_from_vertices(f));
    expect(facets == expected, "substituted facet list differs from the paper's");

    const auto x = p26_x(k);
    const auto y = extend_cocycle_substitution(k, subs, x);
    expect(y.support() ==
               sorted_masks({{1, 4}, {1, 6}, {2, 5}, {2, 6}, {4, 5}, {4, 7}, {6, 7}}),
           "extension y differs from x+[4,7]*+[6,7]*");
    expect(sq_cochain(1, y).support() == sorted_masks({{1, 4, 5}, {2, 6, 7}}),
           "Sq^1(y) != [1,4,5]*+[2,6,7]*");

    subs[0] = boundary_complex(2);
    const auto y2 = extend_cocycle_substitution(k, subs, x);
    expect(sq_cochain(1, y2).support() ==
               sorted_masks({{1, 4, 5}, {1, 4, 7}, {1, 4, 8}, {1, 6, 7},
                             {1, 6, 8}, {2, 6, 7}, {2, 6, 8}}),
           "Sq^1(y) for the circle case differs from the paper's 7 terms");
}

void criterion5_composition_identity() {
    const ComplexPair pair{simplex_complex(1), boundary_complex(1)};
    const auto s2 = polyhedral_join(points_complex(2), {pair, pair});
    expect(s2.same_faces(boundary_complex(3)),
           "(D1,S0)^{*S0} is not the boundary of the 3-simplex");
}

void criterion6_splitting_oracle() {
    std::mt19937 rng(60601);
    const std::vector<SimplicialComplex> bases = {
        cycle_complex(3), cycle_complex(4), cycle_complex(5), cycle_complex(6),
        p26(),            boundary_complex(2), boundary_complex(3)};
    const std::vector<SimplicialComplex> pool = {
        points_complex(1), points_complex(2), points_complex(3),
        cycle_complex(3),  cycle_complex(4),  cycle_complex(5),
        simplex_complex(0), simplex_complex(1), simplex_complex(2)};
    std::uniform_int_distribution<std::size_t> bpick(0, bases.size() - 1);
    std::uniform_int_distribution<std::size_t> ppick(0, pool.size() - 1);

    int instances = 0;
    for (int t = 0; t < 30; ++t) {
        const auto& base = bases[bpick(rng)];
        std::vector<SimplicialComplex> subs;
        for (int i = 0; i < base.vertex_count(); ++i)
            subs.push_back(pool[ppick(rng)]);
        const auto predicted = predicted_betti_substitution(base, subs);
        const auto direct = betti(substitution(base, subs), true);
        expect(predicted == direct,
               "substitution betti mismatch: predicted " + show_map(predicted) +
                   " direct " + show_map(direct));
        ++instances;
    }
    for (int t = 0; t < 25; ++t) {
        const auto& base = bases[bpick(rng)];
        std::vector<SimplicialComplex> links;
        for (int i = 0; i < base.vertex_count(); ++i)
            links.push_back(pool[ppick(rng)]);
        const auto predicted = predicted_betti_composition(base, links);
        const auto direct = betti(composition(base, links), true);
        expect(predicted == direct,
               "composition betti mismatch: predicted " + show_map(predicted) +
                   " direct " + show_map(direct));
        ++instances;
    }
    expect(instances >= 50, "corpus has only " + show(instances) + " instances");
}

void criterion7_steenrod_properties() {
    std::mt19937 rng(70707);
    int instances = 0;
    for (int t = 0; t < 200; ++t) {
        const SimplicialComplex k = (t == 0) ? p26() : random_complex(rng, 1, 7);
        ++instances;
        const CohomologyBasis basis(k, true);

        // Special vs general Sq^1 on arbitrary cochains, exact.
        for (int j = 0; j <= k.dimension(); ++j) {
            BitVector v(k.face_count(j));
            std::bernoulli_distribution coin(0.5);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (coin(rng))
                    v.set(i);
            const Cochain c(k, j, v);
            expect(sq1_cochain_special(c) == sq_cochain(1, c),
                   "special Sq^1 disagrees with the general formula");

            // Naturality under a random full subcomplex.
            VertexMask sub = 0;
            for (int w = 1; w <= k.vertex_count(); ++w)
                if (coin(rng))
                    sub |= vertex_bit(w);
            for (int n = 0; n <= 2; ++n)
                expect(restrict_to(sq_cochain(n, c), sub) ==
                           sq_cochain(n, restrict_to(c, sub)),
                       "naturality fails");
        }

        for (int j = 1; j <= k.dimension(); ++j) {
            // Sq^1 Sq^1 = 0 on cohomology.
            const auto a = sq_matrix(basis, 1, j + 1).matrix;
            const auto b = sq_matrix(basis, 1, j).matrix;
            for (std::size_t col = 0; col < b.cols(); ++col)
                expect(a.apply(b.column(col)).none(), "Sq1 Sq1 != 0");

            for (const auto& z : basis.representatives(j)) {
                for (int n = 1; n <= j + 1; ++n) {
                    const auto img = sq_cochain(n, z);
                    expect(is_cocycle(img), "Sq image is not a cocycle");
                    // Well-definedness modulo coboundaries.
                    BitVector bv(k.face_count(j - 1));
                    std::bernoulli_distribution coin(0.5);
                    for (std::size_t i = 0; i < bv.size(); ++i)
                        if (coin(rng))
                            bv.set(i);
                    const auto shifted = sq_cochain(n, z + coboundary(Cochain(k, j - 1, bv)));
                    expect(basis.reduce(img) == basis.reduce(shifted),
                           "Sq class moved under a coboundary shift");
                    if (n > j)
                        expect(!basis.reduce(img).any(), "instability violated");
                }
                expect(basis.reduce(sq_cochain(j, z)) == basis.reduce(cup(z, z)),
                       "Sq^j is not the cup square");
            }

            // A coboundary maps to the zero class.
            BitVector bv(k.face_count(j - 1));
            std::bernoulli_distribution coin(0.5);
            for (std::size_t i = 0; i < bv.size(); ++i)
                if (coin(rng))
                    bv.set(i);
            const auto img = sq_cochain(1, coboundary(Cochain(k, j - 1, bv)));
            expect(is_cocycle(img) && !basis.reduce(img).any(),
                   "coboundary has a nonzero Sq class");
        }

        // Cartan on cohomology for all representative pairs.
        for (int pdeg = 1; pdeg <= k.dimension(); ++pdeg)
            for (int qdeg = 1; pdeg + qdeg <= k.dimension(); ++qdeg)
                for (const auto& a : basis.representatives(pdeg))
                    for (const auto& b : basis.representatives(qdeg))
                        for (int n = 1; n <= 2; ++n) {
                            const auto lhs =
                                reduce_or_zero(basis, sq_cochain(n, cup(a, b)));
                            BitVector rhs(lhs.size());
                            for (int i = 0; i <= n; ++i)
                                rhs ^= basis.reduce(
                                    cup(sq_cochain(i, a), sq_cochain(n - i, b)));
                            expect(lhs == rhs, "Cartan formula fails");
                        }
    }
    expect(instances == 200, "expected 200 instances");
}

void criterion8_stanley_reisner() {
    std::mt19937 rng(80808);
    std::vector<SimplicialComplex> corpus = {points_complex(2), p26(),
                                             boundary_complex(2), boundary_complex(3),
                                             cycle_complex(5), simplex_complex(2)};
    for (int t = 0; t < 10; ++t)
        corpus.push_back(random_complex(rng, 1, 7));

    auto binom = [](int n, int k) {
        if (k < 0 || k > n)
            return 0l;
        long r = 1;
        for (int i = 0; i < k; ++i)
            r = r * (n - i) / (i + 1);
        return r;
    };

    for (const auto& k : corpus) {
        for (int deg = 1; deg <= 6; ++deg) {
            long expected = 0;
            for (int j = 0; j <= k.dimension(); ++j)
                expected += static_cast<long>(k.face_count(j)) * binom(deg - 1, j);
            expect(static_cast<long>(monomial_basis(k, deg).size()) == expected,
                   "hilbert count mismatch at degree " + show(deg));
        }
        // Odd operations vanish for the degree-2 generators.
        for (int topo = 2; topo <= 6; topo += 2)
            for (int n = 1; n <= 5; n += 2)
                expect(sq_graded_matrix(k, n, topo, 2).is_zero(),
                       "odd graded matrix is nonzero");
    }

    expect(verify_a_ideal(points_complex(2), 2, 8), "a-ideal fails for two points");
    expect(verify_a_ideal(p26(), 2, 8), "a-ideal fails for P26");
    for (int t = 0; t < 10; ++t) {
        const auto k = random_complex(rng, 1, 7);
        expect(verify_a_ideal(k, 2, 8), "a-ideal fails on a random complex");
    }
}

void criterion9_corollary_checkers() {
    std::mt19937 rng(90909);
    std::vector<SimplicialComplex> corpus = {p26(), cycle_complex(6),
                                             boundary_complex(2), boundary_complex(3),
                                             points_complex(2)};
    for (int t = 0; t < 20; ++t)
        corpus.push_back(random_complex(rng, 1, 6));

    for (const auto& k : corpus) {
        const auto profile = za_sq_profile(k);
        expect(sq_dim_bound_violations(k, profile).empty(), "dimension bound violated");
        expect(low_degree_sq1_violations(profile).empty(), "low-degree Sq1 found");
    }

    // The degree-8 entry over P26 witnesses that the bound of 7 is sharp.
    const auto zp = za_sq_profile(p26()).aggregate;
    expect(zp.size() == 1 && zp.front().n == 1 && zp.front().degree == 8,
           "P26 witness entry missing");
}

void criterion10_ghost_conventions() {
    const auto ghost = SimplicialComplex::from_facets(2, {{1}});
    expect(za_betti(ghost) == std::map<int, long>{{0, 1}, {1, 1}},
           "point-with-ghost moment angle is " + show_map(za_betti(ghost)));
    expect(za_betti(points_complex(2)) == std::map<int, long>{{0, 1}, {3, 1}},
           "two-point moment angle is " + show_map(za_betti(points_complex(2))));
}

struct Criterion {
    std::string label;
    std::string description;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool with_six = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--six") == 0)
            with_six = true;

    std::vector<Criterion> criteria = {
        {"1", "P26 ground truth", criterion1_p26_ground_truth},
        {"2", "moment-angle complex over P26", criterion2_moment_angle_p26},
        {"3", "five-vertex scan",
         [] {
             bool ok = false;
             criterion3_scan_small(&ok);
         }},
        {"4", "substitution propagation", criterion4_substitution_propagation},
        {"5", "composition identity", criterion5_composition_identity},
        {"6", "splitting-theorem oracle", criterion6_splitting_oracle},
        {"7", "Steenrod property suite", criterion7_steenrod_properties},
        {"8", "Stanley-Reisner suite", criterion8_stanley_reisner},
        {"9", "corollary checkers", criterion9_corollary_checkers},
        {"10", "ghost-vertex Hochster convention", criterion10_ghost_conventions},
    };
    if (with_six)
        criteria.push_back({"3+", "six-vertex scan (long)", criterion3_scan_six});

    int failed = 0;
    for (const auto& c : criteria) {
        g_checks = 0;
        g_failures.clear();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && g_failures.empty();
        std::cout << "criterion " << c.label << (ok ? " PASS " : " FAIL ")
                  << c.description << " (" << g_checks << " checks)\n";
        if (!error.empty())
            std::cout << "    exception: " << error << "\n";
        for (const auto& f : g_failures)
            std::cout << "    " << f << "\n";
        if (!ok)
            ++failed;
    }
    std::cout << (failed == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return failed == 0 ? 0 : 1;
}
