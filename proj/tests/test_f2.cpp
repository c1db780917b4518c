#include <doctest.h>

#include <random>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"
#include "sqtop/f2.hpp"

using namespace sqtop;

TEST_CASE("rank of basic matrices") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix(4, 7)) == 0);

    // rank of the vertex-to-edge coboundary of the triangle boundary:
    // a connected complex has reduced b^0 = 0, so rank = #vertices - 1.
    const auto k = boundary_complex(2);
    CHECK(rank(coboundary_matrix(k, 0, false)) == 2);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(BitMatrix::identity(5)).empty());

    const auto zero23 = BitMatrix(2, 3);
    const auto kb = kernel_basis(zero23);
    REQUIRE(kb.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(kb[i] == BitVector::unit(3, i));

    // δ^1 of ∂Δ² is the 0x3 matrix (no 2-faces), so the kernel is all of C^1.
    const auto k = boundary_complex(2);
    const auto d1 = coboundary_matrix(k, 1);
    CHECK(d1.rows() == 0);
    CHECK(kernel_basis(d1).size() == 3);
}

TEST_CASE("solve_in_span") {
    const auto e1 = BitVector::unit(4, 0), e2 = BitVector::unit(4, 1);
    auto r = solve_in_span({e1, e2}, e1 ^ e2);
    REQUIRE(r.has_value());
    CHECK(r->get(0));
    CHECK(r->get(1));

    CHECK(!solve_in_span({e1}, e2).has_value());

    // The all-edges cochain of ∂Δ² is a cocycle but not a coboundary: it
    // represents the generator of H^1(S^1).
    const auto k = boundary_complex(2);
    const auto d0 = coboundary_matrix(k, 0, false);
    BitVector all_edges(3);
    for (std::size_t i = 0; i < 3; ++i)
        all_edges.set(i);
    CHECK(!solve_in_span(d0.columns(), all_edges).has_value());

    CHECK_THROWS_AS(solve_in_span({BitVector(3)}, BitVector(4)), std::invalid_argument);
}

TEST_CASE("quotient bases") {
    const auto e1 = BitVector::unit(2, 0), e2 = BitVector::unit(2, 1);

    QuotientBasis q(2, {e1, e2}, {e2});
    REQUIRE(q.dim() == 1);
    const auto c = q.reduce(e1 ^ e2);
    REQUIRE(c.size() == 1);
    CHECK(c.get(0));

    QuotientBasis trivial(2, {e1, e2}, {e1, e2});
    CHECK(trivial.dim() == 0);
    CHECK(trivial.reduce(e1 ^ e2).size() == 0);

    CHECK_THROWS_AS(QuotientBasis(2, {e1}, {e2}), std::invalid_argument);

    // P26 in degree 1: one nonzero class.
    const auto k = p26();
    const auto z = kernel_basis(coboundary_matrix(k, 1));
    const auto b = coboundary_matrix(k, 0, false).columns();
    QuotientBasis h1(k.face_count(1), z, b);
    CHECK(h1.dim() == 1);
}

TEST_CASE("elimination properties on random matrices") {
    std::mt19937 rng(20240901);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, trial < 10 ? 60 : 512);
        const std::size_t r = dim(rng), c = dim(rng);
        BitMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (coin(rng))
                    m.set(i, j);

        CHECK(rank(m) == rank(m.transposed()));

        const auto kb = kernel_basis(m);
        CHECK(kb.size() == c - rank(m));
        for (const auto& v : kb)
            CHECK(m.apply(v).none());
        // Independence: the kernel vectors alone span a space of their size.
        F2Echelon ech;
        std::size_t indep = 0;
        for (const auto& v : kb)
            indep += ech.insert(v, BitVector(0)) ? 1 : 0;
        CHECK(indep == kb.size());
    }
}

TEST_CASE("quotient reduce is constant on cosets") {
    std::mt19937 rng(77);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t len = 24;
        auto rand_vec = [&]() {
            BitVector v(len);
            for (std::size_t i = 0; i < len; ++i)
                if (coin(rng))
                    v.set(i);
            return v;
        };
        std::vector<BitVector> z;
        for (int i = 0; i < 10; ++i)
            z.push_back(rand_vec());
        // B: random combinations of Z so the containment holds.
        std::vector<BitVector> b;
        for (int i = 0; i < 4; ++i) {
            BitVector acc(len);
            for (const auto& v : z)
                if (coin(rng))
                    acc ^= v;
            b.push_back(acc);
        }
        QuotientBasis q(len, z, b);

        F2Echelon zspan;
        for (const auto& v : z)
            zspan.insert(v, BitVector(0));
        CHECK(q.dim() == zspan.rank() - [&] {
            F2Echelon bspan;
            std::size_t r = 0;
            for (const auto& v : b)
                r += bspan.insert(v, BitVector(0)) ? 1 : 0;
            return r;
        }());

        const auto& zv = z[static_cast<std::size_t>(trial) % z.size()];
        for (const auto& bv : b)
            CHECK(q.reduce(zv ^ bv) == q.reduce(zv));
    }
}
