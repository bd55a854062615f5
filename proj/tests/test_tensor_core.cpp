#include "prelie/errors.hpp"
#include "prelie/fixtures.hpp"
#include "prelie/multimap.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace prelie;
namespace oracle = prelie::testing;

namespace {

const MultiMap& a2_pi() {
    static const MultiMap pi = fixtures::a2().product().tensor();
    return pi;
}

} // namespace

TEST_CASE("circle product on the triangular fixture") {
    const MultiMap pp = compose_circle(a2_pi(), a2_pi());
    // Both insertion slots contribute -e1 at (e2,e2,e1).
    CHECK(pp.value({1, 1, 0}) == Vec{Rational(-2), Rational(0)});
}

TEST_CASE("circle product with zero and on the zero algebra") {
    const MultiMap zero_bilinear(2, 1);
    CHECK(compose_circle(a2_pi(), zero_bilinear).is_zero());
    CHECK(compose_circle(zero_bilinear, zero_bilinear).is_zero());
}

TEST_CASE("graded bracket basics") {
    std::mt19937_64 rng(7);
    const MultiMap two_pp = Rational(2) * compose_circle(a2_pi(), a2_pi());
    CHECK(gerstenhaber_bracket(a2_pi(), a2_pi()) == two_pp);

    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const unsigned p = trial % 3, q = (trial + 1) % 2;
        const MultiMap P = oracle::random_multimap(rng, n, p);
        const MultiMap Q = oracle::random_multimap(rng, n, q);
        const MultiMap lhs = gerstenhaber_bracket(P, Q);
        MultiMap rhs = gerstenhaber_bracket(Q, P);
        rhs = (p * q) % 2 == 0 ? -rhs : rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("associative coboundary through the graded bracket") {
    std::mt19937_64 rng(11);
    for (const Algebra& assoc : {fixtures::assoc2(), fixtures::poly3()}) {
        REQUIRE(check_associative(assoc));
        const MultiMap pi = assoc.product().tensor();
        for (unsigned degree = 0; degree <= 2; ++degree) {
            const MultiMap p = oracle::random_multimap(rng, assoc.dim(), degree);
            const MultiMap via_bracket = gerstenhaber_bracket(pi, p);
            const MultiMap direct = oracle::hochschild_coboundary(assoc, p);
            CHECK((degree % 2 == 0 ? via_bracket : -via_bracket) == direct);
        }
    }
}

TEST_CASE("alternator is the identity on bilinear maps") {
    std::mt19937_64 rng(3);
    const MultiMap p = oracle::random_multimap(rng, 3, 1);
    CHECK(alternator(p).tensor() == p);
}

TEST_CASE("alternator halves a trilinear map") {
    std::mt19937_64 rng(5);
    const MultiMap p = oracle::random_multimap(rng, 2, 2);
    const Cochain alt = alternator(p);
    const Rational half(1, 2);
    for_each_tuple(2, 3, [&](const std::vector<std::size_t>& x) {
        const Vec expected =
            half * (p.value(x) - p.value({x[1], x[0], x[2]}));
        CHECK(alt.value(x) == expected);
    });
}

TEST_CASE("alternator is a projection") {
    std::mt19937_64 rng(13);
    for (std::size_t dim = 2; dim <= 4; ++dim)
        for (unsigned degree = 0; degree <= 4; ++degree) {
            if (dim == 4 && degree == 4) continue; // keep the sweep quick
            const MultiMap p = oracle::random_multimap(rng, dim, degree);
            const Cochain once = alternator(p);
            CHECK(alternator(once.tensor()) == once);
        }
}

TEST_CASE("alternator interacts with composition") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const unsigned p = trial % 2 + 1, q = trial % 3 == 0 ? 2 : trial % 2;
        if (p + q > 3) continue;
        const MultiMap P = oracle::random_multimap(rng, n, p);
        const MultiMap Q = oracle::random_multimap(rng, n, q);
        const Cochain lhs = alternator(compose_circle(P, Q));
        const Cochain rhs = alternator(
            compose_circle(alternator(P).tensor(), alternator(Q).tensor()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("self-bracket detects the pre-Lie identity") {
    CHECK(c_bracket(fixtures::a2().product(), fixtures::a2().product()).is_zero());
}

TEST_CASE("bracket with an operator recovers the deformed product") {
    for (const auto& [c, d] : {std::pair{Rational(1), Rational(1)},
                               std::pair{Rational(2), Rational(3)}}) {
        const Cochain n = Cochain::from_operator(fixtures::a2_operator(c, d));
        const Cochain br = c_bracket(fixtures::a2().product(), n);
        CHECK(br.value({1, 0}) == Vec{-c, Rational(0)});
    }
    const Cochain zero = Cochain::zero(2, 0);
    CHECK(c_bracket(fixtures::a2().product(), zero).is_zero());
}

TEST_CASE("graded bracket on cochains is graded-antisymmetric and satisfies Jacobi") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const unsigned p = trial % 2 + 1, q = trial % 2, r = (trial + 1) % 2;
        if (p + q + r > 3) continue;
        const Cochain P = oracle::random_cochain(rng, n, p);
        const Cochain Q = oracle::random_cochain(rng, n, q);
        const Cochain R = oracle::random_cochain(rng, n, r);

        Cochain anti = c_bracket(Q, P);
        anti = (p * q) % 2 == 0 ? -anti : anti;
        CHECK(c_bracket(P, Q) == anti);

        // Graded Leibniz form of the Jacobi identity.
        const Cochain lhs = c_bracket(P, c_bracket(Q, R));
        Cochain mixed = c_bracket(Q, c_bracket(P, R));
        mixed = (p * q) % 2 == 0 ? mixed : -mixed;
        const Cochain rhs = c_bracket(c_bracket(P, Q), R) + mixed;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("diamond matches the unshuffle expansion") {
    std::mt19937_64 rng(29);
    for (unsigned p = 1; p <= 2; ++p)
        for (unsigned q = 1; q <= 2; ++q)
            for (std::size_t n = 2; n <= 3; ++n) {
                const Cochain P = oracle::random_cochain(rng, n, p);
                const Cochain Q = oracle::random_cochain(rng, n, q);
                const Cochain lhs = diamond(P, Q);
                const MultiMap rhs = oracle::diamond_unshuffle(P.tensor(), Q.tensor());
                CHECK(lhs.tensor() == rhs);
            }
}

TEST_CASE("cochain constructor rejects non-skew tensors") {
    std::mt19937_64 rng(31);
    MultiMap p = oracle::random_multimap(rng, 2, 2);
    p.coeff({0, 1, 0}, 0) = 5;
    p.coeff({1, 0, 0}, 0) = 5; // same sign: not skew
    CHECK_THROWS_AS(Cochain{std::move(p)}, input_error);
}

TEST_CASE("guardrails reject oversized requests") {
    const MultiMap big(11, 0);
    CHECK_THROWS_AS(alternator(big), resource_error);
    const MultiMap p(2, 2), q(2, 3);
    CHECK_THROWS_AS(compose_circle(p, q), resource_error);
}
