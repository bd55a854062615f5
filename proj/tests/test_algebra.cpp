#include "prelie/algebra.hpp"
#include "prelie/errors.hpp"
#include "prelie/fixtures.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace prelie;
namespace oracle = prelie::testing;

namespace {

Algebra bilinear(std::size_t n,
                 const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, int>>& entries,
                 AlgebraKind kind = AlgebraKind::unchecked) {
    MultiMap prod(n, 1);
    for (const auto& [i, j, k, v] : entries) prod.coeff({i, j}, k) = v;
    return Algebra(Cochain(std::move(prod)), kind);
}

} // namespace

TEST_CASE("pre-Lie check on fixtures and counterexamples") {
    CHECK(check_pre_lie(fixtures::a2()));
    CHECK(check_pre_lie(fixtures::a3()));
    CHECK(check_pre_lie(Algebra::zero(4)));

    // Only e1.e2 = e1: associators at (e1,e2,e2) differ (e1 vs 0).
    const Algebra bad = bilinear(2, {{0, 1, 0, 1}});
    const auto r = check_pre_lie(bad);
    CHECK(!r);
    CHECK(r.witness.find("(e1,e2,e2)") != std::string::npos);
    CHECK(r.witness.find("e1") != std::string::npos);
}

TEST_CASE("sub-adjacent Lie algebra") {
    const Algebra lie = sub_adjacent(fixtures::a2());
    CHECK(lie.kind() == AlgebraKind::lie);
    CHECK(lie.multiply_basis(1, 0) == Vec{Rational(-1), Rational(0)});
    CHECK(lie.multiply_basis(0, 1) == Vec{Rational(1), Rational(0)});
    CHECK(is_zero(lie.multiply_basis(0, 0)));
    CHECK(is_zero(lie.multiply_basis(1, 1)));

    // The 4-dimensional fixture's commutators reproduce the bracket table.
    const Algebra pk4 = sub_adjacent(fixtures::pk4_prelie_expected());
    CHECK(pk4.product() == fixtures::pk4_lie().product());

    // A commutative pre-Lie product has an abelian commutator algebra.
    const Algebra comm = bilinear(2, {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 0, 1}});
    REQUIRE(check_pre_lie(comm));
    CHECK(sub_adjacent(comm).product().is_zero());

    CHECK_THROWS_AS(sub_adjacent(bilinear(2, {{0, 1, 0, 1}})), input_error);
}

TEST_CASE("regular and dual representations") {
    const Algebra a2 = fixtures::a2();
    const Representation reg = regular_representation(a2);
    CHECK(reg.rho[1] == Matrix{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(check_representation(a2, reg));

    const Representation dual = dual_regular_representation(a2);
    // ad*_{e2} applied to the first dual basis vector.
    CHECK(dual.rho[1].column(0) == Vec{Rational(1), Rational(0)});
    CHECK(check_representation(a2, dual));

    const Algebra zero = Algebra::zero(3);
    const Representation zreg = regular_representation(zero);
    for (const auto& m : zreg.rho) CHECK(m.is_zero());
    CHECK(check_representation(zero, zreg));
    CHECK(check_representation(zero, dual_regular_representation(zero)));
}

TEST_CASE("representation check catches bad pairs") {
    const Algebra a2 = fixtures::a2();
    CHECK(check_representation(a2, trivial_representation(a2)));

    Representation bad = regular_representation(a2);
    bad.mu = bad.rho; // (L, L) violates the compatibility at (e2,e2)
    const auto r = check_representation(a2, bad);
    CHECK(!r);
    CHECK(r.witness.find("e2") != std::string::npos);

    Representation misshapen = trivial_representation(a2);
    misshapen.rho.pop_back();
    CHECK_THROWS_AS(check_representation(a2, misshapen), input_error);
}

TEST_CASE("semidirect products") {
    const Algebra a2 = fixtures::a2();

    const Algebra with_trivial = semidirect_product(a2, trivial_representation(a2));
    CHECK(with_trivial.dim() == 3);
    CHECK(check_pre_lie(with_trivial));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Vec v = with_trivial.multiply_basis(i, j);
            CHECK(Vec(v.begin(), v.begin() + 2) == a2.multiply_basis(i, j));
            CHECK(v[2] == 0);
        }
    CHECK(is_zero(with_trivial.multiply_basis(2, 2)));

    const Algebra with_regular = semidirect_product(a2, regular_representation(a2));
    CHECK(with_regular.dim() == 4);
    CHECK(check_pre_lie(with_regular));

    const Algebra zero = Algebra::zero(2);
    const Algebra dsum = semidirect_product(zero, trivial_representation(zero));
    CHECK(dsum.dim() == 3);
    CHECK(dsum.product().is_zero());
}

TEST_CASE("a representation is exactly what makes the twisted sum pre-Lie") {
    const Algebra a2 = fixtures::a2();
    Representation bad = regular_representation(a2);
    bad.mu = bad.rho;
    CHECK_THROWS_AS(semidirect_product(a2, bad), input_error);

    // Building the twisted product by hand from the failing pair must
    // break the pre-Lie identity.
    const std::size_t n = 2, m = 2;
    MultiMap prod(n + m, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) prod.coeff({i, j}, k) = a2.c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t t = 0; t < m; ++t) {
                prod.coeff({i, n + b}, n + t) = bad.rho[i].at(t, b);
                prod.coeff({n + b, i}, n + t) = bad.mu[i].at(t, b);
            }
    CHECK(!check_pre_lie(Algebra(Cochain(std::move(prod)), AlgebraKind::unchecked)));
}

TEST_CASE("pre-Lie products are exactly the self-commuting bilinear maps") {
    std::mt19937_64 rng(41);
    int prelie_hits = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 3;
        Algebra a = oracle::random_bilinear_algebra(rng, dim);
        if (trial % 5 == 0) a = fixtures::a2(); // guarantee positives
        const bool direct = static_cast<bool>(check_pre_lie(a));
        const bool bracket = c_bracket(a.product(), a.product()).is_zero();
        CHECK(direct == bracket);
        prelie_hits += direct;
    }
    CHECK(prelie_hits > 0);
}

TEST_CASE("kind verification") {
    CHECK(verify_kind(fixtures::a2()));
    CHECK(verify_kind(fixtures::pk4_lie()));
    CHECK(verify_kind(fixtures::assoc2()));
    CHECK(verify_kind(fixtures::poly3()));
    CHECK(check_commutative(fixtures::poly3()));
    CHECK(!check_commutative(fixtures::assoc2()));
    CHECK(!verify_kind(fixtures::a2().with_kind(AlgebraKind::lie)));
}
