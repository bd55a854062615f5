#include "prelie/errors.hpp"
#include "prelie/matrix.hpp"
#include "prelie/rational.hpp"

#include <doctest.h>

using namespace prelie;

TEST_CASE("rational parsing and canonical text") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
}

TEST_CASE("rational parser rejects garbage") {
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("a/b"), input_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
}

TEST_CASE("matrix inverse and rank") {
    Matrix m{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    const Matrix inv = m.inverse();
    CHECK(inv == Matrix{{Rational(1), Rational(-1)}, {Rational(0), Rational(1)}});
    CHECK(m * inv == Matrix::identity(2));
    CHECK(m.rank() == 2);

    Matrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(singular.rank() == 1);
    CHECK(!singular.invertible());
    CHECK_THROWS_AS(singular.inverse(), input_error);
}

TEST_CASE("matrix power with negative exponent") {
    Matrix m{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    CHECK(m.pow(2) == Matrix{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}});
    CHECK(m.pow(-1) == m.inverse());
    CHECK(m.pow(0) == Matrix::identity(2));
    CHECK(m.pow(-3) * m.pow(3) == Matrix::identity(2));
}

TEST_CASE("kernel and solve") {
    Matrix m{{Rational(1), Rational(2), Rational(3)},
             {Rational(2), Rational(4), Rational(6)},
             {Rational(1), Rational(0), Rational(1)}};
    const auto kernel = m.kernel_basis();
    REQUIRE(kernel.size() == 1);
    CHECK(is_zero(m * kernel[0]));

    const Vec b = m * Vec{Rational(1), Rational(1), Rational(1)};
    const auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);

    // Inconsistent system.
    Matrix flat{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(!flat.solve(Vec{Rational(0), Rational(1)}).has_value());
}

TEST_CASE("span membership") {
    const std::vector<Vec> basis = {{Rational(1), Rational(0), Rational(1)},
                                    {Rational(0), Rational(1), Rational(0)}};
    CHECK(in_span(basis, Vec{Rational(2), Rational(3), Rational(2)}));
    CHECK(!in_span(basis, Vec{Rational(1), Rational(0), Rational(0)}));
    CHECK(rank_of_span(basis, 3) == 2);
}
