#pragma once

#include "prelie/algebra.hpp"
#include "prelie/forms.hpp"

#include <string>
#include <vector>

namespace prelie::fixtures {

// Two-dimensional pre-Lie algebra with e2.e1 = -e1, e2.e2 = e2, carrying
// the family of forms a(e1*x*e2* + e2*x*e1*) + b e2*x*e2* and the triangular
// operators [[c,d],[0,c]].
Algebra a2();
BilinearForm a2_form(const Rational& a, const Rational& b);
Matrix a2_operator(const Rational& c, const Rational& d);

// Three-dimensional pre-Lie algebra with e3.e2 = e2, e3.e3 = -e3, its
// family of forms and block-triangular operators.
Algebra a3();
BilinearForm a3_form(const Rational& a, const Rational& b, const Rational& c);
Matrix a3_operator(const Rational& d, const Rational& e, const Rational& f);

// Four-dimensional symplectic Lie algebra with brackets
// [e1,e3]=e3, [e1,e4]=e4, [e2,e3]=-e4, [e2,e4]=e3, the symplectic form
// e1^e3 + e2^e4, and the involutions n1 = diag(1,1,-1,-1), n2 = -n1.
Algebra pk4_lie();
BilinearForm pk4_omega();
Matrix pk4_n1();
Matrix pk4_n2();
// The pre-Lie product the symplectic structure induces (hand-expanded).
Algebra pk4_prelie_expected();

// The six pre-Lie algebra families on which weight-zero Rota-Baxter
// operators are exactly the square-zero operators. Families 1, 2 take the
// dimension as a parameter; 3, 4 are two-dimensional; 5, 6 are
// three-dimensional.
Algebra rb_family(int item, std::size_t dim = 0);

// Yang-Baxter fixture: Lie algebra [e1,e2] = e2 with r = diag(1,0).
Algebra cybe_lie();
Matrix cybe_r();

// Scalar-product fixture data for the two-dimensional construction.
Vec burgers_a();
Matrix burgers_gram();
Matrix burgers_rotation();

// Associative fixture e1*e1 = e1, e1*e2 = e2 with R = diag(1,0).
Algebra assoc2();
Matrix assoc2_r();

// Truncated polynomials of dimension 3 (basis 1, x, x^2, with x^3 = 0)
// and the differentiation operator.
Algebra poly3();
Matrix poly3_derivation();

/// One executed check of the built-in corpus.
struct FixtureCheck {
    std::string fixture;
    std::string check;
    std::string ref; // stable identifier of the claim being reproduced
    bool pass = false;
    std::string detail;
};

/// Runs the whole built-in corpus and reports one line per check,
/// ordered by fixture name then check name.
std::vector<FixtureCheck> run_all();

} // namespace prelie::fixtures
