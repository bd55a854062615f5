#pragma once

#include "prelie/algebra.hpp"
#include "prelie/forms.hpp"

namespace prelie {

/// Solution of the operator Yang-Baxter identity on a Lie algebra:
/// [r(x), r(y)] = r([r(x),y] + [x,r(y)]).
CheckResult satisfies_cybe(const Algebra& lie, const Matrix& r);

/// Pre-Lie product x.y = [r(x), y] for a Yang-Baxter operator r.
Algebra prelie_from_cybe(const Algebra& lie, const Matrix& r);

/// Identity R(x)*R(y) + R(x*y) = R(R(x)*y + x*R(y)) on an associative
/// algebra (a Rota-Baxter operator of weight -1).
CheckResult satisfies_rb_assoc(const Algebra& assoc, const Matrix& r);

/// Pre-Lie product x.y = R(x)*y - y*R(x) - x*y.
Algebra prelie_from_rb_assoc(const Algebra& assoc, const Matrix& r);

/// Pre-Lie product x.y = <x,y> a + <x,a> y for the scalar product given by
/// a symmetric nondegenerate matrix.
Algebra burgers_prelie(const Vec& a, const Matrix& gram);

CheckResult is_derivation(const Algebra& a, const Matrix& d);

/// Right multiplications commute.
CheckResult is_novikov(const Algebra& a);

struct NovikovResult {
    Algebra algebra;
    CheckResult novikov;
};

/// Product x.y = x*D(y) + s(x*y) on a commutative associative algebra with
/// derivation D; always pre-Lie, and Novikov (verified in the verdict).
NovikovResult novikov_from_derivation(const Algebra& comm, const Matrix& d, const Rational& s);

/// Vector variant x.y = x*D(y) + alpha*x*y.
Algebra novikov_alpha_product(const Algebra& comm, const Matrix& d, const Vec& alpha);

struct AlphaVariantReport {
    bool hypothesis = false;            // N(alpha*x*y) = alpha*N(x*y)
    bool derivation_on_deformed = false;
    bool nijenhuis_on_alpha = false;
    bool recipe_matches = false;
    // detail strings for failed items
    std::string witness;
};

/// For N commuting with D and satisfying the alpha-absorption hypothesis,
/// checks the three transported statements: D stays a derivation on the
/// deformed associative product, N is Nijenhuis for the alpha-product, and
/// deforming the alpha-product agrees with x *_N D(y) + alpha*(x *_N y).
AlphaVariantReport check_alpha_variant(const Algebra& comm, const Matrix& d, const Vec& alpha,
                                       const Matrix& op);

} // namespace prelie
