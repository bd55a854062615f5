#pragma once

#include "prelie/algebra.hpp"
#include "prelie/forms.hpp"
#include "prelie/multimap.hpp"

namespace prelie {

/// Coboundary of a V-valued cochain for an arbitrary representation.
/// For the regular representation the result is cross-checked against the
/// graded-bracket route of coboundary_regular.
Cochain coboundary(const Algebra& a, const Representation& rep, const Cochain& phi);

/// (-1)^p [pi, phi]^C; defined for algebra-valued cochains only.
Cochain coboundary_regular(const Algebra& a, const Cochain& phi);

/// Coboundary for the trivial representation (scalar-valued cochains).
Cochain coboundary_trivial(const Algebra& a, const Cochain& phi);

CheckResult is_cocycle(const Algebra& a, const Representation& rep, const Cochain& phi);

/// Scalar-valued 2-cochain attached to a bilinear form.
Cochain cochain_from_form(const Matrix& form);

/// Coboundary of a bilinear form for the trivial representation, returned
/// as a scalar-valued 3-cochain.
Cochain form_coboundary(const Algebra& a, const Matrix& form);

/// d(B) = 0 for the trivial representation.
CheckResult is_closed_form(const Algebra& a, const Matrix& form);

/// Cyclic 2-cocycle identity on a Lie algebra.
CheckResult is_lie_two_cocycle(const Algebra& lie, const BilinearForm& omega);

} // namespace prelie
