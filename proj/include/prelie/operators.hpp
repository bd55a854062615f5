#pragma once

#include "prelie/algebra.hpp"
#include "prelie/nijenhuis.hpp"

namespace prelie {

/// T : V -> g intertwines the product with the action:
/// T(u).T(v) = T(rho(Tu)v + mu(Tv)u) on all basis pairs of V.
CheckResult is_o_operator(const Algebra& a, const Representation& rep, const Matrix& t);

/// R(x).R(y) = R(R(x).y + x.R(y)) + weight * R(x.y).
CheckResult is_rota_baxter(const Algebra& a, const Matrix& r, const Rational& weight);

/// Block operators on the semidirect product attached to T.
enum class LiftMode {
    rota_baxter, // (0 T; 0 -weight*Id), tested as a Rota-Baxter operator
    nilpotent,   // (0 T; 0 0), squares to zero, tested as Nijenhuis
    idempotent,  // (0 T; 0 Id), idempotent, tested as Nijenhuis
};

struct LiftResult {
    Algebra semidirect;
    Matrix op;
    CheckResult verdict;
};

/// Builds the block operator of the requested mode on g + V and runs the
/// matching check; its verdict agrees with is_o_operator(a, rep, t).
LiftResult lift_to_semidirect(const Algebra& a, const Representation& rep, const Matrix& t,
                              LiftMode mode, const Rational& weight = Rational(0));

/// Compatibility identity: mixed sums of the two O-operator identities
/// hold on all basis pairs; equivalently every combination k1 T1 + k2 T2
/// is again an O-operator (re-sampled internally at three points).
CheckResult are_compatible_o_operators(const Algebra& a, const Representation& rep,
                                       const Matrix& t1, const Matrix& t2);

/// T1 composed with the inverse of T2, for compatible O-operators with T2
/// invertible; the result is a Nijenhuis operator.
Matrix nijenhuis_from_compatible(const Algebra& a, const Representation& rep, const Matrix& t1,
                                 const Matrix& t2);

/// Two bilinear products (x > y and x < y) subject to the L-dendriform
/// axioms; x > y - y < x is then pre-Lie.
struct LDendriform {
    Cochain right; // x > y
    Cochain left;  // x < y
    std::size_t dim() const { return right.dim(); }
};

CheckResult is_l_dendriform(const LDendriform& d);
CheckResult are_compatible_l_dendriform(const LDendriform& d1, const LDendriform& d2);

/// L-dendriform structure on V induced by an O-operator:
/// u > v = rho(Tu)v, u < v = -mu(Tu)v.
LDendriform l_dendriform_from_o_operator(const Algebra& a, const Representation& rep,
                                         const Matrix& t);

/// Conjugated variant living on the algebra itself (T invertible):
/// x > y = T rho(x) T^-1 y, x < y = -T mu(x) T^-1 y.
LDendriform l_dendriform_on_algebra(const Algebra& a, const Representation& rep, const Matrix& t);

/// The pre-Lie product x > y - y < x of an L-dendriform algebra.
Algebra vertical_prelie(const LDendriform& d);

} // namespace prelie
