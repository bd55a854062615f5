#pragma once

#include "prelie/algebra.hpp"
#include "prelie/cohomology.hpp"

namespace prelie {

/// Deformed product [pi, N]^C, explicitly
/// N(x).y + x.N(y) - N(x.y). Defined for any bilinear product.
Cochain deformed_product(const Algebra& a, const Matrix& op);

/// Algebra carrying the deformed product. The kind is propagated when the
/// operator is Nijenhuis (the deformed product then inherits the identity),
/// otherwise the result is tagged unchecked.
Algebra deformed_algebra(const Algebra& a, const Matrix& op);

/// Torsion of N: N(x .N y) - N(x).N(y). Every call also evaluates the
/// graded-bracket expression (1/2)([pi, N<>N]^C + [N, [pi,N]^C]^C) and
/// insists the two routes agree.
Cochain torsion(const Algebra& a, const Matrix& op);

/// Torsion via the graded-bracket route only (exposed for cross-checks).
Cochain torsion_via_bracket(const Algebra& a, const Matrix& op);

/// Vanishing torsion. On success, when the algebra genuinely has its
/// claimed kind, the classical consequences are verified as internal
/// postconditions (deformed product keeps the kind; for pre-Lie algebras N
/// is also Nijenhuis for the commutator bracket, which deforms to the
/// commutator of the deformed product).
CheckResult is_nijenhuis(const Algebra& a, const Matrix& op);

struct DeformationReport {
    bool is_cocycle = false;
    bool is_square_zero = false;
    bool is_deformation = false;
    std::string cocycle_witness;
    std::string square_witness;
};

/// Decides whether a bilinear map generates a one-parameter deformation:
/// it must be closed for the regular representation and have vanishing
/// self-bracket.
DeformationReport check_deformation(const Algebra& a, const Cochain& omega);

struct EquivalenceReport {
    bool ok = false;
    bool difference_is_exact = false; // omega - omega' is the coboundary of N
    bool integral_condition = false;  // N omega(x,y) = omega'(x,Ny) + omega'(Nx,y) + Nx.Ny
    bool image_condition = false;     // omega'(Nx, Ny) = 0
    std::string witness_exact, witness_integral, witness_image;
};

/// Checks the three identities characterizing equivalence of the
/// deformations generated by omega and omega_prime through Id + tN. With
/// omega_prime = 0 and a positive verdict, the family Id + tN is verified
/// to intertwine pi_t with pi at four rational t (both sides are
/// quadratic polynomials in t, so four points force equality).
EquivalenceReport check_equivalence(const Algebra& a, const Cochain& omega,
                                    const Cochain& omega_prime, const Matrix& op);

/// Laurent polynomial in N: sum of coeffs[i] * N^(lowest + i). Negative
/// exponents require N invertible.
Matrix operator_polynomial(const Matrix& op, long lowest, const std::vector<Rational>& coeffs);

} // namespace prelie
