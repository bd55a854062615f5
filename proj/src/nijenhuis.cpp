#include "prelie/nijenhuis.hpp"

#include "prelie/errors.hpp"

#include <sstream>

namespace prelie {

namespace {

void require_operator_shape(const Algebra& a, const Matrix& op) {
    if (op.rows() != a.dim() || op.cols() != a.dim())
        throw input_error("operator shape does not match the algebra dimension");
}

Cochain antisymmetrize_bilinear(const Cochain& prod) {
    const std::size_t n = prod.dim();
    MultiMap out(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = prod.value(ij) - prod.value({ij[1], ij[0]});
        for (std::size_t k = 0; k < n; ++k) out.coeff(ij, k) = v[k];
    });
    return Cochain(std::move(out));
}

} // namespace

Cochain deformed_product(const Algebra& a, const Matrix& op) {
    require_operator_shape(a, op);
    return c_bracket(a.product(), Cochain::from_operator(op));
}

Algebra deformed_algebra(const Algebra& a, const Matrix& op) {
    const Cochain prod = deformed_product(a, op);
    const bool keeps_kind = static_cast<bool>(verify_kind(a)) &&
                            a.kind() != AlgebraKind::unchecked && torsion(a, op).is_zero();
    return Algebra(prod, keeps_kind ? a.kind() : AlgebraKind::unchecked, a.basis());
}

Cochain torsion_via_bracket(const Algebra& a, const Matrix& op) {
    require_operator_shape(a, op);
    const Cochain n_cochain = Cochain::from_operator(op);
    const Cochain n_squared = diamond(n_cochain, n_cochain);
    const Cochain pi_n = c_bracket(a.product(), n_cochain);
    const Cochain sum = c_bracket(a.product(), n_squared) + c_bracket(n_cochain, pi_n);
    return Rational(1, 2) * sum;
}

Cochain torsion(const Algebra& a, const Matrix& op) {
    require_operator_shape(a, op);
    const std::size_t n = a.dim();
    const Cochain deformed = deformed_product(a, op);
    MultiMap direct(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = op * deformed.value(ij) -
                      a.multiply(op.column(ij[0]), op.column(ij[1]));
        for (std::size_t k = 0; k < n; ++k) direct.coeff(ij, k) = v[k];
    });
    Cochain result{std::move(direct)};
    if (result != torsion_via_bracket(a, op))
        throw std::logic_error("torsion routes disagree (direct vs graded bracket)");
    return result;
}

CheckResult is_nijenhuis(const Algebra& a, const Matrix& op) {
    const Cochain t = torsion(a, op);
    if (auto hit = t.tensor().first_nonzero()) {
        const auto& args = hit->first;
        return CheckResult::fail("torsion nonzero at (" + a.label(args[0]) + "," +
                                 a.label(args[1]) +
                                 "): " + format_vector(t.value(args), a.basis()));
    }
    // Consequences of vanishing torsion, re-verified when the algebra's
    // claimed kind actually holds.
    if (a.kind() == AlgebraKind::pre_lie && check_pre_lie(a)) {
        const Algebra deformed = deformed_algebra(a, op);
        if (auto r = check_pre_lie(deformed); !r)
            throw std::logic_error("deformed product lost the pre-Lie identity: " + r.witness);
        const Algebra commutator = sub_adjacent(a);
        if (!torsion(commutator, op).is_zero())
            throw std::logic_error("operator is not Nijenhuis for the commutator bracket");
        if (deformed_product(commutator, op) != antisymmetrize_bilinear(deformed.product()))
            throw std::logic_error(
                "deformed commutator bracket differs from the commutator of the deformed product");
    } else if (a.kind() == AlgebraKind::lie && check_lie(a)) {
        const Cochain bracket = deformed_product(a, op);
        if (auto r = check_lie(Algebra(bracket, AlgebraKind::unchecked, a.basis())); !r)
            throw std::logic_error("deformed bracket lost the Lie identity: " + r.witness);
    }
    return CheckResult::pass();
}

DeformationReport check_deformation(const Algebra& a, const Cochain& omega) {
    if (auto r = check_pre_lie(a); !r)
        throw input_error("deformation check requires a pre-Lie algebra: " + r.witness);
    if (omega.degree() != 1 || omega.dim() != a.dim() || omega.codim() != a.dim())
        throw input_error("deformation generator must be a bilinear map on the algebra");

    DeformationReport report;
    const auto cocycle = is_cocycle(a, regular_representation(a), omega);
    report.is_cocycle = cocycle.ok;
    report.cocycle_witness = cocycle.witness;

    const Cochain square = c_bracket(omega, omega);
    if (auto hit = square.tensor().first_nonzero())
        report.square_witness = format_entry_witness(
            hit->first, hit->second, square.tensor().coeff(hit->first, hit->second));
    report.is_square_zero = !square.tensor().first_nonzero().has_value();

    report.is_deformation = report.is_cocycle && report.is_square_zero;
    if (report.is_deformation) {
        // pi + t*omega must be pre-Lie for every t; its self-bracket is a
        // quadratic polynomial in t whose coefficients are exactly the two
        // conditions above, so sampled values can only confirm.
        for (const Rational& t : {Rational(1), Rational(-1), Rational(1, 2), Rational(3)}) {
            const Cochain deformed = a.product() + t * omega;
            if (auto r = check_pre_lie(Algebra(deformed, AlgebraKind::unchecked, a.basis())); !r)
                throw std::logic_error("deformed family failed at t = " + to_string(t) + ": " +
                                       r.witness);
        }
    }
    return report;
}

EquivalenceReport check_equivalence(const Algebra& a, const Cochain& omega,
                                    const Cochain& omega_prime, const Matrix& op) {
    if (auto r = check_pre_lie(a); !r)
        throw input_error("equivalence check requires a pre-Lie algebra: " + r.witness);
    require_operator_shape(a, op);
    const std::size_t n = a.dim();

    EquivalenceReport report;
    report.difference_is_exact = true;
    report.integral_condition = true;
    report.image_condition = true;

    const Cochain exact = deformed_product(a, op); // the coboundary of N
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const std::size_t i = ij[0], j = ij[1];
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
        const Vec ni = op.column(i), nj = op.column(j);
        const std::string at = " at (" + a.label(i) + "," + a.label(j) + ")";

        if (report.difference_is_exact) {
            const Vec diff = omega.value(ij) - omega_prime.value(ij) - exact.value(ij);
            if (!is_zero(diff)) {
                report.difference_is_exact = false;
                report.witness_exact = "difference minus coboundary = " +
                                       format_vector(diff, a.basis()) + at;
            }
        }
        if (report.integral_condition) {
            const Vec lhs = op * omega.value(ij);
            const Vec rhs = omega_prime.eval({ei, nj}) + omega_prime.eval({ni, ej}) +
                            a.multiply(ni, nj);
            if (lhs != rhs) {
                report.integral_condition = false;
                report.witness_integral =
                    "mismatch " + format_vector(lhs - rhs, a.basis()) + at;
            }
        }
        if (report.image_condition) {
            const Vec v = omega_prime.eval({ni, nj});
            if (!is_zero(v)) {
                report.image_condition = false;
                report.witness_image = "value " + format_vector(v, a.basis()) + at;
            }
        }
    });
    report.ok =
        report.difference_is_exact && report.integral_condition && report.image_condition;

    if (report.ok && omega_prime.is_zero()) {
        // Trivial deformation: Id + tN carries pi_t to pi. Both sides are
        // quadratic in t, so checking four values of t decides the identity.
        const Matrix id = Matrix::identity(n);
        for (const Rational& t : {Rational(1), Rational(-1), Rational(1, 2), Rational(3)}) {
            const Cochain pi_t = a.product() + t * omega;
            const Matrix phi = id + t * op;
            bool holds = true;
            for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
                if (!holds) return;
                const Vec lhs = phi * pi_t.value(ij);
                const Vec rhs = a.multiply(phi.column(ij[0]), phi.column(ij[1]));
                holds = lhs == rhs;
            });
            if (!holds)
                throw std::logic_error("Id + tN fails to intertwine the trivial deformation at t = " +
                                       to_string(t));
        }
    }
    return report;
}

Matrix operator_polynomial(const Matrix& op, long lowest, const std::vector<Rational>& coeffs) {
    if (op.rows() != op.cols()) throw input_error("operator matrix must be square");
    if (lowest < 0 && !op.invertible())
        throw input_error("negative powers require an invertible operator");
    Matrix acc = Matrix::zero(op.rows(), op.cols());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        acc = acc + coeffs[i] * op.pow(lowest + static_cast<long>(i));
    }
    return acc;
}

} // namespace prelie
