#include "prelie/paracomplex.hpp"

#include "prelie/errors.hpp"
#include "prelie/nijenhuis.hpp"

namespace prelie {

namespace {

void require_operator_shape(const Algebra& a, const Matrix& op) {
    if (op.rows() != a.dim() || op.cols() != a.dim())
        throw input_error("operator shape does not match the algebra dimension");
}

bool closed_under_product(const Algebra& a, const std::vector<Vec>& basis) {
    for (const auto& u : basis)
        for (const auto& v : basis)
            if (!in_span(basis, a.multiply(u, v))) return false;
    return true;
}

// omega(N x, y) = sign * omega(x, N y) as the matrix identity
// N^T W = sign * W N.
bool form_compatible(const Matrix& form, const Matrix& op, int sign) {
    const Matrix lhs = op.transpose() * form;
    const Matrix rhs = form * op;
    return sign > 0 ? lhs == rhs : lhs == -rhs;
}

} // namespace

ParacomplexResult is_paracomplex(const Algebra& a, const Matrix& op) {
    require_operator_shape(a, op);
    const std::size_t n = a.dim();
    ParacomplexResult result;

    if (auto c = is_nijenhuis(a, op); !c) {
        result.verdict = CheckResult::fail("not Nijenhuis: " + c.witness);
        return result;
    }
    if (op * op != Matrix::identity(n)) {
        result.verdict = CheckResult::fail("operator does not square to the identity");
        return result;
    }
    const Matrix id = Matrix::identity(n);
    result.plus_basis = (op - id).kernel_basis();
    result.minus_basis = (op + id).kernel_basis();
    if (result.plus_basis.size() != result.minus_basis.size()) {
        result.verdict = CheckResult::fail(
            "eigenspace dimensions differ: " + std::to_string(result.plus_basis.size()) + " vs " +
            std::to_string(result.minus_basis.size()));
        result.plus_basis.clear();
        result.minus_basis.clear();
        return result;
    }
    if (verify_kind(a) && a.kind() != AlgebraKind::unchecked) {
        if (!closed_under_product(a, result.plus_basis) ||
            !closed_under_product(a, result.minus_basis))
            throw std::logic_error("an eigenspace of a para-complex structure is not a subalgebra");
    }
    result.verdict = CheckResult::pass();
    return result;
}

CheckResult is_quadratic(const Algebra& a, const BilinearForm& omega) {
    if (omega.symmetry != FormSymmetry::skew) throw input_error("quadratic form must be skew");
    if (omega.matrix.rows() != a.dim()) throw input_error("form shape does not match the algebra");
    if (!omega.nondegenerate()) return CheckResult::fail("form is degenerate");
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec bracket = a.multiply_basis(i, k) - a.multiply_basis(k, i);
                const Rational s =
                    omega(a.multiply_basis(i, j), unit_vec(n, k)) + omega(unit_vec(n, j), bracket);
                if (s != 0)
                    return CheckResult::fail("invariance fails at (" + a.label(i) + "," +
                                             a.label(j) + "," + a.label(k) + ") with value " +
                                             to_string(s));
            }
    return CheckResult::pass();
}

Algebra prelie_from_symplectic(const Algebra& lie, const BilinearForm& omega) {
    if (auto c = check_lie(lie); !c)
        throw input_error("construction requires a Lie algebra: " + c.witness);
    if (omega.symmetry != FormSymmetry::skew) throw input_error("symplectic form must be skew");
    if (omega.matrix.rows() != lie.dim()) throw input_error("form shape does not match the algebra");
    if (!omega.nondegenerate()) throw input_error("symplectic form is degenerate");
    if (auto c = is_lie_two_cocycle(lie, omega); !c)
        throw input_error("form is not a 2-cocycle: " + c.witness);

    const std::size_t n = lie.dim();
    const Matrix w_t = omega.matrix.transpose();
    MultiMap prod(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        // Column of structure constants solves omega(prod, e_l) = rhs_l.
        Vec rhs(n);
        for (std::size_t l = 0; l < n; ++l)
            rhs[l] = -omega(unit_vec(n, ij[1]), lie.multiply_basis(ij[0], l));
        const auto sol = w_t.solve(rhs);
        if (!sol) throw std::logic_error("nondegenerate form produced an unsolvable system");
        for (std::size_t k = 0; k < n; ++k) prod.coeff(ij, k) = (*sol)[k];
    });

    Algebra out(Cochain(std::move(prod)), AlgebraKind::pre_lie, lie.basis());
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("symplectic construction is not pre-Lie: " + c.witness);
    if (sub_adjacent(out).product() != lie.product())
        throw std::logic_error("commutator of the symplectic product does not recover the bracket");
    if (auto c = is_quadratic(out, omega); !c)
        throw std::logic_error("symplectic construction is not quadratic: " + c.witness);
    return out;
}

namespace {

// The para-Kahler conditions alone, with preconditions already validated.
CheckResult para_kahler_core(const Algebra& lie, const BilinearForm& omega, const Matrix& op) {
    if (auto c = is_nijenhuis(lie, op); !c)
        return CheckResult::fail("not Nijenhuis for the bracket: " + c.witness);
    const std::size_t n = lie.dim();
    if (op * op != Matrix::identity(n))
        return CheckResult::fail("operator does not square to the identity");
    const auto plus = (op - Matrix::identity(n)).kernel_basis();
    const auto minus = (op + Matrix::identity(n)).kernel_basis();
    if (plus.size() != minus.size())
        return CheckResult::fail("eigenspace dimensions differ: " + std::to_string(plus.size()) +
                                 " vs " + std::to_string(minus.size()));
    if (!form_compatible(omega.matrix, op, -1))
        return CheckResult::fail("operator is not anti-compatible with the form");
    return CheckResult::pass();
}

void require_symplectic(const Algebra& lie, const BilinearForm& omega) {
    if (auto c = check_lie(lie); !c)
        throw input_error("expected a Lie algebra: " + c.witness);
    if (omega.symmetry != FormSymmetry::skew) throw input_error("symplectic form must be skew");
    if (!omega.nondegenerate()) throw input_error("symplectic form is degenerate");
    if (auto c = is_lie_two_cocycle(lie, omega); !c)
        throw input_error("form is not a 2-cocycle: " + c.witness);
}

} // namespace

CheckResult is_para_kahler(const Algebra& lie, const BilinearForm& omega, const Matrix& op) {
    require_operator_shape(lie, op);
    require_symplectic(lie, omega);

    const CheckResult verdict = para_kahler_core(lie, omega, op);
    if (!verdict) return verdict;

    // The whole derived picture must be consistent: the induced pre-Lie
    // algebra is para-complex quadratic, the deformed bracket is again
    // symplectic para-Kahler for the same data, and its induced pre-Lie
    // product is the deformed product.
    const Algebra derived = prelie_from_symplectic(lie, omega);
    if (auto c = is_paracomplex_quadratic(derived, omega, op); !c)
        throw std::logic_error("derived pre-Lie algebra is not para-complex quadratic: " +
                               c.witness);

    const Algebra deformed_lie = deformed_algebra(lie.with_kind(AlgebraKind::lie), op);
    if (auto c = check_lie(deformed_lie); !c)
        throw std::logic_error("deformed bracket is not Lie: " + c.witness);
    if (auto c = is_lie_two_cocycle(deformed_lie, omega); !c)
        throw std::logic_error("form is not closed for the deformed bracket: " + c.witness);
    if (auto c = para_kahler_core(deformed_lie, omega, op); !c)
        throw std::logic_error("deformed bracket is not para-Kahler: " + c.witness);

    const Algebra from_deformed = prelie_from_symplectic(deformed_lie, omega);
    if (from_deformed.product() != deformed_product(derived, op))
        throw std::logic_error(
            "pre-Lie algebra of the deformed bracket is not the deformed pre-Lie product");
    return verdict;
}

CheckResult is_paracomplex_quadratic(const Algebra& a, const BilinearForm& omega,
                                     const Matrix& op) {
    require_operator_shape(a, op);
    if (auto c = check_pre_lie(a); !c)
        throw input_error("expected a pre-Lie algebra: " + c.witness);
    if (auto c = is_quadratic(a, omega); !c)
        throw input_error("expected a quadratic structure: " + c.witness);
    if (auto p = is_paracomplex(a, op); !p)
        return CheckResult::fail("not para-complex: " + p.verdict.witness);
    if (!form_compatible(omega.matrix, op, -1))
        return CheckResult::fail("operator is not anti-compatible with the form");
    return CheckResult::pass();
}

SplittingResult paracomplex_from_splitting(const Algebra& a, const std::vector<Vec>& plus,
                                           const std::vector<Vec>& minus,
                                           const BilinearForm& form, SplittingFlavor flavor) {
    const std::size_t n = a.dim();
    const FormSymmetry expected =
        flavor == SplittingFlavor::quadratic ? FormSymmetry::skew : FormSymmetry::symmetric;
    if (form.symmetry != expected)
        throw input_error("form symmetry does not match the requested flavor");
    if (plus.empty() || plus.size() != minus.size())
        throw input_error("subspace bases must be nonempty and of equal size");
    if (plus.size() + minus.size() != n)
        throw input_error("subspaces do not have complementary dimensions");
    std::vector<Vec> all = plus;
    all.insert(all.end(), minus.begin(), minus.end());
    if (rank_of_span(all, n) != n) throw input_error("subspaces are not complementary");
    for (const auto* side : {&plus, &minus})
        if (!closed_under_product(a, *side))
            throw input_error("a subspace is not closed under the product");
    for (const auto* side : {&plus, &minus})
        for (const auto& u : *side)
            for (const auto& v : *side)
                if (form(u, v) != 0) throw input_error("a subspace is not isotropic for the form");

    // N = C diag(1,...,-1,...) C^-1 for the change of basis C.
    const Matrix c = Matrix::from_columns(all);
    Matrix sign = Matrix::identity(n);
    for (std::size_t i = plus.size(); i < n; ++i) sign.at(i, i) = -1;
    SplittingResult result{c * sign * c.inverse(), CheckResult::pass()};

    const auto pc = is_paracomplex(a, result.op);
    const bool compatible = form_compatible(form.matrix, result.op, -1);
    if (!pc)
        result.verdict = CheckResult::fail("not para-complex: " + pc.verdict.witness);
    else if (!compatible)
        result.verdict = CheckResult::fail("operator is not anti-compatible with the form");
    return result;
}

CheckResult is_paracomplex_pseudo_hessian(const Algebra& a, const BilinearForm& b,
                                          const Matrix& op) {
    require_operator_shape(a, op);
    if (auto c = is_pseudo_hessian(a, b); !c)
        return CheckResult::fail("not pseudo-Hessian: " + c.witness);
    if (auto p = is_paracomplex(a, op); !p)
        return CheckResult::fail("not para-complex: " + p.verdict.witness);
    if (!form_compatible(b.matrix, op, -1))
        return CheckResult::fail("operator is not anti-compatible with the form");
    // Derived skew form omega(x,y) = B(x, Ny), anti-invariant under N.
    const Matrix omega = b.matrix * op;
    if (!omega.is_skew())
        throw std::logic_error("derived form of an anti-compatible pair is not skew");
    if (!(op.transpose() * omega * op == -omega))
        throw std::logic_error("derived form is not anti-invariant");
    return CheckResult::pass();
}

} // namespace prelie
