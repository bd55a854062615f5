#include "prelie/smatrix.hpp"

#include "prelie/errors.hpp"
#include "prelie/operators.hpp"

#include <array>

namespace prelie {

namespace {

void require_tensor_shape(const Algebra& a, const SymTwoTensor& r) {
    if (r.matrix.rows() != a.dim()) throw input_error("2-tensor shape does not match the algebra");
}

std::vector<std::string> dual_labels(const Algebra& a) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i) + "*");
    return labels;
}

// Dual product without precondition checks, shared by dual_product and
// the postcondition block of is_s_matrix.
Algebra build_dual_product(const Algebra& a, const SymTwoTensor& r) {
    const std::size_t n = a.dim();
    MultiMap prod(n, 1);
    std::vector<Matrix> ad_star(n), r_mult(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec x = r.matrix.column(i);
        ad_star[i] = (a.right_mult(x) - a.left_mult(x)).transpose();
        r_mult[i] = a.right_mult(x).transpose();
    }
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = ad_star[ij[0]].column(ij[1]) + r_mult[ij[1]].column(ij[0]);
        for (std::size_t k = 0; k < n; ++k) prod.coeff(ij, k) = v[k];
    });
    return Algebra(Cochain(std::move(prod)), AlgebraKind::pre_lie, dual_labels(a));
}

} // namespace

Cochain s_bracket(const Algebra& a, const SymTwoTensor& r1, const SymTwoTensor& r2) {
    require_tensor_shape(a, r1);
    require_tensor_shape(a, r2);
    const std::size_t n = a.dim();
    MultiMap out(n, 2, n);
    const Rational half(1, 2);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const std::size_t i = ij[0], j = ij[1];
        const Vec r1i = r1.matrix.column(i), r1j = r1.matrix.column(j);
        const Vec r2i = r2.matrix.column(i), r2j = r2.matrix.column(j);
        for (std::size_t k = 0; k < n; ++k) {
            const Vec r1k = r1.matrix.column(k), r2k = r2.matrix.column(k);
            const Vec mixed_jk = a.multiply(r1j, r2k) + a.multiply(r2j, r1k);
            const Vec mixed_ik = a.multiply(r1i, r2k) + a.multiply(r2i, r1k);
            const Vec bracket = a.multiply(r1i, r2j) - a.multiply(r2j, r1i) +
                                a.multiply(r2i, r1j) - a.multiply(r1j, r2i);
            out.coeff({i, j}, k) = half * (-mixed_jk[i] + mixed_ik[j] + bracket[k]);
        }
    });
    Cochain result(std::move(out));
    return result;
}

CheckResult is_s_matrix(const Algebra& a, const SymTwoTensor& r) {
    const Cochain bracket = s_bracket(a, r, r);
    if (auto hit = bracket.tensor().first_nonzero()) {
        const auto& ij = hit->first;
        return CheckResult::fail(
            "self-bracket nonzero at (" + a.label(ij[0]) + "*," + a.label(ij[1]) + "*," +
            a.label(hit->second) + "*) = " +
            to_string(bracket.tensor().coeff(ij, hit->second)));
    }
    if (check_pre_lie(a)) {
        // The sharp map must carry the induced dual product to the algebra
        // product and be an O-operator for (ad^*, -R^*).
        const Algebra dual = build_dual_product(a, r);
        const std::size_t n = a.dim();
        bool morphism = true;
        for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
            if (!morphism) return;
            const Vec lhs = r.matrix * dual.multiply_basis(ij[0], ij[1]);
            const Vec rhs = a.multiply(r.matrix.column(ij[0]), r.matrix.column(ij[1]));
            morphism = lhs == rhs;
        });
        if (!morphism)
            throw std::logic_error("sharp map of an s-matrix failed the morphism identity");
        if (auto o = is_o_operator(a, dual_regular_representation(a), r.matrix); !o)
            throw std::logic_error("sharp map of an s-matrix is not an O-operator: " + o.witness);
    }
    return CheckResult::pass();
}

CheckResult are_compatible_smatrices(const Algebra& a, const SymTwoTensor& r1,
                                     const SymTwoTensor& r2) {
    if (auto r = is_s_matrix(a, r1); !r)
        throw input_error("first tensor is not an s-matrix: " + r.witness);
    if (auto r = is_s_matrix(a, r2); !r)
        throw input_error("second tensor is not an s-matrix: " + r.witness);

    CheckResult verdict = CheckResult::pass();
    const Cochain mixed = s_bracket(a, r1, r2);
    if (auto hit = mixed.tensor().first_nonzero()) {
        const auto& ij = hit->first;
        verdict = CheckResult::fail(
            "mixed bracket nonzero at (" + a.label(ij[0]) + "*," + a.label(ij[1]) + "*," +
            a.label(hit->second) + "*) = " + to_string(mixed.tensor().coeff(ij, hit->second)));
    }

    // The mixed bracket is the cross coefficient of the expansion of
    // [t1 r1 + t2 r2, same], so sampled combinations must agree.
    const std::array<std::pair<Rational, Rational>, 3> samples = {
        {{Rational(1), Rational(1)}, {Rational(2), Rational(-1)}, {Rational(1, 2), Rational(3)}}};
    for (const auto& [t1, t2] : samples) {
        const SymTwoTensor combo(t1 * r1.matrix + t2 * r2.matrix);
        const bool combo_ok = s_bracket(a, combo, combo).is_zero();
        if (combo_ok != verdict.ok)
            throw std::logic_error("sampled combination disagrees with the compatibility bracket");
    }
    return verdict;
}

Algebra dual_product(const Algebra& a, const SymTwoTensor& r) {
    if (auto c = check_pre_lie(a); !c)
        throw input_error("dual product requires a pre-Lie algebra: " + c.witness);
    if (auto c = is_s_matrix(a, r); !c)
        throw input_error("dual product requires an s-matrix: " + c.witness);
    Algebra dual = build_dual_product(a, r);
    if (auto c = check_pre_lie(dual); !c)
        throw std::logic_error("dual product of an s-matrix is not pre-Lie: " + c.witness);
    return dual;
}

BilinearForm hessian_from_r(const Algebra& a, const SymTwoTensor& r) {
    require_tensor_shape(a, r);
    if (!r.matrix.invertible()) throw input_error("2-tensor is singular");
    BilinearForm b(r.matrix.inverse(), FormSymmetry::symmetric);
    if (check_pre_lie(a) && s_bracket(a, r, r).is_zero()) {
        if (auto c = is_closed_form(a, b.matrix); !c)
            throw std::logic_error("inverse of an s-matrix is not closed: " + c.witness);
    }
    return b;
}

SymTwoTensor r_from_hessian(const Algebra& a, const BilinearForm& b) {
    if (b.symmetry != FormSymmetry::symmetric) throw input_error("form must be symmetric");
    if (b.matrix.rows() != a.dim()) throw input_error("form shape does not match the algebra");
    if (!b.matrix.invertible()) throw input_error("form is degenerate");
    SymTwoTensor r(b.matrix.inverse());
    if (check_pre_lie(a) && is_closed_form(a, b.matrix)) {
        if (!s_bracket(a, r, r).is_zero())
            throw std::logic_error("inverse of a closed form is not an s-matrix");
    }
    return r;
}

CheckResult is_pseudo_hessian(const Algebra& a, const BilinearForm& b) {
    if (b.symmetry != FormSymmetry::symmetric) throw input_error("form must be symmetric");
    if (b.matrix.rows() != a.dim()) throw input_error("form shape does not match the algebra");
    if (!b.nondegenerate()) return CheckResult::fail("form is degenerate");
    if (auto c = is_closed_form(a, b.matrix); !c)
        return CheckResult::fail("form is not closed: " + c.witness);
    return CheckResult::pass();
}

CheckResult is_pseudo_hessian_nijenhuis(const Algebra& a, const BilinearForm& b,
                                        const Matrix& op) {
    if (auto c = is_pseudo_hessian(a, b); !c)
        return CheckResult::fail("not pseudo-Hessian: " + c.witness);
    if (op.rows() != a.dim() || op.cols() != a.dim())
        throw input_error("operator shape does not match the algebra");
    if (!op.invertible()) return CheckResult::fail("operator is not invertible");
    if (auto c = is_nijenhuis(a, op); !c)
        return CheckResult::fail("operator is not Nijenhuis: " + c.witness);
    // Self-adjointness B(Nx, y) = B(x, Ny), as matrices N^T B = B N.
    if (op.transpose() * b.matrix != b.matrix * op)
        return CheckResult::fail("operator is not self-adjoint for the form");
    const Matrix b1 = b.matrix * op;
    if (!b1.is_symmetric())
        throw std::logic_error("twisted form lost symmetry despite self-adjointness");
    if (auto c = is_closed_form(a, b1); !c)
        return CheckResult::fail("twisted form B(x,Ny) is not closed: " + c.witness);
    return CheckResult::pass();
}

BilinearForm hessian_sequence(const Algebra& a, const BilinearForm& b, const Matrix& op, long k) {
    if (auto c = is_pseudo_hessian_nijenhuis(a, b, op); !c)
        throw input_error("hessian sequence requires a pseudo-Hessian-Nijenhuis pair: " +
                          c.witness);
    BilinearForm bk(b.matrix * op.pow(k), FormSymmetry::symmetric);
    if (auto c = is_closed_form(a, bk.matrix); !c)
        throw std::logic_error("twisted form of index " + std::to_string(k) +
                               " is not closed: " + c.witness);
    return bk;
}

SymTwoTensor s_sequence(const Algebra& a, const SymTwoTensor& r1, const SymTwoTensor& r2,
                        long n) {
    if (auto c = are_compatible_smatrices(a, r1, r2); !c)
        throw input_error("sequence requires compatible s-matrices: " + c.witness);
    if (!r1.matrix.invertible()) throw input_error("first s-matrix must be invertible");
    if (n < 0 && !r2.matrix.invertible())
        throw input_error("negative indices need the second s-matrix invertible");
    const Matrix step = r2.matrix * r1.matrix.inverse();
    SymTwoTensor sn(step.pow(n) * r1.matrix);
    if (!s_bracket(a, sn, sn).is_zero())
        throw std::logic_error("sequence element " + std::to_string(n) + " is not an s-matrix");
    return sn;
}

std::pair<BilinearForm, Matrix> phn_bridge(const Algebra& a, const SymTwoTensor& r1,
                                           const SymTwoTensor& r2) {
    if (auto c = are_compatible_smatrices(a, r1, r2); !c)
        throw input_error("bridge requires compatible s-matrices: " + c.witness);
    if (!r1.matrix.invertible() || !r2.matrix.invertible())
        throw input_error("bridge requires invertible s-matrices");
    Matrix op = r1.matrix * r2.matrix.inverse();
    BilinearForm b = hessian_from_r(a, r1);
    if (auto c = is_pseudo_hessian_nijenhuis(a, b, op); !c)
        throw std::logic_error("bridge output is not pseudo-Hessian-Nijenhuis: " + c.witness);
    return {std::move(b), std::move(op)};
}

std::pair<SymTwoTensor, SymTwoTensor> phn_to_smatrices(const Algebra& a, const BilinearForm& b,
                                                       const Matrix& op) {
    if (auto c = is_pseudo_hessian_nijenhuis(a, b, op); !c)
        throw input_error("inverse bridge requires a pseudo-Hessian-Nijenhuis pair: " + c.witness);
    const Matrix binv = b.matrix.inverse();
    SymTwoTensor r1(binv);
    SymTwoTensor r2(op.inverse() * binv);
    if (auto c = are_compatible_smatrices(a, r1, r2); !c)
        throw std::logic_error("inverse bridge produced incompatible s-matrices: " + c.witness);
    return {std::move(r1), std::move(r2)};
}

DualNijenhuisResult dual_nijenhuis(const Algebra& a, const SymTwoTensor& r1,
                                   const SymTwoTensor& r2) {
    if (auto c = are_compatible_smatrices(a, r1, r2); !c)
        throw input_error("dual operator requires compatible s-matrices: " + c.witness);
    if (!r2.matrix.invertible()) throw input_error("second s-matrix must be invertible");

    DualNijenhuisResult result{r2.matrix.inverse() * r1.matrix, dual_product(a, r2), {}};
    if (auto c = is_nijenhuis(result.dual_algebra, result.op); !c)
        throw std::logic_error("dual operator is not Nijenhuis: " + c.witness);
    const Algebra dual_r1 = dual_product(a, r1);
    if (deformed_product(result.dual_algebra, result.op) != dual_r1.product())
        throw std::logic_error("deformed dual product does not match the first s-matrix product");
    result.report = check_deformation(result.dual_algebra, dual_r1.product());
    return result;
}

} // namespace prelie
