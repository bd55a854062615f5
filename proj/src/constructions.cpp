#include "prelie/constructions.hpp"

#include "prelie/errors.hpp"
#include "prelie/nijenhuis.hpp"

namespace prelie {

namespace {

void require_operator_shape(const Algebra& a, const Matrix& op) {
    if (op.rows() != a.dim() || op.cols() != a.dim())
        throw input_error("operator shape does not match the algebra dimension");
}

Algebra build_bilinear(const Algebra& base, AlgebraKind kind,
                       const std::function<Vec(std::size_t, std::size_t)>& product) {
    const std::size_t n = base.dim();
    MultiMap prod(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = product(ij[0], ij[1]);
        for (std::size_t k = 0; k < n; ++k) prod.coeff(ij, k) = v[k];
    });
    return Algebra(Cochain(std::move(prod)), kind, base.basis());
}

} // namespace

CheckResult satisfies_cybe(const Algebra& lie, const Matrix& r) {
    require_operator_shape(lie, r);
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ri = r.column(i), rj = r.column(j);
            const Vec lhs = lie.multiply(ri, rj);
            const Vec rhs =
                r * (lie.multiply(ri, unit_vec(n, j)) + lie.multiply(unit_vec(n, i), rj));
            if (lhs != rhs)
                return CheckResult::fail("Yang-Baxter identity fails at (" + lie.label(i) + "," +
                                         lie.label(j) +
                                         "): " + format_vector(lhs - rhs, lie.basis()));
        }
    return CheckResult::pass();
}

Algebra prelie_from_cybe(const Algebra& lie, const Matrix& r) {
    if (auto c = check_lie(lie); !c)
        throw input_error("construction requires a Lie algebra: " + c.witness);
    if (auto c = satisfies_cybe(lie, r); !c)
        throw input_error("operator fails the Yang-Baxter identity: " + c.witness);
    const std::size_t n = lie.dim();
    Algebra out = build_bilinear(lie, AlgebraKind::pre_lie, [&](std::size_t i, std::size_t j) {
        return lie.multiply(r.column(i), unit_vec(n, j));
    });
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("Yang-Baxter product is not pre-Lie: " + c.witness);
    return out;
}

CheckResult satisfies_rb_assoc(const Algebra& assoc, const Matrix& r) {
    require_operator_shape(assoc, r);
    const std::size_t n = assoc.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ri = r.column(i), rj = r.column(j);
            const Vec lhs = assoc.multiply(ri, rj) + r * assoc.multiply_basis(i, j);
            const Vec rhs =
                r * (assoc.multiply(ri, unit_vec(n, j)) + assoc.multiply(unit_vec(n, i), rj));
            if (lhs != rhs)
                return CheckResult::fail("Rota-Baxter identity fails at (" + assoc.label(i) + "," +
                                         assoc.label(j) +
                                         "): " + format_vector(lhs - rhs, assoc.basis()));
        }
    return CheckResult::pass();
}

Algebra prelie_from_rb_assoc(const Algebra& assoc, const Matrix& r) {
    if (auto c = check_associative(assoc); !c)
        throw input_error("construction requires an associative algebra: " + c.witness);
    if (auto c = satisfies_rb_assoc(assoc, r); !c)
        throw input_error("operator fails the Rota-Baxter identity: " + c.witness);
    const std::size_t n = assoc.dim();
    Algebra out = build_bilinear(assoc, AlgebraKind::pre_lie, [&](std::size_t i, std::size_t j) {
        const Vec ri = r.column(i);
        const Vec ej = unit_vec(n, j);
        return assoc.multiply(ri, ej) - assoc.multiply(ej, ri) - assoc.multiply_basis(i, j);
    });
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("Rota-Baxter product is not pre-Lie: " + c.witness);
    return out;
}

Algebra burgers_prelie(const Vec& a, const Matrix& gram) {
    const std::size_t n = a.size();
    if (gram.rows() != n || gram.cols() != n) throw input_error("scalar product shape mismatch");
    if (!gram.is_symmetric()) throw input_error("scalar product must be symmetric");
    if (gram.rank() != n) throw input_error("scalar product is degenerate");

    auto inner = [&](const Vec& x, const Vec& y) {
        Rational s = 0;
        const Vec gy = gram * y;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) s += x[i] * gy[i];
        return s;
    };
    MultiMap prod(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec x = unit_vec(n, ij[0]), y = unit_vec(n, ij[1]);
        const Vec v = inner(x, y) * a + inner(x, a) * y;
        for (std::size_t k = 0; k < n; ++k) prod.coeff(ij, k) = v[k];
    });
    Algebra out(Cochain(std::move(prod)), AlgebraKind::pre_lie);
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("scalar-product construction is not pre-Lie: " + c.witness);
    return out;
}

CheckResult is_derivation(const Algebra& a, const Matrix& d) {
    require_operator_shape(a, d);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = d * a.multiply_basis(i, j);
            const Vec rhs = a.multiply(d.column(i), unit_vec(n, j)) +
                            a.multiply(unit_vec(n, i), d.column(j));
            if (lhs != rhs)
                return CheckResult::fail("Leibniz rule fails at (" + a.label(i) + "," +
                                         a.label(j) + "): " + format_vector(lhs - rhs, a.basis()));
        }
    return CheckResult::pass();
}

CheckResult is_novikov(const Algebra& a) {
    if (auto c = check_pre_lie(a); !c)
        return CheckResult::fail("not pre-Lie: " + c.witness);
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix ri = a.right_mult(i), rj = a.right_mult(j);
            if (ri * rj != rj * ri)
                return CheckResult::fail("right multiplications by " + a.label(i) + " and " +
                                         a.label(j) + " do not commute");
        }
    return CheckResult::pass();
}

NovikovResult novikov_from_derivation(const Algebra& comm, const Matrix& d, const Rational& s) {
    if (auto c = check_associative(comm); !c)
        throw input_error("construction requires an associative algebra: " + c.witness);
    if (auto c = check_commutative(comm); !c)
        throw input_error("construction requires a commutative algebra: " + c.witness);
    if (auto c = is_derivation(comm, d); !c)
        throw input_error("operator is not a derivation: " + c.witness);

    const std::size_t n = comm.dim();
    Algebra out = build_bilinear(comm, AlgebraKind::pre_lie, [&](std::size_t i, std::size_t j) {
        const Vec ei = unit_vec(n, i);
        return comm.multiply(ei, d.column(j)) + s * comm.multiply_basis(i, j);
    });
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("derivation product is not pre-Lie: " + c.witness);
    return {out, is_novikov(out)};
}

Algebra novikov_alpha_product(const Algebra& comm, const Matrix& d, const Vec& alpha) {
    if (auto c = check_associative(comm); !c)
        throw input_error("construction requires an associative algebra: " + c.witness);
    if (auto c = check_commutative(comm); !c)
        throw input_error("construction requires a commutative algebra: " + c.witness);
    if (auto c = is_derivation(comm, d); !c)
        throw input_error("operator is not a derivation: " + c.witness);
    if (alpha.size() != comm.dim()) throw input_error("vector dimension mismatch");

    const std::size_t n = comm.dim();
    Algebra out = build_bilinear(comm, AlgebraKind::pre_lie, [&](std::size_t i, std::size_t j) {
        const Vec ei = unit_vec(n, i);
        return comm.multiply(ei, d.column(j)) +
               comm.multiply(alpha, comm.multiply_basis(i, j));
    });
    if (auto c = check_pre_lie(out); !c)
        throw std::logic_error("alpha-variant product is not pre-Lie: " + c.witness);
    return out;
}

AlphaVariantReport check_alpha_variant(const Algebra& comm, const Matrix& d, const Vec& alpha,
                                       const Matrix& op) {
    require_operator_shape(comm, op);
    if (d * op != op * d) throw input_error("operator must commute with the derivation");
    if (auto c = is_nijenhuis(comm, op); !c)
        throw input_error("operator is not Nijenhuis on the associative algebra: " + c.witness);

    AlphaVariantReport report;
    const std::size_t n = comm.dim();

    report.hypothesis = true;
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        if (!report.hypothesis) return;
        const Vec triple = comm.multiply(alpha, comm.multiply_basis(ij[0], ij[1]));
        const Vec lhs = op * triple;
        const Vec rhs = comm.multiply(alpha, op * comm.multiply_basis(ij[0], ij[1]));
        if (lhs != rhs) {
            report.hypothesis = false;
            report.witness = "absorption hypothesis fails at (" + comm.label(ij[0]) + "," +
                             comm.label(ij[1]) + ")";
        }
    });

    const Algebra deformed = deformed_algebra(comm, op);
    if (auto c = check_associative(deformed); !c)
        throw std::logic_error("deformed product of a Nijenhuis operator lost associativity: " +
                               c.witness);
    {
        const auto c = is_derivation(deformed, d);
        report.derivation_on_deformed = c.ok;
        if (!c && report.witness.empty()) report.witness = c.witness;
    }

    const Algebra alpha_product = novikov_alpha_product(comm, d, alpha);
    {
        const auto c = is_nijenhuis(alpha_product, op);
        report.nijenhuis_on_alpha = c.ok;
        if (!c && report.witness.empty()) report.witness = c.witness;
    }

    // Deforming the alpha-product matches x *_N D(y) + alpha * (x *_N y);
    // the alpha factor stays undeformed (that is what the absorption
    // hypothesis supports, and N = 2 Id already rules out deforming it).
    const Cochain lhs = deformed_product(alpha_product, op);
    Cochain rhs = build_bilinear(comm, AlgebraKind::unchecked, [&](std::size_t i, std::size_t j) {
                      const Vec ei = unit_vec(n, i);
                      return deformed.multiply(ei, d.column(j)) +
                             comm.multiply(alpha, deformed.multiply_basis(i, j));
                  }).product();
    report.recipe_matches = lhs == rhs;
    if (!report.recipe_matches && report.witness.empty())
        report.witness = "deformed alpha-product does not match the transported recipe";
    return report;
}

} // namespace prelie
