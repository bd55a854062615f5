#include "prelie/operators.hpp"

#include "prelie/errors.hpp"

#include <array>

namespace prelie {

namespace {

Matrix act(const std::vector<Matrix>& family, const Vec& x) {
    Matrix m = Matrix::zero(family.front().rows(), family.front().cols());
    for (std::size_t i = 0; i < family.size(); ++i)
        if (x[i] != 0) m = m + x[i] * family[i];
    return m;
}

void require_map_shape(const Algebra& a, const Representation& rep, const Matrix& t) {
    if (t.rows() != a.dim() || t.cols() != rep.dim_v)
        throw input_error("map shape must be (algebra dim) x (module dim)");
}

void require_valid_rep(const Algebra& a, const Representation& rep) {
    if (auto r = check_representation(a, rep); !r)
        throw input_error("invalid representation: " + r.witness);
}

} // namespace

CheckResult is_o_operator(const Algebra& a, const Representation& rep, const Matrix& t) {
    require_valid_rep(a, rep);
    require_map_shape(a, rep, t);
    const std::size_t m = rep.dim_v;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vec tu = t.column(u), tv = t.column(v);
            const Vec lhs = a.multiply(tu, tv);
            Vec arg = act(rep.rho, tu).column(v);
            const Vec mu_col = act(rep.mu, tv).column(u);
            for (std::size_t i = 0; i < m; ++i) arg[i] += mu_col[i];
            const Vec rhs = t * arg;
            if (lhs != rhs)
                return CheckResult::fail("identity fails at module basis pair (" +
                                         std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                         "): " + format_vector(lhs - rhs, a.basis()));
        }
    return CheckResult::pass();
}

CheckResult is_rota_baxter(const Algebra& a, const Matrix& r, const Rational& weight) {
    if (r.rows() != a.dim() || r.cols() != a.dim())
        throw input_error("operator shape does not match the algebra dimension");
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ri = r.column(i), rj = r.column(j);
            const Vec lhs = a.multiply(ri, rj);
            const Vec inner = a.multiply(ri, unit_vec(n, j)) + a.multiply(unit_vec(n, i), rj);
            const Vec rhs = r * inner + weight * (r * a.multiply_basis(i, j));
            if (lhs != rhs)
                return CheckResult::fail("identity fails at (" + a.label(i) + "," + a.label(j) +
                                         "): " + format_vector(lhs - rhs, a.basis()));
        }
    return CheckResult::pass();
}

LiftResult lift_to_semidirect(const Algebra& a, const Representation& rep, const Matrix& t,
                              LiftMode mode, const Rational& weight) {
    require_map_shape(a, rep, t);
    LiftResult result{semidirect_product(a, rep), Matrix(), CheckResult::pass()};
    const std::size_t n = a.dim(), m = rep.dim_v;
    Matrix op = Matrix::zero(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) op.at(i, n + b) = t.at(i, b);
    for (std::size_t b = 0; b < m; ++b) {
        switch (mode) {
        case LiftMode::rota_baxter: op.at(n + b, n + b) = -weight; break;
        case LiftMode::nilpotent: break;
        case LiftMode::idempotent: op.at(n + b, n + b) = 1; break;
        }
    }
    result.op = op;
    result.verdict = mode == LiftMode::rota_baxter
                         ? is_rota_baxter(result.semidirect, op, weight)
                         : is_nijenhuis(result.semidirect, op);
    return result;
}

CheckResult are_compatible_o_operators(const Algebra& a, const Representation& rep,
                                       const Matrix& t1, const Matrix& t2) {
    if (auto r = is_o_operator(a, rep, t1); !r)
        throw input_error("first map is not an O-operator: " + r.witness);
    if (auto r = is_o_operator(a, rep, t2); !r)
        throw input_error("second map is not an O-operator: " + r.witness);

    CheckResult verdict = CheckResult::pass();
    const std::size_t m = rep.dim_v;
    for (std::size_t u = 0; u < m && verdict.ok; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vec t1u = t1.column(u), t1v = t1.column(v);
            const Vec t2u = t2.column(u), t2v = t2.column(v);
            const Vec lhs = a.multiply(t1u, t2v) + a.multiply(t2u, t1v);
            Vec arg1 = act(rep.rho, t2u).column(v);
            {
                const Vec mu_col = act(rep.mu, t2v).column(u);
                for (std::size_t i = 0; i < m; ++i) arg1[i] += mu_col[i];
            }
            Vec arg2 = act(rep.rho, t1u).column(v);
            {
                const Vec mu_col = act(rep.mu, t1v).column(u);
                for (std::size_t i = 0; i < m; ++i) arg2[i] += mu_col[i];
            }
            const Vec rhs = t1 * arg1 + t2 * arg2;
            if (lhs != rhs) {
                verdict = CheckResult::fail("mixed identity fails at module basis pair (" +
                                            std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                            "): " + format_vector(lhs - rhs, a.basis()));
                break;
            }
        }

    // The mixed identity is the cross coefficient of the combination
    // identity, so sampled combinations must agree with the verdict.
    const std::array<std::pair<Rational, Rational>, 3> samples = {
        {{Rational(1), Rational(1)}, {Rational(2), Rational(-1)}, {Rational(1, 2), Rational(3)}}};
    for (const auto& [k1, k2] : samples) {
        const Matrix combo = k1 * t1 + k2 * t2;
        if (static_cast<bool>(is_o_operator(a, rep, combo)) != verdict.ok)
            throw std::logic_error("sampled combination disagrees with the compatibility identity");
    }
    return verdict;
}

Matrix nijenhuis_from_compatible(const Algebra& a, const Representation& rep, const Matrix& t1,
                                 const Matrix& t2) {
    if (t2.rows() != t2.cols() || !t2.invertible())
        throw input_error("second O-operator must be invertible");
    if (auto r = are_compatible_o_operators(a, rep, t1, t2); !r)
        throw input_error("maps are not compatible O-operators: " + r.witness);
    const Matrix n = t1 * t2.inverse();
    if (auto r = is_nijenhuis(a, n); !r)
        throw std::logic_error("quotient of compatible O-operators is not Nijenhuis: " + r.witness);
    return n;
}

namespace {

struct LD {
    const LDendriform& d;
    Vec r(const Vec& x, const Vec& y) const { return d.right.eval({x, y}); }
    Vec l(const Vec& x, const Vec& y) const { return d.left.eval({x, y}); }
};

} // namespace

CheckResult is_l_dendriform(const LDendriform& d) {
    if (d.right.degree() != 1 || d.left.degree() != 1 || d.right.dim() != d.left.dim() ||
        d.right.codim() != d.right.dim() || d.left.codim() != d.left.dim())
        throw input_error("L-dendriform data must be two bilinear products on one space");
    const std::size_t n = d.dim();
    const LD p{d};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
                const Vec a1 = p.r(x, p.r(y, z)) - p.r(p.r(x, y), z) - p.r(p.l(x, y), z) -
                               p.r(y, p.r(x, z)) + p.r(p.l(y, x), z) + p.r(p.r(y, x), z);
                if (!is_zero(a1))
                    return CheckResult::fail("first axiom fails at (e" + std::to_string(i + 1) +
                                             ",e" + std::to_string(j + 1) + ",e" +
                                             std::to_string(k + 1) + "): " + format_vector(a1));
                const Vec a2 = p.r(x, p.l(y, z)) - p.l(p.r(x, y), z) - p.l(y, p.r(x, z)) -
                               p.l(y, p.l(x, z)) + p.l(p.l(y, x), z);
                if (!is_zero(a2))
                    return CheckResult::fail("second axiom fails at (e" + std::to_string(i + 1) +
                                             ",e" + std::to_string(j + 1) + ",e" +
                                             std::to_string(k + 1) + "): " + format_vector(a2));
            }
    return CheckResult::pass();
}

CheckResult are_compatible_l_dendriform(const LDendriform& d1, const LDendriform& d2) {
    if (auto r = is_l_dendriform(d1); !r)
        throw input_error("first structure is not L-dendriform: " + r.witness);
    if (auto r = is_l_dendriform(d2); !r)
        throw input_error("second structure is not L-dendriform: " + r.witness);
    if (d1.dim() != d2.dim()) throw input_error("dimension mismatch");
    const std::size_t n = d1.dim();
    const LD p{d1}, q{d2};

    CheckResult verdict = CheckResult::pass();
    for (std::size_t i = 0; i < n && verdict.ok; ++i)
        for (std::size_t j = 0; j < n && verdict.ok; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
                const Vec m1 = p.r(x, q.r(y, z)) + q.r(x, p.r(y, z)) - q.r(p.r(x, y), z) -
                               p.r(q.r(x, y), z) - q.r(p.l(x, y), z) - p.r(q.l(x, y), z) -
                               p.r(y, q.r(x, z)) - q.r(y, p.r(x, z)) + q.r(p.l(y, x), z) +
                               p.r(q.l(y, x), z) + q.r(p.r(y, x), z) + p.r(q.r(y, x), z);
                const Vec m2 = p.r(x, q.l(y, z)) + q.r(x, p.l(y, z)) - q.l(p.r(x, y), z) -
                               p.l(q.r(x, y), z) - p.l(y, q.r(x, z)) - q.l(y, p.r(x, z)) -
                               q.l(y, p.l(x, z)) - p.l(y, q.l(x, z)) + q.l(p.l(y, x), z) +
                               p.l(q.l(y, x), z);
                if (!is_zero(m1) || !is_zero(m2)) {
                    verdict = CheckResult::fail(
                        "mixed axiom fails at (e" + std::to_string(i + 1) + ",e" +
                        std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")");
                    break;
                }
            }

    // Mixed identities are exactly the cross coefficients of the combined
    // axioms, so sampled combinations must agree.
    const std::array<std::pair<Rational, Rational>, 3> samples = {
        {{Rational(1), Rational(1)}, {Rational(2), Rational(-1)}, {Rational(1, 2), Rational(3)}}};
    for (const auto& [k1, k2] : samples) {
        const LDendriform combo{Cochain(k1 * d1.right + k2 * d2.right),
                                Cochain(k1 * d1.left + k2 * d2.left)};
        if (static_cast<bool>(is_l_dendriform(combo)) != verdict.ok)
            throw std::logic_error("sampled combination disagrees with the mixed axioms");
    }
    return verdict;
}

namespace {

LDendriform build_l_dendriform(std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& right,
                               const std::function<Vec(std::size_t, std::size_t)>& left) {
    MultiMap r(n, 1), l(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec rv = right(ij[0], ij[1]), lv = left(ij[0], ij[1]);
        for (std::size_t k = 0; k < n; ++k) {
            r.coeff(ij, k) = rv[k];
            l.coeff(ij, k) = lv[k];
        }
    });
    return LDendriform{Cochain(std::move(r)), Cochain(std::move(l))};
}

void check_l_dendriform_outputs(const LDendriform& d) {
    if (auto r = is_l_dendriform(d); !r)
        throw std::logic_error("induced products violate the L-dendriform axioms: " + r.witness);
    vertical_prelie(d);
}

} // namespace

LDendriform l_dendriform_from_o_operator(const Algebra& a, const Representation& rep,
                                         const Matrix& t) {
    if (auto r = is_o_operator(a, rep, t); !r)
        throw input_error("map is not an O-operator: " + r.witness);
    const std::size_t m = rep.dim_v;
    LDendriform d = build_l_dendriform(
        m, [&](std::size_t u, std::size_t v) { return act(rep.rho, t.column(u)).column(v); },
        [&](std::size_t u, std::size_t v) {
            return Rational(-1) * act(rep.mu, t.column(u)).column(v);
        });
    check_l_dendriform_outputs(d);
    return d;
}

LDendriform l_dendriform_on_algebra(const Algebra& a, const Representation& rep, const Matrix& t) {
    if (auto r = is_o_operator(a, rep, t); !r)
        throw input_error("map is not an O-operator: " + r.witness);
    if (t.rows() != t.cols() || !t.invertible())
        throw input_error("carrying the structure onto the algebra needs an invertible map");
    const Matrix tinv = t.inverse();
    const std::size_t n = a.dim();
    LDendriform d = build_l_dendriform(
        n,
        [&](std::size_t i, std::size_t j) {
            return t * (act(rep.rho, unit_vec(n, i)) * tinv.column(j));
        },
        [&](std::size_t i, std::size_t j) {
            return Rational(-1) * (t * (act(rep.mu, unit_vec(n, i)) * tinv.column(j)));
        });
    check_l_dendriform_outputs(d);
    return d;
}

Algebra vertical_prelie(const LDendriform& d) {
    if (auto r = is_l_dendriform(d); !r)
        throw input_error("not an L-dendriform structure: " + r.witness);
    const std::size_t n = d.dim();
    MultiMap prod(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = d.right.value(ij) - d.left.value({ij[1], ij[0]});
        for (std::size_t k = 0; k < n; ++k) prod.coeff(ij, k) = v[k];
    });
    Algebra out(Cochain(std::move(prod)), AlgebraKind::pre_lie);
    if (auto r = check_pre_lie(out); !r)
        throw std::logic_error("vertical product is not pre-Lie: " + r.witness);
    return out;
}

} // namespace prelie
