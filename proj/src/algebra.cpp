#include "prelie/algebra.hpp"

#include "prelie/errors.hpp"

#include <sstream>

namespace prelie {

std::string kind_name(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::pre_lie: return "prelie";
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::associative: return "associative";
    case AlgebraKind::unchecked: return "unchecked";
    }
    return "unchecked";
}

Algebra::Algebra(Cochain product, AlgebraKind kind, std::vector<std::string> basis)
    : product_(std::move(product)), kind_(kind), basis_(std::move(basis)) {
    if (product_.degree() != 1 || product_.codim() != product_.dim())
        throw input_error("algebra product must be a bilinear map into the algebra");
    if (!basis_.empty() && basis_.size() != product_.dim())
        throw input_error("basis label count does not match the dimension");
}

Algebra Algebra::zero(std::size_t dim, AlgebraKind kind) {
    return Algebra(Cochain(MultiMap(dim, 1)), kind);
}

std::string Algebra::label(std::size_t i) const {
    return i < basis_.size() ? basis_[i] : "e" + std::to_string(i + 1);
}

Matrix Algebra::left_mult(const Vec& x) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) col[k] += x[i] * c(i, j, k);
        }
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Matrix Algebra::left_mult(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) m.at(k, j) += x[i] * c(j, i, k);
        }
    }
    return m;
}

Matrix Algebra::right_mult(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m.at(k, j) = c(j, i, k);
    return m;
}

Matrix Algebra::ad(std::size_t i) const { return left_mult(i) - right_mult(i); }

Algebra Algebra::with_kind(AlgebraKind kind) const { return Algebra(product_, kind, basis_); }

namespace {

std::string triple(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return "(" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")";
}

} // namespace

CheckResult check_pre_lie(const Algebra& a) {
    const std::size_t n = a.dim();
    auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vec ek(n, Rational(0));
        ek[k] = 1;
        Vec jk = a.multiply_basis(j, k);
        return a.multiply(a.multiply_basis(i, j), ek) - a.multiply(unit_vec(n, i), jk);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec lhs = assoc(i, j, k);
                const Vec rhs = assoc(j, i, k);
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associator asymmetry at " << triple(a, i, j, k) << ": "
                       << format_vector(lhs, a.basis()) << " vs " << format_vector(rhs, a.basis());
                    return CheckResult::fail(os.str());
                }
            }
    return CheckResult::pass();
}

CheckResult check_lie(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Vec lhs = a.multiply_basis(i, j);
            const Vec rhs = -a.multiply_basis(j, i);
            if (lhs != rhs)
                return CheckResult::fail("bracket not skew at (" + a.label(i) + "," + a.label(j) +
                                         ")");
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec sum = a.multiply(a.multiply_basis(i, j), unit_vec(n, k)) +
                          a.multiply(a.multiply_basis(j, k), unit_vec(n, i)) +
                          a.multiply(a.multiply_basis(k, i), unit_vec(n, j));
                if (!is_zero(sum))
                    return CheckResult::fail("Jacobi fails at " + triple(a, i, j, k) + ": " +
                                             format_vector(sum, a.basis()));
            }
    return CheckResult::pass();
}

CheckResult check_associative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.multiply(a.multiply_basis(i, j), unit_vec(n, k));
                Vec rhs = a.multiply(unit_vec(n, i), a.multiply_basis(j, k));
                if (lhs != rhs)
                    return CheckResult::fail("associator nonzero at " + triple(a, i, j, k) + ": " +
                                             format_vector(lhs - rhs, a.basis()));
            }
    return CheckResult::pass();
}

CheckResult check_commutative(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.multiply_basis(i, j) != a.multiply_basis(j, i))
                return CheckResult::fail("product not commutative at (" + a.label(i) + "," +
                                         a.label(j) + ")");
    return CheckResult::pass();
}

CheckResult verify_kind(const Algebra& a) {
    switch (a.kind()) {
    case AlgebraKind::pre_lie: return check_pre_lie(a);
    case AlgebraKind::lie: return check_lie(a);
    case AlgebraKind::associative: return check_associative(a);
    case AlgebraKind::unchecked: return CheckResult::pass();
    }
    return CheckResult::pass();
}

Algebra sub_adjacent(const Algebra& a) {
    if (auto r = check_pre_lie(a); !r)
        throw input_error("sub-adjacent Lie algebra requires a pre-Lie product: " + r.witness);
    const std::size_t n = a.dim();
    MultiMap bracket(n, 1);
    for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ij) {
        const Vec v = a.multiply_basis(ij[0], ij[1]) - a.multiply_basis(ij[1], ij[0]);
        for (std::size_t k = 0; k < n; ++k) bracket.coeff(ij, k) = v[k];
    });
    Algebra lie(Cochain(std::move(bracket)), AlgebraKind::lie, a.basis());
    if (auto r = check_lie(lie); !r)
        throw std::logic_error("commutator bracket failed the Lie check: " + r.witness);
    return lie;
}

Representation trivial_representation(const Algebra& a) {
    return Representation{1, std::vector<Matrix>(a.dim(), Matrix::zero(1, 1)),
                          std::vector<Matrix>(a.dim(), Matrix::zero(1, 1))};
}

Representation regular_representation(const Algebra& a) {
    Representation rep;
    rep.dim_v = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        rep.rho.push_back(a.left_mult(i));
        rep.mu.push_back(a.right_mult(i));
    }
    return rep;
}

Representation dual_regular_representation(const Algebra& a) {
    // Over the dual basis: L^*_x = -(L_x)^T and R^*_x = -(R_x)^T, so
    // ad^*_x = (R_x - L_x)^T and -R^*_x = (R_x)^T.
    Representation rep;
    rep.dim_v = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Matrix L = a.left_mult(i), R = a.right_mult(i);
        rep.rho.push_back((R - L).transpose());
        rep.mu.push_back(R.transpose());
    }
    return rep;
}

CheckResult check_representation(const Algebra& a, const Representation& rep) {
    const std::size_t n = a.dim();
    if (rep.rho.size() != n || rep.mu.size() != n)
        throw input_error("representation must provide one matrix pair per basis vector");
    for (std::size_t i = 0; i < n; ++i)
        if (rep.rho[i].rows() != rep.dim_v || rep.rho[i].cols() != rep.dim_v ||
            rep.mu[i].rows() != rep.dim_v || rep.mu[i].cols() != rep.dim_v)
            throw input_error("representation matrix shape mismatch");

    auto act = [&](const std::vector<Matrix>& fam, const Vec& x) {
        Matrix m = Matrix::zero(rep.dim_v, rep.dim_v);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) m = m + x[i] * fam[i];
        return m;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // rho must represent the commutator Lie algebra.
            const Vec bracket = a.multiply_basis(i, j) - a.multiply_basis(j, i);
            const Matrix lie_lhs = act(rep.rho, bracket);
            const Matrix lie_rhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
            if (lie_lhs != lie_rhs)
                return CheckResult::fail("rho is not a Lie-algebra action at (" + a.label(i) +
                                         "," + a.label(j) + ")");
            // Compatibility of rho with mu on basis pairs.
            const Matrix lhs = rep.rho[i] * rep.mu[j] - rep.mu[j] * rep.rho[i];
            const Matrix rhs = act(rep.mu, a.multiply_basis(i, j)) - rep.mu[j] * rep.mu[i];
            if (lhs != rhs)
                return CheckResult::fail("rho/mu compatibility fails at (" + a.label(i) + "," +
                                         a.label(j) + ")");
        }
    return CheckResult::pass();
}

Algebra semidirect_product(const Algebra& a, const Representation& rep) {
    if (auto r = check_representation(a, rep); !r)
        throw input_error("invalid representation: " + r.witness);
    const std::size_t n = a.dim(), m = rep.dim_v, d = n + m;
    MultiMap prod(d, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) prod.coeff({i, j}, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t t = 0; t < m; ++t) {
                prod.coeff({i, n + b}, n + t) = rep.rho[i].at(t, b);
                prod.coeff({n + b, i}, n + t) = rep.mu[i].at(t, b);
            }
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(a.label(i));
    for (std::size_t b = 0; b < m; ++b) labels.push_back("v" + std::to_string(b + 1));
    Algebra out(Cochain(std::move(prod)), AlgebraKind::pre_lie, std::move(labels));
    if (auto r = check_pre_lie(out); !r)
        throw std::logic_error("semidirect product is not pre-Lie: " + r.witness);
    return out;
}

} // namespace prelie
