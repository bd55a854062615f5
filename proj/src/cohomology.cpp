#include "prelie/cohomology.hpp"

#include "prelie/errors.hpp"

namespace prelie {

namespace {

std::vector<std::size_t> erase_at(const std::vector<std::size_t>& v, std::size_t pos) {
    std::vector<std::size_t> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != pos) out.push_back(v[i]);
    return out;
}

bool is_regular(const Algebra& a, const Representation& rep) {
    if (rep.dim_v != a.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (rep.rho[i] != a.left_mult(i) || rep.mu[i] != a.right_mult(i)) return false;
    return true;
}

} // namespace

Cochain coboundary(const Algebra& a, const Representation& rep, const Cochain& phi) {
    const std::size_t n = a.dim(), m = rep.dim_v;
    if (phi.dim() != n || phi.codim() != m)
        throw input_error("cochain shape does not match algebra/representation");
    if (auto r = check_representation(a, rep); !r)
        throw input_error("invalid representation: " + r.witness);

    const unsigned p = phi.degree();
    enforce_guardrails(n, p + 1);
    const std::size_t nn = p + 1; // argument count of phi
    MultiMap out(n, p + 1, m);

    for_each_tuple(n, nn + 1, [&](const std::vector<std::size_t>& x) {
        Vec acc(m, Rational(0));
        for (std::size_t i = 0; i < nn; ++i) {
            const int sign = i % 2 == 0 ? 1 : -1;

            // rho(x_i) phi(..., x_i omitted, ..., x_last)
            Vec v = rep.rho[x[i]] * phi.value(erase_at(x, i));

            // mu(x_last) phi(x-list minus x_i, x_i)  and  the term moving
            // the product of x_i with x_last into the final slot.
            std::vector<std::size_t> args(x.begin(), x.end() - 1);
            args = erase_at(args, i);
            args.push_back(x[i]);
            v = v + rep.mu[x[nn]] * phi.value(args);

            const Vec prod = a.multiply_basis(x[i], x[nn]);
            for (std::size_t k = 0; k < n; ++k) {
                if (prod[k] == 0) continue;
                args.back() = k;
                v = v - prod[k] * phi.value(args);
            }
            acc = sign > 0 ? acc + v : acc - v;
        }
        // Terms contracting a commutator into the first slot.
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = i + 1; j < nn; ++j) {
                const int sign = (i + j) % 2 == 0 ? 1 : -1; // (-1)^{(i+1)+(j+1)}
                const Vec bracket =
                    a.multiply_basis(x[i], x[j]) - a.multiply_basis(x[j], x[i]);
                std::vector<std::size_t> rest = erase_at(erase_at(x, j), i);
                std::vector<std::size_t> args(1, 0);
                args.insert(args.end(), rest.begin(), rest.end());
                for (std::size_t k = 0; k < n; ++k) {
                    if (bracket[k] == 0) continue;
                    args[0] = k;
                    const Vec v = bracket[k] * phi.value(args);
                    acc = sign > 0 ? acc + v : acc - v;
                }
            }
        for (std::size_t k = 0; k < m; ++k) out.coeff(x, k) = acc[k];
    });

    Cochain result(std::move(out));
    if (is_regular(a, rep)) {
        // Independent route through the graded bracket; disagreement would
        // mean a sign error in one of the two implementations.
        if (result != coboundary_regular(a, phi))
            throw std::logic_error("coboundary cross-check failed for the regular representation");
    }
    return result;
}

Cochain coboundary_regular(const Algebra& a, const Cochain& phi) {
    if (phi.codim() != phi.dim())
        throw input_error("bracket-route coboundary needs an algebra-valued cochain");
    const Cochain br = c_bracket(a.product(), phi);
    return phi.degree() % 2 == 0 ? br : -br;
}

Cochain coboundary_trivial(const Algebra& a, const Cochain& phi) {
    return coboundary(a, trivial_representation(a), phi);
}

CheckResult is_cocycle(const Algebra& a, const Representation& rep, const Cochain& phi) {
    const Cochain d = coboundary(a, rep, phi);
    if (auto hit = d.tensor().first_nonzero())
        return CheckResult::fail(format_entry_witness(hit->first, hit->second,
                                                      d.tensor().coeff(hit->first, hit->second)));
    return CheckResult::pass();
}

Cochain cochain_from_form(const Matrix& form) {
    if (form.rows() != form.cols()) throw input_error("form matrix must be square");
    MultiMap m(form.rows(), 1, 1);
    for_each_tuple(form.rows(), 2, [&](const std::vector<std::size_t>& ij) {
        m.coeff(ij, 0) = form.at(ij[0], ij[1]);
    });
    return Cochain(std::move(m));
}

Cochain form_coboundary(const Algebra& a, const Matrix& form) {
    return coboundary_trivial(a, cochain_from_form(form));
}

CheckResult is_closed_form(const Algebra& a, const Matrix& form) {
    const Cochain d = form_coboundary(a, form);
    if (auto hit = d.tensor().first_nonzero())
        return CheckResult::fail(format_entry_witness(hit->first, hit->second,
                                                      d.tensor().coeff(hit->first, hit->second)));
    return CheckResult::pass();
}

CheckResult is_lie_two_cocycle(const Algebra& lie, const BilinearForm& omega) {
    if (omega.symmetry != FormSymmetry::skew)
        throw input_error("Lie 2-cocycle check expects a skew form");
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Rational s = omega(lie.multiply_basis(i, j), unit_vec(n, k)) +
                             omega(lie.multiply_basis(k, i), unit_vec(n, j)) +
                             omega(lie.multiply_basis(j, k), unit_vec(n, i));
                if (s != 0)
                    return CheckResult::fail("cocycle identity fails at (" + lie.label(i) + "," +
                                             lie.label(j) + "," + lie.label(k) + ") with value " +
                                             to_string(s));
            }
    return CheckResult::pass();
}

} // namespace prelie
