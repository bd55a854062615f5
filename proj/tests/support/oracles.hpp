#pragma once

// Test-side oracles, kept independent of the library code paths they
// cross-check.

#include "prelie/algebra.hpp"
#include "prelie/multimap.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace prelie::testing {

/// Expanded unshuffle-sum formula for the diamond product: a signed sum of
/// Q plugged into the first slot of P over one family of permutations, plus
/// (-1)^(pq) times Q plugged into the last slot over the unshuffles.
inline MultiMap diamond_unshuffle(const MultiMap& P, const MultiMap& Q) {
    const unsigned p = P.degree(), q = Q.degree();
    if (p == 0) throw std::invalid_argument("expansion oracle needs deg(P) >= 1");
    const std::size_t n = P.dim();
    MultiMap out(n, p + q, P.codim());
    const unsigned total = p + q;

    std::vector<std::size_t> sigma(total);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    if (total == 0)
        perms.push_back({});
    else
        do perms.push_back(sigma);
        while (std::next_permutation(sigma.begin(), sigma.end()));

    auto increasing = [](const std::vector<std::size_t>& s, std::size_t from, std::size_t to) {
        for (std::size_t i = from + 1; i < to; ++i)
            if (s[i - 1] > s[i]) return false;
        return true;
    };

    for_each_tuple(n, total + 1, [&](const std::vector<std::size_t>& x) {
        for (const auto& s : perms) {
            const int sgn = permutation_sign(s);
            // First family: s(0)<...<s(q-1), s(q+1)<...<s(p+q-1); Q eats the
            // first q+1 permuted slots, its value enters P's first slot.
            if (increasing(s, 0, q) && increasing(s, q + 1, total)) {
                std::vector<std::size_t> qargs(q + 1);
                for (std::size_t i = 0; i <= q; ++i) qargs[i] = x[s[i]];
                const Vec qv = Q.value(qargs);
                std::vector<std::size_t> pargs(p + 1);
                for (std::size_t i = 0; i + 1 < p + 1 && q + 1 + i < total; ++i)
                    pargs[1 + i] = x[s[q + 1 + i]];
                pargs[p] = x[total];
                for (std::size_t t = 0; t < n; ++t) {
                    if (qv[t] == 0) continue;
                    pargs[0] = t;
                    for (std::size_t k = 0; k < P.codim(); ++k) {
                        const Rational& pc = P.coeff(pargs, k);
                        if (pc == 0) continue;
                        if (sgn > 0)
                            out.coeff(x, k) += qv[t] * pc;
                        else
                            out.coeff(x, k) -= qv[t] * pc;
                    }
                }
            }
            // Second family ((p,q)-unshuffles): s(0)<...<s(p-1) and
            // s(p)<...<s(p+q-1); Q eats the trailing permuted slots plus the
            // fixed last argument, its value enters P's last slot.
            if (increasing(s, 0, p) && increasing(s, p, total)) {
                std::vector<std::size_t> qargs(q + 1);
                for (std::size_t i = 0; i < q; ++i) qargs[i] = x[s[p + i]];
                qargs[q] = x[total];
                const Vec qv = Q.value(qargs);
                std::vector<std::size_t> pargs(p + 1);
                for (std::size_t i = 0; i < p; ++i) pargs[i] = x[s[i]];
                const int sign2 = (p * q) % 2 == 0 ? sgn : -sgn;
                for (std::size_t t = 0; t < n; ++t) {
                    if (qv[t] == 0) continue;
                    pargs[p] = t;
                    for (std::size_t k = 0; k < P.codim(); ++k) {
                        const Rational& pc = P.coeff(pargs, k);
                        if (pc == 0) continue;
                        if (sign2 > 0)
                            out.coeff(x, k) += qv[t] * pc;
                        else
                            out.coeff(x, k) -= qv[t] * pc;
                    }
                }
            }
        }
    });
    return out;
}

/// Explicit Hochschild coboundary on an associative algebra:
/// x1*P(x2,...) + sum (-1)^i P(..., x_i * x_{i+1}, ...) + (-1)^(p+1) P(...)*x_{p+1}
/// for a map P with p arguments.
inline MultiMap hochschild_coboundary(const Algebra& assoc, const MultiMap& P) {
    const std::size_t n = assoc.dim();
    const std::size_t p = P.arity();
    MultiMap out(n, P.degree() + 1, n);
    for_each_tuple(n, p + 1, [&](const std::vector<std::size_t>& x) {
        Vec acc(n, Rational(0));
        {
            const std::vector<std::size_t> rest(x.begin() + 1, x.end());
            acc = acc + assoc.multiply(unit_vec(n, x[0]), P.value(rest));
        }
        for (std::size_t i = 1; i <= p; ++i) {
            const Vec prod = assoc.multiply_basis(x[i - 1], x[i]);
            std::vector<std::size_t> args;
            for (std::size_t t = 0; t + 1 < i; ++t) args.push_back(x[t]);
            args.push_back(0); // placeholder for the contracted product
            for (std::size_t t = i + 1; t <= p; ++t) args.push_back(x[t]);
            Vec term(n, Rational(0));
            for (std::size_t k = 0; k < n; ++k) {
                if (prod[k] == 0) continue;
                args[i - 1] = k;
                term = term + prod[k] * P.value(args);
            }
            acc = i % 2 == 0 ? acc + term : acc - term;
        }
        {
            const std::vector<std::size_t> head(x.begin(), x.end() - 1);
            const Vec tail = assoc.multiply(P.value(head), unit_vec(n, x.back()));
            acc = (p + 1) % 2 == 0 ? acc + tail : acc - tail;
        }
        for (std::size_t k = 0; k < n; ++k) out.coeff(x, k) = acc[k];
    });
    return out;
}

// Deterministic random data for property tests.

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline MultiMap random_multimap(std::mt19937_64& rng, std::size_t dim, unsigned degree,
                                std::size_t codim = 0) {
    MultiMap m(dim, degree, codim);
    for_each_tuple(dim, m.arity(), [&](const std::vector<std::size_t>& idx) {
        for (std::size_t k = 0; k < m.codim(); ++k) m.coeff(idx, k) = random_rational(rng);
    });
    return m;
}

inline Cochain random_cochain(std::mt19937_64& rng, std::size_t dim, unsigned degree,
                              std::size_t codim = 0) {
    return alternator(random_multimap(rng, dim, degree, codim));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
    return m;
}

inline Algebra random_bilinear_algebra(std::mt19937_64& rng, std::size_t dim) {
    return Algebra(Cochain(random_multimap(rng, dim, 1)), AlgebraKind::unchecked);
}

} // namespace prelie::testing
