#include "prelie/search.hpp"

#include "prelie/errors.hpp"

#include <algorithm>

namespace prelie {

std::vector<Rational> grid_values(long lo, long hi, const std::vector<long>& denominators) {
    if (lo > hi) throw input_error("empty grid range");
    if (denominators.empty()) throw input_error("denominator list is empty");
    std::vector<Rational> values;
    for (long d : denominators) {
        if (d <= 0) throw input_error("denominators must be positive");
        for (long v = lo; v <= hi; ++v) {
            Rational r(v, d);
            r.canonicalize();
            values.push_back(r);
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

bool torsion_vanishes(const Algebra& a, const Matrix& op) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ni = op.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec nj = op.column(j);
            const Vec deformed = a.multiply(ni, unit_vec(n, j)) + a.multiply(unit_vec(n, i), nj) -
                                 op * a.multiply_basis(i, j);
            if (op * deformed != a.multiply(ni, nj)) return false;
        }
    }
    return true;
}

bool rota_baxter_holds(const Algebra& a, const Matrix& op, const Rational& weight) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ri = op.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec rj = op.column(j);
            const Vec inner = a.multiply(ri, unit_vec(n, j)) + a.multiply(unit_vec(n, i), rj);
            Vec rhs = op * inner;
            if (weight != 0) rhs = rhs + weight * (op * a.multiply_basis(i, j));
            if (a.multiply(ri, rj) != rhs) return false;
        }
    }
    return true;
}

bool s_bracket_vanishes(const Algebra& a, const Matrix& sym) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec ri = sym.column(i), rj = sym.column(j);
            const Vec bracket = a.multiply(ri, rj) - a.multiply(rj, ri);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec rk = sym.column(k);
                const Rational value =
                    -a.multiply(rj, rk)[i] + a.multiply(ri, rk)[j] + bracket[k];
                if (value != 0) return false;
            }
        }
    return true;
}

namespace {

template <typename Fill, typename Accept>
GridSearchResult enumerate(std::size_t slots, const std::vector<Rational>& values, Fill fill,
                           Accept accept) {
    if (values.empty()) throw input_error("empty grid");
    GridSearchResult result;
    std::vector<std::size_t> idx(slots, 0);
    while (true) {
        const Matrix candidate = fill(idx);
        ++result.candidates;
        if (accept(candidate)) result.hits.push_back(candidate);
        std::size_t pos = slots;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values.size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
        if (done) break;
    }
    return result;
}

} // namespace

GridSearchResult search_nijenhuis(const Algebra& a, const std::vector<Rational>& values) {
    const std::size_t n = a.dim();
    return enumerate(
        n * n, values,
        [&](const std::vector<std::size_t>& idx) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = values[idx[i * n + j]];
            return m;
        },
        [&](const Matrix& m) { return torsion_vanishes(a, m); });
}

GridSearchResult search_rota_baxter(const Algebra& a, const Rational& weight,
                                    const std::vector<Rational>& values) {
    const std::size_t n = a.dim();
    return enumerate(
        n * n, values,
        [&](const std::vector<std::size_t>& idx) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = values[idx[i * n + j]];
            return m;
        },
        [&](const Matrix& m) { return rota_baxter_holds(a, m, weight); });
}

GridSearchResult search_smatrix(const Algebra& a, const std::vector<Rational>& values) {
    const std::size_t n = a.dim();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    return enumerate(
        slots.size(), values,
        [&](const std::vector<std::size_t>& idx) {
            Matrix m(n, n);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                const auto [i, j] = slots[s];
                m.at(i, j) = values[idx[s]];
                m.at(j, i) = values[idx[s]];
            }
            return m;
        },
        [&](const Matrix& m) { return s_bracket_vanishes(a, m); });
}

} // namespace prelie
