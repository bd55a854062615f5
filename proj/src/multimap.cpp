#include "prelie/multimap.hpp"

#include "prelie/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prelie {

void enforce_guardrails(std::size_t dim, unsigned result_degree) {
    if (dim > kMaxDim)
        throw resource_error("dimension " + std::to_string(dim) + " exceeds the limit of " +
                             std::to_string(kMaxDim));
    if (result_degree > kMaxDegree)
        throw resource_error("cochain degree " + std::to_string(result_degree) +
                             " exceeds the limit of " + std::to_string(kMaxDegree));
}

namespace {

Rational binomial_weight(unsigned p, unsigned q) {
    mpz_class num = 1, den = 1;
    for (unsigned i = 1; i <= p + q; ++i) num *= i;
    for (unsigned i = 1; i <= p; ++i) den *= i;
    for (unsigned i = 1; i <= q; ++i) den *= i;
    Rational w(num, den);
    w.canonicalize();
    return w;
}

} // namespace

void for_each_tuple(std::size_t n, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k, 0);
    if (n == 0 && k > 0) return;
    while (true) {
        f(idx);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < n) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

MultiMap::MultiMap(std::size_t dim, unsigned degree, std::size_t codim)
    : dim_(dim), codim_(codim ? codim : dim), degree_(degree) {
    if (dim_ == 0) throw input_error("multilinear map needs positive dimension");
    std::size_t size = codim_;
    for (std::size_t i = 0; i < arity(); ++i) size *= dim_;
    c_.assign(size, Rational(0));
}

MultiMap MultiMap::from_operator(const Matrix& op) {
    if (op.rows() != op.cols()) throw input_error("operator matrix must be square");
    MultiMap m(op.rows(), 0);
    for (std::size_t i = 0; i < op.rows(); ++i)
        for (std::size_t k = 0; k < op.rows(); ++k) m.coeff({i}, k) = op.at(k, i);
    return m;
}

std::size_t MultiMap::index(const std::vector<std::size_t>& args, std::size_t k) const {
    std::size_t idx = 0;
    for (std::size_t a : args) idx = idx * dim_ + a;
    return idx * codim_ + k;
}

Rational& MultiMap::coeff(const std::vector<std::size_t>& args, std::size_t k) {
    return c_[index(args, k)];
}

const Rational& MultiMap::coeff(const std::vector<std::size_t>& args, std::size_t k) const {
    return c_[index(args, k)];
}

Vec MultiMap::value(const std::vector<std::size_t>& args) const {
    Vec v(codim_);
    const std::size_t base = index(args, 0);
    for (std::size_t k = 0; k < codim_; ++k) v[k] = c_[base + k];
    return v;
}

Vec MultiMap::eval(const std::vector<Vec>& args) const {
    if (args.size() != arity()) throw input_error("wrong number of arguments");
    for (const auto& a : args)
        if (a.size() != dim_) throw input_error("argument dimension mismatch");
    Vec out(codim_, Rational(0));
    for_each_tuple(dim_, arity(), [&](const std::vector<std::size_t>& idx) {
        Rational factor = 1;
        for (std::size_t s = 0; s < idx.size(); ++s) {
            factor *= args[s][idx[s]];
            if (factor == 0) return;
        }
        const std::size_t base = index(idx, 0);
        for (std::size_t k = 0; k < codim_; ++k)
            if (c_[base + k] != 0) out[k] += factor * c_[base + k];
    });
    return out;
}

Matrix MultiMap::as_operator() const {
    if (degree_ != 0 || codim_ != dim_) throw input_error("not an operator-shaped map");
    Matrix op(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) op.at(k, i) = coeff({i}, k);
    return op;
}

bool MultiMap::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

std::optional<std::pair<std::vector<std::size_t>, std::size_t>> MultiMap::first_nonzero() const {
    std::optional<std::pair<std::vector<std::size_t>, std::size_t>> hit;
    for_each_tuple(dim_, arity(), [&](const std::vector<std::size_t>& idx) {
        if (hit) return;
        const std::size_t base = index(idx, 0);
        for (std::size_t k = 0; k < codim_; ++k)
            if (c_[base + k] != 0) {
                hit = {idx, k};
                return;
            }
    });
    return hit;
}

MultiMap MultiMap::operator+(const MultiMap& other) const {
    if (dim_ != other.dim_ || codim_ != other.codim_ || degree_ != other.degree_)
        throw input_error("multilinear map shape mismatch");
    MultiMap m = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) m.c_[i] += other.c_[i];
    return m;
}

MultiMap MultiMap::operator-(const MultiMap& other) const {
    if (dim_ != other.dim_ || codim_ != other.codim_ || degree_ != other.degree_)
        throw input_error("multilinear map shape mismatch");
    MultiMap m = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) m.c_[i] -= other.c_[i];
    return m;
}

MultiMap MultiMap::operator-() const {
    MultiMap m = *this;
    for (auto& x : m.c_) x = -x;
    return m;
}

MultiMap operator*(const Rational& s, const MultiMap& m) {
    MultiMap r = m;
    for (auto& x : r.c_) x *= s;
    return r;
}

bool MultiMap::is_skew_in_leading() const {
    const unsigned p = degree_;
    if (p < 2) return true;
    bool ok = true;
    // Adjacent transpositions generate the symmetric group on the first p slots.
    for (unsigned s = 0; s + 1 < p && ok; ++s) {
        for_each_tuple(dim_, arity(), [&](const std::vector<std::size_t>& idx) {
            if (!ok) return;
            std::vector<std::size_t> swapped = idx;
            std::swap(swapped[s], swapped[s + 1]);
            for (std::size_t k = 0; k < codim_; ++k)
                if (coeff(idx, k) != -coeff(swapped, k)) {
                    ok = false;
                    return;
                }
        });
    }
    return ok;
}

Cochain::Cochain(MultiMap tensor) : m_(std::move(tensor)) {
    if (!m_.is_skew_in_leading())
        throw input_error("tensor is not skew-symmetric in its leading arguments");
}

Cochain Cochain::zero(std::size_t dim, unsigned degree, std::size_t codim) {
    return Cochain(MultiMap(dim, degree, codim));
}

Cochain Cochain::from_operator(const Matrix& op) { return Cochain(MultiMap::from_operator(op)); }

Cochain Cochain::from_bilinear(const std::vector<std::vector<Vec>>& table) {
    const std::size_t n = table.size();
    MultiMap m(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw input_error("ragged structure-constant table");
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j].size() != n) throw input_error("ragged structure-constant table");
            for (std::size_t k = 0; k < n; ++k) m.coeff({i, j}, k) = table[i][j][k];
        }
    }
    return Cochain(std::move(m));
}

MultiMap compose_circle(const MultiMap& P, const MultiMap& Q) {
    if (P.dim() != Q.dim()) throw input_error("dimension mismatch in circle product");
    if (Q.codim() != Q.dim())
        throw input_error("inner map of a circle product must be algebra-valued");
    const std::size_t n = P.dim();
    const unsigned p = P.degree(), q = Q.degree();
    enforce_guardrails(n, p + q);
    MultiMap out(n, p + q, P.codim());
    std::vector<std::size_t> qargs(q + 1), pargs(p + 1);
    for_each_tuple(n, p + q + 1, [&](const std::vector<std::size_t>& x) {
        for (unsigned slot = 0; slot <= p; ++slot) {
            const int sign = (slot * q) % 2 == 0 ? 1 : -1;
            for (std::size_t a = 0; a <= q; ++a) qargs[a] = x[slot + a];
            for (std::size_t a = 0; a < slot; ++a) pargs[a] = x[a];
            for (std::size_t a = slot + 1; a <= p; ++a) pargs[a] = x[a + q];
            for (std::size_t t = 0; t < n; ++t) {
                const Rational& qc = Q.coeff(qargs, t);
                if (qc == 0) continue;
                pargs[slot] = t;
                for (std::size_t k = 0; k < P.codim(); ++k) {
                    const Rational& pc = P.coeff(pargs, k);
                    if (pc == 0) continue;
                    if (sign > 0)
                        out.coeff(x, k) += qc * pc;
                    else
                        out.coeff(x, k) -= qc * pc;
                }
            }
        }
    });
    return out;
}

MultiMap gerstenhaber_bracket(const MultiMap& P, const MultiMap& Q) {
    if (P.codim() != P.dim() || Q.codim() != Q.dim())
        throw input_error("graded bracket needs algebra-valued maps");
    const unsigned p = P.degree(), q = Q.degree();
    MultiMap pq = compose_circle(P, Q);
    MultiMap qp = compose_circle(Q, P);
    return (p * q) % 2 == 0 ? pq - qp : pq + qp;
}

Cochain alternator(const MultiMap& P) {
    const unsigned p = P.degree();
    const std::size_t n = P.dim();
    enforce_guardrails(n, p);
    MultiMap out(n, p, P.codim());
    if (p < 2) {
        out = P;
        return Cochain(std::move(out));
    }
    mpz_class fact = 1;
    for (unsigned i = 2; i <= p; ++i) fact *= i;
    Rational norm(1, fact);
    norm.canonicalize();

    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<std::size_t>, int>> perms;
    do {
        perms.emplace_back(perm, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> permuted(p + 1);
    for_each_tuple(n, p + 1, [&](const std::vector<std::size_t>& x) {
        permuted[p] = x[p];
        for (const auto& [sigma, sign] : perms) {
            for (unsigned s = 0; s < p; ++s) permuted[s] = x[sigma[s]];
            for (std::size_t k = 0; k < P.codim(); ++k) {
                const Rational& c = P.coeff(permuted, k);
                if (c == 0) continue;
                if (sign > 0)
                    out.coeff(x, k) += c;
                else
                    out.coeff(x, k) -= c;
            }
        }
    });
    out = norm * out;
    return Cochain(std::move(out));
}

Cochain diamond(const Cochain& P, const Cochain& Q) {
    const Rational w = binomial_weight(P.degree(), Q.degree());
    return Cochain(w * alternator(compose_circle(P.tensor(), Q.tensor())).tensor());
}

Cochain c_bracket(const Cochain& P, const Cochain& Q) {
    const Rational w = binomial_weight(P.degree(), Q.degree());
    return Cochain(w * alternator(gerstenhaber_bracket(P.tensor(), Q.tensor())).tensor());
}

std::string format_entry_witness(const std::vector<std::size_t>& args, std::size_t k,
                                 const Rational& value) {
    std::ostringstream os;
    os << "entry (";
    for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << "e" << args[i] + 1;
    os << "; e" << k + 1 << ") = " << to_string(value);
    return os.str();
}

} // namespace prelie
