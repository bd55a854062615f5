#include "prelie/matrix.hpp"

#include "prelie/errors.hpp"

#include <sstream>
#include <utility>

namespace prelie {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw input_error("ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.a_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
        if (r.size() != m.cols_) throw input_error("ragged matrix rows");
        for (const auto& x : r) m.a_.push_back(x);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw input_error("ragged matrix columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw input_error("matrix shape mismatch in addition");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + other.a_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw input_error("matrix shape mismatch in subtraction");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - other.a_[k];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw input_error("matrix shape mismatch in product");
    Matrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += x * other.at(k, j);
        }
    return m;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = s * m.a_[k];
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw input_error("matrix/vector shape mismatch");
    Vec r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// Returns (echelon matrix, pivot columns). Plain fraction-arithmetic
// Gaussian elimination; fine at the dimensions this library targets.
std::pair<Matrix, std::vector<std::size_t>> row_echelon(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rational inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

std::size_t Matrix::rank() const { return row_echelon(*this).second.size(); }

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw input_error("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto [ech, pivots] = row_echelon(std::move(aug));
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
        throw input_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = ech.at(i, cols_ + j);
    return inv;
}

Matrix Matrix::pow(long k) const {
    if (rows_ != cols_) throw input_error("power of a non-square matrix");
    Matrix base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Matrix result = Matrix::identity(rows_);
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::vector<Vec> Matrix::kernel_basis() const {
    auto [ech, pivots] = row_echelon(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -ech.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw input_error("matrix/vector shape mismatch in solve");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto [ech, pivots] = row_echelon(std::move(aug));
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    Vec x(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = ech.at(r, cols_);
    return x;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

std::size_t rank_of_span(const std::vector<Vec>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    Matrix m(dim, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != dim) throw input_error("vector dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = vectors[j][i];
    }
    return m.rank();
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v) {
    if (is_zero(v)) return true;
    if (vectors.empty()) return false;
    return Matrix::from_columns(vectors).solve(v).has_value();
}

} // namespace prelie
