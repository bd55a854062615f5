#pragma once

#include "prelie/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace prelie {

/// Dense exact-rational matrix. Operators on an algebra use the column
/// convention throughout: column j holds the coordinates of the image of
/// the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    bool is_skew() const;

    bool operator==(const Matrix& other) const = default;

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& other) const;
    friend Matrix operator*(const Rational& s, const Matrix& m);
    Vec operator*(const Vec& v) const;

    std::size_t rank() const;
    bool invertible() const;
    /// Exact inverse by Gauss-Jordan elimination; throws input_error when singular.
    Matrix inverse() const;
    /// Integer power; negative exponents require invertibility.
    Matrix pow(long k) const;
    /// Basis of the kernel (empty when injective).
    std::vector<Vec> kernel_basis() const;
    /// One exact solution of A x = b, or nullopt when inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Rank of the matrix whose columns are the given vectors.
std::size_t rank_of_span(const std::vector<Vec>& vectors, std::size_t dim);

/// True when v lies in the span of the columns.
bool in_span(const std::vector<Vec>& vectors, const Vec& v);

} // namespace prelie
