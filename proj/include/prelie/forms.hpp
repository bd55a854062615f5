#pragma once

#include "prelie/errors.hpp"
#include "prelie/matrix.hpp"

namespace prelie {

enum class FormSymmetry { symmetric, skew };

/// Bilinear form on the algebra, with its symmetry recorded and enforced.
struct BilinearForm {
    Matrix matrix;
    FormSymmetry symmetry = FormSymmetry::symmetric;

    BilinearForm() = default;
    BilinearForm(Matrix m, FormSymmetry s) : matrix(std::move(m)), symmetry(s) {
        const bool ok = symmetry == FormSymmetry::symmetric ? matrix.is_symmetric()
                                                            : matrix.is_skew();
        if (!ok) throw input_error("form matrix does not match its symmetry tag");
    }

    Rational operator()(const Vec& x, const Vec& y) const {
        Rational r = 0;
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < matrix.cols(); ++j)
                if (matrix.at(i, j) != 0 && y[j] != 0) r += x[i] * matrix.at(i, j) * y[j];
        }
        return r;
    }
    Rational at(std::size_t i, std::size_t j) const { return matrix.at(i, j); }
    bool nondegenerate() const { return matrix.rank() == matrix.rows(); }
};

/// Symmetric 2-tensor r on the algebra; the matrix is simultaneously the
/// matrix of the sharp map g* -> g over the dual/primal bases.
struct SymTwoTensor {
    Matrix matrix;

    SymTwoTensor() = default;
    explicit SymTwoTensor(Matrix m) : matrix(std::move(m)) {
        if (!matrix.is_symmetric()) throw input_error("2-tensor matrix must be symmetric");
    }

    const Matrix& sharp() const { return matrix; }
    bool invertible() const { return matrix.invertible(); }
};

} // namespace prelie
