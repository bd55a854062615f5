#pragma once

#include "prelie/algebra.hpp"
#include "prelie/cohomology.hpp"
#include "prelie/forms.hpp"
#include "prelie/smatrix.hpp"

namespace prelie {

struct ParacomplexResult {
    CheckResult verdict;
    std::vector<Vec> plus_basis;  // eigenvectors for +1
    std::vector<Vec> minus_basis; // eigenvectors for -1
    explicit operator bool() const { return verdict.ok; }
};

/// N is Nijenhuis, squares to the identity, and its +1/-1 eigenspaces have
/// equal dimension. On success both eigenspaces are returned and verified
/// to be closed under the product.
ParacomplexResult is_paracomplex(const Algebra& a, const Matrix& op);

/// Invariance of a skew nondegenerate form:
/// omega(x.y, z) + omega(y, [x,z]^c) = 0.
CheckResult is_quadratic(const Algebra& a, const BilinearForm& omega);

/// The pre-Lie product determined on a symplectic Lie algebra by
/// omega(x.y, z) = -omega(y, [x,z]); its commutator recovers the bracket.
Algebra prelie_from_symplectic(const Algebra& lie, const BilinearForm& omega);

/// Para-complex structure on a symplectic Lie algebra that anti-commutes
/// with the form: omega(Nx, y) = -omega(x, Ny). On success the associated
/// pre-Lie algebra, the deformed bracket, and the deformed pre-Lie product
/// are verified to reproduce the whole picture.
CheckResult is_para_kahler(const Algebra& lie, const BilinearForm& omega, const Matrix& op);

/// Quadratic pre-Lie algebra carrying an anti-compatible para-complex
/// structure.
CheckResult is_paracomplex_quadratic(const Algebra& a, const BilinearForm& omega,
                                     const Matrix& op);

enum class SplittingFlavor { quadratic, hessian };

struct SplittingResult {
    Matrix op;
    CheckResult verdict;
};

/// Builds the involution fixing span(plus) and negating span(minus), after
/// validating that the two families span complementary subalgebras of
/// equal dimension, each isotropic for the given form. The verdict re-runs
/// the para-complex check plus the flavor's compatibility equation.
SplittingResult paracomplex_from_splitting(const Algebra& a, const std::vector<Vec>& plus,
                                           const std::vector<Vec>& minus,
                                           const BilinearForm& form, SplittingFlavor flavor);

/// Pseudo-Hessian B with a para-complex N satisfying B(Nx,y) = -B(x,Ny);
/// the derived form B(x,Ny) is then skew and N-anti-invariant.
CheckResult is_paracomplex_pseudo_hessian(const Algebra& a, const BilinearForm& b,
                                          const Matrix& op);

} // namespace prelie
