#pragma once

#include "prelie/algebra.hpp"
#include "prelie/cohomology.hpp"
#include "prelie/forms.hpp"
#include "prelie/nijenhuis.hpp"

#include <utility>

namespace prelie {

/// Polarized bracket of two symmetric 2-tensors, stored as a degree-2
/// cochain over the dual basis with values paired back into coordinates:
/// entry (i,j;k) is the bracket evaluated on (e^i, e^j, e^k). Skew in
/// (i,j); symmetric and bilinear in (r1, r2).
Cochain s_bracket(const Algebra& a, const SymTwoTensor& r1, const SymTwoTensor& r2);

/// Vanishing self-bracket. On a genuine pre-Lie algebra a positive verdict
/// also re-verifies that the sharp map intertwines the induced dual
/// product with the algebra product and is an O-operator for the dual of
/// the regular representation.
CheckResult is_s_matrix(const Algebra& a, const SymTwoTensor& r);

/// Vanishing polarized bracket of two s-matrices; every combination
/// t1 r1 + t2 r2 is then an s-matrix (re-sampled internally).
CheckResult are_compatible_smatrices(const Algebra& a, const SymTwoTensor& r1,
                                     const SymTwoTensor& r2);

/// Pre-Lie product on the dual space induced by an s-matrix.
Algebra dual_product(const Algebra& a, const SymTwoTensor& r);

/// Inverse of an invertible s-matrix as a bilinear form (pseudo-Hessian
/// when the input is an s-matrix), and the converse direction.
BilinearForm hessian_from_r(const Algebra& a, const SymTwoTensor& r);
SymTwoTensor r_from_hessian(const Algebra& a, const BilinearForm& b);

/// Symmetric, nondegenerate, closed for the trivial representation.
CheckResult is_pseudo_hessian(const Algebra& a, const BilinearForm& b);

/// Pair (B, N): B pseudo-Hessian, N an invertible Nijenhuis operator,
/// B(Nx,y) = B(x,Ny), and B(x,Ny) closed as well.
CheckResult is_pseudo_hessian_nijenhuis(const Algebra& a, const BilinearForm& b, const Matrix& op);

/// B_k(x,y) = B(x, N^k y); closed for every integer k when (B,N) is a
/// pseudo-Hessian-Nijenhuis pair.
BilinearForm hessian_sequence(const Algebra& a, const BilinearForm& b, const Matrix& op, long k);

/// s_n with sharp map (r2# (r1#)^-1)^n r1#; s_0 = r1 and s_1 = r2.
SymTwoTensor s_sequence(const Algebra& a, const SymTwoTensor& r1, const SymTwoTensor& r2, long n);

/// Compatible invertible s-matrices -> (B, N) with N = r1# (r2#)^-1 and
/// B the inverse of r1.
std::pair<BilinearForm, Matrix> phn_bridge(const Algebra& a, const SymTwoTensor& r1,
                                           const SymTwoTensor& r2);

/// Inverse direction: r1# = B^-1, r2# = N^-1 B^-1.
std::pair<SymTwoTensor, SymTwoTensor> phn_to_smatrices(const Algebra& a, const BilinearForm& b,
                                                       const Matrix& op);

struct DualNijenhuisResult {
    Matrix op;             // (r2#)^-1 r1# acting on dual coordinates
    Algebra dual_algebra;  // (g*, product induced by r2)
    DeformationReport report;
};

/// Nijenhuis operator on the dual algebra of r2 whose deformed product is
/// the dual product of r1.
DualNijenhuisResult dual_nijenhuis(const Algebra& a, const SymTwoTensor& r1,
                                   const SymTwoTensor& r2);

} // namespace prelie
