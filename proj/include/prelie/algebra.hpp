#pragma once

#include "prelie/matrix.hpp"
#include "prelie/multimap.hpp"
#include "prelie/rational.hpp"

#include <string>
#include <vector>

namespace prelie {

enum class AlgebraKind { pre_lie, lie, associative, unchecked };

std::string kind_name(AlgebraKind kind);

/// Outcome of a structural check. `witness` describes the first violation
/// (empty when the check passed).
struct CheckResult {
    bool ok = false;
    std::string witness;
    explicit operator bool() const { return ok; }
    static CheckResult pass() { return {true, {}}; }
    static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

/// Finite-dimensional algebra described by rational structure constants:
/// product of e_i and e_j = sum_k c(i,j,k) e_k. The kind tag is a claim
/// recorded with the data; verify_kind re-checks it on demand.
class Algebra {
public:
    Algebra() = default;
    Algebra(Cochain product, AlgebraKind kind, std::vector<std::string> basis = {});
    static Algebra zero(std::size_t dim, AlgebraKind kind = AlgebraKind::pre_lie);

    std::size_t dim() const { return product_.dim(); }
    AlgebraKind kind() const { return kind_; }
    const Cochain& product() const { return product_; }
    const std::vector<std::string>& basis() const { return basis_; }
    std::string label(std::size_t i) const;

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return product_.tensor().coeff({i, j}, k);
    }
    Vec multiply_basis(std::size_t i, std::size_t j) const { return product_.value({i, j}); }
    Vec multiply(const Vec& x, const Vec& y) const { return product_.eval({x, y}); }

    /// Left multiplication by x (column convention).
    Matrix left_mult(const Vec& x) const;
    Matrix left_mult(std::size_t i) const;
    /// Right multiplication: image of y is the product of y and x.
    Matrix right_mult(const Vec& x) const;
    Matrix right_mult(std::size_t i) const;
    /// ad(x) = left_mult(x) - right_mult(x) in the commutator Lie algebra.
    Matrix ad(std::size_t i) const;

    Algebra with_kind(AlgebraKind kind) const;

    bool operator==(const Algebra& other) const {
        return product_ == other.product_ && kind_ == other.kind_;
    }

private:
    Cochain product_;
    AlgebraKind kind_ = AlgebraKind::unchecked;
    std::vector<std::string> basis_;
};

/// Pair of matrix families (rho, mu) acting on a space of dimension dim_v.
struct Representation {
    std::size_t dim_v = 0;
    std::vector<Matrix> rho;
    std::vector<Matrix> mu;
};

/// Associator symmetry in the first two arguments, over all basis triples.
CheckResult check_pre_lie(const Algebra& a);
/// Skew product plus the Jacobi identity.
CheckResult check_lie(const Algebra& a);
CheckResult check_associative(const Algebra& a);
CheckResult check_commutative(const Algebra& a);
/// Re-checks the invariant promised by the algebra's kind tag.
CheckResult verify_kind(const Algebra& a);

/// Commutator Lie algebra of a pre-Lie algebra.
Algebra sub_adjacent(const Algebra& a);

Representation trivial_representation(const Algebra& a);
/// (rho, mu) = (left multiplications, right multiplications).
Representation regular_representation(const Algebra& a);
/// Dual of the regular representation: (ad^*, -R^*) acting on coordinates
/// over the dual basis.
Representation dual_regular_representation(const Algebra& a);

/// Checks that rho represents the sub-adjacent Lie algebra and that the
/// pre-Lie compatibility between rho and mu holds on all basis pairs.
CheckResult check_representation(const Algebra& a, const Representation& rep);

/// Pre-Lie structure on g + V twisting the direct sum by (rho, mu).
Algebra semidirect_product(const Algebra& a, const Representation& rep);

} // namespace prelie
