#pragma once

#include "prelie/matrix.hpp"
#include "prelie/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace prelie {

// Desk-scale guardrails: tensor operations refuse results of degree > 4
// and algebras of dimension > 10 (cost grows as n^(p+2)).
inline constexpr std::size_t kMaxDim = 10;
inline constexpr unsigned kMaxDegree = 4;

/// Dense multilinear map P of degree p on an n-dimensional space: p+1
/// arguments, values in a codomain of dimension codim (= n unless the map
/// is vector-space valued). Entry (i1..i_{p+1}; k) is the k-th coordinate
/// of P(e_{i1},...,e_{i_{p+1}}).
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(std::size_t dim, unsigned degree, std::size_t codim = 0);

    static MultiMap from_operator(const Matrix& op);

    std::size_t dim() const { return dim_; }
    std::size_t codim() const { return codim_; }
    unsigned degree() const { return degree_; }
    std::size_t arity() const { return degree_ + 1; }

    Rational& coeff(const std::vector<std::size_t>& args, std::size_t k);
    const Rational& coeff(const std::vector<std::size_t>& args, std::size_t k) const;

    /// Codomain coordinates of P(e_{args[0]}, ..., e_{args[p]}).
    Vec value(const std::vector<std::size_t>& args) const;
    /// Full multilinear evaluation on arbitrary vectors.
    Vec eval(const std::vector<Vec>& args) const;

    /// Degree-0 map as an operator matrix (column j = image of e_j).
    Matrix as_operator() const;

    bool is_zero() const;
    /// First nonzero entry as (argument indices, codomain index), if any.
    std::optional<std::pair<std::vector<std::size_t>, std::size_t>> first_nonzero() const;

    bool operator==(const MultiMap& other) const = default;
    MultiMap operator+(const MultiMap& other) const;
    MultiMap operator-(const MultiMap& other) const;
    MultiMap operator-() const;
    friend MultiMap operator*(const Rational& s, const MultiMap& m);

    /// True when swapping any two of the first p arguments negates the value.
    bool is_skew_in_leading() const;

private:
    std::size_t index(const std::vector<std::size_t>& args, std::size_t k) const;

    std::size_t dim_ = 0, codim_ = 0;
    unsigned degree_ = 0;
    std::vector<Rational> c_;
};

/// Skew-symmetric (in the first p slots) multilinear map; the alternator
/// fixes these. The constructor rejects non-skew tensors.
class Cochain {
public:
    Cochain() = default;
    explicit Cochain(MultiMap tensor);

    static Cochain zero(std::size_t dim, unsigned degree, std::size_t codim = 0);
    static Cochain from_operator(const Matrix& op);
    /// Bilinear map from structure constants: table[i][j] = coordinates of
    /// the product of e_i and e_j.
    static Cochain from_bilinear(const std::vector<std::vector<Vec>>& table);

    const MultiMap& tensor() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    std::size_t codim() const { return m_.codim(); }
    unsigned degree() const { return m_.degree(); }

    Vec value(const std::vector<std::size_t>& args) const { return m_.value(args); }
    Vec eval(const std::vector<Vec>& args) const { return m_.eval(args); }
    bool is_zero() const { return m_.is_zero(); }

    bool operator==(const Cochain& other) const = default;
    Cochain operator+(const Cochain& other) const { return Cochain(m_ + other.m_); }
    Cochain operator-(const Cochain& other) const { return Cochain(m_ - other.m_); }
    Cochain operator-() const { return Cochain(-m_); }
    friend Cochain operator*(const Rational& s, const Cochain& c) { return Cochain(s * c.m_); }

private:
    MultiMap m_;
};

/// Circle product P o Q of degree p+q: the signed sum over insertions of Q
/// into one argument slot of P, with sign (-1)^((i-1)q) for slot i.
MultiMap compose_circle(const MultiMap& P, const MultiMap& Q);

/// [P,Q]^G = P o Q - (-1)^(pq) Q o P.
MultiMap gerstenhaber_bracket(const MultiMap& P, const MultiMap& Q);

/// Skew-symmetrization over the first p arguments, normalized by 1/p!;
/// a projection (applying it twice changes nothing).
Cochain alternator(const MultiMap& P);

/// P <> Q = ((p+q)!/(p!q!)) * alternator(P o Q).
Cochain diamond(const Cochain& P, const Cochain& Q);

/// Graded bracket [P,Q]^C = ((p+q)!/(p!q!)) * alternator([P,Q]^G)
///               = P <> Q - (-1)^(pq) Q <> P.
Cochain c_bracket(const Cochain& P, const Cochain& Q);

/// Throws resource_error when dim or the resulting cochain degree is past
/// the desk-scale limits above.
void enforce_guardrails(std::size_t dim, unsigned result_degree);

/// Calls f for every index tuple in [0,n)^k, in lexicographic order.
void for_each_tuple(std::size_t n, std::size_t k,
                    const std::function<void(const std::vector<std::size_t>&)>& f);

/// Parity sign of a permutation given as an index vector.
int permutation_sign(const std::vector<std::size_t>& perm);

std::string format_entry_witness(const std::vector<std::size_t>& args, std::size_t k,
                                 const Rational& value);

} // namespace prelie
