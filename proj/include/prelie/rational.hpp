#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace prelie {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// lowest terms with positive denominator as long as every value entering
// arithmetic is canonical, which parse_rational guarantees.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// Parses "p", "-p", or "p/q" (arbitrary precision). Throws input_error
/// on anything else, including q == 0.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with
/// q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& value);

bool is_zero(const Vec& v);
/// i-th standard basis vector of dimension n.
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec operator-(const Vec& v);

/// Renders a vector as a combination of basis labels, e.g. "-e1 + 1/2*e3";
/// "0" for the zero vector. Labels default to e1..en.
std::string format_vector(const Vec& v, const std::vector<std::string>& labels = {});

} // namespace prelie
