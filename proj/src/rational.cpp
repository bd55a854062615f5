#include "prelie/rational.hpp"

#include "prelie/errors.hpp"

#include <cctype>
#include <sstream>

namespace prelie {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw input_error("not a rational: '" + text + "'");
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_token(den) || den[0] == '-' || den[0] == '+')
            throw input_error("not a rational: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw input_error("zero denominator: '" + text + "'");
        Rational q(mpz_class(num), d);
        q.canonicalize();
        return q;
    }
    return Rational(mpz_class(num));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Vec operator-(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

std::string format_vector(const Vec& v, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const std::string label = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
        if (c == 1)
            os << label;
        else
            os << to_string(c) << "*" << label;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace prelie
