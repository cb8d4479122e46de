#ifndef ORBITSPACE_RATIONAL_HPP
#define ORBITSPACE_RATIONAL_HPP

// Exact rational scalars and vectors. Everything downstream assumes these;
// there is no floating point anywhere in the library.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "orbitspace/errors.hpp"

namespace orbitspace {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

struct MatrixLess {
    bool operator()(const Matrix& a, const Matrix& b) const {
        VecLess less;
        const std::size_t n = a.size() < b.size() ? a.size() : b.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return a.size() < b.size();
    }
};

inline bool is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::rank_mismatch, "dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::rank_mismatch, "sum of vectors of different length");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::rank_mismatch, "difference of vectors of different length");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec negate(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec scale(const Vec& a, const Rational& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

// Scale a nonzero rational vector to the unique primitive integer vector on
// the same ray (clear denominators, divide by the gcd of the entries). The
// zero vector is returned unchanged.
inline Vec primitive(const Vec& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (is_zero(v)) return v;
    Integer den_lcm = 1;
    for (const auto& x : v) den_lcm = lcm(den_lcm, denominator(x));
    Integer num_gcd = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (den_lcm / denominator(v[i]));
        num_gcd = gcd(num_gcd, ints[i]);
    }
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / num_gcd);
    return r;
}

inline bool is_integral(const Vec& v) {
    for (const auto& x : v) {
        if (denominator(x) != 1) return false;
    }
    return true;
}

// Strict "p" or "p/q" with a positive decimal denominator. Anything else,
// including decimal floats, is rejected: the interface is exact.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw Error(ErrorCode::malformed_number, "cannot parse rational '" + text + "'"); };
    if (text.empty()) fail();
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++digits; }
    if (digits == 0) fail();
    const std::size_t skip_plus = text[0] == '+' ? 1 : 0; // gmp rejects a leading '+'
    if (i == text.size()) return Rational(Integer(text.substr(skip_plus)));
    if (text[i] != '/') fail();
    std::string num = text.substr(skip_plus, i - skip_plus);
    std::string den = text.substr(i + 1);
    if (den.empty()) fail();
    for (char c : den) {
        if (c < '0' || c > '9') fail();
    }
    Integer d(den);
    if (d == 0) fail();
    return Rational(Integer(num), d);
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    s += ")";
    return s;
}

} // namespace orbitspace

#endif // ORBITSPACE_RATIONAL_HPP
