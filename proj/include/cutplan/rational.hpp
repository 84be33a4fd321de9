#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutplan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Point = std::vector<Rational>;

inline int sign(const Rational& x) { return x.sign(); }

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("rational_from_double: non-finite input");
    }
    return Rational(x);
}

// Nearest integer, ties to even.
inline Integer round_nearest_even(const Rational& x) {
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r < 0) {
        q -= 1;
        r += den;
    }
    // x = q + r/den with 0 <= r < den
    Integer twice = r * 2;
    if (twice > den || (twice == den && boost::multiprecision::bit_test(q, 0))) {
        q += 1;
    }
    return q;
}

// Best approximation of x by n / 2^b with b <= beta. Rounding to the finest
// grid and reducing yields the minimizer with the smallest denominator
// bitsize among minimizers (ties broken to even numerators, which halves the
// denominator).
inline Rational dyadic_approx(double x, unsigned beta) {
    if (beta < 1) {
        throw std::domain_error("dyadic_approx: beta must be >= 1");
    }
    Rational exact = rational_from_double(x);
    Integer scale = Integer(1) << beta;
    Integer n = round_nearest_even(exact * scale);
    return Rational(n, scale);
}

inline Rational dyadic_approx(const Rational& x, unsigned beta) {
    Integer scale = Integer(1) << beta;
    Integer n = round_nearest_even(x * scale);
    return Rational(n, scale);
}

// Smallest k/2^14 with (k/2^14)^2 >= s, for s >= 0. Used to bound Euclidean
// norms from above by a dyadic rational.
inline Rational dyadic_sqrt_upper(const Rational& s) {
    if (s.sign() < 0) {
        throw std::domain_error("dyadic_sqrt_upper: negative input");
    }
    if (s.is_zero()) return Rational(0);
    const unsigned kBits = 14;
    // want least k with k^2 * den >= num * 2^28
    Integer num = boost::multiprecision::numerator(s) << (2 * kBits);
    Integer den = boost::multiprecision::denominator(s);
    Integer target = num / den + (num % den == 0 ? 0 : 1);  // ceil(num*2^28/den)
    Integer k = boost::multiprecision::sqrt(target);
    while (k * k < target) ++k;
    while (k > 0 && (k - 1) * (k - 1) >= target) --k;
    return Rational(k, Integer(1) << kBits);
}

inline std::string rational_to_string(const Rational& x) {
    std::string s = boost::multiprecision::numerator(x).str();
    Integer den = boost::multiprecision::denominator(x);
    if (den != 1) {
        s += "/";
        s += den.str();
    }
    return s;
}

// Accepts "num", "num/den" and plain decimals like "-1.25" (parsed exactly).
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational_from_string: bad denominator");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        return Rational(Integer(s));
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    bool neg = !digits.empty() && digits.front() == '-';
    if (neg) digits.erase(digits.begin());
    // drop leading zeros: cpp_int would read them as an octal prefix
    std::size_t first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);
    Integer num(digits);
    if (neg) num = -num;
    Integer den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num, den);
}

inline Rational sq_distance(const Point& a, const Point& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace cutplan
