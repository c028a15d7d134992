#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qelliptic {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Canonical form is maintained by the backing type:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
using BigRational = boost::multiprecision::cpp_rational;

/// Builds a rational from a possibly non-canonical numerator/denominator pair.
/// The sign is moved to the numerator before construction.
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRational(std::move(num), std::move(den));
}

/// Parses "num", "num/den" or "-num/den" with optional surrounding whitespace.
inline BigRational rational_from_string(std::string_view text) {
    const auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    const std::string_view t = strip(text);
    if (t.empty()) {
        throw std::invalid_argument("rational_from_string: empty string");
    }
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(BigInt(std::string(t)));
    }
    BigInt num{std::string(strip(t.substr(0, slash)))};
    BigInt den{std::string(strip(t.substr(slash + 1)))};
    return make_rational(std::move(num), std::move(den));
}

/// Formats as "num/den", always including the denominator ("5/1", "-24/1").
inline std::string fraction_string(const BigRational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const BigRational& r) {
    return r.convert_to<double>();
}

}  // namespace qelliptic
