#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qelliptic/qseries.hpp"
#include "qelliptic/rational.hpp"

namespace qelliptic {

/// sigma_s(n) = sum of d^s over the divisors d of n, by direct enumeration
/// of divisor pairs up to sqrt(n).
inline BigInt divisor_power_sum(unsigned s, unsigned long n) {
    if (n == 0) {
        throw std::domain_error("divisor_power_sum: undefined for n = 0");
    }
    const auto powed = [s](unsigned long d) {
        BigInt acc = 1;
        for (unsigned i = 0; i < s; ++i) acc *= d;
        return acc;
    };
    BigInt total = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += powed(d);
        const unsigned long e = n / d;
        if (e != d) total += powed(e);
    }
    return total;
}

/// sum_{n>=1} n^s q^n / (1 - q^n), expanded exactly: the q^k coefficient is
/// sigma_s(k). Computed by the geometric rewrite sum_{n,m} n^s q^{nm}.
inline QSeries lambert_series(unsigned s, std::size_t order) {
    std::vector<BigInt> acc(order + 1);
    for (unsigned long n = 1; n <= order; ++n) {
        BigInt npow = 1;
        for (unsigned i = 0; i < s; ++i) npow *= n;
        for (unsigned long k = n; k <= order; k += n) {
            acc[k] += npow;
        }
    }
    std::vector<BigRational> v(order + 1);
    for (std::size_t k = 0; k <= order; ++k) v[k] = BigRational(acc[k]);
    return QSeries(std::move(v));
}

enum class Eisenstein { P, Q, R };

/// Ramanujan's normalized Eisenstein series:
///   P = 1 - 24 sum sigma_1(k) q^k
///   Q = 1 + 240 sum sigma_3(k) q^k
///   R = 1 - 504 sum sigma_5(k) q^k
inline QSeries eisenstein_series(Eisenstein kind, std::size_t order) {
    switch (kind) {
        case Eisenstein::P:
            return QSeries::constant(BigRational(1), order) - BigRational(24) * lambert_series(1, order);
        case Eisenstein::Q:
            return QSeries::constant(BigRational(1), order) + BigRational(240) * lambert_series(3, order);
        case Eisenstein::R:
            return QSeries::constant(BigRational(1), order) - BigRational(504) * lambert_series(5, order);
    }
    throw std::invalid_argument("eisenstein_series: unknown kind");
}

struct OdeResiduals {
    QSeries for_p;  ///< q P' - (P^2 - Q)/12
    QSeries for_q;  ///< q Q' - (P Q - R)/3
    QSeries for_r;  ///< q R' - (P R - Q^2)/2
};

/// Residuals of the Eisenstein differential system. All three are the zero
/// series at every truncation order.
inline OdeResiduals ode_residuals(std::size_t order) {
    const QSeries p = eisenstein_series(Eisenstein::P, order);
    const QSeries q = eisenstein_series(Eisenstein::Q, order);
    const QSeries r = eisenstein_series(Eisenstein::R, order);
    const BigRational third(1, 3), half(1, 2), twelfth(1, 12);
    return OdeResiduals{
        q_derivative(p) - twelfth * (p * p - q),
        q_derivative(q) - third * (p * q - r),
        q_derivative(r) - half * (p * r - q * q),
    };
}

}  // namespace qelliptic
