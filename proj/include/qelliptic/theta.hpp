#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "qelliptic/detail/tails.hpp"
#include "qelliptic/qseries.hpp"
#include "qelliptic/rational.hpp"

namespace qelliptic {

/// Numeric evaluation context tying together the nome q, the modular
/// parameter tau with q = exp(2 pi i tau), and the decay parameter y > 0
/// with q = e^{-y}.
struct NomeParams {
    double q;
    std::complex<double> tau;
    double y;

    static NomeParams from_q(double q) {
        if (!(q > 0.0 && q < 1.0)) {
            throw std::domain_error("nome out of range: q must lie in (0,1)");
        }
        const double y = -std::log(q);
        return NomeParams{q, {0.0, y / (2.0 * std::numbers::pi)}, y};
    }

    static NomeParams from_y(double y) {
        if (!(y > 0.0)) {
            throw std::domain_error("invalid decay parameter: y must be positive");
        }
        return NomeParams{std::exp(-y), {0.0, y / (2.0 * std::numbers::pi)}, y};
    }
};

enum class ThetaKind { theta3, theta2num, cubic_a, cubic_cnum };

namespace detail {

inline void check_nome(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::domain_error("nome out of range: q must lie in (0,1)");
    }
}

inline void check_tol(double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("invalid tolerance: tol must be positive");
    }
}

/// One-dimensional theta-type sum 1 + sum_{n>=1} weight * (+-) q^{e(n)} with
/// convex integer exponents (weight 2 for sums over Z folded by symmetry,
/// 1 for one-sided sums); `alternating` flips signs for the theta4 variant.
/// Stops when the term is below tol/10 and the geometric tail bound
/// (term ratio q^{e(n+1)-e(n)}, nonincreasing in n) certifies remainder < tol.
template <typename ExpFn>
double theta_sum_1d(double q, double tol, ExpFn exponent, double weight, bool alternating) {
    double acc = 1.0;  // n = 0 term (exponent 0)
    for (long n = 1;; ++n) {
        const double term = weight * std::pow(q, static_cast<double>(exponent(n)));
        acc += (alternating && (n & 1L)) ? -term : term;
        const double next = weight * std::pow(q, static_cast<double>(exponent(n + 1)));
        const double ratio = std::pow(q, static_cast<double>(exponent(n + 2) - exponent(n + 1)));
        const double tail = next / (1.0 - ratio);
        if (next < tol / 10.0 && tail < tol) break;
    }
    return acc;
}

struct LatticeTerm {
    std::int64_t exponent;
    int m;
    int n;
};

/// Collects lattice terms with exponent(m,n) over max(|m|,|n|) <= radius,
/// sorted by increasing exponent, ties lexicographic in (m,n): the fixed
/// summation order that makes numeric results reproducible bit for bit.
template <typename ExpFn>
std::vector<LatticeTerm> collect_lattice_terms(int radius, ExpFn exponent) {
    std::vector<LatticeTerm> terms;
    terms.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
    for (int m = -radius; m <= radius; ++m) {
        for (int n = -radius; n <= radius; ++n) {
            terms.push_back({exponent(m, n), m, n});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const LatticeTerm& a, const LatticeTerm& b) {
        return std::tie(a.exponent, a.m, a.n) < std::tie(b.exponent, b.m, b.n);
    });
    return terms;
}

/// Double sum over the shifted or unshifted hexagonal form. `shift` is 0 for
/// a(q) = sum q^{m^2+mn+n^2} and 1/3 for the numerator sum, whose exponents
/// are m^2+mn+n^2+m+n + 1/3. Positive definiteness gives the shell bound
/// exponent >= (r - shift)^2 / 2 on the max-norm shell r, certifying tails.
inline double cubic_sum_2d(double q, double tol, double shift) {
    // pick a radius whose shell tail bound is below tol
    int radius = 2;
    for (;; ++radius) {
        const double r_eff = radius + 1 - shift;
        const double s = std::pow(q, radius + 1.0 - shift);
        if (s >= 1.0) continue;
        const double tail =
            8.0 * std::pow(q, r_eff * r_eff / 2.0) * linear_weighted_tail(radius + 1.0, s);
        if (tail < tol) break;
    }
    const bool shifted = shift != 0.0;
    const auto exponent = [shifted](int m, int n) {
        const std::int64_t mm = m, nn = n;
        std::int64_t e = mm * mm + mm * nn + nn * nn;
        if (shifted) e += mm + nn;
        return e;
    };
    const auto terms = collect_lattice_terms(radius, exponent);
    double acc = 0.0;
    for (const auto& t : terms) {
        acc += std::pow(q, static_cast<double>(t.exponent));
    }
    return shifted ? acc * std::pow(q, 1.0 / 3.0) : acc;
}

}  // namespace detail

/// Numeric theta-type lattice sums with rigorously certified truncation:
///   theta3     = sum_{n in Z} q^{n^2}
///   theta2num  = sum_{n in Z} q^{(n+1/2)^2}      = 2 q^{1/4} sum_{k>=0} q^{k^2+k}
///   cubic_a    = sum_{m,n} q^{m^2+mn+n^2}
///   cubic_cnum = sum_{m,n} q^{(m+1/3)^2+(m+1/3)(n+1/3)+(n+1/3)^2}
inline double theta_num(ThetaKind kind, double q, double tol) {
    detail::check_nome(q);
    detail::check_tol(tol);
    switch (kind) {
        case ThetaKind::theta3:
            return detail::theta_sum_1d(
                q, tol, [](long n) { return n * n; }, 2.0, false);
        case ThetaKind::theta2num:
            // sum over Z folds to 2 q^{1/4} sum_{k>=0} q^{k^2+k}
            return 2.0 * std::pow(q, 0.25) *
                   detail::theta_sum_1d(
                       q, tol, [](long n) { return n * (n + 1); }, 1.0, false);
        case ThetaKind::cubic_a:
            return detail::cubic_sum_2d(q, tol, 0.0);
        case ThetaKind::cubic_cnum:
            return detail::cubic_sum_2d(q, tol, 1.0 / 3.0);
    }
    throw std::invalid_argument("theta_num: unknown kind");
}

/// theta4 = sum_{n in Z} (-1)^n q^{n^2}; used to evaluate 1 - x4 without
/// cancellation near the upper end of the nome range.
inline double theta4_num(double q, double tol) {
    detail::check_nome(q);
    detail::check_tol(tol);
    return detail::theta_sum_1d(
        q, tol, [](long n) { return n * n; }, 2.0, true);
}

/// The modulus: level 4 returns (theta2num/theta3)^4, level 3 returns
/// (cubic_cnum/cubic_a)^3. Both lie in (0,1) and increase with q.
inline double x_num(int level, double q, double tol) {
    detail::check_nome(q);
    detail::check_tol(tol);
    const double inner = tol * 1e-2;
    if (level == 4) {
        const double r = theta_num(ThetaKind::theta2num, q, inner) /
                         theta_num(ThetaKind::theta3, q, inner);
        return r * r * r * r;
    }
    if (level == 3) {
        const double r = theta_num(ThetaKind::cubic_cnum, q, inner) /
                         theta_num(ThetaKind::cubic_a, q, inner);
        return r * r * r;
    }
    throw std::invalid_argument("x_num: unknown level");
}

/// 1 - x4(q) evaluated directly as (theta4/theta3)^4 (complement form keeps
/// full relative precision where x4 saturates toward 1 in binary64).
inline double x4_complement_num(double q, double tol) {
    const double inner = tol * 1e-2;
    const double r = theta4_num(q, inner) / theta_num(ThetaKind::theta3, q, inner);
    return r * r * r * r;
}

/// theta3 as an exact q-series: coefficient of q^k counts n with n^2 = k.
inline QSeries theta3_series(std::size_t order) {
    std::vector<BigRational> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) v[n * n] = 2;
    return QSeries(std::move(v));
}

/// theta4 = sum (-1)^n q^{n^2} as an exact q-series.
inline QSeries theta4_series(std::size_t order) {
    std::vector<BigRational> v(order + 1);
    v[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) v[n * n] = (n % 2 == 0) ? 2 : -2;
    return QSeries(std::move(v));
}

/// sum_{k>=0} q^{k^2+k}: the integer-exponent factor of theta2num after
/// pulling out 2 q^{1/4}.
inline QSeries theta2_shifted_series(std::size_t order) {
    std::vector<BigRational> v(order + 1);
    for (std::size_t k = 0; k * k + k <= order; ++k) v[k * k + k] += 1;
    return QSeries(std::move(v));
}

/// a(q) = sum_{m,n} q^{m^2+mn+n^2} by bounded lattice enumeration; the form
/// dominates (m^2+n^2)/2, so |m|,|n| <= sqrt(2 order) suffices.
inline QSeries cubic_a_series(std::size_t order) {
    const long bound = static_cast<long>(std::sqrt(2.0 * static_cast<double>(order))) + 1;
    std::vector<BigRational> v(order + 1);
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            const long e = m * m + m * n + n * n;
            if (e >= 0 && static_cast<std::size_t>(e) <= order) v[e] += 1;
        }
    }
    return QSeries(std::move(v));
}

/// S(q) = sum_{m,n} q^{m^2+mn+n^2+m+n}: the numerator sum of the level-3
/// modulus with the exponent shift 1/3 removed, so q^{1/3} cubic_cnum-cubed
/// becomes the integer-exponent series q S(q)^3. Constant term 3.
inline QSeries cubic_s_shifted_series(std::size_t order) {
    const long bound = static_cast<long>(std::sqrt(2.0 * static_cast<double>(order) + 1.0)) + 2;
    std::vector<BigRational> v(order + 1);
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            const long e = m * m + m * n + n * n + m + n;
            if (e >= 0 && static_cast<std::size_t>(e) <= order) v[e] += 1;
        }
    }
    return QSeries(std::move(v));
}

/// Exact integer-exponent expansions. Only theta3 and cubic_a admit one;
/// the numerator sums carry fractional leading powers.
inline QSeries theta_series(ThetaKind kind, std::size_t order) {
    switch (kind) {
        case ThetaKind::theta3:
            return theta3_series(order);
        case ThetaKind::cubic_a:
            return cubic_a_series(order);
        default:
            throw std::invalid_argument(
                "theta_series: kind has no integer-exponent q-expansion");
    }
}

/// Exact modulus series. Level 4: x4 = 16 q (sum q^{k^2+k})^4 / theta3^4.
/// Level 3: x3 = q S(q)^3 / a(q)^3 (leading term 27 q since S(0) = 3).
/// Division is exact series inversion; order must be >= 1.
inline QSeries x_series(int level, std::size_t order) {
    if (order < 1) {
        throw std::domain_error("x_series: order too small (needs order >= 1)");
    }
    const std::size_t inner_order = order - 1;
    QSeries ratio = QSeries::zero(inner_order);
    if (level == 4) {
        ratio = pow(theta2_shifted_series(inner_order), 4) *
                inverse(pow(theta3_series(inner_order), 4)) * BigRational(16);
    } else if (level == 3) {
        ratio = pow(cubic_s_shifted_series(inner_order), 3) *
                inverse(pow(cubic_a_series(inner_order), 3));
    } else {
        throw std::invalid_argument("x_series: unknown level");
    }
    std::vector<BigRational> v(order + 1);
    for (std::size_t k = 0; k <= inner_order; ++k) v[k + 1] = ratio[k];
    return QSeries(std::move(v));
}

}  // namespace qelliptic
