#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qelliptic/qseries.hpp"
#include "qelliptic/rational.hpp"

namespace qelliptic {

/// Finite trigonometric combination with q-series coefficients:
///
///   cot2 * cot^2(theta/2) + sum_{k=0}^{K} cos_coeffs[k] * cos(k theta)
///
/// (k = 0 is the constant harmonic). All member series share one truncation
/// order. This is the exact workspace for verifying the squared-cotangent
/// identity harmonic by harmonic.
struct TrigQSeries {
    QSeries cot2;
    std::vector<QSeries> cos_coeffs;

    std::size_t order() const { return cot2.order(); }
    std::size_t harmonic_bound() const { return cos_coeffs.size() - 1; }

    bool is_zero() const {
        if (!cot2.is_zero()) return false;
        for (const auto& c : cos_coeffs) {
            if (!c.is_zero()) return false;
        }
        return true;
    }
};

inline TrigQSeries operator-(const TrigQSeries& a, const TrigQSeries& b) {
    if (a.harmonic_bound() != b.harmonic_bound()) {
        throw std::invalid_argument("TrigQSeries subtraction: harmonic bounds differ");
    }
    TrigQSeries out{a.cot2 - b.cot2, {}};
    out.cos_coeffs.reserve(a.cos_coeffs.size());
    for (std::size_t k = 0; k < a.cos_coeffs.size(); ++k) {
        out.cos_coeffs.push_back(a.cos_coeffs[k] - b.cos_coeffs[k]);
    }
    return out;
}

/// cot(theta/2) sin(n theta) as a cosine polynomial:
///
///   1 + cos(n theta) + 2 sum_{k=1}^{n-1} cos(k theta)
///
/// Returned as coefficients indexed by harmonic, length n+1.
inline std::vector<BigRational> cot_sin_expand(unsigned n) {
    if (n == 0) {
        throw std::domain_error("cot_sin_expand: undefined harmonic n = 0");
    }
    std::vector<BigRational> c(n + 1);
    c[0] = 1;
    for (unsigned k = 1; k < n; ++k) c[k] = 2;
    c[n] += 1;  // n = 1 collapses to 1 + cos(theta)
    return c;
}

enum class Eq1Side { lhs, rhs };

namespace detail {

/// a_n = q^n/(1-q^n) = sum_{m>=1} q^{nm}: indicator of multiples of n.
inline QSeries lambert_a(unsigned n, std::size_t order) {
    std::vector<BigRational> v(order + 1);
    for (std::size_t k = n; k <= order; k += n) v[k] = 1;
    return QSeries(std::move(v));
}

/// b_n = q^n/(1-q^n)^2 = sum_{m>=1} m q^{nm}.
inline QSeries lambert_b(unsigned n, std::size_t order) {
    std::vector<BigRational> v(order + 1);
    std::size_t m = 1;
    for (std::size_t k = n; k <= order; k += n, ++m) v[k] = BigRational(m);
    return QSeries(std::move(v));
}

}  // namespace detail

/// Expands one side of the squared-cotangent identity in the basis
/// {cot^2(theta/2)} u {cos k theta : 0 <= k <= 2N}, exact through q-order N.
///
/// LHS: (cot(theta/2)/4 + sum a_n sin n theta)^2, via the cot*sin expansion
/// for cross terms and sin m sin n = (cos(m-n) - cos(m+n))/2.
/// RHS: (cot(theta/2)/4)^2 + sum b_n cos n theta + (1/2) sum n a_n (1 - cos n theta).
inline TrigQSeries expand_eq1_side(Eq1Side side, std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("expand_eq1_side: order must be >= 1");
    }
    const std::size_t n_max = order;        // terms beyond contribute only O(q^{N+1})
    const std::size_t k_max = 2 * order;    // harmonic bound K = 2N
    TrigQSeries out{QSeries::constant(BigRational(1, 16), order),
                    std::vector<QSeries>(k_max + 1, QSeries::zero(order))};
    const BigRational half(1, 2);

    if (side == Eq1Side::rhs) {
        for (unsigned n = 1; n <= n_max; ++n) {
            const QSeries a = detail::lambert_a(n, order);
            const QSeries b = detail::lambert_b(n, order);
            const QSeries c = BigRational(n) * a;
            out.cos_coeffs[0] = out.cos_coeffs[0] + half * c;
            out.cos_coeffs[n] = out.cos_coeffs[n] + b - half * c;
        }
        return out;
    }

    std::vector<QSeries> a;
    a.reserve(n_max + 1);
    a.push_back(QSeries::zero(order));
    for (unsigned n = 1; n <= n_max; ++n) a.push_back(detail::lambert_a(n, order));

    // cross term: 2 * (cot/4) * sum a_n sin n theta = (1/2) sum a_n cot(theta/2) sin(n theta)
    for (unsigned n = 1; n <= n_max; ++n) {
        const QSeries scaled = half * a[n];
        const auto harmonics = cot_sin_expand(n);
        for (unsigned k = 0; k <= n; ++k) {
            if (harmonics[k] == 0) continue;
            out.cos_coeffs[k] = out.cos_coeffs[k] + harmonics[k] * scaled;
        }
    }

    // square term: sum_{m,n} a_m a_n (cos(m-n) - cos(m+n))/2; pairs with
    // m+n > N have valuation beyond the truncation and are skipped.
    for (unsigned m = 1; m <= n_max; ++m) {
        for (unsigned n = m; m + n <= n_max; ++n) {
            const QSeries prod = a[m] * a[n];
            if (m == n) {
                out.cos_coeffs[0] = out.cos_coeffs[0] + half * prod;
                out.cos_coeffs[2 * n] = out.cos_coeffs[2 * n] - half * prod;
            } else {
                out.cos_coeffs[n - m] = out.cos_coeffs[n - m] + prod;
                out.cos_coeffs[m + n] = out.cos_coeffs[m + n] - prod;
            }
        }
    }
    return out;
}

/// LHS - RHS, componentwise. The identity holds iff every component is the
/// zero series through the truncation order.
inline TrigQSeries eq1_residual(std::size_t order) {
    return expand_eq1_side(Eq1Side::lhs, order) - expand_eq1_side(Eq1Side::rhs, order);
}

/// Numeric evaluation at a real nome and angle: substitutes cot^2(theta/2)
/// and cos(k theta) and sums the q-powers.
inline double evaluate(const TrigQSeries& t, double q, double theta) {
    const double c = std::cos(theta / 2.0) / std::sin(theta / 2.0);
    double acc = evaluate(t.cot2, q) * c * c;
    for (std::size_t k = 0; k < t.cos_coeffs.size(); ++k) {
        acc += evaluate(t.cos_coeffs[k], q) * std::cos(static_cast<double>(k) * theta);
    }
    return acc;
}

}  // namespace qelliptic
