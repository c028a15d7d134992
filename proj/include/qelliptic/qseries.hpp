#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qelliptic/rational.hpp"

namespace qelliptic {

/// Truncated formal power series in q over the rationals:
///
///   sum_{k=0}^{order} coeff[k] q^k + O(q^{order+1})
///
/// Coefficient storage is dense (index = power). Values are immutable after
/// construction; every operation returns a new series. Binary operations
/// truncate to the shorter operand and never extend a series silently.
class QSeries {
public:
    /// Zero series of the given truncation order.
    explicit QSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes coefficients by value; order = coeffs.size() - 1.
    explicit QSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("QSeries: coefficient vector must be non-empty");
        }
    }

    static QSeries zero(std::size_t order) { return QSeries(order); }

    static QSeries constant(const BigRational& c, std::size_t order) {
        std::vector<BigRational> v(order + 1);
        v[0] = c;
        return QSeries(std::move(v));
    }

    /// c * q^power, truncated to `order` (the monomial vanishes if power > order).
    static QSeries monomial(const BigRational& c, std::size_t power, std::size_t order) {
        std::vector<BigRational> v(order + 1);
        if (power <= order) {
            v[power] = c;
        }
        return QSeries(std::move(v));
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const BigRational& operator[](std::size_t k) const { return coeffs_[k]; }

    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<BigRational> coeffs_;
};

/// Restriction to a smaller (or equal) truncation order.
inline QSeries truncated(const QSeries& a, std::size_t order) {
    if (order > a.order()) {
        throw std::invalid_argument("truncated: cannot extend a series");
    }
    std::vector<BigRational> v(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return QSeries(std::move(v));
}

inline QSeries operator+(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] + b[k];
    return QSeries(std::move(v));
}

inline QSeries operator-(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRational> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v[k] = a[k] - b[k];
    return QSeries(std::move(v));
}

inline QSeries operator-(const QSeries& a) {
    std::vector<BigRational> v(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) v[k] = -a[k];
    return QSeries(std::move(v));
}

inline QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRational> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            v[i + j] += a[i] * b[j];
        }
    }
    return QSeries(std::move(v));
}

inline QSeries operator*(const QSeries& a, const BigRational& s) {
    std::vector<BigRational> v(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) v[k] = a[k] * s;
    return QSeries(std::move(v));
}

inline QSeries operator*(const BigRational& s, const QSeries& a) { return a * s; }

/// a^m truncated to a's order; pow(a, 0) is the constant series 1.
inline QSeries pow(const QSeries& a, unsigned long m) {
    QSeries result = QSeries::constant(BigRational(1), a.order());
    QSeries base = a;
    while (m > 0) {
        if (m & 1UL) result = result * base;
        m >>= 1UL;
        if (m > 0) base = base * base;
    }
    return result;
}

/// Multiplicative inverse: a * inverse(a) = 1 + O(q^{order+1}).
/// Requires a nonzero constant term.
inline QSeries inverse(const QSeries& a) {
    if (a[0] == 0) {
        throw std::domain_error("non-unit series: inversion requires nonzero constant term");
    }
    const std::size_t n = a.order();
    std::vector<BigRational> v(n + 1);
    v[0] = BigRational(1) / a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] == 0) continue;
            acc += a[j] * v[k - j];
        }
        v[k] = -acc / a[0];
    }
    return QSeries(std::move(v));
}

/// The operator q d/dq: coefficient k maps to k * coeff[k]. Order-preserving,
/// so the top coefficient stays valid under truncation.
inline QSeries q_derivative(const QSeries& a) {
    std::vector<BigRational> v(a.order() + 1);
    for (std::size_t k = 1; k <= a.order(); ++k) v[k] = BigRational(k) * a[k];
    return QSeries(std::move(v));
}

/// sum_k outer[k] * inner^k truncated to inner's order. Exact because inner
/// has positive valuation, so inner^k only feeds powers >= k.
inline QSeries compose(std::span<const BigRational> outer, const QSeries& inner) {
    if (inner[0] != 0) {
        throw std::domain_error("composition requires positive valuation of the inner series");
    }
    const std::size_t n = inner.order();
    if (outer.size() < n + 1) {
        throw std::invalid_argument("compose: outer coefficient sequence shorter than order+1");
    }
    QSeries result = QSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        result = result * inner + QSeries::constant(outer[k], n);
    }
    return result;
}

/// Horner evaluation in binary64 at a numeric nome.
inline double evaluate(const QSeries& a, double q) {
    double acc = 0.0;
    for (std::size_t k = a.order() + 1; k-- > 0;) {
        acc = acc * q + to_double(a[k]);
    }
    return acc;
}

/// Series text form: one line per coefficient, "k<TAB>num/den", powers ascending.
inline std::string to_text(const QSeries& a) {
    std::string out;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        out += std::to_string(k);
        out += '\t';
        out += fraction_string(a[k]);
        out += '\n';
    }
    return out;
}

}  // namespace qelliptic
