#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qelliptic/rational.hpp"

namespace qelliptic {

/// Parameters of the Gauss hypergeometric function 2F1(a, b; c; x).
/// c must not be a nonpositive integer.
struct HypParams {
    BigRational a;
    BigRational b;
    BigRational c;
};

/// Raised when direct summation fails to meet the tolerance within the term
/// budget (happens only as x approaches 1, where 2F1 with c = a+b has a
/// logarithmic singularity). Carries the last partial sum and the count.
class SlowConvergence : public std::runtime_error {
public:
    SlowConvergence(double partial, unsigned long terms)
        : std::runtime_error("slow convergence of 2F1 summation after " +
                             std::to_string(terms) + " terms"),
          partial_sum(partial),
          term_count(terms) {}

    double partial_sum;
    unsigned long term_count;
};

/// Direct summation of 2F1 on [0, 1). The series terminates once the current
/// term plus a geometric tail estimate drop below tol; the term ratio is
/// bounded by x once the Pochhammer factor falls under 1.
inline double hyp2f1_num(const HypParams& p, double x, double tol = 1e-13,
                         unsigned long max_terms = 200000) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw std::domain_error("outside disc of convergence: 2F1 summation needs 0 <= x < 1");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("invalid tolerance: tol must be positive");
    }
    const double a = to_double(p.a), b = to_double(p.b), c = to_double(p.c);
    if (x == 0.0) return 1.0;
    // beyond k_safe every Pochhammer factor lies in (0, 1], so term ratios
    // stay below x and the tail after term k is at most |term_k| x / (1 - x)
    const double k_safe =
        std::max({0.0, a * b - a - b, -a, -b, -c}) + 1.0;
    double term = 1.0;
    double sum = 1.0;
    for (unsigned long k = 0; k < max_terms; ++k) {
        const double kk = static_cast<double>(k);
        const double factor = ((a + kk) * (b + kk)) / ((c + kk) * (kk + 1.0));
        term *= factor * x;
        sum += term;
        if (kk >= k_safe && std::abs(term) * x / (1.0 - x) < tol && std::abs(term) < tol) {
            return sum;
        }
    }
    throw SlowConvergence(sum, max_terms);
}

/// Exact Taylor coefficients (a)_k (b)_k / ((c)_k k!), k = 0..order, by the
/// ratio recurrence. Throws if the recurrence hits c + k = 0.
inline std::vector<BigRational> hyp2f1_taylor(const HypParams& p, std::size_t order) {
    std::vector<BigRational> coeffs(order + 1);
    coeffs[0] = 1;
    for (std::size_t k = 0; k + 1 <= order; ++k) {
        const BigRational kk(k);
        if (p.c + kk == 0) {
            throw std::domain_error("pole in parameter recurrence: c + k vanished");
        }
        coeffs[k + 1] =
            coeffs[k] * (p.a + kk) * (p.b + kk) / ((p.c + kk) * (kk + 1));
    }
    return coeffs;
}

}  // namespace qelliptic
