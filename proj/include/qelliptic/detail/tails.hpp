#pragma once

namespace qelliptic::detail {

/// sum_{j>=0} (n0 + j) rho^j for 0 < rho < 1: the closed form used to certify
/// tails of geometric series with a linear frequency weight.
inline double linear_weighted_tail(double n0, double rho) {
    return n0 / (1.0 - rho) + rho / ((1.0 - rho) * (1.0 - rho));
}

}  // namespace qelliptic::detail
