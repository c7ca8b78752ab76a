#pragma once

#include <vector>

#include "jensenlab/ball.hpp"

namespace jensenlab {

// Gauss-Legendre rule on [-1, 1] with certified node/weight enclosures
// (interval-Newton verified roots of P_n).
struct GaussLegendreRule {
    unsigned n = 0;
    Prec prec = 0;
    std::vector<Ball> nodes;
    std::vector<Ball> weights;
};

// Cached by (n, prec).
const GaussLegendreRule& gauss_legendre_rule(unsigned n, Prec prec);

// Error bound for the n-point rule applied to f on [a,b], where f is
// analytic on the Bernstein ellipse E_rho of [a,b] with |f| <= M there:
//   |I - I_n| <= (b-a)/2 * 8 M rho^(-2n) / (1 - 1/rho).
// (From |a_k| <= 2 M rho^(-k) for Chebyshev coefficients plus exactness of
// the rule up to degree 2n-1 and positivity of the weights.)
Ball gauss_legendre_error_bound(const Ball& M, const Rat& rho, unsigned n,
                                const Ball& halfwidth, Prec prec);

// Smallest node count (rounded up to a multiple of 32, for rule reuse) whose
// error bound drops below 2^target_exp, given log2 of the sup bound M.
unsigned gauss_legendre_node_count(long log2_M, const Rat& rho, long target_exp);

}  // namespace jensenlab
