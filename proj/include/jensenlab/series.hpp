#pragma once

#include <vector>

#include "jensenlab/ball.hpp"

namespace jensenlab {

// Truncated Taylor series with ball coefficients: c[j] encloses the j-th
// Taylor coefficient of some analytic function. Every operation here is an
// exact finite recurrence on coefficients (the n-th output coefficient
// depends only on input coefficients 0..n), so no analytic truncation error
// enters; only ball rounding propagates.
class BallSeries {
  public:
    BallSeries(std::size_t len, Prec prec);

    std::size_t length() const { return c_.size(); }
    Prec prec() const { return prec_; }
    Ball& operator[](std::size_t i) { return c_[i]; }
    const Ball& operator[](std::size_t i) const { return c_[i]; }

    BallSeries operator-() const;
    friend BallSeries operator+(const BallSeries& a, const BallSeries& b);
    friend BallSeries operator-(const BallSeries& a, const BallSeries& b);
    // truncated convolution, length = min of lengths
    friend BallSeries operator*(const BallSeries& a, const BallSeries& b);

    BallSeries scale(const Ball& s) const;
    // substitute t -> s*t (coefficient j gets multiplied by s^j)
    BallSeries compose_scale(const Ball& s) const;

  private:
    std::vector<Ball> c_;
    Prec prec_;
};

// exp of a series (coefficients of exp(g) from those of g).
BallSeries series_exp(const BallSeries& g);
// log of a series; g[0] must be strictly positive.
BallSeries series_log(const BallSeries& g);
// reciprocal; g[0] must exclude zero.
BallSeries series_recip(const BallSeries& g);

// Closed forms used by the special-function jets (a > 0 where required):
// coefficients of log(a + t)
BallSeries series_log_linear(const Ball& a, std::size_t len, Prec prec);
// coefficients of (a + t)^(-m), m >= 1
BallSeries series_recip_linear_pow(const Ball& a, unsigned long m,
                                   std::size_t len, Prec prec);
// coefficients of exp(lambda * t)
BallSeries series_exp_linear(const Ball& lambda, std::size_t len, Prec prec);

}  // namespace jensenlab
