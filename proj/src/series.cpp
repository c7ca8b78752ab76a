#include "jensenlab/series.hpp"

#include <algorithm>

namespace jensenlab {

BallSeries::BallSeries(std::size_t len, Prec prec)
    : c_(len, Ball::from_long(0, prec)), prec_(prec) {
    if (len == 0) throw DomainError("BallSeries: empty series");
}

BallSeries BallSeries::operator-() const {
    BallSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

BallSeries operator+(const BallSeries& a, const BallSeries& b) {
    std::size_t n = std::min(a.length(), b.length());
    BallSeries r(n, std::max(a.prec_, b.prec_));
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

BallSeries operator-(const BallSeries& a, const BallSeries& b) {
    std::size_t n = std::min(a.length(), b.length());
    BallSeries r(n, std::max(a.prec_, b.prec_));
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

BallSeries operator*(const BallSeries& a, const BallSeries& b) {
    std::size_t n = std::min(a.length(), b.length());
    BallSeries r(n, std::max(a.prec_, b.prec_));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n && j < b.length(); ++j)
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
}

BallSeries BallSeries::scale(const Ball& s) const {
    BallSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
}

BallSeries BallSeries::compose_scale(const Ball& s) const {
    BallSeries r = *this;
    Ball p = Ball::from_long(1, prec_);
    for (std::size_t j = 1; j < r.length(); ++j) {
        p = p * s;
        r.c_[j] = r.c_[j] * p;
    }
    return r;
}

BallSeries series_exp(const BallSeries& g) {
    std::size_t n = g.length();
    Prec p = g.prec();
    BallSeries f(n, p);
    f[0] = exp(g[0]);
    // n f_n = sum_{k=1..n} k g_k f_{n-k}
    for (std::size_t m = 1; m < n; ++m) {
        Ball acc = Ball::from_long(0, p);
        for (std::size_t k = 1; k <= m; ++k)
            acc = acc + g[k].mul_int(Int(static_cast<long>(k))) * f[m - k];
        f[m] = acc.div_int(Int(static_cast<long>(m)));
    }
    return f;
}

BallSeries series_log(const BallSeries& a) {
    if (a[0].sign() != Sign::Positive)
        throw DomainError("series_log: constant term must be positive");
    std::size_t n = a.length();
    Prec p = a.prec();
    BallSeries g(n, p);
    g[0] = log(a[0]);
    // a_m = sum_{k=1..m} (k/m) g_k a_{m-k}  =>  solve for g_m
    for (std::size_t m = 1; m < n; ++m) {
        Ball acc = a[m];
        for (std::size_t k = 1; k < m; ++k)
            acc = acc - g[k].mul_int(Int(static_cast<long>(k))) * a[m - k]
                            .div_int(Int(static_cast<long>(m)));
        g[m] = acc / a[0];
    }
    return g;
}

BallSeries series_recip(const BallSeries& a) {
    if (a[0].sign() == Sign::ZeroStraddling)
        throw DomainError("series_recip: constant term must exclude zero");
    std::size_t n = a.length();
    Prec p = a.prec();
    BallSeries b(n, p);
    b[0] = Ball::from_long(1, p) / a[0];
    for (std::size_t m = 1; m < n; ++m) {
        Ball acc = Ball::from_long(0, p);
        for (std::size_t k = 1; k <= m; ++k) acc = acc + a[k] * b[m - k];
        b[m] = -(acc / a[0]);
    }
    return b;
}

BallSeries series_log_linear(const Ball& a, std::size_t len, Prec prec) {
    if (a.sign() != Sign::Positive)
        throw DomainError("series_log_linear: a must be positive");
    BallSeries r(len, prec);
    r[0] = log(a, prec);
    // log(a+t) = log a + sum_{j>=1} (-1)^(j+1) t^j / (j a^j)
    Ball inv_a = Ball::from_long(1, prec) / a;
    Ball pw = Ball::from_long(1, prec);
    for (std::size_t j = 1; j < len; ++j) {
        pw = pw * inv_a;
        Ball term = pw.div_int(Int(static_cast<long>(j)));
        r[j] = (j % 2 == 1) ? term : -term;
    }
    return r;
}

BallSeries series_recip_linear_pow(const Ball& a, unsigned long m,
                                   std::size_t len, Prec prec) {
    if (a.sign() == Sign::ZeroStraddling)
        throw DomainError("series_recip_linear_pow: a must exclude zero");
    if (m == 0) throw DomainError("series_recip_linear_pow: m must be >= 1");
    // (a+t)^-m = sum_j (-1)^j C(m+j-1, j) a^(-m-j) t^j
    BallSeries r(len, prec);
    Ball inv_a = Ball::from_long(1, prec) / a;
    Ball pw = Ball::from_long(1, prec);
    for (unsigned long k = 0; k < m; ++k) pw = pw * inv_a;  // a^-m
    for (std::size_t j = 0; j < len; ++j) {
        Ball t = pw.mul_int(binomial(m + j - 1, j));
        r[j] = (j % 2 == 0) ? t : -t;
        pw = pw * inv_a;
    }
    return r;
}

BallSeries series_exp_linear(const Ball& lambda, std::size_t len, Prec prec) {
    BallSeries r(len, prec);
    r[0] = Ball::from_long(1, prec);
    for (std::size_t j = 1; j < len; ++j)
        r[j] = (r[j - 1] * lambda).div_int(Int(static_cast<long>(j)));
    return r;
}

}  // namespace jensenlab
