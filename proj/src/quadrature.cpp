#include "jensenlab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace jensenlab {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence, certified.
void legendre_pair(unsigned n, const Ball& x, Ball& pn, Ball& pn_1) {
    Prec p = x.prec();
    Ball p0 = Ball::from_long(1, p);
    Ball p1 = x;
    if (n == 0) {
        pn = p0;
        pn_1 = Ball::from_long(0, p);
        return;
    }
    for (unsigned k = 2; k <= n; ++k) {
        Ball p2 = (x * p1.mul_int(Int(2 * k - 1)) - p0.mul_int(Int(k - 1)))
                      .div_int(Int(k));
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    pn = p1;
    pn_1 = p0;
}

// P_n'(x) = n (P_{n-1}(x) - x P_n(x)) / (1 - x^2), |x| < 1
Ball legendre_deriv(unsigned n, const Ball& x, const Ball& pn, const Ball& pn_1) {
    Ball one = Ball::from_long(1, x.prec());
    return (pn_1 - x * pn).mul_int(Int(n)) / (one - sq(x));
}

// midpoint-only evaluation for the Newton ladder
void legendre_pair_mid(unsigned n, const Mpf& x, Mpf& pn, Mpf& pn_1, Prec wp) {
    Mpf p0(wp), p1(wp), p2(wp), t(wp);
    mpfr_set_ui(p0.get(), 1, MPFR_RNDN);
    mpfr_set(p1.get(), x.get(), MPFR_RNDN);
    if (n == 0) {
        pn = p0;
        mpfr_set_zero(pn_1.get(), 1);
        return;
    }
    for (unsigned k = 2; k <= n; ++k) {
        mpfr_mul_ui(t.get(), p1.get(), 2 * k - 1, MPFR_RNDN);
        mpfr_mul(t.get(), t.get(), x.get(), MPFR_RNDN);
        mpfr_mul_ui(p2.get(), p0.get(), k - 1, MPFR_RNDN);
        mpfr_sub(p2.get(), t.get(), p2.get(), MPFR_RNDN);
        mpfr_div_ui(p2.get(), p2.get(), k, MPFR_RNDN);
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pn_1 = p0;
}

// One certified node: interval Newton around the converged midpoint.
bool certify_node(unsigned n, const Mpf& xhat, Prec prec, Ball& node) {
    Ball x = Ball::exact(xhat, prec);
    for (long eps_exp : {-(long)prec + 8, -(long)prec + 24, -(long)prec / 2}) {
        Ball X = x.inflate_2exp(eps_exp);
        Ball pn(prec), pn_1(prec);
        legendre_pair(n, X, pn, pn_1);
        Ball dPX = legendre_deriv(n, X, pn, pn_1);
        if (dPX.sign() == Sign::ZeroStraddling) continue;
        Ball pnx(prec), pn_1x(prec);
        legendre_pair(n, x, pnx, pn_1x);
        Ball N = x - pnx / dPX;
        if (X.contains(N)) {
            node = N;
            return true;
        }
    }
    return false;
}

GaussLegendreRule build_rule(unsigned n, Prec prec) {
    GaussLegendreRule rule;
    rule.n = n;
    rule.prec = prec;
    rule.nodes.assign(n, Ball(prec));
    rule.weights.assign(n, Ball(prec));

    Prec wp = prec + 32;
    for (unsigned k = 0; k < (n + 1) / 2; ++k) {
        // Newton ladder from the Chebyshev-style initial guess
        Prec cur = 64;
        Mpf x(cur);
        {
            Mpf theta(cur);
            mpfr_const_pi(theta.get(), MPFR_RNDN);
            mpfr_mul_d(theta.get(), theta.get(),
                       (static_cast<double>(k) + 0.75) / (static_cast<double>(n) + 0.5),
                       MPFR_RNDN);
            mpfr_cos(x.get(), theta.get(), MPFR_RNDN);
        }
        while (true) {
            for (int it = 0; it < (cur == 64 ? 30 : 4); ++it) {
                Mpf pn(cur), pn_1(cur), d(cur), t(cur), step(cur);
                legendre_pair_mid(n, x, pn, pn_1, cur);
                // P' = n (P_{n-1} - x P_n)/(1-x^2)
                mpfr_mul(t.get(), x.get(), pn.get(), MPFR_RNDN);
                mpfr_sub(d.get(), pn_1.get(), t.get(), MPFR_RNDN);
                mpfr_mul_ui(d.get(), d.get(), n, MPFR_RNDN);
                mpfr_sqr(t.get(), x.get(), MPFR_RNDN);
                mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
                mpfr_div(d.get(), d.get(), t.get(), MPFR_RNDN);
                if (mpfr_zero_p(d.get())) break;
                mpfr_div(step.get(), pn.get(), d.get(), MPFR_RNDN);
                mpfr_sub(x.get(), x.get(), step.get(), MPFR_RNDN);
            }
            if (cur >= wp) break;
            cur = std::min<Prec>(2 * cur, wp);
            Mpf x2(cur);
            mpfr_set(x2.get(), x.get(), MPFR_RNDN);
            x = std::move(x2);
        }

        Ball node(prec);
        // odd n: the middle node is exactly zero
        if (2 * k + 1 == n) {
            node = Ball::from_long(0, prec);
        } else if (!certify_node(n, x, wp, node)) {
            throw QuadratureTooCoarse("gauss_legendre: node certification failed");
        }
        Ball pn(wp), pn_1(wp);
        legendre_pair(n, node, pn, pn_1);
        Ball dp = legendre_deriv(n, node, pn, pn_1);
        Ball one = Ball::from_long(1, wp);
        Ball w = Ball::from_long(2, wp) / ((one - sq(node)) * sq(dp));

        rule.nodes[k] = node.round_to(prec);
        rule.weights[k] = w.round_to(prec);
        rule.nodes[n - 1 - k] = (-node).round_to(prec);
        rule.weights[n - 1 - k] = rule.weights[k];
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(unsigned n, Prec prec) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, Prec>, GaussLegendreRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_rule(n, prec)).first;
    return it->second;
}

Ball gauss_legendre_error_bound(const Ball& M, const Rat& rho, unsigned n,
                                const Ball& halfwidth, Prec prec) {
    if (rho <= Rat(1)) throw DomainError("gauss_legendre_error_bound: rho > 1 required");
    Ball r = Ball::from_rat(rho, prec);
    Ball rho_pow = pow(r, Ball::from_long(-2 * static_cast<long>(n), prec));
    Ball denom = Ball::from_long(1, prec) - Ball::from_rat(Rat(1) / rho, prec);
    return M.mul_int(Int(8)) * rho_pow * halfwidth / denom;
}

unsigned gauss_legendre_node_count(long log2_M, const Rat& rho, long target_exp) {
    double lr = std::log2(rho.to_double());
    // 8 M rho^(-2n) <= 2^target  =>  n >= (log2 M + 3 - target) / (2 log2 rho)
    double need = (static_cast<double>(log2_M) + 6.0 - static_cast<double>(target_exp)) /
                  (2.0 * lr);
    long n = static_cast<long>(need) + 1;
    if (n < 32) n = 32;
    n = ((n + 31) / 32) * 32;
    return static_cast<unsigned>(n);
}

}  // namespace jensenlab
