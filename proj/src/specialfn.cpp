#include "jensenlab/specialfn.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "jensenlab/quadrature.hpp"

namespace jensenlab {

const char* code_version() { return "jensenlab-0.1.0"; }

namespace {

Ball brat(const Rat& q, Prec p) { return Ball::from_rat(q, p); }

Ball ball_pow_ui(const Ball& a, unsigned long k) {
    Ball acc = Ball::from_long(1, a.prec());
    Ball base = a;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = sq(base);
        k >>= 1;
    }
    return acc;
}

Ball ball_from_rat_interval(const Rat& lo, const Rat& hi, Prec p) {
    Mpf l(p), h(p);
    mpfr_set_q(l.get(), lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi.raw().get_mpq_t(), MPFR_RNDU);
    return Ball::from_endpoints(l, h, p);
}

long ball_log2_ub(const Ball& b) {
    Mpf u = b.abs_upper();
    if (mpfr_zero_p(u.get())) return -(1L << 30);
    return mpfr_get_exp(u.get());
}

Mpf two_pow(long e) {
    Mpf t(kRadPrec);
    mpfr_set_ui_2exp(t.get(), 1, e, MPFR_RNDU);
    return t;
}

bool ball_leq_2exp(const Ball& b, long e) {
    Mpf u = b.abs_upper();
    Mpf t = two_pow(e);
    return mpfr_cmp(u.get(), t.get()) <= 0;
}

CBall cexp(const CBall& z) { return exp(z); }

CBall cball_add_rat(const CBall& z, const Rat& q) {
    return CBall(z.re + brat(q, z.prec()), z.im);
}

// ------------------------------------------------------------ Euler-Maclaurin

// |R_{N,K}(s)| <= |B_{2K+2}|/(2K+2)! * prod_{j=0}^{2K+1}|s+j|
//                * N^{-(sigma+2K+1)}/(sigma+2K+1),   sigma = Re s lower bound
Ball zeta_em_remainder(const CBall& s, unsigned long N, unsigned K, Prec wp) {
    Rat sigma = s.re.lower_rat();
    Rat expo = sigma + Rat(2 * static_cast<long>(K) + 1);
    if (expo.sign() <= 0) throw DomainError("zeta: K too small for Re s");
    Ball prod = brat(bernoulli(2 * K + 2).abs() / Rat(factorial(2 * K + 2)), wp);
    for (unsigned long j = 0; j <= 2 * static_cast<unsigned long>(K) + 1; ++j)
        prod = prod * abs(cball_add_rat(s, Rat(static_cast<long>(j))));
    Ball npow = exp(brat(-expo, wp) * log(Ball::from_int(Int(static_cast<long>(N)), wp)));
    return prod * npow / brat(expo, wp);
}

struct ZetaParams {
    unsigned long N;
    unsigned K;
};

ZetaParams zeta_auto_params(const CBall& s, Prec wp) {
    Rat imub = abs(s.im).upper_rat();
    long im_l = imub.ceil().get_si();
    ZetaParams p;
    p.N = static_cast<unsigned long>(std::max<long>(16, wp / 8 + im_l / 2 + 4));
    p.K = static_cast<unsigned>(std::max<long>(12, (3 * static_cast<long>(p.N)) / 2));
    for (int tries = 0; tries < 10; ++tries) {
        Ball r = zeta_em_remainder(s, p.N, p.K, wp);
        if (ball_leq_2exp(r, -(static_cast<long>(wp) + 8))) return p;
        p.N = p.N * 3 / 2 + 8;
        p.K = static_cast<unsigned>(3 * p.K / 2 + 8);
    }
    return p;  // remainder still added rigorously; enclosure just wider
}

}  // namespace

CBall zeta_ball(const CBall& s, Prec prec, unsigned N_in, unsigned K_in) {
    if (s.re.contains(Rat(1)) && s.im.contains_zero())
        throw PoleError("zeta: argument encloses the pole s = 1");
    Prec wp = prec + 48;
    CBall sw(s.re.round_to(wp), s.im.round_to(wp));

    ZetaParams prm;
    if (N_in != 0 && K_in != 0) {
        prm.N = N_in;
        prm.K = K_in;
    } else {
        prm = zeta_auto_params(sw, prec + 16);
    }
    unsigned long N = prm.N;
    unsigned K = prm.K;

    CBall minus_s = -sw;
    // sum_{n<N} n^{-s}
    CBall acc(Ball::from_long(1, wp), Ball::from_long(0, wp));
    for (unsigned long n = 2; n < N; ++n) {
        Ball ln_n = log(Ball::from_int(Int(static_cast<long>(n)), wp));
        acc = acc + cexp(minus_s * ln_n);
    }
    Ball lnN = log(Ball::from_int(Int(static_cast<long>(N)), wp));
    CBall En = cexp(minus_s * lnN);  // N^{-s}
    // N^{1-s}/(s-1)
    CBall pole = CBall(En.re.mul_int(Int(static_cast<long>(N))),
                       En.im.mul_int(Int(static_cast<long>(N)))) /
                 cball_add_rat(sw, Rat(-1));
    CBall half(En.re.mul_2exp(-1), En.im.mul_2exp(-1));

    // Bernoulli tail: sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
    CBall bsum(Ball::from_long(0, wp), Ball::from_long(0, wp));
    CBall rf = sw;                                     // (s)_1 = s
    Int N2 = Int(static_cast<long>(N)) * Int(static_cast<long>(N));
    CBall npow = CBall(En.re.div_int(Int(static_cast<long>(N))),
                       En.im.div_int(Int(static_cast<long>(N))));  // N^{-s-1}
    for (unsigned k = 1; k <= K; ++k) {
        if (k > 1) {
            rf = rf * cball_add_rat(sw, Rat(2 * static_cast<long>(k) - 3));
            rf = rf * cball_add_rat(sw, Rat(2 * static_cast<long>(k) - 2));
            npow = CBall(npow.re.div_int(N2), npow.im.div_int(N2));
        }
        Ball coef = brat(bernoulli(2 * k) / Rat(factorial(2 * k)), wp);
        CBall term = rf * npow;
        bsum = bsum + CBall(term.re * coef, term.im * coef);
    }

    CBall out = acc + pole + half + bsum;
    Mpf r = zeta_em_remainder(sw, N, K, wp).abs_upper();
    out.re = out.re.inflate(r);
    out.im = out.im.inflate(r);
    return CBall(out.re.round_to(prec), out.im.round_to(prec));
}

Ball zeta_ball(const Ball& s, Prec prec, unsigned N, unsigned K) {
    CBall z = zeta_ball(CBall(s, Ball::from_long(0, s.prec())), prec, N, K);
    return z.re;
}

// ----------------------------------------------------------------- Stirling

namespace {

// log Gamma(z) for Re z large (caller shifts); remainder added to radii.
CBall loggamma_stirling_point(const CBall& z, Prec wp) {
    Rat relo = z.re.lower_rat();
    if (relo.sign() <= 0)
        throw DomainError("loggamma_stirling_point: Re z must be positive");
    Ball zabs = abs(z);
    // |arg z| <= atan(imub / relo); sec(theta/2)^{2K+2} enters the bound
    Ball theta = atan(brat(abs(z.im).upper_rat() / relo, wp));
    Ball secb = Ball::from_long(1, wp) / cos(theta.mul_2exp(-1));

    long target = -(static_cast<long>(wp) + 8);
    unsigned bestK = 8;
    Ball bestR(wp);
    bool have = false;
    for (unsigned K = 8; K <= 4096; K = K * 3 / 2 + 4) {
        Ball mr = brat(bernoulli(2 * K + 2).abs(), wp)
                      .div_int(Int(Int(2 * K + 2) * Int(2 * K + 1))) *
                  ball_pow_ui(Ball::from_long(1, wp) / zabs, 2 * K + 1) *
                  ball_pow_ui(secb, 2 * K + 2);
        mr = mr.mul_2exp(1);  // safety factor 2
        if (!have || mpfr_cmp(mr.abs_upper().get(), bestR.abs_upper().get()) < 0) {
            bestR = mr;
            bestK = K;
            have = true;
        }
        if (ball_leq_2exp(mr, target)) break;
        // past the optimal truncation the terms grow again
        if (K > 8 * (wp / 4)) break;
    }
    unsigned K = bestK;

    Ball half = brat(Rat(1, 2), wp);
    CBall lz = log(z);
    CBall res = CBall(z.re - half, z.im) * lz - z;
    Ball log2pi = log(Ball::pi(wp).mul_2exp(1));
    res.re = res.re + log2pi.mul_2exp(-1);

    CBall zinv = CBall(Ball::from_long(1, wp), Ball::from_long(0, wp)) / z;
    CBall zinv2 = sq(zinv);
    CBall zpow = zinv;  // z^{1-2k}, k = 1
    for (unsigned k = 1; k <= K; ++k) {
        if (k > 1) zpow = zpow * zinv2;
        Int kk = Int(2 * k) * Int(2 * k - 1);
        Ball c = brat(bernoulli(2 * k) / Rat(kk), wp);
        res = res + CBall(zpow.re * c, zpow.im * c);
    }

    Mpf r = bestR.abs_upper();
    res.re = res.re.inflate(r);
    res.im = res.im.inflate(r);
    return res;
}

}  // namespace

CBall gamma_ball(const CBall& z, Prec prec) {
    if (z.im.contains_zero()) {
        Rat lo = z.re.lower_rat(), hi = z.re.upper_rat();
        Rat m = std::min(hi, Rat(0));
        if (m.floor() >= lo)
            throw PoleError("gamma: argument encloses a nonpositive integer");
    }
    Prec wp = prec + 48;
    long imub = abs(z.im).upper_rat().ceil().get_si();
    long c_target = std::max<long>({16, static_cast<long>(0.14 * wp) + 8, 2 * imub + 8});
    long relo = z.re.lower_rat().floor().get_si();
    long shift = std::max<long>(0, c_target - relo);

    CBall w = cball_add_rat(CBall(z.re.round_to(wp), z.im.round_to(wp)),
                            Rat(shift));
    CBall g = cexp(loggamma_stirling_point(w, wp));
    if (shift > 0) {
        CBall prod(Ball::from_long(1, wp), Ball::from_long(0, wp));
        for (long i = 0; i < shift; ++i)
            prod = prod * cball_add_rat(CBall(z.re.round_to(wp), z.im.round_to(wp)),
                                        Rat(i));
        g = g / prod;
    }
    return CBall(g.re.round_to(prec), g.im.round_to(prec));
}

Ball gamma_ball(const Ball& x, Prec prec) {
    CBall g = gamma_ball(CBall(x, Ball::from_long(0, x.prec())), prec);
    return g.re;
}

// ---------------------------------------------------------------------- Phi

Ball phi_density(const Ball& u, Prec prec) {
    if (u.lower_rat().sign() < 0)
        throw DomainError("phi_density: u must be >= 0");
    Prec wp = prec + 32;
    Ball uu = u.round_to(wp);
    Ball pi = Ball::pi(wp);
    Ball pi2 = sq(pi);
    Ball E = exp(uu.mul_2exp(1));                      // e^{2u} >= 1
    Ball e92 = exp(uu.mul_int(Int(9)).div_int(Int(2)));
    Ball e52 = exp(uu.mul_int(Int(5)).div_int(Int(2)));
    Ball piE = pi * E;

    Ball acc = Ball::from_long(0, wp);
    unsigned long n = 1;
    for (; n <= 64; ++n) {
        Int n2 = Int(static_cast<long>(n)) * Int(static_cast<long>(n));
        Ball decay = exp(-(piE.mul_int(n2)));
        Ball term = (pi2.mul_int(n2 * n2 * 2) * e92 - pi.mul_int(n2 * 3) * e52) * decay;
        acc = acc + term;
        if (ball_leq_2exp(abs(term), -(static_cast<long>(wp) + 8))) break;
    }
    // tail: sum_{m>n} (2 pi^2 m^4 + 3 pi m^2) e^{9u/2} e^{-pi m^2 e^{2u}},
    // ratio between consecutive bounds is below 1/2 since e^{2u} >= 1
    unsigned long m = n + 1;
    Int m2 = Int(static_cast<long>(m)) * Int(static_cast<long>(m));
    Ball tail = (pi2.mul_int(m2 * m2 * 2) + pi.mul_int(m2 * 3)) * e92 *
                exp(-(piE.mul_int(m2)));
    acc = acc.inflate(tail.mul_2exp(1).abs_upper());
    return acc.round_to(prec);
}

Ball phi_abs_bound(const CBall& w, Prec prec) {
    Prec wp = prec + 32;
    Rat rehi = w.re.upper_rat(), relo = w.re.lower_rat();
    Rat imub = abs(w.im).upper_rat();
    Ball pi = Ball::pi(wp);
    Ball pi2 = sq(pi);
    // E_lo <= Re(e^{2w}) over the rectangle; must stay positive
    Ball Elo = exp(brat(relo, wp).mul_2exp(1)) * cos(brat(imub, wp).mul_2exp(1));
    if (Elo.sign() != Sign::Positive)
        throw DomainError("phi_abs_bound: rectangle leaves |Im w| < pi/4");
    Ball e92 = exp(brat(rehi, wp).mul_int(Int(9)).div_int(Int(2)));
    Ball e52 = exp(brat(rehi, wp).mul_int(Int(5)).div_int(Int(2)));
    Ball piE = pi * Elo;

    Ball acc = Ball::from_long(0, wp);
    unsigned long n = 1;
    bool tail_ok = false;
    for (; n <= 256; ++n) {
        Int n2 = Int(static_cast<long>(n)) * Int(static_cast<long>(n));
        Ball bound = (pi2.mul_int(n2 * n2 * 2) * e92 + pi.mul_int(n2 * 3) * e52) *
                     exp(-(piE.mul_int(n2)));
        acc = acc + bound;
        // stop once the next-term ratio bound 16 e^{-pi(2n+1)E_lo} < 1/2
        Ball ratio = exp(-(piE.mul_int(Int(2 * static_cast<long>(n) + 1))))
                         .mul_int(Int(16));
        if (ball_leq_2exp(abs(bound), -(static_cast<long>(wp) + 8)) &&
            ratio.upper_rat() < Rat(1, 2)) {
            tail_ok = true;
            break;
        }
    }
    if (!tail_ok)
        throw QuadratureTooCoarse("phi_abs_bound: series tail not under control");
    unsigned long m = n + 1;
    Int m2 = Int(static_cast<long>(m)) * Int(static_cast<long>(m));
    Ball tail = (pi2.mul_int(m2 * m2 * 2) * e92 + pi.mul_int(m2 * 3) * e52) *
                exp(-(piE.mul_int(m2)));
    acc = acc + tail.mul_2exp(1);
    return acc.round_to(prec);
}

// ------------------------------------------------------------------- moments

namespace {

// K0 = sum_n (2 pi^2 n^4 + 3 pi n^2) e^{-pi (n^2-1)}; constant in the tail bound
Ball phi_tail_K0(Prec wp) {
    Ball pi = Ball::pi(wp);
    Ball pi2 = sq(pi);
    Ball acc = Ball::from_long(0, wp);
    for (unsigned long n = 1; n <= 9; ++n) {
        Int n2 = Int(static_cast<long>(n)) * Int(static_cast<long>(n));
        Ball t = (pi2.mul_int(n2 * n2 * 2) + pi.mul_int(n2 * 3)) *
                 exp(-(pi.mul_int(n2 - 1)));
        acc = acc + t;
    }
    Int m2 = Int(10) * Int(10);
    Ball t10 = (pi2.mul_int(m2 * m2 * 2) + pi.mul_int(m2 * 3)) *
               exp(-(pi.mul_int(m2 - 1)));
    return acc + t10.mul_2exp(1);
}

// int_{u0}^inf Phi(u) u^{2m} du <= K0 u0^{2m} e^{9u0/2} e^{-pi e^{2u0}} / D,
// D = 2 pi e^{2u0} - 2m/u0 - 9/2 (requires D > 0).
Ball phi_moment_tail(const Rat& u0, std::size_t m, Prec wp, const Ball& K0) {
    Ball pi = Ball::pi(wp);
    Ball u = brat(u0, wp);
    Ball E = exp(u.mul_2exp(1));
    Ball D = pi.mul_2exp(1) * E - brat(Rat(2 * static_cast<long>(m)) / u0, wp) -
             brat(Rat(9, 2), wp);
    if (D.sign() != Sign::Positive)
        throw QuadratureTooCoarse("phi_moment_tail: cutoff too small");
    return K0 * ball_pow_ui(u, 2 * m) * exp(u.mul_int(Int(9)).div_int(Int(2))) *
           exp(-(pi * E)) / D;
}

}  // namespace

std::vector<Ball> phi_moments(std::size_t m_max, Prec prec, unsigned nodes,
                              const Rat& umax_override) {
    long amp = 4 * static_cast<long>(m_max) + 16;
    Prec wp = prec + amp + 96;
    Ball K0 = phi_tail_K0(wp);

    const Rat panel_w(2, 5);
    long tail_target = -(static_cast<long>(prec) + 24);

    // pick the cutoff
    unsigned panels = 3;
    if (!umax_override.is_zero()) {
        panels = static_cast<unsigned>((umax_override / panel_w).ceil().get_ui());
        if (panels == 0) panels = 1;
    } else {
        for (; panels <= 40; ++panels) {
            Rat u0 = panel_w * Rat(static_cast<long>(panels));
            try {
                Ball tb = phi_moment_tail(u0, m_max, wp, K0);
                if (ball_leq_2exp(tb, tail_target)) break;
            } catch (const QuadratureTooCoarse&) {
            }
        }
        if (panels > 40)
            throw QuadratureTooCoarse("phi_moments: no usable cutoff found");
    }
    Rat u_max = panel_w * Rat(static_cast<long>(panels));

    const Rat rho(3);
    // ellipse of E_rho mapped to a panel: semi-axes (rho±1/rho)/2 * halfwidth
    Rat half_w = panel_w / Rat(2);
    Rat a_ell = half_w * (rho + Rat(1) / rho) / Rat(2);
    Rat b_ell = half_w * (rho - Rat(1) / rho) / Rat(2);

    std::vector<Ball> I(m_max + 1, Ball::from_long(0, wp));
    long panel_target =
        -(static_cast<long>(prec) + 24 +
          static_cast<long>(std::ceil(std::log2(static_cast<double>(panels + 1)))));

    for (unsigned k = 0; k < panels; ++k) {
        Rat a = panel_w * Rat(static_cast<long>(k));
        Rat mid = a + half_w;
        CBall rect(ball_from_rat_interval(mid - a_ell, mid + a_ell, wp),
                   ball_from_rat_interval(-b_ell, b_ell, wp));
        Ball Mphi = phi_abs_bound(rect, wp);
        Rat wub_r = (mid + a_ell).abs() + b_ell;  // |w| upper bound over rect
        Ball wub = brat(wub_r, wp);

        long log2_M0 = ball_log2_ub(Mphi);
        long log2_Mtop = log2_M0;
        if (wub_r > Rat(1))
            log2_Mtop += 2 * static_cast<long>(m_max) * ball_log2_ub(wub);
        long worst = std::max(log2_M0, log2_Mtop);

        unsigned n_nodes = nodes != 0
                               ? nodes
                               : gauss_legendre_node_count(worst, rho, panel_target);
        const GaussLegendreRule& rule = gauss_legendre_rule(n_nodes, wp);

        Ball hw = brat(half_w, wp), mi = brat(mid, wp);
        std::vector<Ball> acc(m_max + 1, Ball::from_long(0, wp));
        for (unsigned i = 0; i < rule.n; ++i) {
            Ball x = mi + hw * rule.nodes[i];
            // the true node is inside (a, a+w); clamp the enclosure at 0
            if (x.lower_rat().sign() < 0) {
                Mpf lo(wp), hi(wp);
                mpfr_set_zero(lo.get(), 1);
                mpfr_set_q(hi.get(), x.upper_rat().raw().get_mpq_t(), MPFR_RNDU);
                x = Ball::from_endpoints(lo, hi, wp);
            }
            Ball f = phi_density(x, wp);
            Ball wf = rule.weights[i] * f;
            Ball xsq = sq(x);
            Ball xpow = Ball::from_long(1, wp);
            for (std::size_t m = 0; m <= m_max; ++m) {
                acc[m] = acc[m] + wf * xpow;
                if (m < m_max) xpow = xpow * xsq;
            }
        }
        for (std::size_t m = 0; m <= m_max; ++m) {
            Ball Mm = Mphi * ball_pow_ui(wub, 2 * m);
            Ball err = gauss_legendre_error_bound(Mm, rho, rule.n, hw, wp);
            I[m] = I[m] + hw * acc[m];
            I[m] = I[m].inflate(err.abs_upper());
        }
    }

    for (std::size_t m = 0; m <= m_max; ++m) {
        Ball tb = phi_moment_tail(u_max, m, wp, K0);
        I[m] = I[m].inflate(tb.abs_upper()).round_to(prec + 32);
    }
    return I;
}

// ----------------------------------------------------------- zeta jet at 1/2

BallSeries zeta_series_half(std::size_t len, Prec prec) {
    Prec wp = prec + 32;
    const Rat r(8);  // Cauchy disk radius for the remainder

    unsigned K = static_cast<unsigned>(std::max<long>(24, wp / 3));
    unsigned long N = std::max<unsigned long>(64, K);
    Ball bound(wp);
    for (int tries = 0;; ++tries) {
        // sup_{|s-1/2|<=r} |R|: |B_{2K+2}|/(2K+2)! prod (j+1/2+r) N^{-(2K+3/2-r)}/(2K+3/2-r)
        Rat expo = Rat(2 * static_cast<long>(K)) + Rat(3, 2) - r;
        Rat prodr(1);
        for (unsigned long j = 0; j <= 2 * static_cast<unsigned long>(K) + 1; ++j)
            prodr *= Rat(static_cast<long>(j)) + Rat(1, 2) + r;
        Ball b = brat(bernoulli(2 * K + 2).abs() / Rat(factorial(2 * K + 2)), wp) *
                 brat(prodr, wp) *
                 exp(brat(-expo, wp) * log(Ball::from_int(Int(static_cast<long>(N)), wp))) /
                 brat(expo, wp);
        bound = b.mul_2exp(1);
        if (ball_leq_2exp(bound, -(static_cast<long>(wp) + 8)) || tries >= 8) break;
        N = N * 3 / 2 + 16;
        K = K + K / 3 + 8;
    }

    BallSeries out(len, wp);
    // direct sum: n^{-1/2-t} = n^{-1/2} e^{-t ln n}
    out[0] = Ball::from_long(1, wp);  // n = 1
    for (unsigned long n = 2; n < N; ++n) {
        Ball nb = Ball::from_int(Int(static_cast<long>(n)), wp);
        Ball ln_n = log(nb);
        Ball f = Ball::from_long(1, wp) / sqrt(nb);
        for (std::size_t j = 0; j < len; ++j) {
            out[j] = out[j] + f;
            f = (f * (-ln_n)).div_int(Int(static_cast<long>(j) + 1));
        }
    }

    Ball lnN = log(Ball::from_int(Int(static_cast<long>(N)), wp));
    Ball sqrtN = sqrt(Ball::from_int(Int(static_cast<long>(N)), wp));
    BallSeries En = series_exp_linear(-lnN, len, wp);  // e^{-t ln N}

    // N^{1-s}/(s-1) at s = 1/2+t:  -2 sqrt(N) e^{-t ln N} sum_j (2t)^j
    BallSeries geom(len, wp);
    {
        Ball c = Ball::from_long(1, wp);
        for (std::size_t j = 0; j < len; ++j) {
            geom[j] = c;
            c = c.mul_2exp(1);
        }
    }
    BallSeries pole = (En * geom).scale(-(sqrtN.mul_2exp(1)));

    // N^{-s}/2
    BallSeries halfterm = En.scale((Ball::from_long(1, wp) / sqrtN).mul_2exp(-1));

    // sum_k B_{2k}/(2k)! RF_k(t) N^{1/2-2k} e^{-t ln N}
    BallSeries inner(len, wp);
    {
        std::vector<Ball> rf(len, Ball::from_long(0, wp));
        rf[0] = Ball::from_long(1, wp);
        std::size_t rf_len = 1;
        Ball npow = Ball::from_long(1, wp) / sqrtN;  // N^{1/2-2k}, k=1 -> N^{-3/2}
        npow = npow / Ball::from_int(Int(static_cast<long>(N)), wp);
        Ball Ninv2 = Ball::from_long(1, wp) /
                     Ball::from_int(Int(static_cast<long>(N)) * Int(static_cast<long>(N)), wp);
        auto mul_linear = [&](const Rat& c) {
            // rf <- rf * (c + t), truncated
            std::size_t new_len = std::min(len, rf_len + 1);
            std::vector<Ball> nf(new_len, Ball::from_long(0, wp));
            Ball cb = brat(c, wp);
            for (std::size_t j = 0; j < rf_len; ++j) {
                nf[j] = nf[j] + rf[j] * cb;
                if (j + 1 < new_len) nf[j + 1] = nf[j + 1] + rf[j];
            }
            rf.assign(len, Ball::from_long(0, wp));
            for (std::size_t j = 0; j < new_len; ++j) rf[j] = nf[j];
            rf_len = new_len;
        };
        for (unsigned k = 1; k <= K; ++k) {
            if (k == 1) {
                mul_linear(Rat(1, 2));  // (s)_1 = s = 1/2 + t
            } else {
                mul_linear(Rat(1, 2) + Rat(2 * static_cast<long>(k) - 3));
                mul_linear(Rat(1, 2) + Rat(2 * static_cast<long>(k) - 2));
                npow = npow * Ninv2;
            }
            Ball coef = brat(bernoulli(2 * k) / Rat(factorial(2 * k)), wp) * npow;
            for (std::size_t j = 0; j < rf_len; ++j)
                inner[j] = inner[j] + rf[j] * coef;
        }
    }
    BallSeries btail = En * inner;

    BallSeries total = out + pole + halfterm + btail;
    // Cauchy: coefficient j of the remainder is bounded by sup|R| / r^j
    Mpf bub = bound.abs_upper();
    Rat rj(1);
    for (std::size_t j = 0; j < len; ++j) {
        Mpf infl(kRadPrec);
        Rat inv = Rat(1) / rj;
        mpfr_mul_q(infl.get(), bub.get(), inv.raw().get_mpq_t(), MPFR_RNDU);
        total[j] = total[j].inflate(infl);
        rj *= r;
    }
    return total;
}

// ------------------------------------------------------ log Gamma jet at 1/4

BallSeries loggamma_series_quarter(std::size_t len, Prec prec) {
    Prec wp = prec + 32;
    long nshift = std::max<long>(24, static_cast<long>(wp) / 4 + 8);
    Rat c0 = Rat(1, 4) + Rat(nshift);
    Rat r = c0 / Rat(2);
    Ball c = brat(c0, wp);

    // Stirling remainder sup over |t| <= r: 2 |B_{2K+2}|/((2K+2)(2K+1)(c-r)^{2K+1})
    // * sec(theta/2)^{2K+2}, theta = asin(r/c) <= pi/6 since r = c/2
    Ball pi = Ball::pi(wp);
    Ball secb = Ball::from_long(1, wp) / cos(pi.div_int(Int(12)));
    Ball cmr = brat(c0 - r, wp);
    long target = -(static_cast<long>(wp) + 8);
    unsigned bestK = 16;
    Ball bestR(wp);
    bool have = false;
    for (unsigned K = 16; K <= 4096; K = K * 3 / 2 + 4) {
        Ball mr = brat(bernoulli(2 * K + 2).abs(), wp)
                      .div_int(Int(Int(2 * K + 2) * Int(2 * K + 1))) *
                  ball_pow_ui(Ball::from_long(1, wp) / cmr, 2 * K + 1) *
                  ball_pow_ui(secb, 2 * K + 2);
        mr = mr.mul_2exp(1);
        if (!have || mpfr_cmp(mr.abs_upper().get(), bestR.abs_upper().get()) < 0) {
            bestR = mr;
            bestK = K;
            have = true;
        }
        if (ball_leq_2exp(mr, target)) break;
    }
    unsigned K = bestK;

    // (c - 1/2 + t) * log(c + t) - (c + t) + log(2 pi)/2 + sum_k ...
    BallSeries lc = series_log_linear(c, len, wp);
    BallSeries S(len, wp);
    {
        Ball cm = brat(c0 - Rat(1, 2), wp);
        for (std::size_t j = 0; j < len; ++j) {
            Ball v = lc[j] * cm;
            if (j >= 1) v = v + lc[j - 1];
            S[j] = v;
        }
        S[0] = S[0] - c + log(pi.mul_2exp(1)).mul_2exp(-1);
        if (len > 1) S[1] = S[1] - Ball::from_long(1, wp);
    }
    for (unsigned k = 1; k <= K; ++k) {
        BallSeries zp = series_recip_linear_pow(c, 2 * k - 1, len, wp);
        Int kk = Int(2 * k) * Int(2 * k - 1);
        Ball coef = brat(bernoulli(2 * k) / Rat(kk), wp);
        S = S + zp.scale(coef);
    }
    // Cauchy inflation of the remainder
    Mpf bub = bestR.abs_upper();
    Rat rj(1);
    for (std::size_t j = 0; j < len; ++j) {
        Mpf infl(kRadPrec);
        Rat inv = Rat(1) / rj;
        mpfr_mul_q(infl.get(), bub.get(), inv.raw().get_mpq_t(), MPFR_RNDU);
        S[j] = S[j].inflate(infl);
        rj *= r;
    }

    // downshift: logGamma(1/4+t) = logGamma(c0+t) - sum_{i<nshift} log(1/4+i+t)
    for (long i = 0; i < nshift; ++i)
        S = S - series_log_linear(brat(Rat(1, 4) + Rat(i), wp), len, wp);
    return S;
}

// ---------------------------------------------------------------- xi methods

BallJet xi_jet_from_iz_coeffs(const BallSeries& h) {
    BallJet jet;
    std::size_t L = h.length();
    jet.values.reserve(L);
    Int fact(1);
    for (std::size_t j = 0; j < L; ++j) {
        if (j > 0) fact *= Int(static_cast<long>(j));
        Ball hj = h[j].mul_int(fact);  // j! * coefficient = derivative scale
        if (j % 2 == 1) {
            if (!hj.contains_zero())
                throw MethodDisagreement(
                    "xi series: odd coefficient fails to enclose zero "
                    "(evenness violated)");
            jet.values.push_back(hj);
        } else {
            // Xi^{(2m)}(0) = (-1)^m (2m)! h_{2m}
            jet.values.push_back((j / 2) % 2 == 0 ? hj : -hj);
        }
    }
    jet.parity = Parity::Even;
    jet.order_hint = 1.0;
    jet.label = "xi";
    return jet;
}

namespace {

BallJet xi_jet_direct(std::size_t M, Prec prec) {
    double lf = std::lgamma(static_cast<double>(M) + 1.0) / std::log(2.0);
    Prec wp = prec + static_cast<Prec>(lf) + 2 * static_cast<Prec>(M) + 128;
    std::size_t L = M + 1;

    BallSeries Z = zeta_series_half(L, wp);
    BallSeries LG = loggamma_series_quarter(L, wp);
    BallSeries G = series_exp(LG.compose_scale(brat(Rat(1, 2), wp)));

    Ball logpi = log(Ball::pi(wp));
    BallSeries P = series_exp_linear(-(logpi.mul_2exp(-1)), L, wp)
                       .scale(exp(-(logpi.mul_2exp(-2))));

    BallSeries prod = Z * G * P;
    // multiply by (z^2 - 1/4)/2
    BallSeries h(L, wp);
    for (std::size_t j = 0; j < L; ++j) {
        Ball v = -(prod[j].mul_2exp(-2));
        if (j >= 2) v = v + prod[j - 2];
        h[j] = v.mul_2exp(-1);
    }
    BallJet jet = xi_jet_from_iz_coeffs(h);
    for (auto& v : jet.values) v = v.round_to(prec + 32);
    jet.label = "xi_direct_factors";
    return jet;
}

BallJet xi_jet_phi(std::size_t M, Prec prec, unsigned nodes, const Rat& umax) {
    std::size_t mmax = M / 2;
    std::vector<Ball> I = phi_moments(mmax, prec, nodes, umax);
    BallJet jet;
    jet.values.reserve(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        if (j % 2 == 1) {
            jet.values.push_back(Ball::from_long(0, prec + 32));
        } else {
            // Xi^(2m)(0) = (-1)^m * 4 * int_0^inf Phi(u) u^(2m) du
            // (for this Phi normalization; cross-checked against the
            // defining product at z = 0)
            Ball v = I[j / 2].mul_2exp(2);
            jet.values.push_back((j / 2) % 2 == 0 ? v : -v);
        }
    }
    jet.parity = Parity::Even;
    jet.order_hint = 1.0;
    jet.label = "xi_phi_moments";
    return jet;
}

}  // namespace

BallJet xi_taylor(const XiJetRequest& req) {
    if (req.prec < 64) throw UsageError("xi_taylor: prec must be >= 64");
    if (!req.u_max.is_zero() && req.u_max.sign() <= 0)
        throw UsageError("xi_taylor: u_max must be positive");

    if (!req.cache_dir.empty()) {
        BallJet cached;
        if (xi_cache_load(req.cache_dir, req, cached)) return cached;
    }

    BallJet jet;
    switch (req.method) {
        case XiMethod::PhiMoments:
            jet = xi_jet_phi(req.M, req.prec, req.nodes, req.u_max);
            break;
        case XiMethod::DirectFactors:
            jet = xi_jet_direct(req.M, req.prec);
            break;
        case XiMethod::Both: {
            BallJet a = xi_jet_phi(req.M, req.prec, req.nodes, req.u_max);
            BallJet b = xi_jet_direct(req.M, req.prec);
            jet.values.reserve(req.M + 1);
            for (std::size_t k = 0; k <= req.M; ++k) {
                auto meet = intersect(a.values[k], b.values[k]);
                if (!meet)
                    throw MethodDisagreement(
                        "xi_taylor: PhiMoments and DirectFactors enclosures are "
                        "disjoint at order " + std::to_string(k));
                jet.values.push_back(*meet);
            }
            jet.parity = Parity::Even;
            jet.order_hint = 1.0;
            jet.label = "xi_both";
            break;
        }
    }
    if (!req.cache_dir.empty()) xi_cache_store(req.cache_dir, req, jet);
    return jet;
}

// ------------------------------------------------------------------- xi_eval

CBall xi_eval(const CBall& z, Prec prec) {
    Prec wp = prec + 64;
    // w = -i z
    CBall w(z.im.round_to(wp), -(z.re.round_to(wp)));
    CBall s = cball_add_rat(w, Rat(1, 2));
    CBall zeta = zeta_ball(s, wp);
    CBall warg(w.re.mul_2exp(-1) + brat(Rat(1, 4), wp), w.im.mul_2exp(-1));
    CBall gam = gamma_ball(warg, wp);
    Ball logpi = log(Ball::pi(wp));
    CBall pifac = cexp(CBall(-(warg.re * logpi), -(warg.im * logpi)));
    CBall poly = sq(w);
    poly.re = poly.re - brat(Rat(1, 4), wp);
    poly = CBall(poly.re.mul_2exp(-1), poly.im.mul_2exp(-1));
    CBall out = poly * pifac * gam * zeta;
    return CBall(out.re.round_to(prec), out.im.round_to(prec));
}

Ball xi_eval_real(const Ball& t, Prec prec) {
    CBall v = xi_eval(CBall(t, Ball::from_long(0, t.prec())), prec);
    return v.re;
}

// --------------------------------------------------------------------- cache

namespace {

std::string mpfr_to_token(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return "0:0";
    Int mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    return mant.get_str(16) + ":" + std::to_string(static_cast<long>(e));
}

bool token_to_mpf(const std::string& tok, Mpf& out) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) return false;
    std::string ms = tok.substr(0, colon), es = tok.substr(colon + 1);
    if (ms == "0") {
        mpfr_set_zero(out.get(), 1);
        return true;
    }
    Int mant;
    if (mant.set_str(ms, 16) != 0) return false;
    long e;
    try {
        e = std::stol(es);
    } catch (...) {
        return false;
    }
    int t = mpfr_set_z_2exp(out.get(), mant.get_mpz_t(), e, MPFR_RNDN);
    return t == 0;
}

const char* method_tag(XiMethod m) {
    switch (m) {
        case XiMethod::PhiMoments: return "phi";
        case XiMethod::DirectFactors: return "factors";
        case XiMethod::Both: return "both";
    }
    return "?";
}

}  // namespace

std::string xi_cache_filename(const XiJetRequest& req) {
    std::ostringstream os;
    os << "xi_M" << req.M << "_p" << req.prec << "_" << method_tag(req.method)
       << "_" << code_version() << ".jlc";
    return os.str();
}

bool xi_cache_load(const std::string& dir, const XiJetRequest& req, BallJet& out) {
    namespace fs = std::filesystem;
    fs::path p = fs::path(dir) / xi_cache_filename(req);
    std::ifstream in(p);
    if (!in) return false;
    std::string magic;
    int fver = 0;
    if (!(in >> magic >> fver) || magic != "jensenlab-xi-cache" || fver != 1)
        return false;
    std::string key, ver, mtag;
    std::size_t M = 0, count = 0;
    long prec = 0;
    if (!(in >> key >> ver) || key != "version") return false;
    if (!(in >> key >> M) || key != "M") return false;
    if (!(in >> key >> prec) || key != "prec") return false;
    if (!(in >> key >> mtag) || key != "method") return false;
    if (!(in >> key >> count) || key != "count") return false;
    if (ver != code_version() || M != req.M || prec != req.prec ||
        mtag != method_tag(req.method) || count != M + 1)
        return false;

    BallJet jet;
    jet.values.reserve(count);
    Prec vprec = req.prec + 32;
    for (std::size_t k = 0; k < count; ++k) {
        std::string tag, mtok, rtok;
        std::size_t kk;
        if (!(in >> tag >> kk >> mtok >> rtok) || tag != "v" || kk != k) return false;
        Mpf mid(vprec), rad(kRadPrec);
        if (!token_to_mpf(mtok, mid) || !token_to_mpf(rtok, rad)) return false;
        if (mpfr_sgn(rad.get()) < 0 || !mpfr_number_p(rad.get()) ||
            !mpfr_number_p(mid.get()))
            return false;
        jet.values.push_back(Ball::from_mid_rad(mid, rad, vprec));
    }
    std::string end;
    if (!(in >> end) || end != "end") return false;
    jet.parity = Parity::Even;
    jet.order_hint = 1.0;
    jet.label = std::string("xi_cache_") + method_tag(req.method);
    out = std::move(jet);
    return true;
}

void xi_cache_store(const std::string& dir, const XiJetRequest& req,
                    const BallJet& jet) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path final_path = fs::path(dir) / xi_cache_filename(req);
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream outf(tmp, std::ios::trunc);
        if (!outf) throw CacheError("xi_cache_store: cannot write " + tmp.string());
        outf << "jensenlab-xi-cache 1\n";
        outf << "version " << code_version() << "\n";
        outf << "M " << req.M << "\n";
        outf << "prec " << req.prec << "\n";
        outf << "method " << method_tag(req.method) << "\n";
        outf << "count " << jet.values.size() << "\n";
        for (std::size_t k = 0; k < jet.values.size(); ++k) {
            outf << "v " << k << " " << mpfr_to_token(jet.values[k].mid().get())
                 << " " << mpfr_to_token(jet.values[k].rad().get()) << "\n";
        }
        outf << "end\n";
    }
    fs::rename(tmp, final_path);  // atomic replace
}

}  // namespace jensenlab
