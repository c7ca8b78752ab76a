#pragma once

#include <string>
#include <vector>

#include "jensenlab/poly.hpp"
#include "jensenlab/series.hpp"

namespace jensenlab {

// Certified enclosure of Gamma(z); z must not enclose a nonpositive integer.
// Stirling series with explicit remainder, after an argument shift.
CBall gamma_ball(const CBall& z, Prec prec = kDefaultPrec);
Ball gamma_ball(const Ball& x, Prec prec = kDefaultPrec);

// Certified enclosure of zeta(s) by Euler-Maclaurin with explicit remainder;
// s must exclude 1. Tuning knobs (N, K) exposed for the two-parameterization
// agreement tests; 0 means automatic.
CBall zeta_ball(const CBall& s, Prec prec = kDefaultPrec, unsigned N = 0,
                unsigned K = 0);
Ball zeta_ball(const Ball& s, Prec prec = kDefaultPrec, unsigned N = 0,
               unsigned K = 0);

// Phi(u) = sum_n (2 pi^2 n^4 e^(9u/2) - 3 pi n^2 e^(5u/2)) exp(-pi n^2 e^(2u)),
// with a proven series tail bound; u >= 0.
Ball phi_density(const Ball& u, Prec prec = kDefaultPrec);

// Upper bound of |Phi| over a complex rectangle (needs Re(e^(2w)) > 0 on it,
// i.e. |Im w| < pi/4). Used for quadrature ellipse bounds.
Ball phi_abs_bound(const CBall& w, Prec prec);

// Moments I_m = int_0^umax Phi(u) u^(2m) du for m = 0..m_max, by certified
// composite Gauss-Legendre plus tail bounds. Overrides: nodes = 0 and
// umax = 0 mean automatic.
std::vector<Ball> phi_moments(std::size_t m_max, Prec prec, unsigned nodes = 0,
                              const Rat& umax = Rat(0));

// Xi evaluated through its defining product; enclosure is certified.
CBall xi_eval(const CBall& z, Prec prec = kDefaultPrec);
Ball xi_eval_real(const Ball& t, Prec prec = kDefaultPrec);

enum class XiMethod { PhiMoments, DirectFactors, Both };

struct XiJetRequest {
    std::size_t M = 8;            // highest derivative order stored
    Prec prec = kDefaultPrec;     // >= 64
    XiMethod method = XiMethod::Both;
    unsigned nodes = 0;           // quadrature override (PhiMoments)
    Rat u_max = Rat(0);           // tail cutoff override (PhiMoments)
    std::string cache_dir;        // empty: no disk cache
};

// Taylor jet of Xi at 0 (parity even, order_hint 1). Method Both intersects
// the two independent enclosures and fails loudly if they are disjoint.
BallJet xi_taylor(const XiJetRequest& req);

// Building blocks, exposed for direct unit testing.
// Taylor coefficients of zeta(1/2 + t).
BallSeries zeta_series_half(std::size_t len, Prec prec);
// Taylor coefficients of log Gamma(1/4 + t).
BallSeries loggamma_series_quarter(std::size_t len, Prec prec);
// Sign bookkeeping of the i-substitution: given coefficients of h(z) = Xi(iz),
// produce the jet of Xi itself (checks evenness of h on the way).
BallJet xi_jet_from_iz_coeffs(const BallSeries& h);

// Disk cache (bit-exact round trip).
std::string xi_cache_filename(const XiJetRequest& req);
bool xi_cache_load(const std::string& dir, const XiJetRequest& req, BallJet& out);
void xi_cache_store(const std::string& dir, const XiJetRequest& req,
                    const BallJet& jet);

const char* code_version();

}  // namespace jensenlab
