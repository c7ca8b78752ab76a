#include "jensenlab/theorems.hpp"

#include <algorithm>
#include <sstream>

namespace jensenlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string poly_str(const RatPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 0x51ab1ULL)));
}

Rat random_rat_in(std::mt19937_64& rng, const Rat& lo, const Rat& hi,
                  unsigned den_max) {
    std::uniform_int_distribution<long> dd(1, static_cast<long>(den_max));
    long den = dd(rng);
    Int nlo = (lo * Rat(den)).ceil(), nhi = (hi * Rat(den)).floor();
    if (nhi < nlo) return lo;  // degenerate range
    Int span = nhi - nlo + 1;
    std::uniform_int_distribution<unsigned long long> nd(
        0, span.fits_ulong_p() ? span.get_ui() - 1 : 1ULL << 62);
    Int num = nlo + Int(static_cast<unsigned long>(nd(rng)) % span.get_ui());
    return Rat(num, Int(den));
}

// ------------------------------------------------------------- generators

namespace {

struct SectorFactors {
    std::vector<Rat> real_roots;              // nonzero
    std::vector<std::pair<Rat, Rat>> quads;   // (x, y): roots x +- iy
    Rat lead{1};

    RatPoly build() const {
        RatPoly p = RatPoly::constant(lead);
        for (const Rat& r : real_roots)
            p = p * RatPoly(std::vector<Rat>{-r, Rat(1)});
        for (const auto& [x, y] : quads)
            p = p * RatPoly(std::vector<Rat>{x * x + y * y, Rat(-2) * x, Rat(1)});
        return p;
    }
    std::size_t parts() const { return real_roots.size() + quads.size(); }
    std::string str() const {
        std::ostringstream os;
        os << "real_roots={";
        for (std::size_t i = 0; i < real_roots.size(); ++i)
            os << (i ? "," : "") << real_roots[i].str();
        os << "} quads={";
        for (std::size_t i = 0; i < quads.size(); ++i)
            os << (i ? "," : "") << "(" << quads[i].first.str() << ","
               << quads[i].second.str() << ")";
        os << "}";
        return os.str();
    }
};

Rat random_nonzero(std::mt19937_64& rng, const Rat& lo, const Rat& hi,
                   unsigned den_max = 16) {
    for (int i = 0; i < 32; ++i) {
        Rat r = random_rat_in(rng, lo, hi, den_max);
        if (!r.is_zero()) return r;
    }
    return Rat(1);
}

SectorFactors random_sector_factors(unsigned deg, const Rat& delta_sq,
                                    std::mt19937_64& rng) {
    // |Im a| <= 0.95 delta |a|  <=>  y^2 <= c^2 x^2,
    // c^2 = (0.95)^2 q / (1 - (0.95)^2 q); use a rational c_r <= c
    Rat q95 = Rat(361, 400) * delta_sq;
    Rat c_sq = q95 / (Rat(1) - q95);
    Rat c_r = c_sq.sqrt_lb();

    SectorFactors f;
    std::uniform_int_distribution<unsigned> qd(0, deg / 2);
    unsigned n_quads = qd(rng);
    unsigned n_real = deg - 2 * n_quads;
    for (unsigned i = 0; i < n_real; ++i) {
        Rat sgn = (rng() & 1) ? Rat(1) : Rat(-1);
        f.real_roots.push_back(sgn * random_nonzero(rng, Rat(1, 4), Rat(10)));
    }
    for (unsigned i = 0; i < n_quads; ++i) {
        Rat x = ((rng() & 1) ? Rat(1) : Rat(-1)) *
                random_nonzero(rng, Rat(1, 4), Rat(10));
        Rat u = random_rat_in(rng, Rat(-1), Rat(1), 16);
        f.quads.emplace_back(x, u * c_r * x);
    }
    f.lead = random_nonzero(rng, Rat(-4), Rat(4), 8);
    return f;
}

std::vector<Rat> random_hyperbolic_roots(unsigned deg, std::mt19937_64& rng) {
    std::vector<Rat> roots;
    for (unsigned i = 0; i < deg; ++i)
        roots.push_back(random_rat_in(rng, Rat(-10), Rat(10), 16));
    return roots;
}

RatPoly poly_from_roots(const std::vector<Rat>& roots, const Rat& lead = Rat(1)) {
    RatPoly p = RatPoly::constant(lead);
    for (const Rat& r : roots) p = p * RatPoly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

}  // namespace

RatPoly random_sector_poly(unsigned deg, const Rat& delta_sq, std::mt19937_64& rng) {
    if (delta_sq.sign() <= 0) throw DomainError("random_sector_poly: delta^2 > 0");
    return random_sector_factors(deg, delta_sq, rng).build();
}

RatPoly random_hyperbolic_poly(unsigned deg, std::mt19937_64& rng) {
    return poly_from_roots(random_hyperbolic_roots(deg, rng),
                           random_nonzero(rng, Rat(-4), Rat(4), 8));
}

RatPoly random_even_gapped_poly(unsigned half_deg, const Rat& T,
                                std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> qd(0, half_deg / 2);
    unsigned n_quads = qd(rng);
    unsigned n_pairs = half_deg - 2 * n_quads;
    RatPoly p = RatPoly::constant(Rat(1));
    for (unsigned i = 0; i < n_pairs; ++i) {
        Rat r = random_rat_in(rng, Rat(1, 2), T + Rat(5));
        p = p * RatPoly(std::vector<Rat>{-(r * r), Rat(0), Rat(1)});
    }
    for (unsigned i = 0; i < n_quads; ++i) {
        Rat x = random_rat_in(rng, T + Rat(1, 4), T + Rat(4));
        Rat y = random_rat_in(rng, Rat(-12, 25), Rat(12, 25));
        // (z^2 - (x+iy)^2)(z^2 - (x-iy)^2)
        Rat s = x * x + y * y;
        p = p * RatPoly(std::vector<Rat>{s * s, Rat(0), Rat(-2) * (x * x - y * y),
                                         Rat(0), Rat(1)});
    }
    return p;
}

// ------------------------------------------------------------ theorem 3

SuiteReport verify_theorem3(const TrialConfig& cfg) {
    SuiteReport rep;
    rep.name = "theorem3";
    Rat dq_cap = Rat(1) / cfg.delta_sq;
    if (Rat(static_cast<long>(cfg.deg_Q_max)) > dq_cap)
        throw HypothesisViolation(
            "verify_theorem3: deg Q exceeds floor(delta^-2)");

    for (unsigned t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, t);
        std::uniform_int_distribution<unsigned> pd(cfg.deg_P_min, cfg.deg_P_max);
        std::uniform_int_distribution<unsigned> qd(cfg.deg_Q_min, cfg.deg_Q_max);
        SectorFactors pf = random_sector_factors(pd(rng), cfg.delta_sq, rng);
        std::vector<Rat> qroots = random_hyperbolic_roots(qd(rng), rng);

        auto hyperbolic_after_compose = [&](const SectorFactors& sf,
                                            const std::vector<Rat>& qr) {
            if (qr.empty()) return true;  // constant Q: composition is scalar
            RatPoly c = compose_obreschkoff(sf.build(), poly_from_roots(qr));
            if (c.is_zero()) return true;
            return is_hyperbolic(c).status == VerdictStatus::Hyperbolic;
        };

        ++rep.trials_run;
        ++rep.checks;
        if (hyperbolic_after_compose(pf, qroots)) continue;

        // minimize: greedily drop P factors and Q roots while it still fails
        SectorFactors mp = pf;
        std::vector<Rat> mq = qroots;
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (std::size_t i = 0; i < mp.real_roots.size(); ++i) {
                SectorFactors c = mp;
                c.real_roots.erase(c.real_roots.begin() + static_cast<long>(i));
                if (!hyperbolic_after_compose(c, mq)) {
                    mp = c;
                    shrunk = true;
                    break;
                }
            }
            if (shrunk) continue;
            for (std::size_t i = 0; i < mp.quads.size(); ++i) {
                SectorFactors c = mp;
                c.quads.erase(c.quads.begin() + static_cast<long>(i));
                if (!hyperbolic_after_compose(c, mq)) {
                    mp = c;
                    shrunk = true;
                    break;
                }
            }
            if (shrunk) continue;
            for (std::size_t i = 0; i < mq.size(); ++i) {
                std::vector<Rat> c = mq;
                c.erase(c.begin() + static_cast<long>(i));
                if (!hyperbolic_after_compose(mp, c)) {
                    mq = c;
                    shrunk = true;
                    break;
                }
            }
        }
        ++rep.failures;
        std::ostringstream os;
        os << "seed=" << cfg.seed << " trial=" << t
           << " delta_sq=" << cfg.delta_sq.str() << " P{" << mp.str() << "} Q="
           << poly_str(poly_from_roots(mq));
        rep.counterexamples.push_back(os.str());
    }
    return rep;
}

// ------------------------------------------------------------ corollary

CorollaryReport verify_corollary(const RatPoly& P, std::size_t d) {
    CorollaryReport r;
    RatPoly lhs = jensen(jet_of_poly(P, d), 0, d);
    RatPoly rhs = reverse(compose_obreschkoff(P, RatPoly::monomial(d)), d);
    r.identity_ok = lhs.coeffs() == rhs.coeffs();
    if (lhs.is_zero())
        r.verdict = {VerdictStatus::Hyperbolic, std::nullopt, std::nullopt};
    else
        r.verdict = is_hyperbolic(lhs);
    return r;
}

SuiteReport verify_corollary_suite(const TrialConfig& cfg) {
    SuiteReport rep;
    rep.name = "corollary";
    Int d_cap = (Rat(1) / cfg.delta_sq).floor();
    for (unsigned t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, t);
        std::uniform_int_distribution<unsigned> pd(cfg.deg_P_min, cfg.deg_P_max);
        std::uniform_int_distribution<unsigned> extra(0, 4);
        ++rep.trials_run;

        // exact reversal identity for a generic rational polynomial
        unsigned degp = pd(rng);
        std::vector<Rat> coeffs;
        for (unsigned i = 0; i <= degp; ++i)
            coeffs.push_back(random_rat_in(rng, Rat(-8), Rat(8), 12));
        if (coeffs.back().is_zero()) coeffs.back() = Rat(1);
        RatPoly G(std::move(coeffs));
        std::size_t d = degp + extra(rng);
        if (d == 0) d = 1;
        ++rep.checks;
        if (!verify_corollary(G, d).identity_ok) {
            ++rep.failures;
            std::ostringstream os;
            os << "identity seed=" << cfg.seed << " trial=" << t
               << " P=" << poly_str(G) << " d=" << d;
            rep.counterexamples.push_back(os.str());
        }

        // hyperbolicity claim under the sector hypothesis
        RatPoly P = random_sector_poly(pd(rng), cfg.delta_sq, rng);
        std::size_t dd = 1 + static_cast<std::size_t>(rng() % std::min<unsigned long>(d_cap.get_ui(), 64));
        if (dd < P.size() - 1) dd = P.size() - 1;  // reversal needs d >= deg
        if (Rat(static_cast<long>(dd)) > Rat(1) / cfg.delta_sq) continue;
        ++rep.checks;
        CorollaryReport cr = verify_corollary(P, dd);
        if (!cr.identity_ok || cr.verdict.status != VerdictStatus::Hyperbolic) {
            ++rep.failures;
            std::ostringstream os;
            os << "claim seed=" << cfg.seed << " trial=" << t
               << " P=" << poly_str(P) << " d=" << dd
               << " delta_sq=" << cfg.delta_sq.str();
            rep.counterexamples.push_back(os.str());
        }
    }
    return rep;
}

// ------------------------------------------------------------ theorem 4

SuiteReport verify_theorem4(const TrialConfig& cfg, const Rat& T) {
    if (T < Rat(1, 2))
        throw HypothesisViolation("verify_theorem4: requires T >= 1/2");
    SuiteReport rep;
    rep.name = "theorem4";

    Rat delta_sq = Rat(1) / (Rat(1) + Rat(4) * T * T);
    Rat dt_sq = Rat(4) * delta_sq * (Rat(1) - delta_sq);
    unsigned d_cap = static_cast<unsigned>(
        std::min<unsigned long>((Rat(1) + Rat(4) * T * T).floor().get_ui(), 128));
    RegionSpec gapped = RegionSpec::gapped_strip(T);
    RegionSpec half_sector = RegionSpec::half_sector_sq(dt_sq);

    for (unsigned t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, t);
        std::uniform_int_distribution<unsigned> hd(1, 4);
        RatPoly f = random_even_gapped_poly(hd(rng), T, rng);
        unsigned deg = static_cast<unsigned>(f.degree());
        ++rep.trials_run;
        auto fail = [&](const std::string& what) {
            ++rep.failures;
            std::ostringstream os;
            os << what << " seed=" << cfg.seed << " trial=" << t
               << " T=" << T.str() << " f=" << poly_str(f);
            rep.counterexamples.push_back(os.str());
        };

        // hypothesis certificate: Z(f) in S(T)
        ++rep.checks;
        RootSet rs = all_roots(f, cfg.prec);
        if (!rs.certified || region_contains(rs, gapped).result != Containment::Yes) {
            fail("hypothesis");
            continue;
        }

        // full Jensen grid
        RatJet jet = jet_of_poly(f, deg + d_cap, Parity::Even);
        bool grid_ok = true;
        for (unsigned n = 0; n <= deg && grid_ok; ++n) {
            for (unsigned d = 1; d <= d_cap && grid_ok; ++d) {
                RatPoly J = jensen(jet, n, d);
                if (J.is_zero()) continue;
                if (is_hyperbolic(J).status != VerdictStatus::Hyperbolic) {
                    grid_ok = false;
                    std::ostringstream os;
                    os << "grid n=" << n << " d=" << d;
                    fail(os.str());
                }
            }
        }
        ++rep.checks;

        // proof identities, exact
        RatJet fj = jet_of_poly(f, deg, Parity::Even);
        RatPoly f0 = truncate_taylor(half_form(fj), deg / 2);
        RatPoly f0p = differentiate(f0), f0pp = differentiate(f0, 2);
        bool id_ok =
            differentiate(f).coeffs() ==
                f0p.substitute_square().shift_up(1).mul_int(Int(2)).coeffs() &&
            differentiate(f, 2).coeffs() ==
                (f0p.substitute_square() +
                 f0pp.substitute_square().shift_up(2).mul_int(Int(2)))
                    .mul_int(Int(2))
                    .coeffs() &&
            differentiate((f0p * f0p).shift_up(1)).coeffs() ==
                (f0p * (f0p + f0pp.shift_up(1).mul_int(Int(2)))).coeffs();
        ++rep.checks;
        if (!id_ok) fail("identities");

        // half-form derivative zero sets stay in the half sector
        RatPoly g = f0;
        while (g.degree() >= 1) {
            ++rep.checks;
            RootSet gr = all_roots(g, cfg.prec);
            auto c = region_contains(gr, half_sector);
            if (!gr.certified || c.result != Containment::Yes) {
                fail("half-sector containment deg=" + std::to_string(g.degree()));
                break;
            }
            g = differentiate(g);
        }
    }
    return rep;
}

// ---------------------------------------------------- sector-squaring suite

SuiteReport verify_sector_square(const TrialConfig& cfg,
                                 const std::vector<Rat>& delta_sqs) {
    SuiteReport rep;
    rep.name = "sector_square";
    for (const Rat& q : delta_sqs) {
        for (unsigned t = 0; t < cfg.trials; ++t) {
            auto rng = trial_rng(cfg.seed ^ splitmix64(q.num().get_ui() + 77),
                                 t);
            // dyadic rationals keep the whole check exact
            std::uniform_int_distribution<long> num(-640, 640);
            std::uniform_int_distribution<int> k(0, 6);
            Rat x(num(rng), Int(1) << k(rng));
            Rat y(num(rng), Int(1) << k(rng));
            CBall z = CBall::from_rats(x, y, cfg.prec);
            ++rep.trials_run;
            ++rep.checks;
            auto r = sector_square_member_sq(z, q);
            if (r.agreement == SectorSquareReport::Agreement::Disagree) {
                ++rep.failures;
                std::ostringstream os;
                os << "z=(" << x.str() << "," << y.str() << ") delta_sq=" << q.str();
                rep.counterexamples.push_back(os.str());
            } else if (r.agreement == SectorSquareReport::Agreement::Indeterminate) {
                ++rep.indeterminate;
            }
        }
    }
    return rep;
}

// ----------------------------------------------------------- Gauss-Lucas

SuiteReport verify_gauss_lucas(const TrialConfig& cfg, unsigned deg_max) {
    SuiteReport rep;
    rep.name = "gauss_lucas";
    for (unsigned t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, t);
        std::uniform_int_distribution<unsigned> dd(2, deg_max);
        unsigned deg = dd(rng);
        std::vector<Rat> coeffs;
        for (unsigned i = 0; i <= deg; ++i)
            coeffs.push_back(random_rat_in(rng, Rat(-10), Rat(10), 12));
        if (coeffs.back().is_zero()) coeffs.back() = Rat(1);
        RatPoly P(std::move(coeffs));
        ++rep.trials_run;
        ++rep.checks;
        GaussLucasReport g = gauss_lucas_check(P, cfg.prec);
        if (g.status == GLStatus::Indeterminate) {
            ++rep.indeterminate;
            continue;
        }
        if (g.status == GLStatus::Fail) {
            // minimize: zero out coefficients while the failure persists
            RatPoly M = P;
            bool shrunk = true;
            while (shrunk) {
                shrunk = false;
                for (std::size_t i = 0; i + 1 < M.size(); ++i) {
                    if (M[i].is_zero()) continue;
                    std::vector<Rat> c = M.coeffs();
                    c[i] = Rat(0);
                    RatPoly cand(std::move(c));
                    if (cand.degree() >= 2 &&
                        gauss_lucas_check(cand, cfg.prec).status == GLStatus::Fail) {
                        M = cand;
                        shrunk = true;
                        break;
                    }
                }
            }
            ++rep.failures;
            std::ostringstream os;
            os << "seed=" << cfg.seed << " trial=" << t << " P=" << poly_str(P)
               << " minimized=" << poly_str(M);
            rep.counterexamples.push_back(os.str());
        }
    }
    return rep;
}

// ------------------------------------------------------------------ bounds

Int bound_theorem1(const Ball& c, const Int& n1, const Int& d) {
    if (c.lower_rat().sign() <= 0)
        throw DomainError("bound_theorem1: c must be positive");
    if (d < 1) throw DomainError("bound_theorem1: d >= 1 required");
    Int candidate;
    Rat base = Rat(d, Int(4));
    if (c.is_exact() && c.mid_rat().is_integer()) {
        // exact path: (d/4)^(k/2) with integer k
        long k = c.mid_rat().num().get_si();
        if (k % 2 == 0) {
            candidate = base.pow(k / 2).ceil();
        } else {
            // exact ceil of sqrt((d/4)^k)
            Rat pk = base.pow(k);
            Int m = pk.sqrt_lb().floor();
            while (Rat(m) * Rat(m) < pk) m += 1;
            candidate = m;
        }
    } else {
        Prec p = std::max<Prec>(c.prec(), 128);
        Ball power = pow(Ball::from_rat(base, p), c.mul_2exp(-1), p);
        candidate = power.upper_rat().ceil();  // outward rounding
    }
    return std::max(candidate, n1);
}

Theorem4Bounds bound_theorem4(const Rat& T) {
    if (T < Rat(1, 2))
        throw HypothesisViolation("bound_theorem4: requires T >= 1/2");
    Theorem4Bounds b;
    Rat t2 = T * T;
    b.d_max_xi = (Rat(1) + Rat(4) * t2).floor();
    // T^2 (1 + T^-2/4)^2 = (4T^2 + 1)^2 / (16 T^2)
    Rat remark = (Rat(4) * t2 + Rat(1)).pow(2) / (Rat(16) * t2);
    b.d_max_xi0 = remark.floor();
    return b;
}

Theorem4Bounds bound_theorem4(const Ball& T) {
    // both bounds increase with T: the lower endpoint gives safe values
    return bound_theorem4(T.lower_rat());
}

// ------------------------------------------------------------------- scans

namespace {

template <class C>
ScanResult scan_grid_impl(const TaylorJet<C>& jet, unsigned d_lo, unsigned d_hi,
                          unsigned n_lo, unsigned n_hi, Prec prec) {
    if (d_lo < 1) d_lo = 1;
    if (static_cast<std::size_t>(n_hi) + d_hi > jet.max_order())
        throw JetTooShort("scan_jensen_grid: jet holds too few derivatives");
    ScanResult res;
    std::map<unsigned, std::vector<std::pair<unsigned, VerdictStatus>>> by_d;
    for (unsigned d = d_lo; d <= d_hi; ++d) {
        for (unsigned n = n_lo; n <= n_hi; ++n) {
            Poly<C> J = jensen(jet, n, d, prec);
            VerdictStatus v;
            if (J.is_zero()) {
                v = VerdictStatus::Indeterminate;
            } else {
                try {
                    if constexpr (std::is_same_v<C, Rat>)
                        v = is_hyperbolic(J).status;
                    else
                        v = is_hyperbolic(J, prec).status;
                } catch (const AmbiguousDegree&) {
                    v = VerdictStatus::Indeterminate;
                }
            }
            res.grid.push_back({n, d, v});
            by_d[d].emplace_back(n, v);
        }
    }
    for (auto& [d, cells] : by_d) {
        std::optional<unsigned> first;
        for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
            if (it->second == VerdictStatus::Hyperbolic)
                first = it->first;
            else
                break;
        }
        res.first_all_hyperbolic_n[d] = first;
    }
    res.caveat_empirical = true;
    return res;
}

}  // namespace

ScanResult scan_jensen_grid(const RatJet& jet, unsigned d_lo, unsigned d_hi,
                            unsigned n_lo, unsigned n_hi, Prec prec) {
    return scan_grid_impl(jet, d_lo, d_hi, n_lo, n_hi, prec);
}

ScanResult scan_jensen_grid(const BallJet& jet, unsigned d_lo, unsigned d_hi,
                            unsigned n_lo, unsigned n_hi, Prec prec) {
    return scan_grid_impl(jet, d_lo, d_hi, n_lo, n_hi, prec);
}

// ---------------------------------------------------------------- theorem 2

namespace {

// sum_{k > trunc} A B^{n+k} (n+k+1)^q R^k / k!, rigorous
Ball taylor_tail_bound(const DecayEnvelope& env, unsigned n, unsigned trunc,
                       const Rat& R, Prec prec) {
    Ball acc = Ball::from_long(0, prec);
    unsigned k = trunc + 1;
    Rat t0 = env.A * env.B.pow(static_cast<long>(n + k)) *
             Rat(static_cast<long>(n + k + 1)).pow(static_cast<long>(env.q)) *
             R.pow(static_cast<long>(k)) / Rat(factorial(k));
    Ball term = Ball::from_rat(t0, prec);
    Int two_q_i = Int(1) << env.q;
    Rat two_q = Rat(two_q_i);
    for (; k < trunc + 4096; ++k) {
        Rat ratio_ub = env.B * R * two_q / Rat(static_cast<long>(k + 1));
        if (ratio_ub <= Rat(1, 2)) {
            acc = acc + term.mul_2exp(1);  // geometric tail from here
            return acc;
        }
        acc = acc + term;
        Rat step = env.B * R *
                   Rat(static_cast<long>(n + k + 2)).pow(static_cast<long>(env.q)) /
                   (Rat(static_cast<long>(n + k + 1)).pow(static_cast<long>(env.q)) *
                    Rat(static_cast<long>(k + 1)));
        term = term * Ball::from_rat(step, prec);
    }
    throw TailBoundUnavailable("taylor_tail_bound: tail did not stabilize");
}

}  // namespace

Theorem2Report scan_theorem2(const RatJet& jet, const Ball& c, unsigned n_lo,
                             unsigned n_hi, const Rat& disk_radius,
                             unsigned trunc, Prec prec) {
    if (!jet.decay)
        throw TailBoundUnavailable("scan_theorem2: jet carries no decay envelope");
    if (jet.order_hint &&
        c.lower_rat().to_double() <= *jet.order_hint)
        throw DomainError("scan_theorem2: requires c > order of f");
    if (static_cast<std::size_t>(n_hi) + trunc > jet.max_order())
        throw JetTooShort("scan_theorem2: jet holds too few derivatives");

    Theorem2Report rep;
    Rat R2 = disk_radius * disk_radius;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        RatPoly P = truncate_taylor(jet.shifted(n), trunc);
        Theorem2Report::Row row{n, 0, 0, 0, "", true};
        row.tail_bound =
            taylor_tail_bound(*jet.decay, n, trunc, disk_radius, prec).str(6);
        if (P.degree() >= 1) {
            RootSet rs = all_roots(P, prec);
            if (!rs.certified) {
                row.contained = false;
                row.below_threshold = ~0u;
                rep.rows.push_back(row);
                continue;
            }
            std::optional<Ball> threshold;
            if (n >= 1)
                threshold = pow(Ball::from_long(static_cast<long>(n), prec),
                                Ball::from_long(1, prec) / c, prec);
            for (const auto& e : rs.roots) {
                // minimal |z|^2 over the rectangle, exact
                auto lo_abs_sq = [](const Ball& b) {
                    Rat l = b.lower_rat(), h = b.upper_rat();
                    if (l.sign() <= 0 && h.sign() >= 0) return Rat(0);
                    Rat m = std::min(l.abs(), h.abs());
                    return m * m;
                };
                Rat min_dist2 = lo_abs_sq(e.disk.re) + lo_abs_sq(e.disk.im);
                if (min_dist2 > R2) continue;  // certainly outside the disk
                row.roots_in_disk += e.multiplicity;
                if (e.disk.im.sign() == Sign::ZeroStraddling) continue;
                row.nonreal_in_disk += e.multiplicity;
                bool cleared = false;
                if (n == 0) {
                    cleared = true;  // threshold 0: the strip alone suffices
                } else {
                    Rat thr_ub = threshold->upper_rat();
                    Rat re_lo = std::min(e.disk.re.lower_rat().abs(),
                                         e.disk.re.upper_rat().abs());
                    if (e.disk.re.lower_rat().sign() * e.disk.re.upper_rat().sign() <= 0)
                        re_lo = Rat(0);
                    cleared = re_lo >= thr_ub;
                }
                if (!cleared) row.below_threshold += e.multiplicity;
            }
        }
        row.contained = row.below_threshold == 0;
        rep.rows.push_back(row);
    }
    std::optional<unsigned> n1;
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
        if (it->contained)
            n1 = it->n;
        else
            break;
    }
    rep.empirical_n1 = n1;
    rep.caveat_empirical = true;
    return rep;
}

// --------------------------------------------------------------- demo jets

RatJet exp_jet(std::size_t M) {
    RatJet j;
    j.values.assign(M + 1, Rat(1));
    j.order_hint = 1.0;
    j.label = "exp";
    j.decay = DecayEnvelope{Rat(1), Rat(1), 0};
    return j;
}

RatJet strip_cos_jet(std::size_t M) {
    // f(z) = (z^2 + 1/16) cos z:
    // f^(m)(0) = (1/16) cos^(m)(0) + m(m-1) cos^(m-2)(0)
    auto cosd = [](long m) -> Rat {
        if (m < 0 || m % 2 == 1) return Rat(0);
        return (m / 2) % 2 == 0 ? Rat(1) : Rat(-1);
    };
    RatJet j;
    j.values.reserve(M + 1);
    for (std::size_t m = 0; m <= M; ++m) {
        long lm = static_cast<long>(m);
        j.values.push_back(Rat(1, 16) * cosd(lm) +
                           Rat(lm * (lm - 1)) * cosd(lm - 2));
    }
    j.parity = Parity::Even;
    j.order_hint = 1.0;
    j.label = "strip_cos";
    // |f^(m)(0)| <= 1/16 + m(m-1) <= (m+1)^2
    j.decay = DecayEnvelope{Rat(1), Rat(1), 2};
    return j;
}

}  // namespace jensenlab
