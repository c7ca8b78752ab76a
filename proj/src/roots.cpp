#include "jensenlab/roots.hpp"

#include <algorithm>
#include <utility>

namespace jensenlab {

// ---------------------------------------------------------------- exact gcd

namespace {

Rat content(const RatPoly& p) {
    // gcd of numerators over lcm of denominators, as a positive rational
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        Int n;
        mpz_gcd(n.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        num_gcd = n;
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        den_lcm = l;
    }
    if (num_gcd == 0) return Rat(1);
    return Rat(num_gcd, den_lcm);
}

// scale by a positive constant so coefficients are coprime integers
RatPoly primitive(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p.scale(Rat(1) / content(p));
}

RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("poly remainder: zero divisor");
    long db = b.degree_bound();
    while (!a.is_zero() && a.degree_bound() >= db) {
        long da = a.degree_bound();
        Rat q = a.leading() / b.leading();
        a = a + (-b.shift_up(static_cast<unsigned long>(da - db)).scale(q));
        if (!a.is_zero() && a.degree_bound() == da) {
            // leading term must cancel exactly; trim manually
            std::vector<Rat> c = a.coeffs();
            c.pop_back();
            a = RatPoly(std::move(c));
        }
    }
    return a;
}

RatPoly rat_quot(RatPoly a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("poly quotient: zero divisor");
    long db = b.degree_bound();
    std::vector<Rat> q(a.is_zero() || a.degree_bound() < db
                           ? 1
                           : static_cast<std::size_t>(a.degree_bound() - db) + 1,
                       Rat(0));
    while (!a.is_zero() && a.degree_bound() >= db) {
        long da = a.degree_bound();
        Rat f = a.leading() / b.leading();
        q[static_cast<std::size_t>(da - db)] = f;
        a = a + (-b.shift_up(static_cast<unsigned long>(da - db)).scale(f));
        if (!a.is_zero() && a.degree_bound() == da) {
            std::vector<Rat> c = a.coeffs();
            c.pop_back();
            a = RatPoly(std::move(c));
        }
    }
    return RatPoly(std::move(q));
}

RatPoly make_monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p.scale(Rat(1) / p.leading());
}

// monic gcd; returns constant 1 for coprime inputs
RatPoly rat_gcd(RatPoly a, RatPoly b) {
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        RatPoly r = primitive(rat_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return RatPoly::constant(Rat(1));
    return make_monic(a);
}

}  // namespace

RatPoly squarefree_part(const RatPoly& P) {
    if (P.is_zero()) throw DomainError("squarefree_part: zero polynomial");
    if (P.degree() == 0) return P;
    RatPoly g = rat_gcd(P, differentiate(P));
    if (g.degree() == 0) return P;
    return rat_quot(P, g);
}

// Yun decomposition: list of (squarefree factor, multiplicity), constants
// dropped. Factors are monic.
static std::vector<std::pair<RatPoly, unsigned>> yun_decompose(const RatPoly& P) {
    std::vector<std::pair<RatPoly, unsigned>> out;
    RatPoly g = rat_gcd(P, differentiate(P));
    if (g.degree() == 0) {
        if (P.degree() >= 1) out.emplace_back(make_monic(P), 1);
        return out;
    }
    RatPoly w = rat_quot(P, g);
    RatPoly y = rat_quot(differentiate(P), g);
    RatPoly z = y + (-differentiate(w));
    unsigned i = 1;
    while (w.degree() >= 1) {
        RatPoly a = rat_gcd(w, z);
        if (a.degree() >= 1) out.emplace_back(make_monic(a), i);
        w = rat_quot(w, a);
        y = rat_quot(z, a);
        z = y + (-differentiate(w));
        ++i;
    }
    return out;
}

// ------------------------------------------------------------------- Sturm

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& P) {
    std::vector<RatPoly> chain;
    chain.push_back(primitive(P));
    RatPoly d = differentiate(P);
    if (d.is_zero()) return chain;
    chain.push_back(primitive(d));
    while (true) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain[chain.size() - 1];
        RatPoly r = rat_rem(a, b);
        if (r.is_zero()) break;
        chain.push_back(primitive(-r));
    }
    return chain;
}

int sign_at_pos_inf(const RatPoly& p) { return p.leading().sign(); }

int sign_at_neg_inf(const RatPoly& p) {
    int s = p.leading().sign();
    return (p.degree_bound() % 2 == 0) ? s : -s;
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long variations_at(const std::vector<RatPoly>& chain, const std::optional<Rat>& x,
                   bool neg_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        if (!x) {
            signs.push_back(neg_inf ? sign_at_neg_inf(p) : sign_at_pos_inf(p));
        } else {
            signs.push_back(eval(p, *x).sign());
        }
    }
    return variations(signs);
}

}  // namespace

long sturm_count(const RatPoly& P, std::optional<Rat> a, std::optional<Rat> b) {
    if (P.is_zero()) throw DomainError("sturm_count: zero polynomial");
    if (a && b && !(*a < *b)) throw DomainError("sturm_count: requires a < b");
    if (P.degree() == 0) return 0;
    auto chain = sturm_chain(P);
    long va = variations_at(chain, a, /*neg_inf=*/true);
    long vb = variations_at(chain, b, /*neg_inf=*/false);
    return va - vb;
}

long sturm_count(const RatPoly& P) {
    return sturm_count(P, std::nullopt, std::nullopt);
}

// --------------------------------------------------- Aberth + certification

namespace {

// Bare complex midpoint arithmetic for the iteration (no enclosures).
struct MC {
    Mpf re, im;
    explicit MC(Prec p) : re(p), im(p) {}
};

MC mc_add(const MC& a, const MC& b, Prec p) {
    MC r(p);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

MC mc_sub(const MC& a, const MC& b, Prec p) {
    MC r(p);
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

MC mc_mul(const MC& a, const MC& b, Prec p) {
    MC r(p);
    Mpf t1(p), t2(p);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}

Mpf mc_abs2(const MC& a, Prec p) {
    Mpf r(p), t(p);
    mpfr_sqr(r.get(), a.re.get(), MPFR_RNDN);
    mpfr_sqr(t.get(), a.im.get(), MPFR_RNDN);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDN);
    return r;
}

MC mc_div(const MC& a, const MC& b, Prec p) {
    Mpf d = mc_abs2(b, p);
    if (mpfr_zero_p(d.get())) throw DomainError("mc_div: zero divisor");
    MC conj(p);
    mpfr_set(conj.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_neg(conj.im.get(), b.im.get(), MPFR_RNDN);
    MC n = mc_mul(a, conj, p);
    MC r(p);
    mpfr_div(r.re.get(), n.re.get(), d.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), n.im.get(), d.get(), MPFR_RNDN);
    return r;
}

// Horner for real coefficient list at complex point.
MC mc_horner(const std::vector<Mpf>& c, const MC& z, Prec p) {
    MC acc(p);
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = mc_mul(acc, z, p);
        mpfr_add(acc.re.get(), acc.re.get(), c[i].get(), MPFR_RNDN);
    }
    return acc;
}

struct AberthState {
    std::vector<MC> c;
    bool converged = false;
};

AberthState aberth_iterate(const std::vector<Mpf>& coeff, Prec wp, int max_sweeps,
                           Prec target_bits) {
    std::size_t n = coeff.size() - 1;
    AberthState st;
    // derivative coefficients
    std::vector<Mpf> dcoeff;
    dcoeff.reserve(n);
    for (std::size_t k = 1; k < coeff.size(); ++k) {
        Mpf d(wp);
        mpfr_mul_ui(d.get(), coeff[k].get(), static_cast<unsigned long>(k), MPFR_RNDN);
        dcoeff.push_back(std::move(d));
    }

    // Fujiwara-style starting radius from exponents
    long en = mpfr_get_exp(coeff[n].get());
    long rexp = -8;
    for (std::size_t i = 0; i < n; ++i) {
        if (mpfr_zero_p(coeff[i].get())) continue;
        long e = mpfr_get_exp(coeff[i].get()) - en;
        long k = static_cast<long>(n - i);
        long cand = e / k + 2;
        rexp = std::max(rexp, cand);
    }
    Mpf radius(wp);
    mpfr_set_ui_2exp(radius.get(), 1, rexp, MPFR_RNDN);

    // asymmetric starting angles
    Mpf two_pi(wp);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
    st.c.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Mpf theta(wp);
        mpfr_mul_d(theta.get(), two_pi.get(),
                   (static_cast<double>(k) + 0.3137) / static_cast<double>(n),
                   MPFR_RNDN);
        MC z(wp);
        mpfr_cos(z.re.get(), theta.get(), MPFR_RNDN);
        mpfr_sin(z.im.get(), theta.get(), MPFR_RNDN);
        mpfr_mul(z.re.get(), z.re.get(), radius.get(), MPFR_RNDN);
        mpfr_mul(z.im.get(), z.im.get(), radius.get(), MPFR_RNDN);
        st.c.push_back(std::move(z));
    }

    Mpf tol2(wp);
    mpfr_set_ui_2exp(tol2.get(), 1, -2 * static_cast<long>(target_bits), MPFR_RNDN);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Mpf max_rel2(wp);
        mpfr_set_zero(max_rel2.get(), 1);
        for (std::size_t i = 0; i < n; ++i) {
            MC p = mc_horner(coeff, st.c[i], wp);
            if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get())) continue;
            MC pd = mc_horner(dcoeff, st.c[i], wp);
            MC nwt(wp);
            bool have_nwt = false;
            if (!(mpfr_zero_p(pd.re.get()) && mpfr_zero_p(pd.im.get()))) {
                nwt = mc_div(p, pd, wp);
                have_nwt = true;
            }
            if (!have_nwt) {
                // perturb a stationary point
                mpfr_nextabove(st.c[i].re.get());
                continue;
            }
            MC s(wp);
            bool bad = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                MC d = mc_sub(st.c[i], st.c[j], wp);
                Mpf d2 = mc_abs2(d, wp);
                if (mpfr_zero_p(d2.get())) {
                    bad = true;
                    break;
                }
                MC one(wp);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                s = mc_add(s, mc_div(one, d, wp), wp);
            }
            if (bad) {
                mpfr_nextabove(st.c[i].re.get());
                continue;
            }
            MC denom(wp);
            MC ns = mc_mul(nwt, s, wp);
            mpfr_ui_sub(denom.re.get(), 1, ns.re.get(), MPFR_RNDN);
            mpfr_neg(denom.im.get(), ns.im.get(), MPFR_RNDN);
            MC w = nwt;
            Mpf den2 = mc_abs2(denom, wp);
            if (!mpfr_zero_p(den2.get())) w = mc_div(nwt, denom, wp);
            st.c[i] = mc_sub(st.c[i], w, wp);

            Mpf w2 = mc_abs2(w, wp), c2 = mc_abs2(st.c[i], wp), rel(wp);
            mpfr_add_ui(c2.get(), c2.get(), 1, MPFR_RNDN);
            mpfr_div(rel.get(), w2.get(), c2.get(), MPFR_RNDN);
            mpfr_max(max_rel2.get(), max_rel2.get(), rel.get(), MPFR_RNDN);
        }
        if (mpfr_cmp(max_rel2.get(), tol2.get()) < 0) {
            st.converged = true;
            break;
        }
    }
    return st;
}

struct DiskRat {
    Rat x, y, r;  // center and radius, exact dyadic data
};

bool disks_intersect(const DiskRat& a, const DiskRat& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y, s = a.r + b.r;
    return dx * dx + dy * dy <= s * s;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct CertifiedDisks {
    std::vector<DiskRat> disks;
    bool ok = false;
};

// Weierstrass corrections with ball coefficients give Gerschgorin-style
// inclusion disks valid for every coefficient selection: all roots lie in
// the union of D(c_i - W_i, (n-1)|W_i|), and a connected component of k
// disks holds exactly k roots.
CertifiedDisks weierstrass_disks(const BallPoly& P, const std::vector<MC>& c,
                                 Prec wp) {
    CertifiedDisks out;
    std::size_t n = c.size();
    const Ball& lead = P.leading();
    try {
        std::vector<CBall> cb;
        cb.reserve(n);
        for (const auto& z : c)
            cb.emplace_back(Ball::exact(z.re, wp), Ball::exact(z.im, wp));
        for (std::size_t i = 0; i < n; ++i) {
            CBall denom(Ball::from_long(1, wp), Ball::from_long(0, wp));
            denom.re = denom.re * lead;
            denom.im = denom.im * lead;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                denom = denom * (cb[i] - cb[j]);
            }
            CBall w = eval(P, cb[i]) / denom;
            CBall center = cb[i] - w;
            Rat wabs = abs(w).upper_rat();
            Rat x = center.re.mid_rat(), y = center.im.mid_rat();
            Rat extra = center.re.rad_rat() + center.im.rad_rat();
            Rat radius = Rat(static_cast<long>(n - 1)) * wabs + extra;
            out.disks.push_back({x, y, radius});
        }
        out.ok = true;
    } catch (const DomainError&) {
        out.ok = false;  // coincident approximants or zero-straddling division
    }
    return out;
}

struct ComponentInfo {
    Rat x_lo, x_hi, y_lo, y_hi;  // bounding rectangle of member disks
    unsigned count = 0;
    bool real_certified = false;
};

CBall rect_to_cball(const Rat& xlo, const Rat& xhi, const Rat& ylo, const Rat& yhi,
                    Prec prec, bool exact_real) {
    Mpf a(prec), b(prec);
    mpfr_set_q(a.get(), xlo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.get(), xhi.raw().get_mpq_t(), MPFR_RNDU);
    Ball re = Ball::from_endpoints(a, b, prec);
    if (exact_real) return CBall(re, Ball::from_long(0, prec));
    mpfr_set_q(a.get(), ylo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.get(), yhi.raw().get_mpq_t(), MPFR_RNDU);
    return CBall(re, Ball::from_endpoints(a, b, prec));
}

// Groups inclusion disks into connected components, certifies real roots,
// then applies the cluster merge rule (separation < 4x combined radius).
std::vector<RootEnclosure> disks_to_enclosures(const std::vector<DiskRat>& disks,
                                               unsigned outer_mult, Prec prec) {
    std::size_t n = disks.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (disks_intersect(disks[i], disks[j])) uf.unite(i, j);

    std::vector<std::vector<std::size_t>> comps;
    {
        std::vector<long> comp_of(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = uf.find(i);
            long& idx = comp_of[r];
            if (idx < 0) {
                idx = static_cast<long>(comps.size());
                comps.emplace_back();
            }
            comps[static_cast<std::size_t>(idx)].push_back(i);
        }
    }

    struct Pending {
        ComponentInfo info;
        Rat cx, cy, cr;  // covering disk for the merge rule
    };
    std::vector<Pending> pend;
    for (const auto& members : comps) {
        ComponentInfo ci;
        ci.count = static_cast<unsigned>(members.size());
        bool first = true;
        for (std::size_t idx : members) {
            const DiskRat& d = disks[idx];
            Rat xl = d.x - d.r, xh = d.x + d.r, yl = d.y - d.r, yh = d.y + d.r;
            if (first) {
                ci.x_lo = xl; ci.x_hi = xh; ci.y_lo = yl; ci.y_hi = yh;
                first = false;
            } else {
                ci.x_lo = std::min(ci.x_lo, xl); ci.x_hi = std::max(ci.x_hi, xh);
                ci.y_lo = std::min(ci.y_lo, yl); ci.y_hi = std::max(ci.y_hi, yh);
            }
        }
        // singleton on the axis: real iff the conjugate disk meets no other disk
        if (members.size() == 1) {
            const DiskRat& d = disks[members[0]];
            bool touches_axis = d.y.abs() <= d.r;
            if (touches_axis) {
                DiskRat conj{d.x, -d.y, d.r};
                bool clean = true;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == members[0]) continue;
                    if (disks_intersect(conj, disks[j])) {
                        clean = false;
                        break;
                    }
                }
                ci.real_certified = clean;
            }
        }
        Pending p;
        p.info = ci;
        p.cx = (ci.x_lo + ci.x_hi) * Rat(1, 2);
        p.cy = (ci.y_lo + ci.y_hi) * Rat(1, 2);
        // half-diagonal upper bound
        p.cr = (ci.x_hi - ci.x_lo) * Rat(1, 2) + (ci.y_hi - ci.y_lo) * Rat(1, 2);
        pend.push_back(std::move(p));
    }

    // cluster merge rule on component covering disks
    bool changed = true;
    while (changed && pend.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < pend.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < pend.size() && !changed; ++j) {
                Rat dx = pend[i].cx - pend[j].cx, dy = pend[i].cy - pend[j].cy;
                Rat s = Rat(4) * (pend[i].cr + pend[j].cr);
                if (dx * dx + dy * dy < s * s) {
                    Pending m;
                    m.info.count = pend[i].info.count + pend[j].info.count;
                    m.info.x_lo = std::min(pend[i].info.x_lo, pend[j].info.x_lo);
                    m.info.x_hi = std::max(pend[i].info.x_hi, pend[j].info.x_hi);
                    m.info.y_lo = std::min(pend[i].info.y_lo, pend[j].info.y_lo);
                    m.info.y_hi = std::max(pend[i].info.y_hi, pend[j].info.y_hi);
                    m.info.real_certified = false;
                    m.cx = (m.info.x_lo + m.info.x_hi) * Rat(1, 2);
                    m.cy = (m.info.y_lo + m.info.y_hi) * Rat(1, 2);
                    m.cr = (m.info.x_hi - m.info.x_lo) * Rat(1, 2) +
                           (m.info.y_hi - m.info.y_lo) * Rat(1, 2);
                    pend.erase(pend.begin() + static_cast<long>(j));
                    pend.erase(pend.begin() + static_cast<long>(i));
                    pend.push_back(std::move(m));
                    changed = true;
                }
            }
        }
    }

    std::vector<RootEnclosure> out;
    for (const auto& p : pend) {
        RootEnclosure e{rect_to_cball(p.info.x_lo, p.info.x_hi, p.info.y_lo,
                                      p.info.y_hi, prec, p.info.real_certified),
                        p.info.count * outer_mult, p.info.real_certified,
                        p.info.count > 1};
        out.push_back(std::move(e));
    }
    return out;
}

// largest enclosure radius, for convergence decisions
Rat enclosure_width(const std::vector<RootEnclosure>& rs) {
    Rat w(0);
    for (const auto& e : rs)
        w = std::max(w, std::max(e.disk.re.rad_rat(), e.disk.im.rad_rat()));
    return w;
}

// One Aberth+certify attempt for a square-free-expected ball polynomial.
std::optional<std::vector<RootEnclosure>> root_attempt(const BallPoly& P,
                                                       unsigned outer_mult,
                                                       Prec prec, Prec wp) {
    std::vector<Mpf> mids;
    mids.reserve(P.size());
    for (const auto& b : P.coeffs()) {
        Mpf m(wp);
        mpfr_set(m.get(), b.mid().get(), MPFR_RNDN);
        mids.push_back(std::move(m));
    }
    AberthState st = aberth_iterate(mids, wp, 200, prec);
    CertifiedDisks cd = weierstrass_disks(P, st.c, wp);
    if (!cd.ok) return std::nullopt;
    return disks_to_enclosures(cd.disks, outer_mult, prec);
}

std::vector<RootEnclosure> roots_of_ball_poly(const BallPoly& P, unsigned outer_mult,
                                              Prec prec, bool& certified) {
    long deg = P.degree();
    // iteration cap, then one precision doubling (bounded runtime)
    Prec wp = std::max<Prec>(prec + 64, 96);
    auto first = root_attempt(P, outer_mult, prec, wp);
    bool first_good =
        first && !first->empty() &&
        enclosure_width(*first) <= Rat(Int(1), Int(1) << std::min<Prec>(prec / 2, 512));
    if (!first_good) {
        auto second = root_attempt(P, outer_mult, prec, 2 * wp);
        if (second && (!first || enclosure_width(*second) <= enclosure_width(*first)))
            first = std::move(second);
    }
    if (!first) {
        certified = false;
        return {};
    }
    certified = true;
    unsigned total = 0;
    for (const auto& e : *first) total += e.multiplicity;
    if (total != static_cast<unsigned>(deg) * outer_mult) certified = false;
    return *first;
}

}  // namespace

RootSet all_roots(const BallPoly& P, Prec prec) {
    long deg = P.degree();  // throws AmbiguousDegree if uncertifiable
    if (deg < 1) throw DomainError("all_roots: degree >= 1 required");
    RootSet rs;
    rs.degree = deg;
    bool cert = false;
    rs.roots = roots_of_ball_poly(P, 1, prec, cert);
    rs.certified = cert;
    Ball res = Ball::from_long(0, prec);
    for (const auto& e : rs.roots) {
        CBall center(Ball::exact(e.disk.re.mid(), prec),
                     Ball::exact(e.disk.im.mid(), prec));
        res = hull(res, abs(eval(P, center)));
    }
    rs.residual = res;
    return rs;
}

RootSet all_roots(const RatPoly& P, Prec prec) {
    if (P.is_zero() || P.degree() < 1)
        throw DomainError("all_roots: degree >= 1 required");
    RootSet rs;
    rs.degree = P.degree();
    rs.certified = true;
    auto factors = yun_decompose(P);
    for (const auto& [f, mult] : factors) {
        bool cert = false;
        auto part = roots_of_ball_poly(to_ball(f, prec + 64), mult, prec, cert);
        if (!cert) rs.certified = false;
        for (auto& e : part) rs.roots.push_back(std::move(e));
    }
    Ball res = Ball::from_long(0, prec);
    for (const auto& e : rs.roots) {
        CBall center(Ball::exact(e.disk.re.mid(), prec),
                     Ball::exact(e.disk.im.mid(), prec));
        res = hull(res, abs(eval(P, center)));
    }
    rs.residual = res;
    return rs;
}

// ------------------------------------------------------------- hyperbolicity

HyperbolicityVerdict is_hyperbolic(const RatPoly& P) {
    if (P.is_zero()) throw DomainError("is_hyperbolic: zero polynomial");
    long deg = P.degree();
    if (deg == 0) return {VerdictStatus::Hyperbolic, std::nullopt, std::nullopt};
    RatPoly sf = squarefree_part(P);
    long m = sf.degree();
    long real_roots = sturm_count(sf);
    if (real_roots == m)
        return {VerdictStatus::Hyperbolic, std::nullopt, std::nullopt};
    HyperbolicityVerdict v{VerdictStatus::NotHyperbolic, std::nullopt, std::nullopt};
    try {
        RootSet rs = all_roots(sf, kDefaultPrec);
        if (rs.certified)
            for (const auto& e : rs.roots)
                if (e.disk.im.sign() != Sign::ZeroStraddling) {
                    v.witness = e.disk;
                    break;
                }
    } catch (const Error&) {
        // witness is optional; the Sturm verdict stands
    }
    return v;
}

HyperbolicityVerdict is_hyperbolic(const BallPoly& P, Prec prec) {
    long deg = P.degree();  // may throw AmbiguousDegree
    if (deg == 0) return {VerdictStatus::Hyperbolic, std::nullopt, std::nullopt};

    bool all_exact = true;
    for (const auto& c : P.coeffs())
        if (!c.is_exact()) {
            all_exact = false;
            break;
        }
    if (all_exact) {
        std::vector<Rat> rc;
        rc.reserve(P.size());
        for (const auto& c : P.coeffs()) rc.push_back(c.mid_rat());
        return is_hyperbolic(RatPoly(std::move(rc)));
    }

    RootSet rs = all_roots(P, prec);
    if (rs.certified) {
        bool all_real = true;
        for (const auto& e : rs.roots) {
            if (e.disk.im.sign() != Sign::ZeroStraddling)
                return {VerdictStatus::NotHyperbolic, e.disk, std::nullopt};
            if (!e.certified_real) all_real = false;
        }
        if (all_real)
            return {VerdictStatus::Hyperbolic, std::nullopt, std::nullopt};
    }
    // margin: how much imaginary uncertainty covers the axis
    Rat m(0);
    for (const auto& e : rs.roots)
        if (!e.certified_real) m = std::max(m, e.disk.im.upper_rat().abs());
    return {VerdictStatus::Indeterminate, std::nullopt,
            Ball::from_rat(m, prec)};
}

// ------------------------------------------------------------------ regions

ContainmentReport region_contains(const RootSet& rs, const RegionSpec& R) {
    if (!rs.certified)
        throw DomainError("region_contains: root set is not certified");
    bool indet = false;
    for (const auto& e : rs.roots) {
        Membership m = region_member(e.disk, R);
        if (m == Membership::Out) return {Containment::No, e.disk};
        if (m == Membership::Indeterminate) indet = true;
    }
    return {indet ? Containment::Indeterminate : Containment::Yes, std::nullopt};
}

// ------------------------------------------------- sector-squaring property

namespace {

SectorSquareReport combine_sector_report(Membership m1, Membership m2) {
    using A = SectorSquareReport::Agreement;
    SectorSquareReport r{m1, m2, A::Indeterminate};
    if ((m1 == Membership::In && m2 == Membership::In) ||
        (m1 == Membership::Out && m2 == Membership::Out))
        r.agreement = A::Agree;
    else if ((m1 == Membership::In && m2 == Membership::Out) ||
             (m1 == Membership::Out && m2 == Membership::In))
        r.agreement = A::Disagree;
    return r;
}

}  // namespace

SectorSquareReport sector_square_member_sq(const CBall& z, const Rat& q) {
    if (q.sign() <= 0 || q > Rat(1, 2))
        throw DomainError("sector_square_member: requires 0 < delta^2 <= 1/2");
    Rat qt = Rat(4) * q * (Rat(1) - q);
    if (z.is_exact()) {
        // fully exact path, including the squaring
        Rat x = z.re.mid_rat(), y = z.im.mid_rat();
        bool in_sector = y * y <= q * (x * x + y * y);
        Rat x2 = x * x - y * y, y2 = Rat(2) * x * y;
        bool in_half = (y2 * y2 <= qt * (x2 * x2 + y2 * y2)) && x2.sign() >= 0;
        return combine_sector_report(in_sector ? Membership::In : Membership::Out,
                                     in_half ? Membership::In : Membership::Out);
    }
    Membership m1 = region_member(z, RegionSpec::sector_sq(q));
    Membership m2 = region_member(sq(z), RegionSpec::half_sector_sq(qt));
    return combine_sector_report(m1, m2);
}

SectorSquareReport sector_square_member(const CBall& z, const Ball& delta) {
    Rat dlo = delta.lower_rat(), dhi = delta.upper_rat();
    // reject only when the enclosure proves the precondition violated
    if (dlo.sign() <= 0 || dlo * dlo > Rat(1, 2))
        throw DomainError("sector_square_member: requires 0 < delta <= 2^(-1/2)");
    if (delta.is_exact()) return sector_square_member_sq(z, dlo * dlo);
    // interval parameter: In must hold for the smallest q, Out for the largest
    Rat qlo = dlo * dlo, qhi = std::min(dhi * dhi, Rat(1, 2));
    auto member_iv = [&](const CBall& w, bool half) {
        auto mk = [&](const Rat& qq) {
            return half ? RegionSpec::half_sector_sq(Rat(4) * qq * (Rat(1) - qq))
                        : RegionSpec::sector_sq(qq);
        };
        Membership in_test = region_member(w, mk(qlo));
        Membership out_test = region_member(w, mk(qhi));
        if (in_test == Membership::In) return Membership::In;
        if (out_test == Membership::Out) return Membership::Out;
        return Membership::Indeterminate;
    };
    return combine_sector_report(member_iv(z, false), member_iv(sq(z), true));
}

// -------------------------------------------------------------- Gauss-Lucas

namespace {

struct Pt {
    Rat x, y;
};

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain; returns CCW hull without repeated endpoints.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Pt& a, const Pt& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Pt> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

Rat seg_dist_sq(const Pt& p, const Pt& a, const Pt& b) {
    Rat abx = b.x - a.x, aby = b.y - a.y;
    Rat len2 = abx * abx + aby * aby;
    Rat apx = p.x - a.x, apy = p.y - a.y;
    if (len2.is_zero()) return apx * apx + apy * apy;
    Rat t = (apx * abx + apy * aby) / len2;
    if (t < Rat(0)) t = Rat(0);
    if (t > Rat(1)) t = Rat(1);
    Rat cx = a.x + t * abx - p.x, cy = a.y + t * aby - p.y;
    return cx * cx + cy * cy;
}

// squared distance from p to the convex hull (0 when inside)
Rat hull_dist_sq(const Pt& p, const std::vector<Pt>& hull) {
    std::size_t n = hull.size();
    if (n == 0) throw DomainError("hull_dist_sq: empty hull");
    if (n == 1) return seg_dist_sq(p, hull[0], hull[0]);
    if (n >= 3) {
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (cross(hull[i], hull[(i + 1) % n], p).sign() < 0) {
                inside = false;
                break;
            }
        }
        if (inside) return Rat(0);
    }
    Rat best = seg_dist_sq(p, hull[0], hull[n > 1 ? 1 : 0]);
    for (std::size_t i = 0; i + 1 < n; ++i)
        best = std::min(best, seg_dist_sq(p, hull[i], hull[i + 1]));
    if (n >= 3) best = std::min(best, seg_dist_sq(p, hull[n - 1], hull[0]));
    return best;
}

}  // namespace

GaussLucasReport gauss_lucas_check(const RatPoly& P, Prec prec) {
    if (P.is_zero() || P.degree() < 2)
        throw DomainError("gauss_lucas_check: degree >= 2 required");
    RootSet rp = all_roots(P, prec);
    RootSet rd = all_roots(differentiate(P), prec);
    if (!rp.certified || !rd.certified)
        return {GLStatus::Indeterminate, std::nullopt};

    std::vector<Pt> centers;
    Rat max_rad(0);
    for (const auto& e : rp.roots) {
        centers.push_back({e.disk.re.mid_rat(), e.disk.im.mid_rat()});
        max_rad = std::max(max_rad, e.disk.re.rad_rat() + e.disk.im.rad_rat());
    }
    std::vector<Pt> hull = convex_hull(centers);

    for (const auto& e : rd.roots) {
        Pt q{e.disk.re.mid_rat(), e.disk.im.mid_rat()};
        Rat combined = max_rad + e.disk.re.rad_rat() + e.disk.im.rad_rat();
        if (hull_dist_sq(q, hull) > combined * combined)
            return {GLStatus::Fail, e.disk};
    }
    return {GLStatus::Pass, std::nullopt};
}

}  // namespace jensenlab
