#include "jensenlab/ball.hpp"

#include <algorithm>

namespace jensenlab {

namespace {

Prec clamp_prec(Prec p) {
    if (p < kMinPrec) throw DomainError("Ball: precision below minimum");
    return p;
}

Prec derive_prec(const Ball& a, const Ball& b, Prec override_p) {
    if (override_p != 0) return clamp_prec(override_p);
    return std::max(a.prec(), b.prec());
}

Prec derive_prec(const Ball& a, Prec override_p) {
    if (override_p != 0) return clamp_prec(override_p);
    return a.prec();
}

// Adds half an ulp of mid (at precision p) to rad when the last midpoint
// rounding was inexact.
void bump_rounding(Mpf& rad, mpfr_srcptr mid, Prec p, int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid)) return;
    Mpf h(kRadPrec);
    mpfr_set_ui_2exp(h.get(), 1, mpfr_get_exp(mid) - p - 1, MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), h.get(), MPFR_RNDU);
}

}  // namespace

Ball::Ball(Prec prec) : mid_(clamp_prec(prec)), rad_(kRadPrec), prec_(prec) {}

void Ball::check_finite() const {
    if (!mpfr_number_p(mid_.get()) || !mpfr_number_p(rad_.get()) ||
        mpfr_sgn(rad_.get()) < 0)
        throw PrecisionExhausted("Ball: non-finite midpoint or radius");
}

Ball Ball::from_long(long v, Prec prec) {
    Ball r(prec);
    mpfr_set_si(r.mid_.get(), v, MPFR_RNDN);  // exact for any sane prec
    return r;
}

Ball Ball::from_rat(const Rat& q, Prec prec) {
    Ball r(prec);
    int t = mpfr_set_q(r.mid_.get(), q.raw().get_mpq_t(), MPFR_RNDN);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    r.check_finite();
    return r;
}

Ball Ball::from_int(const Int& z, Prec prec) {
    Ball r(prec);
    int t = mpfr_set_z(r.mid_.get(), z.get_mpz_t(), MPFR_RNDN);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    r.check_finite();
    return r;
}

Ball Ball::exact(const Mpf& m, Prec prec) {
    Ball r(prec);
    int t = mpfr_set(r.mid_.get(), m.get(), MPFR_RNDN);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    r.check_finite();
    return r;
}

Ball Ball::from_endpoints(const Mpf& lo, const Mpf& hi, Prec prec) {
    Ball r(clamp_prec(prec));
    mpfr_add(r.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
    Mpf d1(kRadPrec), d2(kRadPrec);
    mpfr_sub(d1.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
    mpfr_sub(d2.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
    mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
    if (mpfr_sgn(r.rad_.get()) < 0) mpfr_set_zero(r.rad_.get(), 1);
    r.check_finite();
    return r;
}

Ball Ball::from_mid_rad(const Mpf& mid, const Mpf& rad, Prec prec) {
    Ball r(clamp_prec(prec));
    int t = mpfr_set(r.mid_.get(), mid.get(), MPFR_RNDN);
    mpfr_set(r.rad_.get(), rad.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    r.check_finite();
    return r;
}

Ball Ball::pi(Prec prec) {
    Ball r(prec);
    int t = mpfr_const_pi(r.mid_.get(), MPFR_RNDN);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    return r;
}

Ball Ball::log2(Prec prec) {
    Ball r(prec);
    int t = mpfr_const_log2(r.mid_.get(), MPFR_RNDN);
    bump_rounding(r.rad_, r.mid_.get(), prec, t);
    return r;
}

bool Ball::contains_zero() const {
    return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

bool Ball::contains(const Rat& q) const {
    // Exact: midpoint and radius are dyadic rationals.
    Rat d = (mid_rat() - q).abs();
    return d <= rad_rat();
}

bool Ball::contains(const Ball& o) const {
    return o.lower_rat() >= lower_rat() && o.upper_rat() <= upper_rat();
}

bool Ball::overlaps(const Ball& o) const {
    return !(upper_rat() < o.lower_rat() || o.upper_rat() < lower_rat());
}

Sign Ball::sign() const {
    int s = mpfr_sgn(mid_.get());
    if (s > 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0) return Sign::Positive;
    if (s < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0) return Sign::Negative;
    return Sign::ZeroStraddling;
}

Rat Rat_from_mpfr(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    q.canonicalize();
    return Rat(q.get_num(), q.get_den());
}

Rat Ball::mid_rat() const { return Rat_from_mpfr(mid_.get()); }
Rat Ball::rad_rat() const { return Rat_from_mpfr(rad_.get()); }

Mpf Ball::lower(Prec p) const {
    Mpf r(p ? p : prec_);
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

Mpf Ball::upper(Prec p) const {
    Mpf r(p ? p : prec_);
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

Mpf Ball::abs_upper() const {
    Mpf r(kRadPrec);
    mpfr_abs(r.get(), mid_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
    return r;
}

Mpf Ball::abs_lower() const {
    Mpf r(kRadPrec);
    if (contains_zero()) {
        mpfr_set_zero(r.get(), 1);
        return r;
    }
    mpfr_abs(r.get(), mid_.get(), MPFR_RNDD);
    mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
    return r;
}

Ball Ball::round_to(Prec p) const {
    Ball r(clamp_prec(p));
    int t = mpfr_set(r.mid_.get(), mid_.get(), MPFR_RNDN);
    mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), p, t);
    r.check_finite();
    return r;
}

Ball Ball::inflate(const Mpf& e) const {
    if (mpfr_sgn(e.get()) < 0) throw DomainError("Ball: negative inflation");
    Ball r = *this;
    mpfr_add(r.rad_.get(), r.rad_.get(), e.get(), MPFR_RNDU);
    r.check_finite();
    return r;
}

Ball Ball::inflate_2exp(long e2) const {
    Mpf e(kRadPrec);
    mpfr_set_ui_2exp(e.get(), 1, e2, MPFR_RNDU);
    return inflate(e);
}

Ball Ball::operator-() const {
    Ball r = *this;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);  // exact
    return r;
}

Ball Ball::add(const Ball& a, const Ball& b, Prec prec) {
    Prec p = derive_prec(a, b, prec);
    Ball r(p);
    int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), p, t);
    r.check_finite();
    return r;
}

Ball Ball::sub(const Ball& a, const Ball& b, Prec prec) {
    Prec p = derive_prec(a, b, prec);
    Ball r(p);
    int t = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), p, t);
    r.check_finite();
    return r;
}

Ball Ball::mul(const Ball& a, const Ball& b, Prec prec) {
    Prec p = derive_prec(a, b, prec);
    Ball r(p);
    int t = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    // |am| br + ar |bm| + ar br, all rounded up
    Mpf am(kRadPrec), bm(kRadPrec), acc(kRadPrec), tmp(kRadPrec);
    mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDU);
    mpfr_abs(bm.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_mul(acc.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), a.rad_.get(), bm.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), tmp.get(), MPFR_RNDU);
    mpfr_set(r.rad_.get(), acc.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), p, t);
    r.check_finite();
    return r;
}

Ball Ball::div(const Ball& a, const Ball& b, Prec prec) {
    if (mpfr_cmpabs(b.mid_.get(), b.rad_.get()) <= 0)
        throw DomainError("Ball: division by an interval containing zero");
    Prec p = derive_prec(a, b, prec);
    Ball r(p);
    int t = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
    // (|am| br + ar |bm|) / (|bm| (|bm| - br))
    Mpf am(kRadPrec), bm_u(kRadPrec), bm_d(kRadPrec), num(kRadPrec),
        tmp(kRadPrec), den(kRadPrec);
    mpfr_abs(am.get(), a.mid_.get(), MPFR_RNDU);
    mpfr_abs(bm_u.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_abs(bm_d.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_mul(num.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(tmp.get(), a.rad_.get(), bm_u.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);
    mpfr_sub(den.get(), bm_d.get(), b.rad_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), bm_d.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), p, t);
    r.check_finite();
    return r;
}

Ball Ball::mul_int(const Int& z) const {
    Ball r(prec_);
    int t = mpfr_mul_z(r.mid_.get(), mid_.get(), z.get_mpz_t(), MPFR_RNDN);
    Mpf az(kRadPrec);
    mpfr_set_z(az.get(), z.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(az.get(), az.get(), MPFR_RNDU);
    mpfr_mul(r.rad_.get(), rad_.get(), az.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), prec_, t);
    r.check_finite();
    return r;
}

Ball Ball::div_int(const Int& z) const {
    if (sgn(z) == 0) throw DomainError("Ball: division by zero integer");
    Ball r(prec_);
    int t = mpfr_div_z(r.mid_.get(), mid_.get(), z.get_mpz_t(), MPFR_RNDN);
    Mpf az(kRadPrec);
    mpfr_set_z(az.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_abs(az.get(), az.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), rad_.get(), az.get(), MPFR_RNDU);
    bump_rounding(r.rad_, r.mid_.get(), prec_, t);
    r.check_finite();
    return r;
}

Ball Ball::mul_2exp(long e) const {
    Ball r = *this;
    if (e >= 0) {
        mpfr_mul_2ui(r.mid_.get(), r.mid_.get(), static_cast<unsigned long>(e), MPFR_RNDN);
        mpfr_mul_2ui(r.rad_.get(), r.rad_.get(), static_cast<unsigned long>(e), MPFR_RNDU);
    } else {
        mpfr_div_2ui(r.mid_.get(), r.mid_.get(), static_cast<unsigned long>(-e), MPFR_RNDN);
        mpfr_div_2ui(r.rad_.get(), r.rad_.get(), static_cast<unsigned long>(-e), MPFR_RNDU);
    }
    return r;
}

std::string Ball::str(std::size_t digits) const {
    auto fmt = [&](mpfr_srcptr x, std::size_t nd) -> std::string {
        if (mpfr_zero_p(x)) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, nd, x, MPFR_RNDN);
        std::string body(s);
        mpfr_free_str(s);
        std::string sign;
        if (body[0] == '-') {
            sign = "-";
            body.erase(0, 1);
        }
        std::string out = sign + body.substr(0, 1);
        if (body.size() > 1) out += "." + body.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
        return out;
    };
    return "[" + fmt(mid_.get(), digits) + " +/- " + fmt(rad_.get(), 3) + "]";
}

Ball abs(const Ball& a) {
    if (!a.contains_zero()) {
        Ball r = a;
        if (mpfr_sgn(a.mid().get()) < 0) return -a;
        return r;
    }
    Mpf lo(a.prec()), hi(a.prec());
    mpfr_set_zero(lo.get(), 1);
    mpfr_abs(hi.get(), a.mid().get(), MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), a.rad().get(), MPFR_RNDU);
    return Ball::from_endpoints(lo, hi, a.prec());
}

Ball sq(const Ball& a) {
    Prec p = a.prec();
    Mpf lo(p), hi(p), t(p);
    mpfr_abs(t.get(), a.mid().get(), MPFR_RNDU);
    mpfr_add(t.get(), t.get(), a.rad().get(), MPFR_RNDU);
    mpfr_sqr(hi.get(), t.get(), MPFR_RNDU);
    if (a.contains_zero()) {
        mpfr_set_zero(lo.get(), 1);
    } else {
        mpfr_abs(t.get(), a.mid().get(), MPFR_RNDD);
        mpfr_sub(t.get(), t.get(), a.rad().get(), MPFR_RNDD);
        mpfr_sqr(lo.get(), t.get(), MPFR_RNDD);
    }
    return Ball::from_endpoints(lo, hi, p);
}

namespace {

// Monotone increasing elementary function via directed endpoint rounding.
template <typename F>
Ball monotone_op(const Ball& a, Prec p, F&& f) {
    Mpf lo_in(p), hi_in(p), lo(p), hi(p);
    mpfr_sub(lo_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDD);
    mpfr_add(hi_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDU);
    f(lo.get(), lo_in.get(), MPFR_RNDD);
    f(hi.get(), hi_in.get(), MPFR_RNDU);
    return Ball::from_endpoints(lo, hi, p);
}

}  // namespace

Ball sqrt(const Ball& a, Prec prec) {
    Prec p = derive_prec(a, prec);
    Mpf lo_in(p);
    mpfr_sub(lo_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDD);
    if (mpfr_sgn(lo_in.get()) < 0)
        throw DomainError("Ball: sqrt of an interval with negative part");
    return monotone_op(a, p, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) {
        mpfr_sqrt(o, i, r);
    });
}

Ball sqrt_nonneg(const Ball& a, Prec prec) {
    Prec p = derive_prec(a, prec);
    Mpf lo_in(p), hi_in(p), lo(p), hi(p);
    mpfr_sub(lo_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDD);
    if (mpfr_sgn(lo_in.get()) < 0) mpfr_set_zero(lo_in.get(), 1);
    mpfr_add(hi_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDU);
    if (mpfr_sgn(hi_in.get()) < 0)
        throw DomainError("Ball: sqrt_nonneg of a certainly-negative interval");
    mpfr_sqrt(lo.get(), lo_in.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi_in.get(), MPFR_RNDU);
    return Ball::from_endpoints(lo, hi, p);
}

Ball exp(const Ball& a, Prec prec) {
    Prec p = derive_prec(a, prec);
    Ball r = monotone_op(a, p, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rn) {
        mpfr_exp(o, i, rn);
    });
    return r;
}

Ball log(const Ball& a, Prec prec) {
    Prec p = derive_prec(a, prec);
    Mpf lo_in(p);
    mpfr_sub(lo_in.get(), a.mid().get(), a.rad().get(), MPFR_RNDD);
    if (mpfr_sgn(lo_in.get()) <= 0)
        throw DomainError("Ball: log of an interval not strictly positive");
    return monotone_op(a, p, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) {
        mpfr_log(o, i, r);
    });
}

namespace {

Ball lipschitz_unit(const Ball& a, Prec p,
                    int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    Mpf m(p);
    int t = f(m.get(), a.mid().get(), MPFR_RNDN);
    Ball r = Ball::from_mid_rad(m, a.rad(), p);
    if (t != 0) {
        // from_mid_rad already accounted for re-rounding of m into prec p,
        // but m itself is a rounded function value; add its half-ulp.
        Mpf h(kRadPrec);
        if (!mpfr_zero_p(m.get())) {
            mpfr_set_ui_2exp(h.get(), 1, mpfr_get_exp(m.get()) - p - 1, MPFR_RNDU);
            r = r.inflate(h);
        } else {
            r = r.inflate_2exp(-p);
        }
    }
    return r;
}

}  // namespace

Ball cos(const Ball& a, Prec prec) {
    return lipschitz_unit(a, derive_prec(a, prec), mpfr_cos);
}

Ball sin(const Ball& a, Prec prec) {
    return lipschitz_unit(a, derive_prec(a, prec), mpfr_sin);
}

Ball atan(const Ball& a, Prec prec) {
    return lipschitz_unit(a, derive_prec(a, prec), mpfr_atan);
}

Ball pow(const Ball& a, const Ball& b, Prec prec) {
    Prec p = prec ? clamp_prec(prec) : std::max(a.prec(), b.prec());
    return exp(Ball::mul(b, log(a, p), p), p);
}

std::optional<Ball> intersect(const Ball& a, const Ball& b) {
    Rat lo = std::max(a.lower_rat(), b.lower_rat());
    Rat hi = std::min(a.upper_rat(), b.upper_rat());
    if (lo > hi) return std::nullopt;
    Prec p = std::max(a.prec(), b.prec());
    Mpf l(p), h(p);
    mpfr_set_q(l.get(), lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(h.get(), hi.raw().get_mpq_t(), MPFR_RNDU);
    return Ball::from_endpoints(l, h, p);
}

Ball hull(const Ball& a, const Ball& b) {
    Prec p = std::max(a.prec(), b.prec());
    Mpf lo = a.lower(p), hi = a.upper(p), t(p);
    mpfr_sub(t.get(), b.mid().get(), b.rad().get(), MPFR_RNDD);
    mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
    mpfr_add(t.get(), b.mid().get(), b.rad().get(), MPFR_RNDU);
    mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    return Ball::from_endpoints(lo, hi, p);
}

CBall CBall::from_rats(const Rat& r, const Rat& i, Prec prec) {
    return CBall(Ball::from_rat(r, prec), Ball::from_rat(i, prec));
}

CBall operator/(const CBall& a, const CBall& b) {
    Ball den = abs_sq(b);
    if (den.contains_zero())
        throw DomainError("CBall: division by an enclosure containing zero");
    CBall num = a * b.conj();
    return CBall(num.re / den, num.im / den);
}

std::string CBall::str(std::size_t digits) const {
    return re.str(digits) + " + i*" + im.str(digits);
}

Ball abs_sq(const CBall& z) { return sq(z.re) + sq(z.im); }

Ball abs(const CBall& z) { return sqrt_nonneg(abs_sq(z)); }

CBall sq(const CBall& z) {
    // re^2 - im^2 computed tightly; cross term exact-ish via plain mul
    Ball re = sq(z.re) - sq(z.im);
    Ball im = (z.re * z.im).mul_2exp(1);
    return CBall(re, im);
}

CBall exp(const CBall& z) {
    Ball m = exp(z.re);
    return CBall(m * cos(z.im), m * sin(z.im));
}

CBall log(const CBall& z) {
    if (z.re.sign() != Sign::Positive)
        throw DomainError("CBall: log requires Re z > 0");
    Ball r2 = abs_sq(z);
    Ball half = Ball::from_rat(Rat(1, 2), z.prec());
    return CBall(half * log(r2), atan(z.im / z.re));
}

CBall pow_int(const CBall& z, unsigned long k) {
    CBall acc(Ball::from_long(1, z.prec()), Ball::from_long(0, z.prec()));
    CBall base = z;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = sq(base);
        k >>= 1;
    }
    return acc;
}

}  // namespace jensenlab
