#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "jensenlab/errors.hpp"
#include "jensenlab/rat.hpp"

namespace jensenlab {

using Prec = mpfr_prec_t;
inline constexpr Prec kDefaultPrec = 256;
inline constexpr Prec kMinPrec = 16;
// Radii only need a couple of correct digits; they are always rounded up.
inline constexpr Prec kRadPrec = 64;

// RAII wrapper around a single mpfr value.
class Mpf {
  public:
    explicit Mpf(Prec p = kDefaultPrec) {
        mpfr_init2(v_, p);
        mpfr_set_zero(v_, 1);
    }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(const Mpf& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpf& operator=(Mpf&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    Prec prec() const { return mpfr_get_prec(v_); }

  private:
    mpfr_t v_;
};

enum class Sign { Negative, ZeroStraddling, Positive };

// Midpoint-radius real interval: the set [mid - rad, mid + rad].
// Every operation returns a ball containing the exact image of the
// operand sets (inclusion isotonicity). prec controls the midpoint
// precision; radii live at kRadPrec and are rounded outward.
class Ball {
  public:
    explicit Ball(Prec prec = kDefaultPrec);

    static Ball from_long(long v, Prec prec = kDefaultPrec);
    static Ball from_rat(const Rat& q, Prec prec = kDefaultPrec);
    static Ball from_int(const Int& z, Prec prec = kDefaultPrec);
    // Midpoint taken exactly from m (re-rounded to prec), radius zero.
    static Ball exact(const Mpf& m, Prec prec);
    static Ball from_endpoints(const Mpf& lo, const Mpf& hi, Prec prec);
    static Ball from_mid_rad(const Mpf& mid, const Mpf& rad, Prec prec);
    static Ball pi(Prec prec = kDefaultPrec);
    static Ball log2(Prec prec = kDefaultPrec);

    Prec prec() const { return prec_; }
    const Mpf& mid() const { return mid_; }
    const Mpf& rad() const { return rad_; }

    bool is_exact() const { return mpfr_zero_p(rad_.get()); }
    bool contains_zero() const;
    bool contains(const Rat& q) const;
    bool contains(const Ball& other) const;  // other's interval inside ours
    bool overlaps(const Ball& other) const;
    Sign sign() const;

    // Exact dyadic endpoints / midpoint as rationals.
    Rat mid_rat() const;
    Rat rad_rat() const;
    Rat lower_rat() const { return mid_rat() - rad_rat(); }
    Rat upper_rat() const { return mid_rat() + rad_rat(); }

    Mpf lower(Prec p = 0) const;  // rounded down
    Mpf upper(Prec p = 0) const;  // rounded up
    // Upper bound of |x| over the ball, rounded up.
    Mpf abs_upper() const;
    // Lower bound of |x| over the ball (0 if the ball straddles), rounded down.
    Mpf abs_lower() const;

    Ball round_to(Prec p) const;
    // Grow the radius by e (an upper bound of some external error); e >= 0.
    Ball inflate(const Mpf& e) const;
    Ball inflate_2exp(long e2) const;  // add 2^e2 to the radius

    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b) { return add(a, b); }
    friend Ball operator-(const Ball& a, const Ball& b) { return sub(a, b); }
    friend Ball operator*(const Ball& a, const Ball& b) { return mul(a, b); }
    friend Ball operator/(const Ball& a, const Ball& b) { return div(a, b); }

    static Ball add(const Ball& a, const Ball& b, Prec prec = 0);
    static Ball sub(const Ball& a, const Ball& b, Prec prec = 0);
    static Ball mul(const Ball& a, const Ball& b, Prec prec = 0);
    static Ball div(const Ball& a, const Ball& b, Prec prec = 0);

    Ball mul_int(const Int& z) const;
    Ball div_int(const Int& z) const;
    Ball mul_2exp(long e) const;  // exact scaling by 2^e

    std::string str(std::size_t digits = 12) const;

  private:
    void check_finite() const;
    Mpf mid_;
    Mpf rad_;
    Prec prec_;
};

// Exact dyadic value of an mpfr number as a rational.
Rat Rat_from_mpfr(mpfr_srcptr x);

Ball abs(const Ball& a);
Ball sq(const Ball& a);  // tight square (nonnegative lower endpoint)
Ball sqrt(const Ball& a, Prec prec = 0);  // requires interval >= 0
// sqrt of max(interval, 0); enclosure valid whenever the true input is >= 0.
Ball sqrt_nonneg(const Ball& a, Prec prec = 0);
Ball exp(const Ball& a, Prec prec = 0);
Ball log(const Ball& a, Prec prec = 0);  // requires interval > 0
Ball cos(const Ball& a, Prec prec = 0);
Ball sin(const Ball& a, Prec prec = 0);
Ball atan(const Ball& a, Prec prec = 0);
Ball pow(const Ball& a, const Ball& b, Prec prec = 0);  // requires a > 0

std::optional<Ball> intersect(const Ball& a, const Ball& b);
Ball hull(const Ball& a, const Ball& b);

// Rectangular complex enclosure: re + i*im with independent real balls.
class CBall {
  public:
    explicit CBall(Prec prec = kDefaultPrec) : re(prec), im(prec) {}
    CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
    static CBall from_rats(const Rat& r, const Rat& i, Prec prec = kDefaultPrec);

    Prec prec() const { return std::max(re.prec(), im.prec()); }
    bool is_exact() const { return re.is_exact() && im.is_exact(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool overlaps(const CBall& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }

    CBall conj() const { return CBall(re, -im); }
    CBall operator-() const { return CBall(-re, -im); }
    CBall mul_i() const { return CBall(-im, re); }  // exact rotation by i

    friend CBall operator+(const CBall& a, const CBall& b) {
        return CBall(a.re + b.re, a.im + b.im);
    }
    friend CBall operator-(const CBall& a, const CBall& b) {
        return CBall(a.re - b.re, a.im - b.im);
    }
    friend CBall operator*(const CBall& a, const CBall& b) {
        return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend CBall operator*(const Ball& a, const CBall& b) {
        return CBall(a * b.re, a * b.im);
    }
    friend CBall operator*(const CBall& a, const Ball& b) {
        return CBall(a.re * b, a.im * b);
    }
    friend CBall operator/(const CBall& a, const CBall& b);

    std::string str(std::size_t digits = 12) const;

    Ball re, im;
};

Ball abs(const CBall& z);      // |z| enclosure
Ball abs_sq(const CBall& z);   // |z|^2, tight
CBall sq(const CBall& z);
CBall exp(const CBall& z);
CBall log(const CBall& z);     // requires Re z > 0
CBall pow_int(const CBall& z, unsigned long k);

}  // namespace jensenlab
