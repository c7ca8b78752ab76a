#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "jensenlab/errors.hpp"

namespace jensenlab {

using Int = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
// Thin wrapper over mpq_class that canonicalizes on every construction
// path, so the invariant cannot be bypassed.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den);
    Rat(long num, long den);

    // Parses "p/q", integers, and decimal/scientific literals ("0.5",
    // "3e12", "-1.25e-3") exactly.
    static Rat parse(const std::string& text);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat pow(long e) const;           // negative e requires nonzero value
    Int floor() const;
    Int ceil() const;

    // Exact lower/upper rational bounds for sqrt(*this); requires >= 0.
    Rat sqrt_lb() const;
    Rat sqrt_ub() const;

    std::string str() const;
    double to_double() const { return q_.get_d(); }

  private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
// n (n-1) ... (n-k+1), exact; k = 0 gives 1.
Int falling_factorial(unsigned long n, unsigned long k);

// Exact Bernoulli number B_n (B(0)=1, B(1)=-1/2, odd n>1 give 0).
// Even values come from the integer tangent-number triangle and are memoized.
Rat bernoulli(unsigned n);

}  // namespace jensenlab
