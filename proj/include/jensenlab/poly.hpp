#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jensenlab/ball.hpp"
#include "jensenlab/rat.hpp"

namespace jensenlab {

// Adapters that let the polynomial algebra run over either exact rationals
// or balls with one set of algorithms.
namespace coeff {

template <class C> C from_long(long v, Prec p);
template <> inline Rat from_long<Rat>(long v, Prec) { return Rat(v); }
template <> inline Ball from_long<Ball>(long v, Prec p) { return Ball::from_long(v, p); }

inline Rat mul_int(const Rat& a, const Int& z) { return a * Rat(z); }
inline Rat div_int(const Rat& a, const Int& z) { return a / Rat(z); }
inline bool exactly_zero(const Rat& a) { return a.is_zero(); }
inline bool excludes_zero(const Rat& a) { return !a.is_zero(); }
inline bool encloses_zero(const Rat& a) { return a.is_zero(); }

inline Ball mul_int(const Ball& a, const Int& z) { return a.mul_int(z); }
inline Ball div_int(const Ball& a, const Int& z) { return a.div_int(z); }
inline bool exactly_zero(const Ball& a) { return a.is_exact() && a.contains_zero(); }
inline bool excludes_zero(const Ball& a) { return a.sign() != Sign::ZeroStraddling; }
inline bool encloses_zero(const Ball& a) { return a.contains_zero(); }

}  // namespace coeff

// Real polynomial with homogeneous coefficients (exact rational or ball),
// stored in ascending degree. The list is never empty; trailing coefficients
// that are exactly zero are stripped.
template <class C>
class Poly {
  public:
    Poly() : c_{C()}, prec_(kDefaultPrec) { c_[0] = coeff::from_long<C>(0, prec_); }
    explicit Poly(std::vector<C> coeffs, Prec prec = kDefaultPrec)
        : c_(std::move(coeffs)), prec_(prec) {
        if (c_.empty()) c_.push_back(coeff::from_long<C>(0, prec_));
        trim();
    }
    static Poly constant(const C& v, Prec prec = kDefaultPrec) {
        return Poly(std::vector<C>{v}, prec);
    }
    static Poly monomial(unsigned long d, Prec prec = kDefaultPrec) {
        std::vector<C> v(d + 1, coeff::from_long<C>(0, prec));
        v[d] = coeff::from_long<C>(1, prec);
        return Poly(std::move(v), prec);
    }

    const std::vector<C>& coeffs() const { return c_; }
    const C& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }
    Prec prec() const { return prec_; }

    // True when every coefficient is exactly zero.
    bool is_zero() const {
        for (const auto& x : c_)
            if (!coeff::exactly_zero(x)) return false;
        return true;
    }

    // Degree: index of the leading coefficient; -1 for the zero polynomial.
    // Ball mode: throws AmbiguousDegree when the leading stored coefficient
    // straddles zero without being exactly zero.
    long degree() const {
        if (is_zero()) return -1;
        const C& lead = c_.back();
        if (!coeff::excludes_zero(lead))
            throw AmbiguousDegree("Poly: leading coefficient straddles zero");
        return static_cast<long>(c_.size()) - 1;
    }

    // Upper bound on the degree regardless of leading-coefficient status.
    long degree_bound() const { return static_cast<long>(c_.size()) - 1; }

    const C& leading() const { return c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        Prec p = std::max(a.prec_, b.prec_);
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size()) r.push_back(a.c_[i]);
            else r.push_back(b.c_[i]);
        }
        return Poly(std::move(r), p);
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return Poly(std::move(r), prec_);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Prec p = std::max(a.prec_, b.prec_);
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, coeff::from_long<C>(0, p));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r), p);
    }
    Poly scale(const C& s) const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * s);
        return Poly(std::move(r), prec_);
    }
    Poly mul_int(const Int& z) const {
        std::vector<C> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(coeff::mul_int(x, z));
        return Poly(std::move(r), prec_);
    }

    // substitute z -> z^2 (coefficient k moves to index 2k)
    Poly substitute_square() const {
        std::vector<C> r(2 * c_.size() - 1, coeff::from_long<C>(0, prec_));
        for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return Poly(std::move(r), prec_);
    }
    // multiply by z^k
    Poly shift_up(unsigned long k) const {
        std::vector<C> r(c_.size() + k, coeff::from_long<C>(0, prec_));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r), prec_);
    }

  private:
    void trim() {
        while (c_.size() > 1 && coeff::exactly_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
    Prec prec_;
};

using RatPoly = Poly<Rat>;
using BallPoly = Poly<Ball>;

enum class Parity { None, Even };

// Decay envelope |values[j]| <= A * B^j * (j+1)^q for all j (including
// indices beyond the stored range); lets truncation scans bound Taylor tails.
struct DecayEnvelope {
    Rat A;
    Rat B;
    unsigned q = 0;
};

// Finite list of derivatives at 0 with metadata; values[k] encloses
// f^(k)(0). Stands in for an entire function.
template <class C>
struct TaylorJet {
    std::vector<C> values;
    Parity parity = Parity::None;
    std::optional<double> order_hint;  // growth order, metadata only
    std::string label;
    std::optional<DecayEnvelope> decay;

    std::size_t max_order() const { return values.size() - 1; }

    TaylorJet shifted(std::size_t n) const {
        if (n >= values.size())
            throw JetTooShort("TaylorJet: shift beyond stored order");
        TaylorJet r = *this;
        r.values.erase(r.values.begin(), r.values.begin() + static_cast<long>(n));
        r.parity = Parity::None;
        return r;
    }
};

using RatJet = TaylorJet<Rat>;
using BallJet = TaylorJet<Ball>;

// n-th derivative; n > deg yields the zero polynomial.
template <class C>
Poly<C> differentiate(const Poly<C>& P, unsigned long n = 1) {
    std::vector<C> cur(P.coeffs());
    for (unsigned long s = 0; s < n; ++s) {
        if (cur.size() == 1) {
            cur[0] = coeff::from_long<C>(0, P.prec());
            break;
        }
        std::vector<C> nxt;
        nxt.reserve(cur.size() - 1);
        for (std::size_t k = 1; k < cur.size(); ++k)
            nxt.push_back(coeff::mul_int(cur[k], Int(static_cast<long>(k))));
        cur = std::move(nxt);
    }
    return Poly<C>(std::move(cur), P.prec());
}

// Jensen polynomial J(f^(n); d)(z) = sum_k C(d,k) f^(n+k)(0) z^k.
// Binomials are exact integers, so ball mode only propagates jet radii.
template <class C>
Poly<C> jensen(const TaylorJet<C>& jet, std::size_t n, std::size_t d,
               Prec prec = kDefaultPrec) {
    if (n + d > jet.max_order())
        throw JetTooShort("jensen: jet holds too few derivatives");
    std::vector<C> r;
    r.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        r.push_back(coeff::mul_int(jet.values[n + k], binomial(d, k)));
    return Poly<C>(std::move(r), prec);
}

// Half form of an even function: g with f(z) = g(z^2),
// g^(k)(0) = k!/(2k)! f^(2k)(0).
template <class C>
TaylorJet<C> half_form(const TaylorJet<C>& jet) {
    if (jet.parity != Parity::Even)
        throw ParityError("half_form: jet not flagged even");
    for (std::size_t k = 1; k < jet.values.size(); k += 2)
        if (!coeff::encloses_zero(jet.values[k]))
            throw ParityError("half_form: odd derivative fails to enclose zero");
    TaylorJet<C> g;
    g.values.reserve((jet.values.size() + 1) / 2);
    for (std::size_t k = 0; 2 * k < jet.values.size(); ++k) {
        // k!/(2k)! = 1/((k+1)(k+2)...(2k))
        Int den = 1;
        for (unsigned long i = static_cast<unsigned long>(k) + 1; i <= 2 * k; ++i)
            den *= Int(static_cast<long>(i));
        g.values.push_back(coeff::div_int(jet.values[2 * k], den));
    }
    g.parity = Parity::None;
    if (jet.order_hint) g.order_hint = *jet.order_hint / 2;
    g.label = jet.label.empty() ? std::string("half") : jet.label + "_half";
    return g;
}

// Obreschkoff composition P(D)Q = sum_k (P^(k)(0)/k!) Q^(k) = sum_k p_k Q^(k).
template <class C>
Poly<C> compose_obreschkoff(const Poly<C>& P, const Poly<C>& Q) {
    if (P.is_zero() || Q.is_zero())
        throw DomainError("compose_obreschkoff: operands must be nonzero");
    Prec p = std::max(P.prec(), Q.prec());
    Poly<C> acc = Poly<C>::constant(coeff::from_long<C>(0, p), p);
    Poly<C> dq = Q;
    for (std::size_t k = 0; k < P.size(); ++k) {
        acc = acc + dq.scale(P[k]);
        dq = differentiate(dq);
    }
    return acc;
}

// z^d * P(1/z): coefficient k becomes coefficient d-k.
template <class C>
Poly<C> reverse(const Poly<C>& P, std::size_t d) {
    if (d + 1 < P.size())
        throw DegreeError("reverse: d smaller than degree");
    std::vector<C> r(d + 1, coeff::from_long<C>(0, P.prec()));
    for (std::size_t k = 0; k < P.size(); ++k) r[d - k] = P[k];
    return Poly<C>(std::move(r), P.prec());
}

// Taylor section sum_{k<=M} f^(k)(0)/k! z^k.
template <class C>
Poly<C> truncate_taylor(const TaylorJet<C>& jet, std::size_t M,
                        Prec prec = kDefaultPrec) {
    if (M > jet.max_order())
        throw JetTooShort("truncate_taylor: section order beyond jet");
    std::vector<C> r;
    r.reserve(M + 1);
    for (std::size_t k = 0; k <= M; ++k)
        r.push_back(coeff::div_int(jet.values[k], factorial(k)));
    return Poly<C>(std::move(r), prec);
}

// Horner evaluation with inclusion-isotone enclosures.
CBall eval(const BallPoly& P, const CBall& z);
Ball eval(const BallPoly& P, const Ball& x);
CBall eval(const RatPoly& P, const CBall& z);
Ball eval(const RatPoly& P, const Ball& x);
Rat eval(const RatPoly& P, const Rat& x);

// Jet of a polynomial: values[k] = k! * coeff_k, padded with zeros up to M.
template <class C>
TaylorJet<C> jet_of_poly(const Poly<C>& P, std::size_t M,
                         Parity parity = Parity::None) {
    TaylorJet<C> j;
    j.values.reserve(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
        if (k < P.size())
            j.values.push_back(coeff::mul_int(P[k], factorial(k)));
        else
            j.values.push_back(coeff::from_long<C>(0, P.prec()));
    }
    j.parity = parity;
    return j;
}

BallPoly to_ball(const RatPoly& P, Prec prec);
BallJet to_ball(const RatJet& jet, Prec prec);
Ball to_ball(const Rat& q, Prec prec);

}  // namespace jensenlab
