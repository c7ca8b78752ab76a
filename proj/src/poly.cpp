#include "jensenlab/poly.hpp"

namespace jensenlab {

Ball to_ball(const Rat& q, Prec prec) { return Ball::from_rat(q, prec); }

BallPoly to_ball(const RatPoly& P, Prec prec) {
    std::vector<Ball> c;
    c.reserve(P.size());
    for (const auto& q : P.coeffs()) c.push_back(Ball::from_rat(q, prec));
    return BallPoly(std::move(c), prec);
}

BallJet to_ball(const RatJet& jet, Prec prec) {
    BallJet r;
    r.values.reserve(jet.values.size());
    for (const auto& q : jet.values) r.values.push_back(Ball::from_rat(q, prec));
    r.parity = jet.parity;
    r.order_hint = jet.order_hint;
    r.label = jet.label;
    r.decay = jet.decay;
    return r;
}

CBall eval(const BallPoly& P, const CBall& z) {
    Prec p = std::max(P.prec(), z.prec());
    CBall acc(Ball::from_long(0, p), Ball::from_long(0, p));
    for (std::size_t i = P.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + P[i];
    }
    return acc;
}

Ball eval(const BallPoly& P, const Ball& x) {
    Prec p = std::max(P.prec(), x.prec());
    Ball acc = Ball::from_long(0, p);
    for (std::size_t i = P.size(); i-- > 0;) acc = acc * x + P[i];
    return acc;
}

CBall eval(const RatPoly& P, const CBall& z) { return eval(to_ball(P, z.prec()), z); }

Ball eval(const RatPoly& P, const Ball& x) { return eval(to_ball(P, x.prec()), x); }

Rat eval(const RatPoly& P, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = P.size(); i-- > 0;) acc = acc * x + P[i];
    return acc;
}

}  // namespace jensenlab
