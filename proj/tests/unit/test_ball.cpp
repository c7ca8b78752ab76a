#include <doctest.h>

#include <random>

#include "jensenlab/ball.hpp"

using namespace jensenlab;

namespace {

Ball ball_mid_rad(const Rat& mid, const Rat& rad, Prec p = kDefaultPrec) {
    Mpf m(p), r(kRadPrec);
    mpfr_set_q(m.get(), mid.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(r.get(), rad.raw().get_mpq_t(), MPFR_RNDU);
    Ball b = Ball::from_mid_rad(m, r, p);
    // cover the rounding of mid as well
    return b.inflate_2exp(-p + 4);
}

Rat rand_rat(std::mt19937_64& rng, long scale = 1000) {
    std::uniform_int_distribution<long> num(-scale * 100, scale * 100);
    std::uniform_int_distribution<long> den(1, scale);
    return Rat(num(rng), den(rng));
}

// A rational sampled uniformly-ish from the interval of b.
Rat sample_inside(const Ball& b, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> t(0, 1 << 20);
    Rat lo = b.lower_rat(), hi = b.upper_rat();
    return lo + (hi - lo) * Rat(t(rng), 1 << 20);
}

}  // namespace

TEST_SUITE("ball") {

TEST_CASE("exact integer arithmetic stays exact") {
    Ball one = Ball::from_long(1), two = Ball::from_long(2);
    Ball three = one + two;
    CHECK(three.is_exact());
    CHECK(three.contains(Rat(3)));
    CHECK((one * two).is_exact());
    CHECK((two - one).is_exact());
}

TEST_CASE("interval product contains the exact range") {
    Ball a = ball_mid_rad(Rat(1), Rat(1, 10));
    Ball p = a * a;
    CHECK(p.contains(Rat(81, 100)));
    CHECK(p.contains(Rat(121, 100)));
    CHECK(p.contains(Rat(1)));
}

TEST_CASE("sqrt of an exact square is nearly exact") {
    Ball four = Ball::from_long(4);
    Ball s = sqrt(four);
    CHECK(s.contains(Rat(2)));
    // radius at most a few ulps
    CHECK(s.rad_rat() <= Rat(Int(1), Int(1) << 250));
}

TEST_CASE("sign classification") {
    CHECK(ball_mid_rad(Rat(3), Rat(1)).sign() == Sign::Positive);
    CHECK(ball_mid_rad(Rat(0), Rat(1)).sign() == Sign::ZeroStraddling);
    CHECK(ball_mid_rad(Rat(-2), Rat(1, 2)).sign() == Sign::Negative);
    CHECK(Ball::from_long(0).sign() == Sign::ZeroStraddling);
}

TEST_CASE("domain errors") {
    Ball z = ball_mid_rad(Rat(0), Rat(1));
    Ball one = Ball::from_long(1);
    CHECK_THROWS_AS(one / z, DomainError);
    CHECK_THROWS_AS(log(z), DomainError);
    CHECK_THROWS_AS(sqrt(ball_mid_rad(Rat(-1), Rat(1, 100))), DomainError);
    CHECK_THROWS_AS(pow(ball_mid_rad(Rat(-2), Rat(1, 100)), one), DomainError);
}

TEST_CASE("division encloses the exact quotient set") {
    Ball a = ball_mid_rad(Rat(1), Rat(1, 4));
    Ball b = ball_mid_rad(Rat(2), Rat(1, 4));
    Ball q = a / b;
    // extreme quotients: (3/4)/(9/4) = 1/3 and (5/4)/(7/4) = 5/7
    CHECK(q.contains(Rat(1, 3)));
    CHECK(q.contains(Rat(5, 7)));
}

TEST_CASE("pi enclosure") {
    Ball p = Ball::pi();
    CHECK(p.contains(Rat::parse("3.14159265358979323846")) == false);  // point differs from pi
    CHECK(p.lower_rat() < Rat(355, 113));
    CHECK(p.upper_rat() > Rat(333, 106));
    CHECK(p.lower_rat() > Rat(311, 100));
    CHECK(p.rad_rat() < Rat(Int(1), Int(1) << 250));
}

TEST_CASE("inclusion isotonicity on sampled rationals") {
    std::mt19937_64 rng(99);
    const Prec hi = 512;
    for (int i = 0; i < 300; ++i) {
        Rat am = rand_rat(rng), bm = rand_rat(rng);
        Rat ar = rand_rat(rng).abs() / Rat(50), br = rand_rat(rng).abs() / Rat(50);
        Ball a = ball_mid_rad(am, ar), b = ball_mid_rad(bm, br);
        Rat x = sample_inside(a, rng), y = sample_inside(b, rng);

        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        if (!b.contains_zero() && !y.is_zero()) CHECK((a / b).contains(x / y));

        // transcendental ops: compare against a much tighter enclosure of
        // the exact point value
        Ball xb = Ball::from_rat(x, hi);
        Ball e_lo = exp(a), e_hi = exp(xb);
        CHECK(e_lo.contains(e_hi.mid_rat()));
        Ball c_lo = cos(a), c_hi = cos(xb);
        CHECK(c_lo.contains(c_hi.mid_rat()));
        if (a.sign() == Sign::Positive) {
            Ball l_lo = log(a), l_hi = log(xb);
            CHECK(l_lo.contains(l_hi.mid_rat()));
            Ball s_lo = sqrt(a), s_hi = sqrt(xb);
            CHECK(s_lo.contains(s_hi.mid_rat()));
        }
    }
}

TEST_CASE("precision monotonicity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Rat am = rand_rat(rng), bm = rand_rat(rng);
        Rat ar = rand_rat(rng).abs() / Rat(100), br = rand_rat(rng).abs() / Rat(100);
        for (auto op : {0, 1, 2}) {
            Ball a64 = ball_mid_rad(am, ar, 64), b64 = ball_mid_rad(bm, br, 64);
            Ball a256 = ball_mid_rad(am, ar, 256), b256 = ball_mid_rad(bm, br, 256);
            Ball lo = op == 0 ? a64 + b64 : op == 1 ? a64 * b64 : a64 - b64;
            Ball hi = op == 0 ? a256 + b256 : op == 1 ? a256 * b256 : a256 - b256;
            // ulp of the low-precision result, as slack
            Rat slack = Rat(Int(1), Int(1) << 40) * (lo.mid_rat().abs() + Rat(1));
            CHECK(hi.rad_rat() <= lo.rad_rat() + slack);
        }
    }
}

TEST_CASE("pow") {
    Ball two = Ball::from_long(2);
    Ball half = Ball::from_rat(Rat(1, 2));
    Ball r = pow(two, half);
    CHECK(sq(r).contains(Rat(2)));
}

TEST_CASE("intersect and hull") {
    Ball a = ball_mid_rad(Rat(0), Rat(1));
    Ball b = ball_mid_rad(Rat(3, 2), Rat(1));
    auto i = intersect(a, b);
    REQUIRE(i.has_value());
    CHECK(i->contains(Rat(3, 4)));
    CHECK(!i->contains(Rat(0)));
    Ball h = hull(a, b);
    CHECK(h.contains(Rat(-1)));
    CHECK(h.contains(Rat(5, 2)));
    Ball c = ball_mid_rad(Rat(10), Rat(1, 10));
    CHECK(!intersect(a, c).has_value());
}

TEST_CASE("cball arithmetic") {
    Prec p = 128;
    CBall i(Ball::from_long(0, p), Ball::from_long(1, p));
    CBall one_i(Ball::from_long(1, p), Ball::from_long(1, p));
    CBall s = sq(one_i);  // (1+i)^2 = 2i
    CHECK(s.re.contains(Rat(0)));
    CHECK(s.im.contains(Rat(2)));

    CBall z(Ball::from_long(3, p), Ball::from_long(4, p));
    CHECK(abs(z).contains(Rat(5)));
    CHECK(abs_sq(z).contains(Rat(25)));

    CBall q = z / z;
    CHECK(q.re.contains(Rat(1)));
    CHECK(q.im.contains(Rat(0)));

    // exp(i*pi) close to -1
    CBall ip(Ball::from_long(0, 256), Ball::pi(256));
    CBall e = exp(ip);
    CHECK(e.re.contains(Rat(-1)));
    CHECK(e.im.contains(Rat(0)));

    // log(exp(w)) recovers w for Re big enough
    CBall w(Ball::from_rat(Rat(5, 4), 256), Ball::from_rat(Rat(1, 3), 256));
    CBall lw = log(exp(w));
    CHECK(lw.re.overlaps(w.re));
    CHECK(lw.im.overlaps(w.im));

    CBall p3 = pow_int(one_i, 4);  // (1+i)^4 = -4
    CHECK(p3.re.contains(Rat(-4)));
    CHECK(p3.im.contains(Rat(0)));
}

TEST_CASE("mul_i and conj are exact rotations") {
    CBall z(Ball::from_long(2), Ball::from_long(3));
    CBall zi = z.mul_i();
    CHECK(zi.re.contains(Rat(-3)));
    CHECK(zi.im.contains(Rat(2)));
    CHECK(zi.re.is_exact());
    CBall zc = z.conj();
    CHECK(zc.im.contains(Rat(-3)));
}

}  // TEST_SUITE
