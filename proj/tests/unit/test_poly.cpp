#include <doctest.h>

#include <random>

#include "jensenlab/poly.hpp"

using namespace jensenlab;

namespace {

RatPoly rpoly(std::vector<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(std::move(v));
}

RatPoly random_rat_poly(std::mt19937_64& rng, int deg, long scale = 10) {
    std::uniform_int_distribution<long> num(-scale, scale);
    std::uniform_int_distribution<long> den(1, 8);
    std::vector<Rat> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(num(rng), den(rng));
    if (v.back().is_zero()) v.back() = Rat(1);
    return RatPoly(std::move(v));
}

RatJet exp_jet(std::size_t M) {
    RatJet j;
    j.values.assign(M + 1, Rat(1));
    j.label = "exp";
    return j;
}

RatJet cos_jet(std::size_t M) {
    RatJet j;
    j.values.reserve(M + 1);
    for (std::size_t k = 0; k <= M; ++k) {
        if (k % 2 == 1) j.values.emplace_back(0);
        else j.values.emplace_back((k / 2) % 2 == 0 ? 1 : -1);
    }
    j.parity = Parity::Even;
    j.label = "cos";
    return j;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("differentiate") {
    RatPoly p = rpoly({1, 0, 1});  // z^2 + 1
    CHECK(differentiate(p).coeffs() == std::vector<Rat>{Rat(0), Rat(2)});
    CHECK(differentiate(p, 0).coeffs() == p.coeffs());
    CHECK(differentiate(p, 3).is_zero());
    CHECK(differentiate(p, 3).degree() == -1);
}

TEST_CASE("degree and trimming") {
    RatPoly p(std::vector<Rat>{Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.size() == 2);
    CHECK(p.degree() == 1);
    CHECK(RatPoly().is_zero());

    BallPoly q(std::vector<Ball>{Ball::from_long(1),
                                 Ball::from_mid_rad(Mpf(64), Ball::from_long(1).rad(), 64)
                                     .inflate_2exp(-3)});
    // leading coefficient is [0 +/- 2^-3]: ambiguous
    CHECK_THROWS_AS(q.degree(), AmbiguousDegree);
}

TEST_CASE("jensen basics") {
    RatJet j;
    j.values = {Rat(3), Rat(5), Rat(7)};
    RatPoly d1 = jensen(j, 0, 1);
    CHECK(d1.coeffs() == std::vector<Rat>{Rat(3), Rat(5)});
    RatPoly d2 = jensen(j, 0, 2);
    CHECK(d2.coeffs() == std::vector<Rat>{Rat(3), Rat(10), Rat(7)});
    CHECK_THROWS_AS(jensen(j, 1, 2), JetTooShort);
}

TEST_CASE("jensen of exp jet is (1+z)^d") {
    RatJet j = exp_jet(10);
    RatPoly p = jensen(j, 3, 2);
    CHECK(p.coeffs() == std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    RatPoly p5 = jensen(j, 0, 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(p5[k] == Rat(binomial(5, k)));
}

TEST_CASE("jensen shift consistency") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> nd(0, 3);
    for (int t = 0; t < 50; ++t) {
        RatPoly P = random_rat_poly(rng, 6);
        RatJet j = jet_of_poly(P, 12);
        std::size_t n = nd(rng), d = nd(rng) + 1;
        RatPoly a = jensen(j, n, d);
        RatPoly b = jensen(j.shifted(n), 0, d);
        CHECK(a.coeffs() == b.coeffs());
    }
}

TEST_CASE("half_form of z^2") {
    RatPoly p = rpoly({0, 0, 1});
    RatJet j = jet_of_poly(p, 4, Parity::Even);
    RatJet h = half_form(j);
    // f0(w) = w: derivatives (0, 1, 0)
    CHECK(h.values[0] == Rat(0));
    CHECK(h.values[1] == Rat(1));
    CHECK(h.values[2] == Rat(0));
}

TEST_CASE("half_form of cos matches cos(sqrt(w)) series") {
    RatJet j = cos_jet(16);
    RatJet h = half_form(j);
    // Independent oracle: cos(sqrt(w)) = sum (-1)^k w^k/(2k)!,
    // so f0^(k)(0) = (-1)^k k!/(2k)!.
    for (std::size_t k = 0; k <= 8; ++k) {
        Rat expect = Rat(factorial(k)) / Rat(factorial(2 * k));
        if (k % 2 == 1) expect = -expect;
        CHECK(h.values[k] == expect);
    }
}

TEST_CASE("half_form of a constant") {
    RatJet j = jet_of_poly(rpoly({1}), 2, Parity::Even);
    RatJet h = half_form(j);
    CHECK(h.values[0] == Rat(1));
    CHECK(h.values[1] == Rat(0));
}

TEST_CASE("half_form parity errors") {
    RatJet j = jet_of_poly(rpoly({1, 1}), 3);  // not flagged even
    CHECK_THROWS_AS(half_form(j), ParityError);
    RatJet k = jet_of_poly(rpoly({1, 1}), 3, Parity::Even);  // odd entry nonzero
    CHECK_THROWS_AS(half_form(k), ParityError);
}

TEST_CASE("half_form round trip for even polynomials") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        RatPoly h = random_rat_poly(rng, 4);
        RatPoly P = h.substitute_square();  // even by construction
        RatJet half = half_form(jet_of_poly(P, 2 * (h.size() - 1) + 2, Parity::Even));
        RatPoly h2 = truncate_taylor(half, half.max_order());
        CHECK(h2.coeffs() == h.coeffs());
        CHECK(h2.substitute_square().coeffs() == P.coeffs());
    }
}

TEST_CASE("obreschkoff composition") {
    RatPoly Q = rpoly({0, 0, 1});  // z^2
    CHECK(compose_obreschkoff(rpoly({1}), Q).coeffs() == Q.coeffs());
    // P = z^2 acts as D^2
    CHECK(compose_obreschkoff(rpoly({0, 0, 1}), Q).coeffs() == std::vector<Rat>{Rat(2)});
    // P = z^2+2z+2: 2Q + 2Q' + Q''
    RatPoly r = compose_obreschkoff(rpoly({2, 2, 1}), Q);
    CHECK(r.coeffs() == std::vector<Rat>{Rat(2), Rat(4), Rat(2)});
    CHECK_THROWS_AS(compose_obreschkoff(RatPoly(), Q), DomainError);
}

TEST_CASE("obreschkoff linearity") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        RatPoly P1 = random_rat_poly(rng, 4), P2 = random_rat_poly(rng, 3);
        RatPoly Q = random_rat_poly(rng, 5);
        Rat a(3, 2), b(-7, 5);
        RatPoly lhs = compose_obreschkoff(P1.scale(a) + P2.scale(b), Q);
        RatPoly rhs = compose_obreschkoff(P1, Q).scale(a) + compose_obreschkoff(P2, Q).scale(b);
        CHECK(lhs.coeffs() == rhs.coeffs());
    }
}

TEST_CASE("reverse") {
    RatPoly p = rpoly({1, 2});
    CHECK(reverse(p, 1).coeffs() == std::vector<Rat>{Rat(2), Rat(1)});
    CHECK(reverse(RatPoly::monomial(4), 4).coeffs() == std::vector<Rat>{Rat(1)});
    CHECK_THROWS_AS(reverse(rpoly({1, 1, 1}), 1), DegreeError);
}

TEST_CASE("corollary identity: jensen equals reversed composition") {
    std::mt19937_64 rng(24);
    std::uniform_int_distribution<int> dd(0, 4);
    for (int t = 0; t < 100; ++t) {
        RatPoly P = random_rat_poly(rng, 1 + dd(rng));
        std::size_t d = P.size() - 1 + dd(rng);
        if (d == 0) d = 1;
        RatPoly lhs = jensen(jet_of_poly(P, d), 0, d);
        RatPoly rhs = reverse(compose_obreschkoff(P, RatPoly::monomial(d)), d);
        CHECK(lhs.coeffs() == rhs.coeffs());
    }
}

TEST_CASE("truncate_taylor") {
    RatJet e = exp_jet(6);
    RatPoly p = truncate_taylor(e, 2);
    CHECK(p.coeffs() == std::vector<Rat>{Rat(1), Rat(1), Rat(1, 2)});
    RatPoly c = truncate_taylor(cos_jet(8), 4);
    CHECK(c.coeffs() == std::vector<Rat>{Rat(1), Rat(0), Rat(-1, 2), Rat(0), Rat(1, 24)});
    CHECK(truncate_taylor(e, 0).coeffs() == std::vector<Rat>{Rat(1)});
    CHECK_THROWS_AS(truncate_taylor(e, 9), JetTooShort);
}

TEST_CASE("eval") {
    RatPoly p = rpoly({1, 0, 1});  // z^2+1
    CBall i(Ball::from_long(0, 128), Ball::from_long(1, 128));
    CBall v = eval(p, i);
    CHECK(v.re.contains(Rat(0)));
    CHECK(v.im.contains(Rat(0)));

    CHECK(eval(rpoly({5}), Rat(1234)) == Rat(5));
    // (z-1)(z-2) at 3
    CHECK(eval(rpoly({2, -3, 1}), Rat(3)) == Rat(2));
}

TEST_CASE("theorem-4 proof identities hold exactly for even polynomials") {
    std::mt19937_64 rng(25);
    RatPoly two = rpoly({2});
    for (int t = 0; t < 50; ++t) {
        RatPoly f0 = random_rat_poly(rng, 5);
        RatPoly f = f0.substitute_square();  // f(z) = f0(z^2)
        RatPoly f0p = differentiate(f0), f0pp = differentiate(f0, 2);

        // f'(z) = 2 z f0'(z^2)
        RatPoly lhs1 = differentiate(f);
        RatPoly rhs1 = f0p.substitute_square().shift_up(1).mul_int(Int(2));
        CHECK(lhs1.coeffs() == rhs1.coeffs());

        // f''(z) = 2 (f0'(z^2) + 2 z^2 f0''(z^2))
        RatPoly lhs2 = differentiate(f, 2);
        RatPoly rhs2 =
            (f0p.substitute_square() + f0pp.substitute_square().shift_up(2).mul_int(Int(2)))
                .mul_int(Int(2));
        CHECK(lhs2.coeffs() == rhs2.coeffs());

        // g(z) = z (f0'(z))^2  =>  g'(z) = f0'(z) (f0'(z) + 2 z f0''(z))
        RatPoly g = (f0p * f0p).shift_up(1);
        RatPoly lhs3 = differentiate(g);
        RatPoly rhs3 = f0p * (f0p + f0pp.shift_up(1).mul_int(Int(2)));
        CHECK(lhs3.coeffs() == rhs3.coeffs());
    }
}

TEST_CASE("ball-mode jensen keeps exact binomials") {
    RatJet rj = exp_jet(8);
    BallJet bj = to_ball(rj, 192);
    BallPoly p = jensen(bj, 0, 4, 192);
    for (std::size_t k = 0; k <= 4; ++k) {
        CHECK(p[k].contains(Rat(binomial(4, k))));
        CHECK(p[k].is_exact());
    }
}

}  // TEST_SUITE
