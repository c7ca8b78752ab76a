#include <doctest.h>

#include "jensenlab/theorems.hpp"

using namespace jensenlab;

namespace {

RatPoly rpoly(std::vector<Rat> c) { return RatPoly(std::move(c)); }

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("random sector polynomials satisfy their own hypothesis") {
    for (unsigned t = 0; t < 25; ++t) {
        auto rng = trial_rng(99, t);
        Rat q(1, 4);  // delta = 1/2
        RatPoly P = random_sector_poly(1 + t % 6, q, rng);
        RootSet rs = all_roots(P, 256);
        REQUIRE(rs.certified);
        CHECK(region_contains(rs, RegionSpec::sector_sq(q)).result ==
              Containment::Yes);
        CHECK(eval(P, Rat(0)).sign() != 0);
    }
    // degree 1: a real root lies in every sector
    auto rng = trial_rng(7, 0);
    RatPoly lin = random_sector_poly(1, Rat(1, 100), rng);
    CHECK(region_contains(all_roots(lin, 128), RegionSpec::sector_sq(Rat(1, 100)))
              .result == Containment::Yes);
}

TEST_CASE("theorem 3: worked example and randomized suite") {
    // P = z^2+2z+2 has roots -1 +- i in S(2^-1/2); Q = z^2, deg Q = 2 <= delta^-2
    RatPoly P = rpoly({Rat(2), Rat(2), Rat(1)});
    RatPoly Q = RatPoly::monomial(2);
    RatPoly c = compose_obreschkoff(P, Q);
    CHECK(c.coeffs() == std::vector<Rat>{Rat(2), Rat(4), Rat(2)});
    CHECK(is_hyperbolic(c).status == VerdictStatus::Hyperbolic);

    // P = 1: identity operator
    CHECK(compose_obreschkoff(rpoly({Rat(1)}), Q).coeffs() == Q.coeffs());

    TrialConfig cfg;
    cfg.seed = 7;
    cfg.trials = 100;
    cfg.delta_sq = Rat(1, 4);
    cfg.deg_Q_max = 4;
    SuiteReport rep = verify_theorem3(cfg);
    CHECK(rep.pass());
    CHECK(rep.trials_run == 100);

    TrialConfig bad = cfg;
    bad.deg_Q_max = 5;  // exceeds delta^-2 = 4
    CHECK_THROWS_AS(verify_theorem3(bad), HypothesisViolation);
}

TEST_CASE("corollary: bound is active outside the guaranteed range") {
    // P = z^2 + 1/16 has roots +-i/4, in S(delta) only for delta = 1
    RatPoly P = rpoly({Rat(1, 16), Rat(0), Rat(1)});
    CorollaryReport r1 = verify_corollary(P, 1);
    CHECK(r1.identity_ok);
    // J(P;1) = 1/16: constant, vacuously hyperbolic
    CHECK(r1.verdict.status == VerdictStatus::Hyperbolic);
    CorollaryReport r2 = verify_corollary(P, 2);
    CHECK(r2.identity_ok);
    CHECK(r2.verdict.status == VerdictStatus::NotHyperbolic);

    // P = z^2+2z+2 with delta^2 = 1/2: d = 2 <= delta^-2 = 2
    CorollaryReport r3 = verify_corollary(rpoly({Rat(2), Rat(2), Rat(1)}), 2);
    CHECK(r3.identity_ok);
    CHECK(r3.verdict.status == VerdictStatus::Hyperbolic);

    CorollaryReport r4 = verify_corollary(rpoly({Rat(1), Rat(1)}), 5);
    CHECK(r4.identity_ok);

    TrialConfig cfg;
    cfg.seed = 11;
    cfg.trials = 100;
    SuiteReport rep = verify_corollary_suite(cfg);
    CHECK(rep.pass());
}

TEST_CASE("theorem 4 proof constants at T = 1/2, squared form") {
    Rat T(1, 2);
    Rat delta_sq = Rat(1) / (Rat(1) + Rat(4) * T * T);
    CHECK(delta_sq == Rat(1, 2));  // delta = 2^-1/2
    Rat dt_sq = Rat(4) * delta_sq * (Rat(1) - delta_sq);
    CHECK(dt_sq == Rat(1));        // deltatilde = 1
}

TEST_CASE("theorem 4 randomized mechanism suite") {
    for (const Rat& T : {Rat(1, 2), Rat(1)}) {
        TrialConfig cfg;
        cfg.seed = 13;
        cfg.trials = 8;
        SuiteReport rep = verify_theorem4(cfg, T);
        INFO((rep.counterexamples.empty() ? std::string() : rep.counterexamples[0]));
        CHECK(rep.pass());
        CHECK(rep.trials_run == 8);
    }
    TrialConfig cfg;
    CHECK_THROWS_AS(verify_theorem4(cfg, Rat(1, 4)), HypothesisViolation);
}

TEST_CASE("sector squaring suite") {
    TrialConfig cfg;
    cfg.seed = 17;
    cfg.trials = 200;
    SuiteReport rep = verify_sector_square(cfg, {Rat(1, 100), Rat(1, 4), Rat(1, 2)});
    CHECK(rep.pass());
    CHECK(rep.indeterminate == 0);
    CHECK(rep.trials_run == 600);
}

TEST_CASE("gauss-lucas suite") {
    TrialConfig cfg;
    cfg.seed = 19;
    cfg.trials = 50;
    SuiteReport rep = verify_gauss_lucas(cfg, 8);
    INFO((rep.counterexamples.empty() ? std::string() : rep.counterexamples[0]));
    CHECK(rep.pass());
    CHECK(rep.indeterminate == 0);
}

TEST_CASE("theorem 1 bound arithmetic") {
    CHECK(bound_theorem1(Ball::from_long(1), Int(10), Int(4)) == 10);
    CHECK(bound_theorem1(Ball::from_long(2), Int(0), Int(16)) == 4);
    // c = 1.1, d = 100: ceil(25^0.55) = ceil(5.87...) = 6
    Ball c = Ball::from_rat(Rat(11, 10), 192);
    CHECK(bound_theorem1(c, Int(3), Int(100)) == 6);
    CHECK_THROWS_AS(bound_theorem1(Ball::from_long(-1), Int(0), Int(4)), DomainError);
}

TEST_CASE("theorem 4 / remark bounds, published constants") {
    Rat T = Rat::parse("3e12");
    Theorem4Bounds b = bound_theorem4(T);
    CHECK(b.d_max_xi == Int("36000000000000000000000001"));  // 3.6e25 + 1
    CHECK(b.d_max_xi0 == Int("9000000000000000000000000"));  // 9e24
    CHECK(b.d_max_xi >= Int("36000000000000000000000000"));

    Theorem4Bounds h = bound_theorem4(Rat(1, 2));
    CHECK(h.d_max_xi == 2);
    CHECK(h.d_max_xi0 == 1);

    // ball argument uses the safe lower endpoint
    Ball tb = Ball::from_rat(Rat::parse("3e12"), 192);
    Theorem4Bounds bb = bound_theorem4(tb);
    CHECK(bb.d_max_xi == b.d_max_xi);

    CHECK_THROWS_AS(bound_theorem4(Rat(1, 4)), HypothesisViolation);
}

TEST_CASE("jensen grid scans") {
    RatJet e = exp_jet(16);
    ScanResult r = scan_jensen_grid(e, 1, 6, 0, 4, 192);
    for (const auto& cell : r.grid) CHECK(cell.verdict == VerdictStatus::Hyperbolic);
    CHECK(r.caveat_empirical);
    for (unsigned d = 1; d <= 6; ++d) {
        REQUIRE(r.first_all_hyperbolic_n.at(d).has_value());
        CHECK(*r.first_all_hyperbolic_n.at(d) == 0);
    }

    // rescaling the jet leaves verdicts unchanged
    RatJet e3 = e;
    for (auto& v : e3.values) v = v * Rat(3);
    ScanResult r3 = scan_jensen_grid(e3, 1, 6, 0, 4, 192);
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        CHECK(r.grid[i].verdict == r3.grid[i].verdict);

    // a nonreal zero pair produces NotHyperbolic cells
    RatPoly bad = rpoly({Rat(1, 16), Rat(0), Rat(1)});
    ScanResult rb = scan_jensen_grid(jet_of_poly(bad, 8), 2, 2, 0, 0, 192);
    CHECK(rb.grid.size() == 1);
    CHECK(rb.grid[0].verdict == VerdictStatus::NotHyperbolic);

    CHECK_THROWS_AS(scan_jensen_grid(e, 1, 12, 0, 12, 192), JetTooShort);
}

TEST_CASE("ball-mode grid on an exactly even jet") {
    RatJet e = exp_jet(12);
    BallJet b = to_ball(e, 192);
    ScanResult r = scan_jensen_grid(b, 1, 4, 0, 3, 192);
    for (const auto& cell : r.grid) CHECK(cell.verdict == VerdictStatus::Hyperbolic);
}

TEST_CASE("theorem 2 truncation scan") {
    RatJet f = strip_cos_jet(40);
    Ball c = Ball::from_rat(Rat(3, 2), 128);
    Theorem2Report rep = scan_theorem2(f, c, 0, 10, Rat(5, 2), 24, 192);
    CHECK(rep.caveat_empirical);
    REQUIRE(rep.rows.size() == 11);
    // n = 0: the threshold degenerates, containment is trivial
    CHECK(rep.rows[0].contained);
    CHECK(rep.rows[0].nonreal_in_disk >= 2);  // the +-i/4 pair is visible
    REQUIRE(rep.empirical_n1.has_value());
    CHECK(*rep.empirical_n1 <= 10);

    RatJet bare = f;
    bare.decay.reset();
    CHECK_THROWS_AS(scan_theorem2(bare, c, 0, 4, Rat(5, 2), 24, 192),
                    TailBoundUnavailable);
    CHECK_THROWS_AS(scan_theorem2(f, Ball::from_rat(Rat(1, 2), 128), 0, 4,
                                  Rat(5, 2), 24, 192),
                    DomainError);
}

TEST_CASE("deterministic trial streams") {
    auto a = trial_rng(42, 7), b = trial_rng(42, 7), c = trial_rng(42, 8);
    CHECK(a() == b());
    CHECK(a() != c());
    auto r1 = trial_rng(1, 0), r2 = trial_rng(1, 0);
    CHECK(random_rat_in(r1, Rat(-10), Rat(10)) == random_rat_in(r2, Rat(-10), Rat(10)));
}

}  // TEST_SUITE
