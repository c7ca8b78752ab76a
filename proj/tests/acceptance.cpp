// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "jensenlab/report.hpp"
#include "jensenlab/theorems.hpp"

using namespace jensenlab;

namespace {

struct Outcome {
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

std::vector<Outcome> results;

template <typename F>
void criterion(const std::string& name, double budget_s, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && secs >= budget_s) {
        ok = false;
        detail += " [time budget exceeded]";
    }
    results.push_back({name, ok, secs, detail});
    std::printf("%-4s %-28s %8.2fs  %s\n", ok ? "PASS" : "FAIL", name.c_str(),
                secs, detail.c_str());
    std::fflush(stdout);
}

std::string require(bool cond, const std::string& msg) {
    if (!cond) throw Error("failed: " + msg);
    return msg;
}

}  // namespace

int main() {
    std::printf("jensenlab acceptance suite (%s)\n", code_version());

    // 1. Published constants, exact integer arithmetic, zero tolerance.
    criterion("1.published-constants", 1.0, [] {
        Rat T = Rat::parse("3e12");
        Theorem4Bounds b = bound_theorem4(T);
        require(b.d_max_xi == Int("36000000000000000000000001"),
                "1+4T^2 = 3.6e25 + 1");
        require(b.d_max_xi >= Int("36000000000000000000000000"),
                "bound covers the published 3.6e25");
        require(b.d_max_xi0 == Int("9000000000000000000000000"),
                "remark floor = 9e24");
        require(b.d_max_xi0 >= Int("9000000000000000000000000"),
                "remark floor covers the published 9e24");
        return std::string("1+4T^2=3.6e25+1, remark floor=9e24");
    });

    // 2. Proof-constant arithmetic at T = 1/2 (squared form, exact).
    criterion("2.proof-constants", 1.0, [] {
        Rat T(1, 2);
        Rat delta_sq = Rat(1) / (Rat(1) + Rat(4) * T * T);
        Rat dt_sq = Rat(4) * delta_sq * (Rat(1) - delta_sq);
        require(delta_sq == Rat(1, 2), "delta^2 = 1/2 (delta = 2^-1/2)");
        require(dt_sq == Rat(1), "deltatilde^2 = 1 (deltatilde = 1)");
        return std::string("delta^2=1/2, deltatilde^2=1, exact");
    });

    // 3. Corollary identity, 10^3 random (P, d), exact coefficient equality.
    criterion("3.corollary-identity", 30.0, [] {
        TrialConfig cfg;
        cfg.seed = 2026;
        cfg.trials = 1000;
        SuiteReport rep = verify_corollary_suite(cfg);
        require(rep.failures == 0,
                rep.counterexamples.empty() ? "zero failures"
                                            : rep.counterexamples[0]);
        require(rep.checks >= 1000, "at least 10^3 identity checks");
        return std::to_string(rep.checks) + " checks, 0 failures";
    });

    // 4. Theorem 3 suite, 10^3 hypothesis-satisfying trials, exact mode.
    criterion("4.theorem3-suite", 300.0, [] {
        TrialConfig cfg;
        cfg.seed = 31337;
        cfg.trials = 1000;
        cfg.delta_sq = Rat(1, 4);  // delta = 1/2
        cfg.deg_Q_max = 4;         // delta^-2 = 4
        SuiteReport rep = verify_theorem3(cfg);
        require(rep.failures == 0,
                rep.counterexamples.empty() ? "zero counterexamples"
                                            : rep.counterexamples[0]);
        require(rep.trials_run == 1000, "10^3 trials");
        return std::string("1000 compositions certified hyperbolic");
    });

    // 5. Sector-squaring property, 10^4 z per delta, zero disagreements.
    criterion("5.sector-squaring", 60.0, [] {
        TrialConfig cfg;
        cfg.seed = 555;
        cfg.trials = 10000;
        SuiteReport rep =
            verify_sector_square(cfg, {Rat(1, 100), Rat(1, 4), Rat(1, 2)});
        require(rep.failures == 0, "zero disagreements");
        require(rep.trials_run == 30000, "10^4 points per delta");
        return std::string("30000 exact agreement checks");
    });

    // 6. Gauss-Lucas suite, 10^3 random polynomials of degree <= 10.
    criterion("6.gauss-lucas", 120.0, [] {
        TrialConfig cfg;
        cfg.seed = 606;
        cfg.trials = 1000;
        SuiteReport rep = verify_gauss_lucas(cfg, 10);
        require(rep.failures == 0,
                rep.counterexamples.empty() ? "all Pass"
                                            : rep.counterexamples[0]);
        require(rep.indeterminate == 0, "no indeterminate hulls");
        return std::string("1000 hull containments certified");
    });

    // 7. Theorem 4 mechanism, 10^2 constructed even polynomials.
    criterion("7.theorem4-mechanism", 300.0, [] {
        unsigned total = 0;
        for (const Rat& T : {Rat(1, 2), Rat(1), Rat(5)}) {
            TrialConfig cfg;
            cfg.seed = 7000 + T.num().get_ui();
            cfg.trials = 34;
            SuiteReport rep = verify_theorem4(cfg, T);
            require(rep.failures == 0,
                    rep.counterexamples.empty()
                        ? "zero failures at T=" + T.str()
                        : rep.counterexamples[0]);
            total += rep.trials_run;
        }
        require(total >= 100, "at least 10^2 polynomials");
        return std::to_string(total) + " even polynomials, full grids + identities";
    });

    // 8. Xi jet cross-validation, orders 0..40, 50 decimal digits.
    criterion("8.xi-jet-cross-validation", 600.0, [] {
        XiJetRequest ra;
        ra.M = 40;
        ra.prec = 256;
        ra.method = XiMethod::PhiMoments;
        BallJet ja = xi_taylor(ra);
        XiJetRequest rb = ra;
        rb.method = XiMethod::DirectFactors;
        BallJet jb = xi_taylor(rb);
        for (std::size_t k = 0; k <= 40; ++k)
            require(ja.values[k].overlaps(jb.values[k]),
                    "enclosures intersect at order " + std::to_string(k));
        Rat tol = Rat(1) / Rat(Int(10)).pow(40);
        require(ja.values[0].rad_rat() <= tol, "PhiMoments Xi(0) radius <= 1e-40");
        require(jb.values[0].rad_rat() <= tol, "DirectFactors Xi(0) radius <= 1e-40");
        Ball direct = xi_eval_real(Ball::from_long(0, 320), 320);
        require(ja.values[0].overlaps(direct), "Xi(0) contains the formula value");
        require(jb.values[0].overlaps(direct), "Xi(0) contains the formula value");
        require(direct.contains(Rat::parse("0.4971207782")) ||
                    (direct.lower_rat() < Rat::parse("0.49712077819") &&
                     direct.upper_rat() > Rat::parse("0.49712077818")),
                "Xi(0) approx 0.4971207782");
        return std::string("orders 0..40 intersect; Xi(0) radius <= 1e-40");
    });

    // 9. Xi_0 Jensen grid certified hyperbolic, n <= 10, d <= 30, 256 bits.
    criterion("9.xi0-jensen-grid", 900.0, [] {
        XiJetRequest req;
        req.M = 80;  // half form needs Xi derivatives to order 2(n+d)
        req.prec = 256;
        req.method = XiMethod::Both;
        BallJet xi0 = half_form(xi_taylor(req));
        ScanResult res = scan_jensen_grid(xi0, 1, 30, 0, 10, 256);
        unsigned cells = 0;
        for (const auto& cell : res.grid) {
            require(cell.verdict == VerdictStatus::Hyperbolic,
                    "certified hyperbolic at n=" + std::to_string(cell.n) +
                        " d=" + std::to_string(cell.d));
            ++cells;
        }
        require(cells == 30 * 11, "full 30x11 grid");
        require(res.caveat_empirical, "empirical caveat present");
        return std::string("330 Jensen polynomials certified hyperbolic");
    });

    // 10. Theorem 2 empirical truncation scan for (z^2 + 1/16) cos z.
    criterion("10.theorem2-scan", 600.0, [] {
        RatJet f = strip_cos_jet(12 + 26);
        Ball c = Ball::from_rat(Rat(3, 2), 192);
        Theorem2Report rep = scan_theorem2(f, c, 0, 12, Rat(5, 2), 26, 256);
        require(rep.caveat_empirical, "caveat flag present");
        require(rep.rows.size() == 13, "full scan range");
        require(rep.empirical_n1.has_value(), "empirical n reported");
        for (const auto& row : rep.rows)
            if (row.n >= *rep.empirical_n1)
                require(row.contained,
                        "containment from the empirical n onward (n=" +
                            std::to_string(row.n) + ")");
        return "empirical n = " + std::to_string(*rep.empirical_n1) +
               ", caveat present";
    });

    unsigned failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::printf("%u/%zu criteria passed\n", static_cast<unsigned>(results.size()) - failed,
                results.size());
    return failed == 0 ? 0 : 1;
}
