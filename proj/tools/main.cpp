#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "jensenlab/report.hpp"
#include "jensenlab/theorems.hpp"

using namespace jensenlab;

namespace {

struct Range {
    unsigned lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
        } else {
            r.lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
            r.hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
        }
    } catch (...) {
        throw UsageError("bad range '" + s + "' (expected N or LO..HI)");
    }
    if (r.hi < r.lo) throw UsageError("bad range '" + s + "': hi < lo");
    return r;
}

XiMethod parse_method(const std::string& m) {
    if (m == "phi") return XiMethod::PhiMoments;
    if (m == "factors") return XiMethod::DirectFactors;
    if (m == "both") return XiMethod::Both;
    throw UsageError("unknown method '" + m + "'");
}

std::string verdict_str(VerdictStatus v) {
    switch (v) {
        case VerdictStatus::Hyperbolic: return "hyperbolic";
        case VerdictStatus::NotHyperbolic: return "not_hyperbolic";
        case VerdictStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

struct CommonOpts {
    long prec = 256;
    long order = 16;
    std::string method = "both";
    std::uint64_t seed = 1;
    unsigned trials = 1000;
    std::string delta = "0.5";
    std::string T = "1";
    std::string c = "1.5";
    std::string n1 = "0";
    std::string d_range = "1..8";
    std::string n_range = "0..4";
    std::string out;
    std::string format = "csv";
    std::string cache_dir;
    std::string jet = "xi0";
    unsigned trunc = 24;
    std::string radius = "2.5";
};

int emit_and_code(const CommonOpts& o, const Table& t, int code) {
    write_table(o.out, o.format, t);
    return code;
}

Table suite_table(const SuiteReport& rep, const CommonOpts& o,
                  const std::string& extra_comment = "") {
    Table t;
    t.schema = "jensenlab.verify." + rep.name + ".v1";
    t.comments.push_back("seed=" + std::to_string(o.seed));
    if (!extra_comment.empty()) t.comments.push_back(extra_comment);
    t.columns = {"metric", "value"};
    t.rows.push_back({"trials", std::to_string(rep.trials_run)});
    t.rows.push_back({"checks", std::to_string(rep.checks)});
    t.rows.push_back({"failures", std::to_string(rep.failures)});
    t.rows.push_back({"indeterminate", std::to_string(rep.indeterminate)});
    t.rows.push_back({"result", rep.failures ? "FAIL"
                                : rep.indeterminate ? "INDETERMINATE"
                                                    : "PASS"});
    for (std::size_t i = 0; i < rep.counterexamples.size(); ++i)
        t.rows.push_back({"counterexample_" + std::to_string(i),
                          rep.counterexamples[i]});
    return t;
}

int suite_exit_code(const SuiteReport& rep) {
    if (rep.failures) return 1;
    if (rep.indeterminate) return 2;
    return 0;
}

BallJet load_xi0_jet(const CommonOpts& o, std::size_t half_order) {
    XiJetRequest req;
    req.M = 2 * half_order;
    req.prec = o.prec;
    req.method = parse_method(o.method);
    req.cache_dir = o.cache_dir;
    return half_form(xi_taylor(req));
}

int cmd_xi_coeffs(const CommonOpts& o) {
    XiJetRequest req;
    req.M = static_cast<std::size_t>(o.order);
    req.prec = o.prec;
    req.method = parse_method(o.method);
    req.cache_dir = o.cache_dir;
    BallJet jet = xi_taylor(req);

    Table t;
    t.schema = "jensenlab.xi-coeffs.v1";
    t.comments.push_back("order=" + std::to_string(req.M));
    t.comments.push_back("prec=" + std::to_string(req.prec));
    t.comments.push_back("method=" + o.method);
    t.columns = {"k", "mid", "rad", "method", "prec"};
    for (std::size_t k = 0; k < jet.values.size(); ++k)
        t.rows.push_back({std::to_string(k), ball_mid_decimal(jet.values[k]),
                          ball_rad_decimal(jet.values[k]), o.method,
                          std::to_string(req.prec)});
    return emit_and_code(o, t, 0);
}

int cmd_verify(const std::string& what, const CommonOpts& o) {
    if (what == "bounds") {
        Rat T = Rat::parse(o.T);
        Theorem4Bounds b = bound_theorem4(T);
        Rat delta_sq = Rat(1) / (Rat(1) + Rat(4) * T * T);
        Rat dt_sq = Rat(4) * delta_sq * (Rat(1) - delta_sq);

        Table t;
        t.schema = "jensenlab.verify.bounds.v1";
        t.comments.push_back("T=" + T.str());
        t.columns = {"quantity", "value"};
        t.rows.push_back({"d_max_xi_1_plus_4T2", b.d_max_xi.get_str()});
        t.rows.push_back({"d_max_xi0_remark_floor", b.d_max_xi0.get_str()});
        t.rows.push_back({"delta_sq", delta_sq.str()});
        t.rows.push_back({"deltatilde_sq", dt_sq.str()});

        // the n1/c/d bound when requested
        if (o.d_range.find("..") == std::string::npos) {
            Int d(o.d_range.c_str());
            if (d >= 1) {
                Ball cb = Ball::from_rat(Rat::parse(o.c), 192);
                Int n1(o.n1.c_str());
                t.rows.push_back(
                    {"theorem1_bound", bound_theorem1(cb, n1, d).get_str()});
            }
        }

        int code = 0;
        if (T == Rat::parse("3e12")) {
            bool xi_ok = b.d_max_xi == Int("36000000000000000000000001") &&
                         b.d_max_xi >= Int("36000000000000000000000000");
            bool xi0_ok = b.d_max_xi0 >= Int("9000000000000000000000000");
            t.rows.push_back({"published_check_xi", xi_ok ? "PASS" : "FAIL"});
            t.rows.push_back({"published_check_xi0", xi0_ok ? "PASS" : "FAIL"});
            if (!xi_ok || !xi0_ok) code = 1;
        }
        return emit_and_code(o, t, code);
    }

    TrialConfig cfg;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.prec = o.prec;
    Rat delta = Rat::parse(o.delta);
    if (delta.sign() <= 0) throw UsageError("--delta must be positive");
    cfg.delta_sq = delta * delta;

    if (what == "t3") {
        Rat cap = Rat(1) / cfg.delta_sq;
        while (Rat(static_cast<long>(cfg.deg_Q_max)) > cap && cfg.deg_Q_max > 1)
            --cfg.deg_Q_max;
        SuiteReport rep = verify_theorem3(cfg);
        return emit_and_code(o, suite_table(rep, o, "delta=" + delta.str()),
                             suite_exit_code(rep));
    }
    if (what == "corollary") {
        SuiteReport rep = verify_corollary_suite(cfg);
        return emit_and_code(o, suite_table(rep, o, "delta=" + delta.str()),
                             suite_exit_code(rep));
    }
    if (what == "t4") {
        Rat T = Rat::parse(o.T);
        SuiteReport rep = verify_theorem4(cfg, T);
        return emit_and_code(o, suite_table(rep, o, "T=" + T.str()),
                             suite_exit_code(rep));
    }
    throw UsageError("unknown verify target '" + what +
                     "' (expected t3|t4|corollary|bounds)");
}

int cmd_scan(const std::string& what, const CommonOpts& o) {
    Range dn = parse_range(o.d_range);
    Range nn = parse_range(o.n_range);

    if (what == "grid") {
        ScanResult res;
        std::string jet_desc = o.jet;
        if (o.jet == "exp") {
            res = scan_jensen_grid(exp_jet(nn.hi + dn.hi), dn.lo, dn.hi, nn.lo,
                                   nn.hi, o.prec);
        } else if (o.jet == "stripcos") {
            res = scan_jensen_grid(strip_cos_jet(nn.hi + dn.hi), dn.lo, dn.hi,
                                   nn.lo, nn.hi, o.prec);
        } else if (o.jet == "xi0") {
            res = scan_jensen_grid(load_xi0_jet(o, nn.hi + dn.hi), dn.lo, dn.hi,
                                   nn.lo, nn.hi, o.prec);
        } else if (o.jet == "xi") {
            XiJetRequest req;
            req.M = nn.hi + dn.hi;
            req.prec = o.prec;
            req.method = parse_method(o.method);
            req.cache_dir = o.cache_dir;
            res = scan_jensen_grid(xi_taylor(req), dn.lo, dn.hi, nn.lo, nn.hi,
                                   o.prec);
        } else {
            throw UsageError("unknown jet '" + o.jet + "'");
        }

        Table t;
        t.schema = "jensenlab.scan.grid.v1";
        t.comments.push_back("caveat=empirical within scanned range only; "
                             "no finite scan certifies N(f;d)");
        t.comments.push_back("jet=" + jet_desc);
        t.comments.push_back("prec=" + std::to_string(o.prec));
        for (const auto& [d, n0] : res.first_all_hyperbolic_n)
            t.comments.push_back(
                "first_all_hyperbolic_n(d=" + std::to_string(d) +
                ")=" + (n0 ? std::to_string(*n0) : std::string("none")));
        t.columns = {"n", "d", "verdict"};
        bool indet = false;
        for (const auto& cell : res.grid) {
            t.rows.push_back({std::to_string(cell.n), std::to_string(cell.d),
                              verdict_str(cell.verdict)});
            if (cell.verdict == VerdictStatus::Indeterminate) indet = true;
        }
        return emit_and_code(o, t, indet ? 2 : 0);
    }

    if (what == "theorem2") {
        RatJet jet = strip_cos_jet(nn.hi + o.trunc);
        Ball c = Ball::from_rat(Rat::parse(o.c), 192);
        Theorem2Report rep = scan_theorem2(jet, c, nn.lo, nn.hi,
                                           Rat::parse(o.radius), o.trunc, o.prec);
        Table t;
        t.schema = "jensenlab.scan.theorem2.v1";
        t.comments.push_back("caveat=empirical within scanned range only; "
                             "truncation roots, not zeros of f^(n)");
        t.comments.push_back("jet=" + jet.label);
        t.comments.push_back("c=" + o.c);
        t.comments.push_back("radius=" + o.radius);
        t.comments.push_back("trunc=" + std::to_string(o.trunc));
        t.comments.push_back(
            "empirical_n1=" +
            (rep.empirical_n1 ? std::to_string(*rep.empirical_n1)
                              : std::string("none")));
        t.columns = {"n", "roots_in_disk", "nonreal_in_disk", "below_threshold",
                     "tail_bound", "contained"};
        bool uncert = false;
        for (const auto& r : rep.rows) {
            if (r.below_threshold == ~0u) uncert = true;
            t.rows.push_back({std::to_string(r.n), std::to_string(r.roots_in_disk),
                              std::to_string(r.nonreal_in_disk),
                              std::to_string(r.below_threshold), r.tail_bound,
                              r.contained ? "yes" : "no"});
        }
        return emit_and_code(o, t, uncert ? 2 : 0);
    }
    throw UsageError("unknown scan kind '" + what + "' (expected grid|theorem2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jensenlab: certified Jensen polynomial laboratory "
                 "(hyperbolicity certificates, Riemann Xi Taylor jets, "
                 "theorem verification suites)"};
    app.set_config("--config", "", "flat key=value config file");
    app.fallthrough();

    CommonOpts o;
    app.add_option("--prec", o.prec, "working precision in bits (>= 64)");
    app.add_option("--order", o.order, "jet order M");
    app.add_option("--method", o.method, "xi jet method: phi|factors|both");
    app.add_option("--seed", o.seed, "randomized-suite seed");
    app.add_option("--trials", o.trials, "randomized-suite trial count");
    app.add_option("--delta", o.delta, "sector parameter delta (exact decimal)");
    app.add_option("--T", o.T, "gapped-strip parameter T (exact decimal)");
    app.add_option("--c", o.c, "growth-order exponent c");
    app.add_option("--n1", o.n1, "n1 for the Theorem 1 bound");
    app.add_option("--d", o.d_range, "degree d or range LO..HI");
    app.add_option("--n", o.n_range, "shift n or range LO..HI");
    app.add_option("--out", o.out, "output path (default stdout)");
    app.add_option("--format", o.format, "csv|json");
    app.add_option("--cache-dir", o.cache_dir, "xi coefficient cache directory")
        ->envname("JENSENLAB_CACHE");
    app.add_option("--jet", o.jet, "scan jet: xi0|xi|exp|stripcos");
    app.add_option("--trunc", o.trunc, "Taylor section order for theorem2 scans");
    app.add_option("--radius", o.radius, "certified disk radius for theorem2 scans");

    auto* sub_xi = app.add_subcommand("xi-coeffs", "compute the Xi Taylor jet");
    std::string verify_what, scan_what;
    auto* sub_verify = app.add_subcommand("verify", "run a verification suite");
    sub_verify->add_option("target", verify_what, "t3|t4|corollary|bounds")
        ->required();
    auto* sub_scan = app.add_subcommand("scan", "run a grid or region scan");
    sub_scan->add_option("kind", scan_what, "grid|theorem2")->required();
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (o.prec < 64) throw UsageError("--prec must be >= 64");
        if (o.format != "csv" && o.format != "json")
            throw UsageError("--format must be csv or json");
        if (sub_xi->parsed()) return cmd_xi_coeffs(o);
        if (sub_verify->parsed()) return cmd_verify(verify_what, o);
        if (sub_scan->parsed()) return cmd_scan(scan_what, o);
        return 3;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const MethodDisagreement& e) {
        std::cerr << "method disagreement: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
