#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "jensenlab/roots.hpp"
#include "jensenlab/specialfn.hpp"

namespace jensenlab {

struct TrialConfig {
    std::uint64_t seed = 1;
    unsigned trials = 100;
    unsigned deg_P_min = 1, deg_P_max = 6;
    unsigned deg_Q_min = 1, deg_Q_max = 4;
    Rat delta_sq{1, 4};  // sector parameter, squared (delta = 1/2 by default)
    Prec prec = kDefaultPrec;
    enum class Mode { Exact, Ball } mode = Mode::Exact;
};

struct SuiteReport {
    std::string name;
    unsigned trials_run = 0;
    unsigned checks = 0;
    unsigned failures = 0;
    unsigned indeterminate = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return failures == 0; }
};

// Deterministic per-trial stream: any execution order yields the same data.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);
Rat random_rat_in(std::mt19937_64& rng, const Rat& lo, const Rat& hi,
                  unsigned den_max = 16);

// Real polynomial with all zeros strictly inside S(delta), delta^2 = delta_sq:
// product of real linear factors and conjugate quadratics with
// |Im a| <= 0.95 delta |a|. Never vanishes at 0.
RatPoly random_sector_poly(unsigned deg, const Rat& delta_sq, std::mt19937_64& rng);
// Hyperbolic polynomial with random rational roots in [-10, 10].
RatPoly random_hyperbolic_poly(unsigned deg, std::mt19937_64& rng);
// Even polynomial with certified zeros in the gapped strip S(T):
// real pairs (z^2 - r^2) and quadruples +-(x +- iy), x >= T + 1/4, |y| <= 12/25.
RatPoly random_even_gapped_poly(unsigned half_deg, const Rat& T, std::mt19937_64& rng);

// Obreschkoff composition preserves hyperbolicity under the sector/degree
// hypothesis: every trial composes a sector P with a hyperbolic Q and
// requires a certified Hyperbolic verdict.
SuiteReport verify_theorem3(const TrialConfig& cfg);

struct CorollaryReport {
    bool identity_ok = false;          // jensen == reversed composition, exactly
    HyperbolicityVerdict verdict{VerdictStatus::Indeterminate, std::nullopt,
                                 std::nullopt};
};
// Single instance: exact reversal identity, plus the hyperbolicity claim
// (meaningful when Z(P) in S(delta) and d <= delta^-2).
CorollaryReport verify_corollary(const RatPoly& P, std::size_t d);
// Randomized identity suite plus hypothesis-satisfying verdict checks.
SuiteReport verify_corollary_suite(const TrialConfig& cfg);

// Even polynomials with zeros in S(T): the full Jensen grid up to
// d <= 1+4T^2 must be hyperbolic, the proof identities must hold exactly,
// and all zero sets of the half-form derivatives must sit in S~.
SuiteReport verify_theorem4(const TrialConfig& cfg, const Rat& T);

// z in S(delta) <=> z^2 in S~, randomized over exact rational points.
SuiteReport verify_sector_square(const TrialConfig& cfg,
                                 const std::vector<Rat>& delta_sqs);

// Roots of P' lie in the inflated hull of roots of P, randomized.
SuiteReport verify_gauss_lucas(const TrialConfig& cfg, unsigned deg_max = 10);

// ceil(max(n1, (d/4)^(c/2))), outward rounding on the power.
Int bound_theorem1(const Ball& c, const Int& n1, const Int& d);

struct Theorem4Bounds {
    Int d_max_xi;    // floor(1 + 4 T^2)
    Int d_max_xi0;   // floor(T^2 (1 + T^-2/4)^2)
};
Theorem4Bounds bound_theorem4(const Rat& T);
Theorem4Bounds bound_theorem4(const Ball& T);  // inward rounding via lower bound

struct ScanResult {
    struct Cell {
        unsigned n, d;
        VerdictStatus verdict;
    };
    std::vector<Cell> grid;
    // per d: smallest n0 in range with all verdicts Hyperbolic for n >= n0
    std::map<unsigned, std::optional<unsigned>> first_all_hyperbolic_n;
    bool caveat_empirical = true;  // a finite scan never certifies N(f;d)
};

ScanResult scan_jensen_grid(const RatJet& jet, unsigned d_lo, unsigned d_hi,
                            unsigned n_lo, unsigned n_hi, Prec prec);
ScanResult scan_jensen_grid(const BallJet& jet, unsigned d_lo, unsigned d_hi,
                            unsigned n_lo, unsigned n_hi, Prec prec);

struct Theorem2Report {
    struct Row {
        unsigned n;
        unsigned roots_in_disk;
        unsigned nonreal_in_disk;
        unsigned below_threshold;  // nonreal, in disk, not certified |Re| >= n^(1/c)
        std::string tail_bound;    // Taylor tail of the truncation on the disk
        bool contained;
    };
    std::vector<Row> rows;
    std::optional<unsigned> empirical_n1;
    bool caveat_empirical = true;
};

// Truncation-root scan behind Theorem 2: roots of Taylor sections of f^(n)
// inside |z| <= disk_radius, tested against |Re z| >= n^(1/c) (nonreal ones).
// Only truncation roots are reported; the jet must carry a decay envelope.
Theorem2Report scan_theorem2(const RatJet& jet, const Ball& c, unsigned n_lo,
                             unsigned n_hi, const Rat& disk_radius,
                             unsigned trunc, Prec prec);

// Demo jets for scans: all-ones jet of e^z, and (z^2 + 1/16) cos z with its
// coefficient-decay envelope |f^(m)(0)| <= (m+1)^2.
RatJet exp_jet(std::size_t M);
RatJet strip_cos_jet(std::size_t M);

}  // namespace jensenlab
