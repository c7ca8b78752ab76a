#pragma once

#include <optional>
#include <vector>

#include "jensenlab/poly.hpp"
#include "jensenlab/region.hpp"

namespace jensenlab {

// --- Exact real-root counting -------------------------------------------

// P / gcd(P, P'), exact. The result keeps P's leading coefficient structure
// (it is only normalized up to a positive constant).
RatPoly squarefree_part(const RatPoly& P);

// Number of distinct real roots of P in (a, b]; nullopt endpoints mean
// -inf / +inf (signs taken from leading coefficients). The caller is
// expected to pass a square-free P.
long sturm_count(const RatPoly& P, std::optional<Rat> a, std::optional<Rat> b);
long sturm_count(const RatPoly& P);  // whole real line

// --- Certified root sets ---------------------------------------------------

struct RootEnclosure {
    CBall disk;              // rectangle enclosure of the root(s)
    unsigned multiplicity;   // roots inside, counted with multiplicity
    bool certified_real;     // imaginary part is exactly zero and proven real
    bool clustered;          // enclosure merged from several inclusion disks
};

struct RootSet {
    std::vector<RootEnclosure> roots;
    Ball residual = Ball::from_long(0);  // upper bound on max |P(center)|
    bool certified = false;              // false: iteration failed to certify
    long degree = 0;
};

// Simultaneous (Aberth) iteration plus Weierstrass/Gerschgorin inclusion
// disks. Rat mode resolves multiplicities exactly (Yun decomposition) first;
// ball mode reports clusters. Requires degree >= 1 and, in ball mode, a
// leading coefficient excluding zero.
RootSet all_roots(const RatPoly& P, Prec prec = kDefaultPrec);
RootSet all_roots(const BallPoly& P, Prec prec = kDefaultPrec);

// --- Hyperbolicity certificates ---------------------------------------------

enum class VerdictStatus { Hyperbolic, NotHyperbolic, Indeterminate };

struct HyperbolicityVerdict {
    VerdictStatus status;
    std::optional<CBall> witness;  // certified nonreal root (NotHyperbolic)
    std::optional<Ball> margin;    // distance-to-decision (Indeterminate)
};

// Exact verdict via Sturm counting on the square-free part.
HyperbolicityVerdict is_hyperbolic(const RatPoly& P);
// Certified under every selection of coefficients within radii, else
// Indeterminate. Exact coefficients fall back to the Sturm path.
HyperbolicityVerdict is_hyperbolic(const BallPoly& P, Prec prec = kDefaultPrec);

// --- Regions ---------------------------------------------------------------

enum class Containment { Yes, No, Indeterminate };

struct ContainmentReport {
    Containment result;
    std::optional<CBall> witness;  // a disk certified outside (for No)
};

// Yes iff every root enclosure lies entirely inside R; No with a witness
// disk entirely outside; Indeterminate when some disk straddles the
// boundary. Requires rs.certified.
ContainmentReport region_contains(const RootSet& rs, const RegionSpec& R);

// --- Sector-squaring consistency ---------------------------------------------

struct SectorSquareReport {
    Membership in_sector;       // z in S(delta)
    Membership in_half_sector;  // z^2 in S~ (half sector with deltatilde)
    enum class Agreement { Agree, Disagree, Indeterminate } agreement;
};

// Checks z in S(delta) <=> z^2 in S~ with deltatilde^2 = 4 delta^2 (1-delta^2).
// delta given through its square (exact); requires 0 < delta^2 <= 1/2.
SectorSquareReport sector_square_member_sq(const CBall& z, const Rat& delta_sq);
// Ball-parameter variant; requires the enclosure of delta to certify
// 0 < delta <= 2^(-1/2).
SectorSquareReport sector_square_member(const CBall& z, const Ball& delta);

// --- Gauss-Lucas -------------------------------------------------------------

enum class GLStatus { Pass, Fail, Indeterminate };

struct GaussLucasReport {
    GLStatus status;
    std::optional<CBall> witness;  // offending root disk of P' (for Fail)
};

// Pass iff every certified root of P' lies in the convex hull of the
// certified roots of P, inflated by the combined enclosure radii.
// Requires deg P >= 2.
GaussLucasReport gauss_lucas_check(const RatPoly& P, Prec prec = kDefaultPrec);

}  // namespace jensenlab
