#pragma once

#include <optional>
#include <string>

#include "jensenlab/ball.hpp"

namespace jensenlab {

// Zero-location regions from the strip/sector geometry:
//   Strip(h)        |Im z| < h                       (open; the classical strip has h = 1/2)
//   Sector(delta)   |Im z| <= delta |z|              (closed), stored via delta^2
//   GappedStrip(T)  (z in S and |Re z| >= T) or z real
//   Parabolic       (Im z)^2 - 1/4 < Re z            (open; image of S under squaring)
//   HalfSector(dt)  z in S(dt) and Re z >= 0         (closed), stored via dt^2
// Sector parameters are kept squared so membership is polynomial with
// rational coefficients and boundary cases stay exactly decidable.
struct RegionSpec {
    enum class Kind { Strip, Sector, GappedStrip, Parabolic, HalfSector };

    Kind kind;
    Rat strip_halfwidth{1, 2};       // Strip
    Rat delta_sq{0};                 // Sector / HalfSector (squared parameter)
    std::optional<Rat> gap_T_rat;    // GappedStrip, exact parameter when known
    std::optional<Ball> gap_T_ball;  // GappedStrip, enclosure otherwise

    static RegionSpec strip(const Rat& h);
    static RegionSpec sector_sq(const Rat& delta_sq);
    static RegionSpec gapped_strip(const Rat& T);
    static RegionSpec gapped_strip(const Ball& T);
    static RegionSpec parabolic();
    static RegionSpec half_sector_sq(const Rat& deltatilde_sq);

    std::string describe() const;
};

enum class Membership { In, Out, Indeterminate };

// Whole-enclosure membership: In means every point of the rectangle z lies
// in the region, Out means no point does. Decided by exact rational
// arithmetic on the rectangle corners (region parameters given as balls
// contribute outward rounding only).
Membership region_member(const CBall& z, const RegionSpec& R);

}  // namespace jensenlab
