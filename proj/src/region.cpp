#include "jensenlab/region.hpp"

namespace jensenlab {

RegionSpec RegionSpec::strip(const Rat& h) {
    if (h.sign() <= 0) throw DomainError("Strip: halfwidth must be positive");
    RegionSpec r;
    r.kind = Kind::Strip;
    r.strip_halfwidth = h;
    return r;
}

RegionSpec RegionSpec::sector_sq(const Rat& delta_sq) {
    if (delta_sq.sign() <= 0 || delta_sq > Rat(1))
        throw DomainError("Sector: delta^2 must lie in (0, 1]");
    RegionSpec r;
    r.kind = Kind::Sector;
    r.delta_sq = delta_sq;
    return r;
}

RegionSpec RegionSpec::gapped_strip(const Rat& T) {
    if (T.sign() < 0) throw DomainError("GappedStrip: T must be nonnegative");
    RegionSpec r;
    r.kind = Kind::GappedStrip;
    r.gap_T_rat = T;
    return r;
}

RegionSpec RegionSpec::gapped_strip(const Ball& T) {
    RegionSpec r;
    r.kind = Kind::GappedStrip;
    if (T.is_exact())
        r.gap_T_rat = T.mid_rat();
    else
        r.gap_T_ball = T;
    return r;
}

RegionSpec RegionSpec::parabolic() {
    RegionSpec r;
    r.kind = Kind::Parabolic;
    return r;
}

RegionSpec RegionSpec::half_sector_sq(const Rat& dt_sq) {
    if (dt_sq.sign() <= 0 || dt_sq > Rat(1))
        throw DomainError("HalfSector: deltatilde^2 must lie in (0, 1]");
    RegionSpec r;
    r.kind = Kind::HalfSector;
    r.delta_sq = dt_sq;
    return r;
}

std::string RegionSpec::describe() const {
    switch (kind) {
        case Kind::Strip: return "Strip(h=" + strip_halfwidth.str() + ")";
        case Kind::Sector: return "Sector(delta^2=" + delta_sq.str() + ")";
        case Kind::GappedStrip:
            return "GappedStrip(T=" +
                   (gap_T_rat ? gap_T_rat->str() : gap_T_ball->str()) + ")";
        case Kind::Parabolic: return "Parabolic";
        case Kind::HalfSector: return "HalfSector(deltatilde^2=" + delta_sq.str() + ")";
    }
    return "?";
}

namespace {

struct RatInterval {
    Rat lo, hi;
};

// range of |x| over [lo, hi]
RatInterval abs_range(const RatInterval& x) {
    if (x.lo.sign() >= 0) return x;
    if (x.hi.sign() <= 0) return {-x.hi, -x.lo};
    return {Rat(0), std::max(-x.lo, x.hi)};
}

// range of x^2 over [lo, hi]
RatInterval sq_range(const RatInterval& x) {
    RatInterval a = abs_range(x);
    return {a.lo * a.lo, a.hi * a.hi};
}

}  // namespace

Membership region_member(const CBall& z, const RegionSpec& R) {
    // Exact dyadic rectangle bounds.
    RatInterval re{z.re.lower_rat(), z.re.upper_rat()};
    RatInterval im{z.im.lower_rat(), z.im.upper_rat()};
    RatInterval aim = abs_range(im);
    RatInterval are = abs_range(re);
    RatInterval im2 = sq_range(im);
    RatInterval re2 = sq_range(re);

    switch (R.kind) {
        case RegionSpec::Kind::Strip: {
            // open: |Im z| < h
            if (aim.hi < R.strip_halfwidth) return Membership::In;
            if (aim.lo >= R.strip_halfwidth) return Membership::Out;
            return Membership::Indeterminate;
        }
        case RegionSpec::Kind::Sector: {
            // closed: im^2 <= q (re^2 + im^2)  <=>  (1-q) im^2 <= q re^2
            const Rat& q = R.delta_sq;
            Rat one_q = Rat(1) - q;
            if (one_q * im2.hi <= q * re2.lo) return Membership::In;
            if (one_q * im2.lo > q * re2.hi) return Membership::Out;
            return Membership::Indeterminate;
        }
        case RegionSpec::Kind::GappedStrip: {
            // ({|Im| < 1/2} and {|Re| >= T}) union R
            Rat half(1, 2);
            bool exactly_real = im.lo.is_zero() && im.hi.is_zero();
            if (exactly_real) return Membership::In;
            Rat T_for_in, T_for_out;
            if (R.gap_T_rat) {
                T_for_in = T_for_out = *R.gap_T_rat;
            } else {
                T_for_in = R.gap_T_ball->upper_rat();
                T_for_out = R.gap_T_ball->lower_rat();
            }
            if (aim.hi < half && are.lo >= T_for_in) return Membership::In;
            // out: no real point, and every point misses the gapped strip
            if (aim.lo.sign() > 0 &&
                (aim.lo >= half || are.hi < T_for_out))
                return Membership::Out;
            return Membership::Indeterminate;
        }
        case RegionSpec::Kind::Parabolic: {
            // open: im^2 - 1/4 < re
            Rat quarter(1, 4);
            if (im2.hi - quarter < re.lo) return Membership::In;
            if (im2.lo - quarter >= re.hi) return Membership::Out;
            return Membership::Indeterminate;
        }
        case RegionSpec::Kind::HalfSector: {
            // closed: (1-q) im^2 <= q re^2 and Re >= 0
            const Rat& q = R.delta_sq;
            Rat one_q = Rat(1) - q;
            bool sec_in = one_q * im2.hi <= q * re2.lo;
            // re^2 lower bound is only usable for the sector test together
            // with the sign of re
            if (sec_in && re.lo.sign() >= 0) return Membership::In;
            if (re.hi.sign() < 0) return Membership::Out;
            if (one_q * im2.lo > q * re2.hi) return Membership::Out;
            return Membership::Indeterminate;
        }
    }
    return Membership::Indeterminate;
}

}  // namespace jensenlab
