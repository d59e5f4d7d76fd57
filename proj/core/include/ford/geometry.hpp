#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ford/rational.hpp"

namespace ford {

/// Closed disk centered on the real axis.
struct Disk {
    Rational center;
    Rational radius;  // > 0
};

inline Disk make_disk(const Rational& center, const Rational& radius) {
    return Disk{center, radius};
}

/// The value p + q * sqrt(d) with rational p, q and rational d >= 0.
/// One square root is all the engine ever needs: every endpoint it meets is
/// one circle evaluated at one rational height.
struct QuadraticReal {
    Rational p;
    Rational q;
    Rational d;
};

/// Canonical form: q = 0 whenever d = 0 and vice versa.
QuadraticReal make_quadratic(const Rational& p, const Rational& q, const Rational& d);
inline QuadraticReal make_quadratic(const Rational& p) { return QuadraticReal{p, 0, 0}; }

/// Exact sign of a + b*sqrt(d), decided by case analysis and squaring.
int sign_with_radical(const Rational& a, const Rational& b, const Rational& d);

/// Exact three-way comparison of two quadratic reals.
std::strong_ordering compare_quadratic(const QuadraticReal& u, const QuadraticReal& v);

inline bool quadratic_less(const QuadraticReal& u, const QuadraticReal& v) {
    return compare_quadratic(u, v) == std::strong_ordering::less;
}

/// Closed interval with quadratic-real endpoints, lo <= hi.
struct QInterval {
    QuadraticReal lo;
    QuadraticReal hi;
};

/// Sorted, pairwise disjoint closed intervals separated by positive gaps.
struct IntervalSet {
    std::vector<QInterval> parts;

    bool empty() const { return parts.empty(); }
};

struct CoverageResult {
    bool covered;
    IntervalSet uncovered;  // closure of base minus the union of the pieces
};

/// Does the union of the closed pieces contain the closed interval [lo, hi]?
/// Touching pieces count; the uncovered remainder always has components of
/// positive length.
CoverageResult interval_union_covers(const QuadraticReal& lo, const QuadraticReal& hi,
                                     std::vector<QInterval> pieces);

/// Exact closed (or open) membership of the point (x, y) in a disk.
bool point_in_disk(const Rational& x, const Rational& y, const Disk& d, bool closed = true);

/// Rational interval, possibly empty.
struct RatInterval {
    bool empty;
    Rational lo;
    Rational hi;
};

/// The x-range of the target's upper semicircle covered by the coverer.
/// For axis-centered disks the quadratics cancel, so the covered part of the
/// semicircle projects to a rational interval (the chord-projection trick).
RatInterval upper_chord_interval(const Disk& target, const Disk& coverer);

struct DiskCoverage {
    bool covered;
    IntervalSet exposed;  // x-intervals of the upper semicircle left uncovered
};

/// Is the target disk contained in the union of the others? Vertical
/// monotonicity reduces this to coverage of the upper semicircle, hence to
/// rational interval coverage of the x-projection.
DiskCoverage disk_covered_by_union(const Disk& target, const std::vector<Disk>& others);

/// Certifies that the region swept by a closed disk of radius 1/(k*scale)
/// moving from lo + r to hi - r is contained in the union. Passing at depth k
/// proves every axis-centered disk of radius <= 1/(k*scale) inside the strip
/// is covered, which is the engine's termination certificate.
bool swept_region_certificate(const Rational& lo, const Rational& hi, std::int64_t k,
                              const Int& scale, const std::vector<Disk>& disks);

}  // namespace ford
