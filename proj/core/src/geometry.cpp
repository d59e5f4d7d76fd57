#include "ford/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ford {

QuadraticReal make_quadratic(const Rational& p, const Rational& q, const Rational& d) {
    if (sign_of(d) < 0) throw std::domain_error("make_quadratic: negative radicand");
    if (sign_of(q) == 0 || sign_of(d) == 0) return QuadraticReal{p, 0, 0};
    return QuadraticReal{p, q, d};
}

int sign_with_radical(const Rational& a, const Rational& b, const Rational& d) {
    if (sign_of(d) < 0) throw std::domain_error("sign_with_radical: negative radicand");
    if (sign_of(b) == 0 || sign_of(d) == 0) return sign_of(a);
    int sb = sign_of(b);
    int sa = sign_of(a);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) squares to a^2 vs b^2*d.
    int c = cmp(a * a, b * b * d);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

namespace {

// Exact sign of a + b1*sqrt(d1) + b2*sqrt(d2).
int sign_with_two_radicals(const Rational& a, const Rational& b1, const Rational& d1,
                           const Rational& b2, const Rational& d2) {
    if (sign_of(b1) == 0 || sign_of(d1) == 0) return sign_with_radical(a, b2, d2);
    if (sign_of(b2) == 0 || sign_of(d2) == 0) return sign_with_radical(a, b1, d1);
    // Compare L = a + b1*sqrt(d1) against R = -b2*sqrt(d2).
    int sl = sign_with_radical(a, b1, d1);
    int sr = -sign_of(b2);
    if (sl != sr) return sl > sr ? 1 : -1;
    if (sl == 0) return 0;
    // Same nonzero sign: compare L^2 = a^2 + b1^2 d1 + 2 a b1 sqrt(d1) with R^2.
    int c = sign_with_radical(a * a + b1 * b1 * d1 - b2 * b2 * d2, 2 * a * b1, d1);
    if (c == 0) return 0;
    return sl > 0 ? c : -c;
}

std::strong_ordering from_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_quadratic(const QuadraticReal& u, const QuadraticReal& v) {
    return from_sign(sign_with_two_radicals(u.p - v.p, u.q, u.d, -v.q, v.d));
}

CoverageResult interval_union_covers(const QuadraticReal& lo, const QuadraticReal& hi,
                                     std::vector<QInterval> pieces) {
    CoverageResult out;
    if (quadratic_less(hi, lo)) throw std::domain_error("interval_union_covers: hi < lo");
    std::erase_if(pieces, [](const QInterval& piece) {
        return quadratic_less(piece.hi, piece.lo);
    });
    std::sort(pieces.begin(), pieces.end(), [](const QInterval& x, const QInterval& y) {
        return quadratic_less(x.lo, y.lo);
    });

    auto push_gap = [&out](const QuadraticReal& a, const QuadraticReal& b) {
        // Merge gaps separated only by a degenerate piece.
        if (!out.uncovered.parts.empty() &&
            compare_quadratic(out.uncovered.parts.back().hi, a) == std::strong_ordering::equal) {
            out.uncovered.parts.back().hi = b;
        } else {
            out.uncovered.parts.push_back(QInterval{a, b});
        }
    };

    QuadraticReal frontier = lo;
    for (const QInterval& piece : pieces) {
        if (!quadratic_less(frontier, hi)) break;
        if (quadratic_less(frontier, piece.lo)) {
            QuadraticReal gap_hi = quadratic_less(hi, piece.lo) ? hi : piece.lo;
            push_gap(frontier, gap_hi);
            frontier = piece.lo;
        }
        if (quadratic_less(frontier, piece.hi)) frontier = piece.hi;
    }
    if (quadratic_less(frontier, hi)) push_gap(frontier, hi);
    out.covered = out.uncovered.parts.empty();
    return out;
}

bool point_in_disk(const Rational& x, const Rational& y, const Disk& d, bool closed) {
    Rational dist2 = square(x - d.center) + y * y;
    int c = cmp(dist2, square(d.radius));
    return closed ? c <= 0 : c < 0;
}

RatInterval upper_chord_interval(const Disk& target, const Disk& coverer) {
    const Rational& c = target.center;
    const Rational& r = target.radius;
    const Rational& ci = coverer.center;
    const Rational& ri = coverer.radius;
    Rational delta = c - ci;
    Rational left = c - r;
    Rational right = c + r;
    if (sign_of(delta) == 0) {
        // Concentric: the linear form vanishes, containment is r <= ri.
        if (cmp(r, ri) <= 0) return RatInterval{false, left, right};
        return RatInterval{true, {}, {}};
    }
    // A point (x, g(x)) on the target's upper semicircle lies in the coverer
    // iff 2*(c - ci)*x <= ri^2 - ci^2 + c^2 - r^2.
    Rational bound = (ri * ri - ci * ci + c * c - r * r) / (2 * delta);
    if (sign_of(delta) > 0) {
        if (cmp(bound, left) < 0) return RatInterval{true, {}, {}};
        return RatInterval{false, left, std::min(bound, right)};
    }
    if (cmp(bound, right) > 0) return RatInterval{true, {}, {}};
    return RatInterval{false, std::max(bound, left), right};
}

DiskCoverage disk_covered_by_union(const Disk& target, const std::vector<Disk>& others) {
    std::vector<QInterval> pieces;
    pieces.reserve(others.size());
    for (const Disk& o : others) {
        RatInterval chord = upper_chord_interval(target, o);
        if (chord.empty) continue;
        pieces.push_back(QInterval{make_quadratic(chord.lo), make_quadratic(chord.hi)});
    }
    CoverageResult cov = interval_union_covers(make_quadratic(target.center - target.radius),
                                               make_quadratic(target.center + target.radius),
                                               std::move(pieces));
    return DiskCoverage{cov.covered, std::move(cov.uncovered)};
}

bool swept_region_certificate(const Rational& lo, const Rational& hi, std::int64_t k,
                              const Int& scale, const std::vector<Disk>& disks) {
    if (k < 1) throw std::domain_error("swept_region_certificate: k must be positive");
    if (sign_of(scale) <= 0) throw std::domain_error("swept_region_certificate: bad scale");
    Rational rho = make_rational(Int(1), Int(static_cast<long>(k)) * scale);
    Rational width = hi - lo;
    if (cmp(width, 2 * rho) < 0) {
        // Degenerate sweep: nothing to slide, treat as the single cap disk.
        Disk cap = make_disk((lo + hi) / 2, rho);
        return disk_covered_by_union(cap, disks).covered;
    }
    // Cap semicircles at both ends of the sweep.
    if (!disk_covered_by_union(make_disk(lo + rho, rho), disks).covered) return false;
    if (!disk_covered_by_union(make_disk(hi - rho, rho), disks).covered) return false;
    // Flat top: the segment at height rho, covered by each disk on the slab
    // [c_i - sqrt(r_i^2 - rho^2), c_i + sqrt(r_i^2 - rho^2)].
    std::vector<QInterval> pieces;
    pieces.reserve(disks.size());
    Rational rho2 = rho * rho;
    for (const Disk& d : disks) {
        Rational s = d.radius * d.radius - rho2;
        int sg = sign_of(s);
        if (sg < 0) continue;
        if (sg == 0) {
            pieces.push_back(QInterval{make_quadratic(d.center), make_quadratic(d.center)});
        } else {
            pieces.push_back(QInterval{make_quadratic(d.center, -1, s),
                                       make_quadratic(d.center, 1, s)});
        }
    }
    CoverageResult top = interval_union_covers(make_quadratic(lo + rho),
                                               make_quadratic(hi - rho), std::move(pieces));
    return top.covered;
}

}  // namespace ford
