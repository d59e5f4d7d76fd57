#include <doctest.h>

#include <numeric>
#include <set>

#include "ford/region.hpp"

using namespace ford;

TEST_SUITE_BEGIN("region");

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> tk(const BoundarySet& bs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& d : bs.disks) out.emplace_back(d.t, d.k);
    return out;
}

using TkList = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST_CASE("make_region finds the next breakpoint and the pair class") {
    Region r = make_region(factorize(9), 0);
    CHECK(r.n_next == 3);
    CHECK(r.cls == PairClass::Good);

    Region bad = make_region(factorize(15), 5);
    CHECK(bad.n_next == 6);
    CHECK(bad.cls == PairClass::Bad);

    CHECK_THROWS_AS(make_region(factorize(15), 7), std::domain_error);
    CHECK_THROWS_AS(make_bad_region(factorize(9), 3), std::domain_error);
}

TEST_CASE("enumerate_candidates") {
    Region r9 = make_region(factorize(9), 0);
    auto level1 = enumerate_candidates(r9, 1);
    REQUIRE(level1.size() == 2);
    CHECK(level1[0].t == 1);
    CHECK(level1[1].t == 2);

    Region r15 = make_region(factorize(15), 5);
    CHECK(enumerate_candidates(r15, 1).empty());
    auto k2 = enumerate_candidates(r15, 2);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].t == 1);  // absolute 11/30
    auto k3 = enumerate_candidates(r15, 3);
    REQUIRE(k3.size() == 2);  // absolute 16/45 and 17/45
    CHECK(k3[0].t == 1);
    CHECK(k3[1].t == 2);

    // Every candidate stays inside the scaled slab (0, w).
    for (const auto& d : enumerate_candidates(r9, 5)) {
        CHECK(d.t > 0);
        CHECK(d.t < 5 * r9.width());
        CHECK(std::gcd(d.t, d.k) == 1);
    }
}

TEST_CASE("boundary set of a good slab") {
    BoundarySet bs = compute_boundary_set(make_region(factorize(9), 0), 64);
    CHECK(tk(bs) == TkList{{1, 1}, {2, 1}});
    CHECK(bs.certificate_k == 2);
    CHECK(classify_shape(bs) == RegionShape::GoodFull);
}

TEST_CASE("boundary set of a midpoint slab") {
    BoundarySet bs = compute_boundary_set(make_region(factorize(15), 5), 64);
    CHECK(tk(bs) == TkList{{1, 2}});
    CHECK(bs.certificate_k == 3);
    CHECK(classify_shape(bs) == RegionShape::Midpoint);
}

TEST_CASE("boundary set of a three-point slab") {
    // n = 24: 3 | n, 5 | n+1, 7 | 2n+1, and both 73 = 3n+1 and 74 = 3n+2
    // coprime to 105; absolute disks 73/315 and 74/315.
    BoundarySet bs = compute_boundary_set(make_region(factorize(105), 24), 64);
    CHECK(tk(bs) == TkList{{1, 3}, {2, 3}});
    CHECK(classify_shape(bs) == RegionShape::ThreePoint);
}

TEST_CASE("four-point slabs") {
    BoundarySet left = compute_boundary_set(make_region(factorize(30), 2), 64);
    CHECK(tk(left) == TkList{{1, 3}, {3, 4}});
    CHECK(classify_shape(left) == RegionShape::FourPointLeft);

    BoundarySet right = compute_boundary_set(make_region(factorize(30), 27), 64);
    CHECK(tk(right) == TkList{{1, 4}, {2, 3}});
    CHECK(classify_shape(right) == RegionShape::FourPointRight);
}

TEST_CASE("three-five slabs") {
    // n = 234: 3 | n, 5 | n+1, 7 | 2n+1, 11 | 3n+2, with 3n+1 = 703 and
    // 5n+4 = 1174 coprime to 1155.
    BoundarySet left = compute_boundary_set(make_region(factorize(1155), 234), 64);
    CHECK(tk(left) == TkList{{1, 3}, {4, 5}});
    CHECK(classify_shape(left) == RegionShape::ThreeFiveLeft);

    BoundarySet right = compute_boundary_set(make_region(factorize(1155), 1155 - 234 - 1), 64);
    CHECK(tk(right) == TkList{{1, 5}, {2, 3}});
    CHECK(classify_shape(right) == RegionShape::ThreeFiveRight);
}

TEST_CASE("mirror_shape") {
    CHECK(mirror_shape(RegionShape::FourPointLeft) == RegionShape::FourPointRight);
    CHECK(mirror_shape(RegionShape::ThreeFiveRight) == RegionShape::ThreeFiveLeft);
    CHECK(mirror_shape(RegionShape::Midpoint) == RegionShape::Midpoint);
}

TEST_CASE("unresolved regions fail loudly") {
    CHECK_THROWS_AS(compute_boundary_set(make_region(factorize(15), 5), 1),
                    UnresolvedRegionError);
    CHECK_THROWS_AS(compute_boundary_set(make_region(factorize(15), 5), 2),
                    UnresolvedRegionError);
    try {
        compute_boundary_set(make_region(factorize(15), 5), 2);
    } catch (const UnresolvedRegionError& e) {
        CHECK(e.n() == 5);
        CHECK(e.k_max() == 2);
        // Only level 1 was enumerated, and a bad slab has no level-1 disks.
        CHECK(e.partial_union().empty());
    }
    try {
        compute_boundary_set(make_region(factorize(210), 117), 4);
    } catch (const UnresolvedRegionError& e) {
        // The partial union carries whatever was enumerated up to the bound:
        // here the single level-3 disk at 2/3 (absolute 353/630).
        REQUIRE(e.partial_union().size() == 1);
        CHECK(e.partial_union()[0].t == 2);
        CHECK(e.partial_union()[0].k == 3);
    }
}

TEST_CASE("breakpoints stay on the union boundary") {
    for (std::uint64_t N : {9u, 15u, 30u, 105u, 210u}) {
        auto f = factorize(N);
        auto bp = psi_breakpoints(f);
        for (std::size_t i = 0; i + 1 < bp.points.size(); ++i) {
            BoundarySet bs = compute_boundary_set(
                make_region(f, Int(static_cast<unsigned long>(bp.points[i]))), 64);
            Rational w(static_cast<long>(bs.region.width()));
            for (const auto& d : bs.disks) {
                CHECK_FALSE(point_in_disk(Rational(0), Rational(0), to_disk(d), false));
                CHECK_FALSE(point_in_disk(w, Rational(0), to_disk(d), false));
            }
        }
    }
}

TEST_CASE("dropped candidates are covered by the retained union") {
    for (std::pair<std::uint64_t, long> probe :
         std::vector<std::pair<std::uint64_t, long>>{{210, 117}, {105, 24}, {30, 2}, {15, 5}}) {
        auto f = factorize(probe.first);
        Region region = make_region(f, Int(probe.second));
        BoundarySet bs = compute_boundary_set(region, 64);
        std::vector<Disk> retained;
        for (const auto& d : bs.disks) retained.push_back(to_disk(d));
        std::set<std::pair<std::int64_t, std::int64_t>> kept;
        for (const auto& d : bs.disks) kept.emplace(d.t, d.k);
        for (std::int64_t k = 1; k < bs.certificate_k; ++k) {
            for (const auto& cand : enumerate_candidates(region, k)) {
                if (kept.count({cand.t, cand.k})) continue;
                CHECK(disk_covered_by_union(to_disk(cand), retained).covered);
            }
        }
    }
}

TEST_CASE("adjacent slabs only meet at breakpoints") {
    for (std::uint64_t N = 2; N <= 150; ++N) {
        auto f = factorize(N);
        auto bp = psi_breakpoints(f);
        BoundarySet prev;
        bool have_prev = false;
        for (std::size_t i = 0; i + 1 < bp.points.size(); ++i) {
            BoundarySet cur = compute_boundary_set(
                make_region(f, Int(static_cast<unsigned long>(bp.points[i]))), 64);
            if (have_prev) {
                Rational bigN(static_cast<unsigned long>(N));
                Rational split = Rational(static_cast<unsigned long>(bp.points[i])) / bigN;
                for (const auto& dl : prev.disks) {
                    // Unscaled coordinates: centers a/b, radius 1/b.
                    Rational cl =
                        (Rational(static_cast<unsigned long>(bp.points[i - 1])) + dl.center) / bigN;
                    Rational rl = dl.radius / bigN;
                    for (const auto& dr : cur.disks) {
                        Rational cr =
                            (Rational(static_cast<unsigned long>(bp.points[i])) + dr.center) / bigN;
                        Rational rr = dr.radius / bigN;
                        int c = cmp(cr - cl, rl + rr);
                        REQUIRE(c >= 0);
                        if (c == 0) {
                            // Tangency point must be the shared breakpoint.
                            Rational touch = (cl * rr + cr * rl) / (rl + rr);
                            REQUIRE(touch == split);
                        }
                    }
                }
            }
            prev = std::move(cur);
            have_prev = true;
        }
    }
}

TEST_SUITE_END();
