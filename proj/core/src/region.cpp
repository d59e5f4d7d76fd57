#include "ford/region.hpp"

#include <algorithm>
#include <numeric>

namespace ford {

namespace {

std::vector<std::uint64_t> residues_of(const FactoredInt& N, const Int& n) {
    std::vector<std::uint64_t> out;
    out.reserve(N.primes.size());
    for (const auto& [p, e] : N.primes) {
        (void)e;
        out.push_back(mpz_fdiv_ui(n.get_mpz_t(), p));
    }
    return out;
}

bool shares_factor(const std::vector<std::uint64_t>& n_mod_p,
                   const std::vector<std::pair<std::uint64_t, unsigned>>& primes,
                   std::uint64_t offset) {
    for (std::size_t i = 0; i < primes.size(); ++i)
        if ((n_mod_p[i] + offset) % primes[i].first == 0) return true;
    return false;
}

}  // namespace

Region make_region(const FactoredInt& N, const Int& n) {
    if (N.coprime_to(n)) throw std::domain_error("make_region: gcd(N, n) = 1");
    Region r;
    r.N = N;
    r.n = n;
    r.n_mod_p = residues_of(N, n);
    std::uint64_t gap = 1;
    while (shares_factor(r.n_mod_p, N.primes, gap) == false) ++gap;
    r.n_next = n + static_cast<unsigned long>(gap);
    r.cls = gap == 1 ? PairClass::Bad : PairClass::Good;
    return r;
}

Region make_bad_region(const FactoredInt& N, const Int& n) {
    if (N.coprime_to(n)) throw std::domain_error("make_bad_region: gcd(N, n) = 1");
    if (N.coprime_to(n + 1)) throw std::domain_error("make_bad_region: gcd(N, n+1) = 1");
    Region r;
    r.N = N;
    r.n = n;
    r.n_next = n + 1;
    r.cls = PairClass::Bad;
    r.n_mod_p = residues_of(N, n);
    return r;
}

std::vector<ScaledDisk> enumerate_candidates(const Region& region, std::int64_t k) {
    if (k < 1) throw std::domain_error("enumerate_candidates: k must be positive");
    std::vector<ScaledDisk> out;
    const std::int64_t w = region.width();
    Rational radius = make_rational(1, static_cast<long>(k));
    for (std::int64_t t = 1; t < k * w; ++t) {
        if (std::gcd(t, k) != 1) continue;
        // gcd(k*n + t, N) = 1, tested prime by prime on cached residues.
        bool admitted = true;
        for (std::size_t i = 0; i < region.N.primes.size(); ++i) {
            std::uint64_t p = region.N.primes[i].first;
            unsigned __int128 a = static_cast<unsigned __int128>(region.n_mod_p[i]) *
                                      static_cast<unsigned __int128>(k) +
                                  static_cast<unsigned __int128>(t);
            if (a % p == 0) {
                admitted = false;
                break;
            }
        }
        if (!admitted) continue;
        out.push_back(ScaledDisk{t, k, make_rational(static_cast<long>(t), static_cast<long>(k)),
                                 radius});
    }
    return out;
}

namespace {

// Exposure of one candidate against all the others, restricted to the window
// of disks that can reach it: once centers are sorted, everything beyond
// r + r_max in either direction contributes an empty chord.
bool has_exposed_arc(const std::vector<ScaledDisk>& sorted, std::size_t idx,
                     const Rational& r_max) {
    const ScaledDisk& d = sorted[idx];
    std::vector<Disk> window;
    Rational reach = d.radius + r_max;
    for (std::size_t j = idx; j-- > 0;) {
        if (cmp(d.center - sorted[j].center, reach) > 0) break;
        window.push_back(to_disk(sorted[j]));
    }
    for (std::size_t j = idx + 1; j < sorted.size(); ++j) {
        if (cmp(sorted[j].center - d.center, reach) > 0) break;
        window.push_back(to_disk(sorted[j]));
    }
    return !disk_covered_by_union(to_disk(d), window).covered;
}

}  // namespace

BoundarySet compute_boundary_set(const Region& region, int k_max) {
    if (k_max < 1) throw std::domain_error("compute_boundary_set: k_max must be >= 1");
    const Rational lo(0);
    const Rational hi(static_cast<long>(region.width()));
    std::vector<ScaledDisk> candidates;
    std::vector<Disk> union_disks;
    int certificate_k = 0;
    for (std::int64_t k = 1; k + 1 <= k_max; ++k) {
        auto level = enumerate_candidates(region, k);
        for (auto& d : level) {
            union_disks.push_back(to_disk(d));
            candidates.push_back(std::move(d));
        }
        if (swept_region_certificate(lo, hi, k + 1, Int(1), union_disks)) {
            certificate_k = static_cast<int>(k) + 1;
            break;
        }
    }
    if (certificate_k == 0)
        throw UnresolvedRegionError(region.n, k_max, std::move(candidates));

    std::sort(candidates.begin(), candidates.end(), [](const ScaledDisk& a, const ScaledDisk& b) {
        int c = cmp(a.center, b.center);
        if (c != 0) return c < 0;
        return a.k < b.k;
    });
    Rational r_max(0);
    for (const auto& d : candidates) r_max = std::max(r_max, d.radius);

    BoundarySet out;
    out.region = region;
    out.certificate_k = certificate_k;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (has_exposed_arc(candidates, i, r_max)) out.disks.push_back(candidates[i]);
    return out;
}

namespace {

bool disks_are(const BoundarySet& bs, std::initializer_list<std::pair<int, int>> pattern) {
    if (bs.disks.size() != pattern.size()) return false;
    auto it = pattern.begin();
    for (const auto& d : bs.disks) {
        if (d.t != it->first || d.k != it->second) return false;
        ++it;
    }
    return true;
}

}  // namespace

RegionShape classify_shape(const BoundarySet& bs) {
    const std::int64_t w = bs.region.width();
    if (w > 1) {
        if (static_cast<std::int64_t>(bs.disks.size()) == w - 1) {
            bool full = true;
            for (std::int64_t i = 0; i < w - 1; ++i)
                if (bs.disks[i].k != 1 || bs.disks[i].t != i + 1) full = false;
            if (full) return RegionShape::GoodFull;
        }
        return RegionShape::Other;
    }
    if (disks_are(bs, {{1, 2}})) return RegionShape::Midpoint;
    if (disks_are(bs, {{1, 3}, {2, 3}})) return RegionShape::ThreePoint;
    if (disks_are(bs, {{1, 3}, {3, 4}})) return RegionShape::FourPointLeft;
    if (disks_are(bs, {{1, 4}, {2, 3}})) return RegionShape::FourPointRight;
    if (disks_are(bs, {{1, 3}, {4, 5}})) return RegionShape::ThreeFiveLeft;
    if (disks_are(bs, {{1, 5}, {2, 3}})) return RegionShape::ThreeFiveRight;
    return RegionShape::Other;
}

RegionShape mirror_shape(RegionShape s) {
    switch (s) {
        case RegionShape::FourPointLeft: return RegionShape::FourPointRight;
        case RegionShape::FourPointRight: return RegionShape::FourPointLeft;
        case RegionShape::ThreeFiveLeft: return RegionShape::ThreeFiveRight;
        case RegionShape::ThreeFiveRight: return RegionShape::ThreeFiveLeft;
        default: return s;
    }
}

std::string shape_name(RegionShape s) {
    switch (s) {
        case RegionShape::GoodFull: return "good_full";
        case RegionShape::Midpoint: return "midpoint";
        case RegionShape::ThreePoint: return "three_point";
        case RegionShape::FourPointLeft: return "four_point_left";
        case RegionShape::FourPointRight: return "four_point_right";
        case RegionShape::ThreeFiveLeft: return "three_five_left";
        case RegionShape::ThreeFiveRight: return "three_five_right";
        case RegionShape::Other: return "other";
    }
    return "other";
}

}  // namespace ford
