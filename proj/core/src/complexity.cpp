#include "ford/complexity.hpp"

#include <algorithm>
#include <map>

#include "ford/parallel.hpp"

namespace ford {

PoleReport pole_complexity(const ScaledDisk& alpha, const BoundarySet& S) {
    bool member = false;
    for (const auto& d : S.disks)
        if (d.t == alpha.t && d.k == alpha.k) member = true;
    if (!member) throw std::domain_error("pole_complexity: disk not in the boundary set");

    PoleReport out;
    out.alpha = alpha;
    out.count = 0;
    Rational px = alpha.center;
    Rational py = alpha.radius;
    for (const auto& beta : S.disks) {
        if (beta.t == alpha.t && beta.k == alpha.k) continue;
        Rational dist2 = square(px - beta.center) + py * py;
        int c = cmp(dist2, square(beta.radius));
        if (c <= 0) {
            ++out.count;
            out.coverers.push_back(beta);
            if (c == 0) out.tangential.push_back(beta);
        }
    }
    return out;
}

int max_pole_complexity(const BoundarySet& S) {
    int best = 0;
    for (const auto& d : S.disks) best = std::max(best, pole_complexity(d, S).count);
    return best;
}

PairResult pair_complexity(const Region& region, int k_max) {
    PairResult out{0, RegionShape::Other, compute_boundary_set(region, k_max)};
    out.shape = classify_shape(out.boundary);
    out.c = max_pole_complexity(out.boundary);
    return out;
}

bool predicted_zero(const FactoredInt& N) {
    auto [omega, p1] = omega_p1(N);
    return omega <= 3 || (omega == 4 && p1 >= 3);
}

namespace {

std::vector<ScaledDisk> mirrored_disks(const std::vector<ScaledDisk>& disks, std::int64_t width) {
    std::vector<ScaledDisk> out;
    out.reserve(disks.size());
    for (auto it = disks.rbegin(); it != disks.rend(); ++it) {
        std::int64_t t = it->k * width - it->t;
        out.push_back(ScaledDisk{t, it->k, make_rational(t, it->k), it->radius});
    }
    return out;
}

}  // namespace

ComplexityReport total_complexity(const FactoredInt& N, int k_max) {
    Breakpoints bp = psi_breakpoints(N);
    std::uint64_t n_value = N.value->get_ui();

    ComplexityReport report;
    report.N = N;
    report.c = 0;
    report.max_certificate_k = 0;
    std::map<std::uint64_t, std::size_t> computed_at;  // bad pair n -> entry index

    for (std::size_t i = 0; i + 1 < bp.points.size(); ++i) {
        std::uint64_t n = bp.points[i];
        std::uint64_t n_next = bp.points[i + 1];
        RegionEntry entry;
        entry.n = static_cast<unsigned long>(n);
        entry.n_next = static_cast<unsigned long>(n_next);
        if (n_next > n + 1) {
            // Good region: exactly the denominator-N disks, complexity 0.
            entry.cls = PairClass::Good;
            entry.shape = RegionShape::GoodFull;
            entry.certificate_k = 0;
            entry.computed = false;
            entry.c_pair = 0;
            for (std::uint64_t a = n + 1; a < n_next; ++a)
                entry.disks.push_back(ScaledDisk{static_cast<std::int64_t>(a - n), 1,
                                                 make_rational(static_cast<long>(a - n), 1),
                                                 make_rational(1, 1)});
        } else {
            entry.cls = PairClass::Bad;
            std::uint64_t mirror = n_value - n - 1;
            auto hit = computed_at.find(mirror);
            if (hit != computed_at.end()) {
                const RegionEntry& src = report.regions[hit->second];
                entry.shape = mirror_shape(src.shape);
                entry.certificate_k = src.certificate_k;
                entry.computed = false;
                entry.mirrored_from = src.n;
                entry.disks = mirrored_disks(src.disks, 1);
                entry.c_pair = src.c_pair;
            } else {
                Region region = make_bad_region(N, entry.n);
                PairResult pr = pair_complexity(region, k_max);
                entry.shape = pr.shape;
                entry.certificate_k = pr.boundary.certificate_k;
                entry.computed = true;
                entry.disks = pr.boundary.disks;
                entry.c_pair = pr.c;
                computed_at.emplace(n, report.regions.size());
            }
            report.c = std::max(report.c, entry.c_pair);
            report.max_certificate_k = std::max(report.max_certificate_k, entry.certificate_k);
        }
        report.regions.push_back(std::move(entry));
    }

    report.predicted_zero = predicted_zero(N);
    report.agreement = (report.c == 0) == report.predicted_zero;
    return report;
}

RangeReport verify_range(std::uint64_t lo, std::uint64_t hi, int k_max, unsigned jobs) {
    if (lo < 2 || hi < lo) throw std::domain_error("verify_range: need 2 <= lo <= hi");
    RangeReport report;
    report.entries.resize(hi - lo + 1);
    parallel_for(hi - lo + 1, jobs, [&](std::uint64_t idx) {
        std::uint64_t N = lo + idx;
        RangeEntry& e = report.entries[idx];
        e.N = N;
        FactoredInt f = factorize(N);
        e.predicted = predicted_zero(f);
        try {
            ComplexityReport r = total_complexity(f, k_max);
            e.c = r.c;
            e.agree = r.agreement;
            e.unresolved = false;
            e.max_certificate_k = r.max_certificate_k;
        } catch (const UnresolvedRegionError&) {
            e.c = -1;
            e.agree = false;
            e.unresolved = true;
            e.max_certificate_k = k_max;
        }
    });
    report.all_agree = true;
    for (const RangeEntry& e : report.entries) {
        if (e.unresolved) {
            report.unresolved.push_back(e.N);
            report.all_agree = false;
        } else if (!e.agree) {
            report.disagreements.push_back(e.N);
            report.all_agree = false;
        }
    }
    return report;
}

}  // namespace ford
