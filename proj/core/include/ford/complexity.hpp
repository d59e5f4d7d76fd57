#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ford/region.hpp"

namespace ford {

/// Coverage of one north pole by the other boundary disks of its region.
/// The disk itself is excluded; tangential coverers (pole exactly on the
/// boundary) are counted and also listed separately.
struct PoleReport {
    ScaledDisk alpha;
    int count;
    std::vector<ScaledDisk> coverers;
    std::vector<ScaledDisk> tangential;
};

PoleReport pole_complexity(const ScaledDisk& alpha, const BoundarySet& S);

/// Max pole complexity over the region's boundary set.
int max_pole_complexity(const BoundarySet& S);

struct PairResult {
    int c;
    RegionShape shape;
    BoundarySet boundary;
};

PairResult pair_complexity(const Region& region, int k_max);

struct RegionEntry {
    Int n;
    Int n_next;
    PairClass cls;
    RegionShape shape;
    int certificate_k;  // 0 for good regions, which skip geometry
    bool computed;      // false when taken from the mirror pair or by the
                        // good-region closed form
    std::optional<Int> mirrored_from;
    std::vector<ScaledDisk> disks;
    int c_pair;
};

struct ComplexityReport {
    FactoredInt N;
    std::vector<RegionEntry> regions;
    int c;
    bool predicted_zero;
    bool agreement;
    int max_certificate_k;
};

/// True iff omega(N) <= 3, or omega(N) = 4 with odd N.
bool predicted_zero(const FactoredInt& N);

/// c(N, n) over every pair: good pairs contribute 0 by the closed form, bad
/// pairs run the engine, and mirror pairs n > N-n-1 reuse the mirrored result.
ComplexityReport total_complexity(const FactoredInt& N, int k_max);

struct RangeEntry {
    std::uint64_t N;
    int c;  // -1 when unresolved
    bool predicted;
    bool agree;
    bool unresolved;
    int max_certificate_k;
};

struct RangeReport {
    std::vector<RangeEntry> entries;
    std::vector<std::uint64_t> disagreements;
    std::vector<std::uint64_t> unresolved;
    bool all_agree;
};

/// Checks computed (c(N) = 0) against the predicate for every N in [lo, hi].
/// Failures are reported, never thrown.
RangeReport verify_range(std::uint64_t lo, std::uint64_t hi, int k_max, unsigned jobs = 0);

}  // namespace ford
