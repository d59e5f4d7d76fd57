#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ford/region.hpp"

namespace ford {

/// Boundary set recomputed by a second, independently derived method:
/// pairwise circle-circle arc subtraction in angle space, evaluated with
/// adaptive-precision floats, with every near-tie re-decided exactly.
struct OracleResult {
    Int n;
    std::vector<std::pair<std::int64_t, std::int64_t>> disks;  // (t, k), sorted by center
    std::vector<int> pole_counts;                              // aligned with disks
    int precision_bits;
    std::uint64_t exact_fallbacks;
};

/// k_cap must be at least the engine's certificate depth for the region, so
/// both sides consider the same candidate universe. Requires explicit N.
OracleResult oracle_boundary_set(const Region& region, int k_cap);

struct CrossValidateReport {
    struct Mismatch {
        std::uint64_t N;
        Int n;
        std::string what;
    };
    std::uint64_t regions_checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::pair<std::uint64_t, Int>> unresolved;
    int max_precision_bits = 0;
    std::uint64_t exact_fallbacks = 0;
};

/// Engine vs oracle over a deterministic pseudo-random sample of the regions
/// of every N in [lo, hi]; rate 1.0 checks everything.
CrossValidateReport cross_validate(std::uint64_t lo, std::uint64_t hi, double rate, int k_max,
                                   unsigned jobs = 0, std::uint64_t seed = 0x5eed0f0cdULL);

}  // namespace ford
