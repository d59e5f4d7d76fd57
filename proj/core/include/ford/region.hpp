#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ford/geometry.hpp"
#include "ford/numtheory.hpp"

namespace ford {

/// One slab between consecutive breakpoints n and n_next. All geometry runs
/// in scaled coordinates z -> N*z - n, which maps the slab to [0, width] and
/// keeps every rational small no matter how large N is; relative disk
/// positions are unchanged. Residues of n modulo the primes of N are cached
/// so candidate admission never touches big integers.
struct Region {
    FactoredInt N;
    Int n;
    Int n_next;
    PairClass cls;
    std::vector<std::uint64_t> n_mod_p;  // aligned with N.primes

    std::int64_t width() const { return Int(n_next - n).get_si(); }
};

/// Region starting at breakpoint n (explicit N; scans for the next breakpoint).
Region make_region(const FactoredInt& N, const Int& n);

/// Width-1 region for a bad pair; works for implicit N via residues alone.
Region make_bad_region(const FactoredInt& N, const Int& n);

/// Candidate disk at scaled position t/k with radius 1/k; its absolute
/// provenance is (k*n + t, k*N).
struct ScaledDisk {
    std::int64_t t;
    std::int64_t k;
    Rational center;
    Rational radius;
};

inline Disk to_disk(const ScaledDisk& d) { return Disk{d.center, d.radius}; }

struct BoundarySet {
    Region region;
    std::vector<ScaledDisk> disks;  // sorted by center
    int certificate_k;
};

enum class RegionShape {
    GoodFull,
    Midpoint,
    ThreePoint,
    FourPointLeft,
    FourPointRight,
    ThreeFiveLeft,
    ThreeFiveRight,
    Other,
};

/// Raised when the termination certificate does not pass within k_max levels;
/// carries the partial union instead of guessing.
class UnresolvedRegionError : public std::runtime_error {
  public:
    UnresolvedRegionError(Int n, int k_max, std::vector<ScaledDisk> partial)
        : std::runtime_error("unresolved region at n = " + n.get_str() +
                             " within k_max = " + std::to_string(k_max)),
          n_(std::move(n)),
          k_max_(k_max),
          partial_(std::move(partial)) {}

    const Int& n() const { return n_; }
    int k_max() const { return k_max_; }
    const std::vector<ScaledDisk>& partial_union() const { return partial_; }

  private:
    Int n_;
    int k_max_;
    std::vector<ScaledDisk> partial_;
};

/// All disks D_{a/(kN)} with k*n < a < k*n_next and gcd(a, kN) = 1, in scaled
/// coordinates.
std::vector<ScaledDisk> enumerate_candidates(const Region& region, std::int64_t k);

/// Iterative deepening: accumulate candidate levels k = 1, 2, ... until the
/// swept certificate at k+1 covers everything finer, then keep exactly the
/// candidates with an exposed arc of positive length against all the others.
BoundarySet compute_boundary_set(const Region& region, int k_max);

/// Matches the disk multiset against the small closed-form shapes; Other
/// when none fits.
RegionShape classify_shape(const BoundarySet& bs);

/// Shape of the mirror region (n -> N - n - 1), which flips left/right.
RegionShape mirror_shape(RegionShape s);

std::string shape_name(RegionShape s);

}  // namespace ford
