#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ford/complexity.hpp"
#include "ford/region.hpp"

namespace ford {

/// The constants controlling the q-family construction: disks of denominator
/// level Aq+j, the admitted pairs S1, the suppressed pairs S2 (everything
/// else up to slope A'), and the prime-size floor C that keeps the two sets
/// from sharing prime divisors.
struct WitnessConstants {
    std::uint64_t q;
    std::uint64_t A;        // ceil(q^2 / 2)
    std::uint64_t A_prime;  // ceil(q*(A*q + q - 1) / sqrt(q^2 - 1)), exact
    std::vector<std::pair<std::uint64_t, std::uint64_t>> S1;  // (Aq+j, q), 1 <= j <= q-1
    std::vector<std::pair<std::uint64_t, std::uint64_t>> S2;  // coprime (a,b), 0<=b<=a<=A', minus S1
    std::uint64_t B;        // |S2|
    std::uint64_t C_prime;  // max |a2*b1 - a1*b2| over S1 x S2
    std::uint64_t C;        // max(C_prime, A_prime) + 1
};

/// Exact derivation of all constants for a prime q >= 3. B and C' come from
/// exhaustive enumeration of S2.
WitnessConstants derive_constants(std::uint64_t q);

struct FamdiskResult {
    bool ok;
    // On failure, the (j, l) pair whose exclusion or inclusion check failed.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> failure;
};

/// Exact check, in scaled coordinates, that each family disk D^(j) keeps a
/// boundary point outside all the others while the pole of D^(q-1) sits in
/// the interior of D^(1..q-2).
FamdiskResult verify_famdisk(std::uint64_t q);

/// CRT construction of n with n, n+1, 2n+1, 3n+1, 4n+1 all sharing a factor
/// with N and 3n+2, 5n+2 coprime to N. Requires omega(N) >= 5, or
/// omega(N) >= 4 with 2 | N; returns nothing otherwise. All seven conditions
/// are re-verified before returning.
std::optional<Int> build_c1_witness(const FactoredInt& N);

struct WitnessBundle {
    std::uint64_t q;
    WitnessConstants constants;
    std::vector<std::uint64_t> primes;  // B distinct primes >= C, ascending
    Int n;
    std::vector<Int> t1_values;
    std::vector<Int> t2_values;
    bool verified;
};

/// Builds the bundle from a deterministic ascending prime stream starting at
/// C (or from the supplied primes, which must provide at least B of size
/// >= C). N = product of the primes is never materialized; every gcd test
/// runs on per-prime residues.
WitnessBundle build_q_witness(std::uint64_t q,
                              std::optional<std::vector<std::uint64_t>> primes = std::nullopt);

/// Re-checks the bundle's gcd pattern from scratch: every T1 value coprime to
/// all bundle primes, every T2 value divisible by at least one.
bool verify_bundle(const WitnessBundle& bundle);

struct LowerBoundResult {
    bool ok;
    int certificate_k;
    int pole_count;  // pole complexity of D^(q-1) in the computed boundary set
};

/// Runs the full region engine on the bundle's pair (N, n) and confirms that
/// all family disks survive in the boundary set and that the pole of D^(q-1)
/// is covered by D^(1), ..., D^(q-2), i.e. c(N, n) >= q - 2.
LowerBoundResult verify_lower_bound(const WitnessBundle& bundle, int k_max);

}  // namespace ford
