#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ford/rational.hpp"

namespace ford {

/// An integer carried with its distinct prime factorization. The explicit
/// value is optional: moduli built as products of thousands of primes are
/// handled purely through per-prime residues and never materialized.
struct FactoredInt {
    std::vector<std::pair<std::uint64_t, unsigned>> primes;  // (p, e), p ascending, e >= 1
    std::optional<Int> value;

    std::size_t omega() const { return primes.size(); }
    std::uint64_t smallest_prime() const { return primes.front().first; }
    bool has_value() const { return value.has_value(); }

    /// True iff no prime factor of this modulus divides t.
    bool coprime_to(const Int& t) const;
    bool coprime_to(std::uint64_t t) const;
};

enum class PairClass { Good, Bad };

/// The integers 0 = n_0 < n_1 < ... < n_psi = N sharing a factor with N.
struct Breakpoints {
    FactoredInt N;
    std::vector<std::uint64_t> points;

    std::uint64_t psi() const { return points.size() - 1; }
};

/// Trial-division factorization. n >= 2.
FactoredInt factorize(std::uint64_t n);

/// Builds a FactoredInt from a list of distinct primes without materializing
/// their product.
FactoredInt from_primes(std::vector<std::uint64_t> primes);

/// All n in [0, N] with gcd(N, n) > 1; requires the explicit value.
Breakpoints psi_breakpoints(const FactoredInt& N);

/// Good iff gcd(N, n+1) = 1. Requires gcd(N, n) > 1.
PairClass classify_pair(const FactoredInt& N, const Int& n);

inline bool coprime_to(const FactoredInt& N, const Int& t) { return N.coprime_to(t); }
inline bool coprime_to(const FactoredInt& N, std::uint64_t t) { return N.coprime_to(t); }

/// Solves n = r_i (mod p_i) for pairwise distinct primes p_i.
/// Returns the unique n in [0, prod p_i).
Int crt_solve(const std::vector<std::pair<Int, std::uint64_t>>& residues);

/// (number of distinct prime factors, smallest prime factor).
std::pair<std::size_t, std::uint64_t> omega_p1(const FactoredInt& N);

}  // namespace ford
