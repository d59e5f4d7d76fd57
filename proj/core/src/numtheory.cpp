#include "ford/numtheory.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ford {

bool FactoredInt::coprime_to(const Int& t) const {
    for (const auto& [p, e] : primes) {
        (void)e;
        if (mpz_divisible_ui_p(t.get_mpz_t(), p)) return false;
    }
    return true;
}

bool FactoredInt::coprime_to(std::uint64_t t) const {
    for (const auto& [p, e] : primes) {
        (void)e;
        if (t % p == 0) return false;
    }
    return true;
}

FactoredInt factorize(std::uint64_t n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    FactoredInt out;
    std::uint64_t rest = n;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.primes.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= rest; p += 6) {
        take(p);
        take(p + 2);
    }
    if (rest > 1) out.primes.emplace_back(rest, 1);
    out.value = Int(static_cast<unsigned long>(n));
    return out;
}

FactoredInt from_primes(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    if (primes.empty()) throw std::domain_error("from_primes: empty prime list");
    for (std::size_t i = 0; i + 1 < primes.size(); ++i)
        if (primes[i] == primes[i + 1])
            throw std::domain_error("from_primes: duplicate prime");
    FactoredInt out;
    out.primes.reserve(primes.size());
    for (std::uint64_t p : primes) out.primes.emplace_back(p, 1u);
    return out;
}

Breakpoints psi_breakpoints(const FactoredInt& N) {
    if (!N.has_value()) throw std::domain_error("psi_breakpoints: explicit value required");
    if (!N.value->fits_ulong_p())
        throw std::domain_error("psi_breakpoints: N beyond sweep scale");
    std::uint64_t n = N.value->get_ui();
    std::vector<bool> marked(n + 1, false);
    for (const auto& [p, e] : N.primes) {
        (void)e;
        for (std::uint64_t m = p; m <= n; m += p) marked[m] = true;
    }
    Breakpoints out;
    out.N = N;
    out.points.push_back(0);
    for (std::uint64_t m = 1; m <= n; ++m)
        if (marked[m]) out.points.push_back(m);

    // psi(N) = N - phi(N)
    std::uint64_t phi = n;
    for (const auto& [p, e] : N.primes) {
        (void)e;
        phi = phi / p * (p - 1);
    }
    if (out.points.size() != n - phi + 1)
        throw std::logic_error("psi_breakpoints: count does not match N - phi(N)");
    return out;
}

PairClass classify_pair(const FactoredInt& N, const Int& n) {
    if (N.coprime_to(n)) throw std::domain_error("classify_pair: gcd(N, n) = 1, not a pair");
    return N.coprime_to(n + 1) ? PairClass::Good : PairClass::Bad;
}

Int crt_solve(const std::vector<std::pair<Int, std::uint64_t>>& residues) {
    if (residues.empty()) throw std::domain_error("crt_solve: no residues");
    std::set<std::uint64_t> seen;
    for (const auto& [r, p] : residues) {
        if (!seen.insert(p).second) throw std::domain_error("crt_solve: duplicate prime");
        if (sign_of(r) < 0 || r >= Int(static_cast<unsigned long>(p)))
            throw std::domain_error("crt_solve: residue out of range");
    }
    Int x = residues.front().first;
    Int modulus = static_cast<unsigned long>(residues.front().second);
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const auto& [r, p_u64] = residues[i];
        Int p = static_cast<unsigned long>(p_u64);
        // x + modulus * t = r (mod p)
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("crt_solve: moduli not coprime");
        Int t = ((r - x) * minv) % p;
        if (sign_of(t) < 0) t += p;
        x += modulus * t;
        modulus *= p;
    }
    return x;
}

std::pair<std::size_t, std::uint64_t> omega_p1(const FactoredInt& N) {
    return {N.omega(), N.smallest_prime()};
}

}  // namespace ford
