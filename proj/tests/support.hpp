#pragma once

// Test-side helpers kept independent of the library internals they check.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ford_test {

struct BruteConstants {
    std::uint64_t A, A_prime, B, C_prime, C;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> S1, S2;
};

// Brute-force re-derivation of the q-family constants, written as a separate
// oracle: the ceiling comes from a float estimate tightened by integer
// comparison, the sets from plain loops.
inline BruteConstants brute_constants(std::uint64_t q) {
    BruteConstants c;
    c.A = static_cast<std::uint64_t>(std::ceil(static_cast<double>(q * q) / 2.0));
    double target = static_cast<double>(q * (c.A * q + q - 1)) /
                    std::sqrt(static_cast<double>(q * q - 1));
    std::uint64_t m = static_cast<std::uint64_t>(target) > 2 ? static_cast<std::uint64_t>(target) - 2 : 1;
    auto big_enough = [&](std::uint64_t v) {
        // v >= t/sqrt(q^2-1)  <=>  v^2 (q^2-1) >= t^2
        unsigned __int128 lhs = static_cast<unsigned __int128>(v) * v * (q * q - 1);
        unsigned __int128 t = q * (c.A * q + q - 1);
        return lhs >= t * t;
    };
    while (!big_enough(m)) ++m;
    c.A_prime = m;

    for (std::uint64_t j = 1; j <= q - 1; ++j) c.S1.emplace_back(c.A * q + j, q);
    for (std::uint64_t a = 1; a <= c.A_prime; ++a)
        for (std::uint64_t b = 0; b <= a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            bool in_s1 = false;
            for (auto& s : c.S1)
                if (s.first == a && s.second == b) in_s1 = true;
            if (!in_s1) c.S2.emplace_back(a, b);
        }
    c.B = c.S2.size();
    std::int64_t best = 0;
    for (auto& [a1, b1] : c.S1)
        for (auto& [a2, b2] : c.S2) {
            std::int64_t cross = static_cast<std::int64_t>(a2) * static_cast<std::int64_t>(b1) -
                                 static_cast<std::int64_t>(a1) * static_cast<std::int64_t>(b2);
            best = std::max(best, std::abs(cross));
        }
    c.C_prime = static_cast<std::uint64_t>(best);
    c.C = std::max(c.C_prime, c.A_prime) + 1;
    return c;
}

}  // namespace ford_test
