#include "ford/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ford/geometry.hpp"

namespace ford {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t mul_inverse(std::uint64_t a, std::uint64_t p) {
    Int inv;
    Int ai = static_cast<unsigned long>(a % p);
    Int pi = static_cast<unsigned long>(p);
    if (mpz_invert(inv.get_mpz_t(), ai.get_mpz_t(), pi.get_mpz_t()) == 0)
        throw std::domain_error("mul_inverse: not invertible");
    return inv.get_ui();
}

}  // namespace

WitnessConstants derive_constants(std::uint64_t q) {
    if (q < 3 || !is_prime_u64(q)) throw std::domain_error("derive_constants: q must be an odd prime");
    WitnessConstants c;
    c.q = q;
    c.A = (q * q + 1) / 2;

    // A' = ceil(t / sqrt(q^2 - 1)) with t = q*(A*q + q - 1): the least m with
    // m^2 (q^2 - 1) >= t^2, located by integer sqrt and pinned down by exact
    // quadratic comparison against consecutive integers.
    std::uint64_t t = q * (c.A * q + q - 1);
    Int t2 = Int(static_cast<unsigned long>(t)) * Int(static_cast<unsigned long>(t));
    Int d = Int(static_cast<unsigned long>(q * q - 1));
    Int guess2 = t2 / d;
    Int m;
    mpz_sqrt(m.get_mpz_t(), guess2.get_mpz_t());
    // value = t / sqrt(q^2-1) as the quadratic real (t/d) * sqrt(d)
    QuadraticReal value = make_quadratic(
        Rational(0), make_rational(Int(static_cast<unsigned long>(t)), d), Rational(d));
    while (compare_quadratic(make_quadratic(Rational(m)), value) == std::strong_ordering::less) ++m;
    while (m > 0) {
        Int prev = m - 1;
        if (compare_quadratic(make_quadratic(Rational(prev)), value) == std::strong_ordering::less)
            break;
        --m;
    }
    c.A_prime = m.get_ui();

    for (std::uint64_t j = 1; j <= q - 1; ++j) c.S1.emplace_back(c.A * q + j, q);

    for (std::uint64_t a = 1; a <= c.A_prime; ++a) {
        for (std::uint64_t b = 0; b <= a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            bool in_s1 = (b == q) && (a > c.A * q) && (a < c.A * q + q);
            if (!in_s1) c.S2.emplace_back(a, b);
        }
    }
    c.B = c.S2.size();

    std::int64_t best = 0;
    for (const auto& [a1, b1] : c.S1) {
        for (const auto& [a2, b2] : c.S2) {
            std::int64_t cross = static_cast<std::int64_t>(a2) * static_cast<std::int64_t>(b1) -
                                 static_cast<std::int64_t>(a1) * static_cast<std::int64_t>(b2);
            best = std::max(best, cross < 0 ? -cross : cross);
        }
    }
    c.C_prime = static_cast<std::uint64_t>(best);
    c.C = std::max(c.C_prime, c.A_prime) + 1;
    return c;
}

FamdiskResult verify_famdisk(std::uint64_t q) {
    if (q < 2 || !is_prime_u64(q)) throw std::domain_error("verify_famdisk: q must be prime");
    std::uint64_t A = (q * q + 1) / 2;
    long qq = static_cast<long>(q);
    auto denom = [&](std::uint64_t j) { return static_cast<long>(A * q + j); };
    // Scaled family D^(j) = D(q/(Aq+j), 1/(Aq+j)); the marked boundary point
    // of D^(j) is (x_j, y_j) with y_j^2 = (q^2-1)/(q*(Aq+j))^2, rational.
    for (std::uint64_t j = 1; j + 1 <= q; ++j) {
        Rational xj = make_rational(qq * qq - 1, qq * denom(j));
        Rational yj2 = make_rational(qq * qq - 1, 1) / square(Rational(qq * denom(j)));
        Rational on_circle = square(xj - make_rational(qq, denom(j))) + yj2;
        if (cmp(on_circle, square(make_rational(1, denom(j)))) != 0)
            return FamdiskResult{false, std::make_pair(j, j)};
        for (std::uint64_t l = 1; l + 1 <= q; ++l) {
            if (l == j) continue;
            Rational dist2 = square(xj - make_rational(qq, denom(l))) + yj2;
            if (cmp(dist2, square(make_rational(1, denom(l)))) <= 0)
                return FamdiskResult{false, std::make_pair(j, l)};
        }
    }
    // Pole of D^(q-1) strictly inside D^(j) for j <= q-2.
    Rational x0 = make_rational(qq, denom(q - 1));
    Rational y0 = make_rational(1, denom(q - 1));
    for (std::uint64_t j = 1; j + 2 <= q; ++j) {
        Rational dist2 = square(x0 - make_rational(qq, denom(j))) + y0 * y0;
        if (cmp(dist2, square(make_rational(1, denom(j)))) >= 0)
            return FamdiskResult{false, std::make_pair(q - 1, j)};
    }
    return FamdiskResult{true, std::nullopt};
}

std::optional<Int> build_c1_witness(const FactoredInt& N) {
    auto [omega, p1] = omega_p1(N);
    if (!(omega >= 5 || (omega >= 4 && p1 == 2))) return std::nullopt;

    std::vector<std::pair<Int, std::uint64_t>> residues;
    auto p = [&](std::size_t i) { return N.primes[i].first; };

    if (p1 == 2) {
        // 2 | n+1 and 2 | 3n+1; p2 | n; p3 | 2n+1; p4 | 4n+1; the rest divide n.
        residues.emplace_back(Int(1), p(0));
        residues.emplace_back(Int(0), p(1));
        residues.emplace_back(Int(static_cast<unsigned long>(p(2) - mul_inverse(2, p(2)))), p(2));
        residues.emplace_back(Int(static_cast<unsigned long>(p(3) - mul_inverse(4, p(3)))), p(3));
        for (std::size_t i = 4; i < N.primes.size(); ++i) residues.emplace_back(Int(0), p(i));
    } else {
        // p1 | n; p2 | n+1; p3 | 2n+1; p4 | 3n+1; p5 | 4n+1; the rest divide n.
        residues.emplace_back(Int(0), p(0));
        residues.emplace_back(Int(static_cast<unsigned long>(p(1) - 1)), p(1));
        residues.emplace_back(Int(static_cast<unsigned long>(p(2) - mul_inverse(2, p(2)))), p(2));
        residues.emplace_back(Int(static_cast<unsigned long>(p(3) - mul_inverse(3, p(3)))), p(3));
        residues.emplace_back(Int(static_cast<unsigned long>(p(4) - mul_inverse(4, p(4)))), p(4));
        for (std::size_t i = 5; i < N.primes.size(); ++i) residues.emplace_back(Int(0), p(i));
    }
    Int n = crt_solve(residues);

    // Re-verify every condition before handing the witness out.
    bool ok = !N.coprime_to(n) && !N.coprime_to(n + 1) && !N.coprime_to(2 * n + 1) &&
              !N.coprime_to(3 * n + 1) && !N.coprime_to(4 * n + 1) && N.coprime_to(3 * n + 2) &&
              N.coprime_to(5 * n + 2);
    if (!ok) throw std::logic_error("build_c1_witness: construction failed verification");
    return n;
}

WitnessBundle build_q_witness(std::uint64_t q, std::optional<std::vector<std::uint64_t>> primes) {
    WitnessBundle bundle;
    bundle.q = q;
    bundle.constants = derive_constants(q);
    const auto& c = bundle.constants;

    if (primes) {
        bundle.primes = std::move(*primes);
        std::sort(bundle.primes.begin(), bundle.primes.end());
        if (bundle.primes.size() < c.B)
            throw std::domain_error("build_q_witness: need at least B primes");
        bundle.primes.resize(c.B);
        for (std::uint64_t p : bundle.primes)
            if (p < c.C || !is_prime_u64(p))
                throw std::domain_error("build_q_witness: supplied primes must be primes >= C");
    } else {
        Int p = static_cast<unsigned long>(c.C - 1);
        while (bundle.primes.size() < c.B) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            bundle.primes.push_back(p.get_ui());
        }
    }

    // p_i | a_i * n + b_i for the i-th pair of S2; (1,0) in S2 forces
    // gcd(N, n) > 1 and (1,1) forces gcd(N, n+1) > 1.
    std::vector<std::pair<Int, std::uint64_t>> residues;
    residues.reserve(c.B);
    for (std::size_t i = 0; i < c.B; ++i) {
        auto [a, b] = c.S2[i];
        std::uint64_t p = bundle.primes[i];
        std::uint64_t r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(p - b % p) * mul_inverse(a, p)) % p);
        residues.emplace_back(Int(static_cast<unsigned long>(r)), p);
    }
    bundle.n = crt_solve(residues);

    for (const auto& [a, b] : c.S1)
        bundle.t1_values.push_back(Int(static_cast<unsigned long>(a)) * bundle.n +
                                   static_cast<unsigned long>(b));
    for (const auto& [a, b] : c.S2)
        bundle.t2_values.push_back(Int(static_cast<unsigned long>(a)) * bundle.n +
                                   static_cast<unsigned long>(b));
    bundle.verified = verify_bundle(bundle);
    if (!bundle.verified) throw std::logic_error("build_q_witness: bundle failed verification");
    return bundle;
}

bool verify_bundle(const WitnessBundle& bundle) {
    const auto& c = bundle.constants;
    // Residues of n modulo each prime, computed once.
    std::vector<std::uint64_t> n_mod;
    n_mod.reserve(bundle.primes.size());
    for (std::uint64_t p : bundle.primes) n_mod.push_back(mpz_fdiv_ui(bundle.n.get_mpz_t(), p));

    auto divisible = [&](std::size_t prime_idx, std::uint64_t a, std::uint64_t b) {
        std::uint64_t p = bundle.primes[prime_idx];
        unsigned __int128 v = static_cast<unsigned __int128>(a % p) * n_mod[prime_idx] + b % p;
        return v % p == 0;
    };

    for (const auto& [a, b] : c.S1)
        for (std::size_t i = 0; i < bundle.primes.size(); ++i)
            if (divisible(i, a, b)) return false;
    for (const auto& [a, b] : c.S2) {
        bool hit = false;
        for (std::size_t i = 0; i < bundle.primes.size() && !hit; ++i)
            if (divisible(i, a, b)) hit = true;
        if (!hit) return false;
    }
    return true;
}

LowerBoundResult verify_lower_bound(const WitnessBundle& bundle, int k_max) {
    if (!verify_bundle(bundle)) return LowerBoundResult{false, 0, 0};
    const auto& c = bundle.constants;
    FactoredInt N = from_primes(bundle.primes);
    Region region = make_bad_region(N, bundle.n);
    BoundarySet bs = compute_boundary_set(region, k_max);

    // Every family disk (t = q at level Aq+j) must survive with an exposed arc.
    for (std::uint64_t j = 1; j + 1 <= c.q; ++j) {
        std::int64_t level = static_cast<std::int64_t>(c.A * c.q + j);
        bool found = false;
        for (const auto& d : bs.disks)
            if (d.k == level && d.t == static_cast<std::int64_t>(c.q)) found = true;
        if (!found) return LowerBoundResult{false, bs.certificate_k, 0};
    }

    std::int64_t top_level = static_cast<std::int64_t>(c.A * c.q + c.q - 1);
    ScaledDisk top{static_cast<std::int64_t>(c.q), top_level,
                   make_rational(static_cast<long>(c.q), static_cast<long>(top_level)),
                   make_rational(1, static_cast<long>(top_level))};
    PoleReport pole = pole_complexity(top, bs);
    // The pole of D^(q-1) must be covered by each D^(j), j <= q-2.
    for (std::uint64_t j = 1; j + 2 <= c.q; ++j) {
        std::int64_t level = static_cast<std::int64_t>(c.A * c.q + j);
        bool found = false;
        for (const auto& d : pole.coverers)
            if (d.k == level && d.t == static_cast<std::int64_t>(c.q)) found = true;
        if (!found) return LowerBoundResult{false, bs.certificate_k, pole.count};
    }
    bool ok = pole.count >= static_cast<int>(c.q) - 2;
    return LowerBoundResult{ok, bs.certificate_k, pole.count};
}

}  // namespace ford
