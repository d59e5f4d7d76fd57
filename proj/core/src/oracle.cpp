#include "ford/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <optional>

#include "ford/complexity.hpp"
#include "ford/parallel.hpp"

namespace ford {

namespace {

class Mpf {
  public:
    explicit Mpf(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(Mpf o) {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

Mpf from_rational(const Rational& q, mpfr_prec_t prec) {
    Mpf out(prec);
    mpfr_set_q(out.get(), q.get_mpq_t(), MPFR_RNDN);
    return out;
}

// Shared state for one adaptive-precision pass over a region.
struct Pass {
    mpfr_prec_t prec;
    Mpf eps;  // 2^(-prec/2): anything closer than this is re-decided exactly
    std::uint64_t fallbacks = 0;

    explicit Pass(mpfr_prec_t p) : prec(p), eps(p) {
        mpfr_set_ui_2exp(eps.get(), 1, -(p / 2), MPFR_RNDN);
    }

    // Sign of the exact rational `exact`, decided numerically when safe.
    int sign(const Rational& exact) {
        Mpf v = from_rational(exact, prec);
        Mpf mag(prec);
        mpfr_abs(mag.get(), v.get(), MPFR_RNDN);
        if (mpfr_cmp(mag.get(), eps.get()) <= 0) {
            ++fallbacks;
            return sign_of(exact);
        }
        return mpfr_sgn(v.get());
    }
};

// An angular clip [0, theta] (side = Right) or [theta, pi] (side = Left) of a
// target circle by one neighbor, with the exact cosine kept for fallbacks.
enum class Anchor { Right, Left };

struct Clip {
    Anchor side;
    Mpf theta;
    Rational cosine;  // exact cos(theta), strictly inside (-1, 1)
};

// theta comparison: numeric, falling back to the exact cosines (arccos is
// strictly decreasing, so theta_a < theta_b iff cos_a > cos_b).
int compare_theta(Pass& pass, const Clip& a, const Clip& b) {
    Mpf diff(pass.prec);
    mpfr_sub(diff.get(), a.theta.get(), b.theta.get(), MPFR_RNDN);
    Mpf mag(pass.prec);
    mpfr_abs(mag.get(), diff.get(), MPFR_RNDN);
    if (mpfr_cmp(mag.get(), pass.eps.get()) <= 0) {
        ++pass.fallbacks;
        return -cmp(a.cosine, b.cosine);
    }
    return mpfr_sgn(diff.get());
}

struct ArcCoverage {
    bool fully_covered = false;
    std::optional<Clip> right_max;  // A: covered [0, A]
    std::optional<Clip> left_min;   // B: covered [B, pi]
};

// Clip of target's circle by the disk at (cj, rj). The covered angles satisfy
// 2*ri*(ci - cj)*cos(theta) <= rj^2 - ri^2 - (ci - cj)^2.
void apply_clip(Pass& pass, ArcCoverage& cov, const Rational& ci, const Rational& ri,
                const Rational& cj, const Rational& rj) {
    if (cov.fully_covered) return;
    Rational delta = ci - cj;
    int sd = pass.sign(delta);
    if (sd == 0) {
        if (pass.sign(rj - ri) >= 0) cov.fully_covered = true;
        return;
    }
    Rational cosine = (rj * rj - ri * ri - delta * delta) / (2 * ri * delta);
    // Against +1 and -1 first: outside that range the clip is everything,
    // a single point, or nothing.
    int vs_hi = pass.sign(cosine - 1);
    int vs_lo = pass.sign(cosine + 1);
    if (sd > 0) {
        // covered: cos(theta) <= cosine, i.e. theta in [acos(cosine), pi]
        if (vs_hi >= 0) {
            cov.fully_covered = true;
            return;
        }
        if (vs_lo <= 0) return;  // at most the single point theta = pi
        Clip clip{Anchor::Left, Mpf(pass.prec), cosine};
        Mpf c = from_rational(cosine, pass.prec);
        mpfr_acos(clip.theta.get(), c.get(), MPFR_RNDN);
        if (!cov.left_min || compare_theta(pass, clip, *cov.left_min) < 0)
            cov.left_min = std::move(clip);
    } else {
        // covered: cos(theta) >= cosine, i.e. theta in [0, acos(cosine)]
        if (vs_lo <= 0) {
            cov.fully_covered = true;
            return;
        }
        if (vs_hi >= 0) return;  // at most the single point theta = 0
        Clip clip{Anchor::Right, Mpf(pass.prec), cosine};
        Mpf c = from_rational(cosine, pass.prec);
        mpfr_acos(clip.theta.get(), c.get(), MPFR_RNDN);
        if (!cov.right_max || compare_theta(pass, clip, *cov.right_max) > 0)
            cov.right_max = std::move(clip);
    }
}

bool has_uncovered_arc(Pass& pass, const ArcCoverage& cov) {
    if (cov.fully_covered) return false;
    if (!cov.right_max || !cov.left_min) return true;
    // uncovered = (A, B): positive length iff A < B
    return compare_theta(pass, *cov.right_max, *cov.left_min) < 0;
}

struct OracleCandidate {
    std::int64_t t, k;
    Rational center, radius;
};

struct PassResult {
    std::vector<std::size_t> retained;  // indices into candidates
    std::vector<int> pole_counts;
    std::uint64_t fallbacks;
};

PassResult run_pass(const std::vector<OracleCandidate>& cands, mpfr_prec_t prec) {
    Pass pass(prec);
    PassResult out;
    Rational r_max(0);
    for (const auto& c : cands) r_max = std::max(r_max, c.radius);

    for (std::size_t i = 0; i < cands.size(); ++i) {
        ArcCoverage cov;
        Rational reach = cands[i].radius + r_max;
        for (std::size_t j = i; j-- > 0;) {
            if (cmp(cands[i].center - cands[j].center, reach) > 0) break;
            apply_clip(pass, cov, cands[i].center, cands[i].radius, cands[j].center,
                       cands[j].radius);
        }
        for (std::size_t j = i + 1; j < cands.size() && !cov.fully_covered; ++j) {
            if (cmp(cands[j].center - cands[i].center, reach) > 0) break;
            apply_clip(pass, cov, cands[i].center, cands[i].radius, cands[j].center,
                       cands[j].radius);
        }
        if (has_uncovered_arc(pass, cov)) out.retained.push_back(i);
    }

    for (std::size_t a : out.retained) {
        int count = 0;
        for (std::size_t b : out.retained) {
            if (a == b) continue;
            Rational v = square(cands[a].center - cands[b].center) +
                         square(cands[a].radius) - square(cands[b].radius);
            if (pass.sign(v) <= 0) ++count;
        }
        out.pole_counts.push_back(count);
    }
    out.fallbacks = pass.fallbacks;
    return out;
}

}  // namespace

OracleResult oracle_boundary_set(const Region& region, int k_cap) {
    if (!region.N.has_value())
        throw std::domain_error("oracle_boundary_set: explicit N required");
    const Int& N = *region.N.value;
    const std::int64_t w = region.width();

    // Independent candidate enumeration: plain gcd on the absolute numerator
    // and denominator, no residue tricks shared with the engine.
    std::vector<OracleCandidate> cands;
    for (std::int64_t k = 1; k + 1 <= k_cap; ++k) {
        Int b = Int(static_cast<long>(k)) * N;
        for (std::int64_t t = 1; t < k * w; ++t) {
            Int a = Int(static_cast<long>(k)) * region.n + static_cast<long>(t);
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            cands.push_back(OracleCandidate{t, k, make_rational(t, k), make_rational(1, k)});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const OracleCandidate& x, const OracleCandidate& y) {
        int c = cmp(x.center, y.center);
        if (c != 0) return c < 0;
        return x.k < y.k;
    });

    // Escalate precision while any comparison needed an exact re-decision;
    // the final pass settles remaining ties exactly.
    const mpfr_prec_t levels[] = {64, 256, 1024};
    PassResult result = run_pass(cands, levels[0]);
    int used = 64;
    for (std::size_t i = 1; i < 3 && result.fallbacks > 0; ++i) {
        result = run_pass(cands, levels[i]);
        used = static_cast<int>(levels[i]);
    }

    OracleResult out;
    out.n = region.n;
    out.precision_bits = used;
    out.exact_fallbacks = result.fallbacks;
    for (std::size_t idx : result.retained) out.disks.emplace_back(cands[idx].t, cands[idx].k);
    out.pole_counts = std::move(result.pole_counts);
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

CrossValidateReport cross_validate(std::uint64_t lo, std::uint64_t hi, double rate, int k_max,
                                   unsigned jobs, std::uint64_t seed) {
    if (lo < 2 || hi < lo) throw std::domain_error("cross_validate: need 2 <= lo <= hi");
    std::vector<CrossValidateReport> partial(hi - lo + 1);
    parallel_for(hi - lo + 1, jobs, [&](std::uint64_t idx) {
        std::uint64_t Nv = lo + idx;
        CrossValidateReport& rep = partial[idx];
        FactoredInt N = factorize(Nv);
        Breakpoints bp = psi_breakpoints(N);
        for (std::size_t i = 0; i + 1 < bp.points.size(); ++i) {
            std::uint64_t n = bp.points[i];
            std::uint64_t draw = splitmix64(seed ^ splitmix64(Nv) ^ n);
            if (static_cast<double>(draw % (1u << 24)) >= rate * (1u << 24)) continue;
            ++rep.regions_checked;
            Region region = make_region(N, Int(static_cast<unsigned long>(n)));
            BoundarySet bs;
            try {
                bs = compute_boundary_set(region, k_max);
            } catch (const UnresolvedRegionError&) {
                rep.unresolved.emplace_back(Nv, Int(static_cast<unsigned long>(n)));
                continue;
            }
            OracleResult oracle = oracle_boundary_set(region, bs.certificate_k);
            rep.max_precision_bits = std::max(rep.max_precision_bits, oracle.precision_bits);
            rep.exact_fallbacks += oracle.exact_fallbacks;

            std::vector<std::pair<std::int64_t, std::int64_t>> engine_disks;
            for (const auto& d : bs.disks) engine_disks.emplace_back(d.t, d.k);
            if (engine_disks != oracle.disks) {
                rep.mismatches.push_back({Nv, region.n, "boundary sets differ"});
                continue;
            }
            std::vector<int> engine_counts;
            for (const auto& d : bs.disks) engine_counts.push_back(pole_complexity(d, bs).count);
            if (engine_counts != oracle.pole_counts)
                rep.mismatches.push_back({Nv, region.n, "pole counts differ"});
        }
    });

    CrossValidateReport out;
    for (auto& rep : partial) {
        out.regions_checked += rep.regions_checked;
        out.exact_fallbacks += rep.exact_fallbacks;
        out.max_precision_bits = std::max(out.max_precision_bits, rep.max_precision_bits);
        for (auto& m : rep.mismatches) out.mismatches.push_back(std::move(m));
        for (auto& u : rep.unresolved) out.unresolved.push_back(std::move(u));
    }
    return out;
}

}  // namespace ford
