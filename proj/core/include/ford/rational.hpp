#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ford {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical fraction num/den (reduced, den > 0). den must be nonzero.
inline Rational make_rational(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Rational square(const Rational& x) { return x * x; }

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace ford
