#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "rspin/errors.hpp"

namespace rspin {

using Int = mpz_class;
using Rational = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Representative of a in [0, |n|).
inline Int mod(const Int& a, const Int& n) {
  Int m;
  mpz_mod(m.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return m;
}

/// Quotient rounded towards negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// a / b, throwing ConsistencyError when the division is not exact.
inline Int exact_div(const Int& a, const Int& b, std::string_view what) {
  if (b == 0 || !divides(b, a)) {
    throw ConsistencyError(std::string(what) + ": " + a.get_str() +
                           " is not divisible by " + b.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

struct ExtendedGcd {
  Int g, s, t;  // g = s*a + t*b, g >= 0
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace rspin
