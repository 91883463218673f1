#ifndef STRATA_RATIONAL_HPP
#define STRATA_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace strata {

// Exact rational scalar used throughout the library.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p/q" style strings. Whitespace is not accepted.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational string: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, unsigned e) {
  Rat out(1);
  Rat base = q;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

inline Rat factorial(unsigned k) {
  Rat out(1);
  for (unsigned i = 2; i <= k; ++i) out *= (long)i;
  return out;
}

inline Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  Rat out(1);
  for (unsigned i = 0; i < k; ++i) {
    out *= (long)(n - i);
    out /= (long)(i + 1);
  }
  return out;
}

}  // namespace strata

#endif
