#ifndef CALIB_RATIONAL_HPP
#define CALIB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace calib {

// Exact arbitrary-precision rational scalar. All computations in this library
// are tolerance-zero: equality means equality of canonicalized fractions.
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; route constructions
// through here so 3/-6 really is -1/2.
inline Rational frac(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

using Vec = std::vector<Rational>;

inline Vec basis_vector(int n, int i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace calib

#endif
