#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace logcoeff {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "3", "-7/2", "0.25", "2.5e-3"; returns nothing on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

// GMP's two-integer constructor does not canonicalize; always go through here.
inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact magnitude; Rational coefficients are real throughout.
inline Rational abs_exact(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace logcoeff
