#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logcoeff/rational.hpp"

namespace logcoeff {

// Coefficient backends: exact rationals and complex doubles. Operations never mix
// backends (distinct types) and never materialize coefficients past the truncation
// order.
template <class K>
struct backend_traits;

template <>
struct backend_traits<Rational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_one(const Rational& x) { return x == 1; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static Rational abs_sq(const Rational& x) { return x * x; }
  static Rational from_int(long n) { return Rational(n); }
  static Rational real_from_int(long n) { return Rational(n); }
};

template <>
struct backend_traits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr double tol = 1e-12;
  static const char* name() { return "float"; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return std::abs(x) < tol; }
  static bool is_one(const Complex& x) { return std::abs(x - 1.0) < tol; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static double abs_sq(const Complex& x) { return std::norm(x); }
  static Complex from_int(long n) { return Complex(static_cast<double>(n), 0.0); }
  static double real_from_int(long n) { return static_cast<double>(n); }
};

// Power series truncated at a fixed order N: coefficients a_0..a_N, nothing beyond.
template <class K>
class Series {
 public:
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
  }
  explicit Series(std::vector<K> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const K& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  K& at(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<K>& coeffs() const { return c_; }

  static Series zero(int order) { return Series(order); }
  static Series one(int order) {
    Series s(order);
    s.at(0) = backend_traits<K>::from_int(1);
    return s;
  }
  // coeff * z^k
  static Series monomial(int k, const K& coeff, int order) {
    Series s(order);
    if (k <= order) s.at(k) = coeff;
    return s;
  }

 private:
  std::vector<K> c_;
};

namespace detail {

template <class K>
void require_same_order(const Series<K>& a, const Series<K>& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
}

}  // namespace detail

template <class K>
Series<K> add(const Series<K>& a, const Series<K>& b) {
  detail::require_same_order(a, b, "add");
  Series<K> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.at(k) = a[k] + b[k];
  return r;
}

template <class K>
Series<K> sub(const Series<K>& a, const Series<K>& b) {
  detail::require_same_order(a, b, "sub");
  Series<K> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.at(k) = a[k] - b[k];
  return r;
}

template <class K>
Series<K> neg(const Series<K>& a) {
  Series<K> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.at(k) = -a[k];
  return r;
}

template <class K>
Series<K> scale(const K& c, const Series<K>& a) {
  Series<K> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.at(k) = c * a[k];
  return r;
}

template <class K>
Series<K> add_const(const Series<K>& a, const K& c) {
  Series<K> r = a;
  r.at(0) = a[0] + c;
  return r;
}

// Cauchy product truncated at the common order.
template <class K>
Series<K> mul(const Series<K>& a, const Series<K>& b) {
  detail::require_same_order(a, b, "mul");
  const int n = a.order();
  Series<K> r(n);
  for (int k = 0; k <= n; ++k) {
    K acc = backend_traits<K>::from_int(0);
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    r.at(k) = acc;
  }
  return r;
}

// q = a/b with invertible b_0; q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0.
template <class K>
Series<K> div(const Series<K>& a, const Series<K>& b) {
  detail::require_same_order(a, b, "div");
  if (backend_traits<K>::is_zero(b[0])) throw std::invalid_argument("div: constant term of divisor is zero");
  const int n = a.order();
  Series<K> q(n);
  for (int k = 0; k <= n; ++k) {
    K acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q.at(k) = acc / b[0];
  }
  return q;
}

// L = log(s) with s_0 = 1, via s L' = s':  n L_n = n s_n - sum_{k=1..n-1} k L_k s_{n-k}.
template <class K>
Series<K> log_unit(const Series<K>& s) {
  if (!backend_traits<K>::is_one(s[0])) throw std::invalid_argument("log_unit: constant term must be 1");
  const int n = s.order();
  Series<K> L(n);
  for (int m = 1; m <= n; ++m) {
    K acc = backend_traits<K>::from_int(m) * s[m];
    for (int k = 1; k < m; ++k) acc -= backend_traits<K>::from_int(k) * L[k] * s[m - k];
    L.at(m) = acc / backend_traits<K>::from_int(m);
  }
  return L;
}

// E = exp(s) with s_0 = 0, via E' = s' E:  n E_n = sum_{k=1..n} k s_k E_{n-k}.
template <class K>
Series<K> exp_zero(const Series<K>& s) {
  if (!backend_traits<K>::is_zero(s[0])) throw std::invalid_argument("exp_zero: constant term must be 0");
  const int n = s.order();
  Series<K> E(n);
  E.at(0) = backend_traits<K>::from_int(1);
  for (int m = 1; m <= n; ++m) {
    K acc = backend_traits<K>::from_int(0);
    for (int k = 1; k <= m; ++k) acc += backend_traits<K>::from_int(k) * s[k] * E[m - k];
    E.at(m) = acc / backend_traits<K>::from_int(m);
  }
  return E;
}

// Float backend log/exp run the same recursions on 80-bit intermediates: the log
// coefficients of a rough series can reach ~1e6, and representing them in double alone
// would already cost ~1e-10 in the exp/log roundtrip.
namespace detail {

using ComplexL = std::complex<long double>;

inline std::vector<ComplexL> widen(const Series<Complex>& s) {
  std::vector<ComplexL> v(static_cast<size_t>(s.order()) + 1);
  for (int k = 0; k <= s.order(); ++k) v[static_cast<size_t>(k)] = s[k];
  return v;
}

inline Series<Complex> narrow(const std::vector<ComplexL>& v) {
  Series<Complex> s(static_cast<int>(v.size()) - 1);
  for (int k = 0; k <= s.order(); ++k)
    s.at(k) = Complex(static_cast<double>(v[static_cast<size_t>(k)].real()),
                      static_cast<double>(v[static_cast<size_t>(k)].imag()));
  return s;
}

}  // namespace detail

inline Series<Complex> log_unit(const Series<Complex>& s) {
  if (!backend_traits<Complex>::is_one(s[0]))
    throw std::invalid_argument("log_unit: constant term must be 1");
  const auto sv = detail::widen(s);
  const int n = s.order();
  std::vector<detail::ComplexL> L(static_cast<size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    detail::ComplexL acc = static_cast<long double>(m) * sv[static_cast<size_t>(m)];
    for (int k = 1; k < m; ++k)
      acc -= static_cast<long double>(k) * L[static_cast<size_t>(k)] * sv[static_cast<size_t>(m - k)];
    L[static_cast<size_t>(m)] = acc / static_cast<long double>(m);
  }
  return detail::narrow(L);
}

inline Series<Complex> exp_zero(const Series<Complex>& s) {
  if (!backend_traits<Complex>::is_zero(s[0]))
    throw std::invalid_argument("exp_zero: constant term must be 0");
  const auto sv = detail::widen(s);
  const int n = s.order();
  std::vector<detail::ComplexL> E(static_cast<size_t>(n) + 1);
  E[0] = 1.0L;
  for (int m = 1; m <= n; ++m) {
    detail::ComplexL acc = 0.0L;
    for (int k = 1; k <= m; ++k)
      acc += static_cast<long double>(k) * sv[static_cast<size_t>(k)] * E[static_cast<size_t>(m - k)];
    E[static_cast<size_t>(m)] = acc / static_cast<long double>(m);
  }
  return detail::narrow(E);
}

// s^e = exp(e log s) for unit s; exact backend takes a rational exponent by type.
template <class K>
Series<K> pow_unit(const Series<K>& s, const K& e) {
  return exp_zero(scale(e, log_unit(s)));
}

// outer(inner(z)) by Horner on truncated powers; inner must vanish at 0, so the
// truncation is exact.
template <class K>
Series<K> compose(const Series<K>& outer, const Series<K>& inner) {
  detail::require_same_order(outer, inner, "compose");
  if (!backend_traits<K>::is_zero(inner[0]))
    throw std::invalid_argument("compose: inner constant term must be 0");
  const int n = outer.order();
  Series<K> r = Series<K>::monomial(0, outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    r = mul(r, inner);
    r.at(0) = r[0] + outer[k];
  }
  return r;
}

// \int_0^z s(t)/t dt for s with s_0 = 0: divides coefficient k by k.
template <class K>
Series<K> integrate_over_t(const Series<K>& s) {
  if (!backend_traits<K>::is_zero(s[0]))
    throw std::invalid_argument("integrate_over_t: constant term must be 0");
  const int n = s.order();
  Series<K> r(n);
  for (int k = 1; k <= n; ++k) r.at(k) = s[k] / backend_traits<K>::from_int(k);
  return r;
}

// Term-wise antiderivative with F(0)=0, within the fixed order (input a_N unused).
template <class K>
Series<K> antiderivative(const Series<K>& s) {
  const int n = s.order();
  Series<K> r(n);
  for (int k = 1; k <= n; ++k) r.at(k) = s[k - 1] / backend_traits<K>::from_int(k);
  return r;
}

template <class K>
Series<K> derivative(const Series<K>& s) {
  const int n = s.order();
  Series<K> r(n > 0 ? n - 1 : 0);
  for (int k = 1; k <= n; ++k) r.at(k - 1) = backend_traits<K>::from_int(k) * s[k];
  if (n == 0) r.at(0) = backend_traits<K>::from_int(0);
  return r;
}

// z * s within the fixed order (input a_N unused).
template <class K>
Series<K> shift_up(const Series<K>& s) {
  const int n = s.order();
  Series<K> r(n);
  for (int k = 1; k <= n; ++k) r.at(k) = s[k - 1];
  return r;
}

// s/z for s with s_0 = 0; order drops by one.
template <class K>
Series<K> shift_down(const Series<K>& s) {
  if (!backend_traits<K>::is_zero(s[0]))
    throw std::invalid_argument("shift_down: constant term must be 0");
  const int n = s.order();
  Series<K> r(n > 0 ? n - 1 : 0);
  for (int k = 1; k <= n; ++k) r.at(k - 1) = s[k];
  return r;
}

template <class K>
Series<K> truncate(const Series<K>& s, int order) {
  if (order > s.order()) throw std::invalid_argument("truncate: cannot extend order");
  Series<K> r(order);
  for (int k = 0; k <= order; ++k) r.at(k) = s[k];
  return r;
}

template <class K>
bool operator==(const Series<K>& a, const Series<K>& b) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

template <class K>
double max_abs_diff(const Series<K>& a, const Series<K>& b) {
  detail::require_same_order(a, b, "max_abs_diff");
  double m = 0.0;
  for (int k = 0; k <= a.order(); ++k) m = std::max(m, backend_traits<K>::magnitude(a[k] - b[k]));
  return m;
}

}  // namespace logcoeff
