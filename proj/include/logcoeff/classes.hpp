#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "logcoeff/schwarz.hpp"
#include "logcoeff/series.hpp"

namespace logcoeff {

enum class ClassKind { janowski, spiral, strongly_starlike, F, G };

const char* kind_name(ClassKind k);

// A function class with its parameters, an optional n-fold twist for extremals, and
// an optional rotation of the driving variable (float backend only).
struct ClassSpec {
  ClassKind kind = ClassKind::F;

  // janowski S*(A,B): A may be complex, -1 <= B <= 0, A != B
  Rational A_re = 0, A_im = 0, B = 0;
  // spiral S_alpha(beta): |alpha| < pi/2, 0 <= beta < 1 (float-only parameters)
  double alpha = 0.0, beta = 0.0;
  // strongly starlike SS*_alpha: 0 < alpha <= 1
  Rational ss_alpha = 0;
  // F(c): 0 < c <= 3;  G(c): 0 < c <= 1
  Rational c = 0;

  int twist = 1;
  double rotation = 0.0;

  static ClassSpec janowski_spec(Rational a_re, Rational b, Rational a_im = 0, int twist = 1);
  static ClassSpec spiral_spec(double alpha, double beta, int twist = 1);
  static ClassSpec strongly_starlike_spec(Rational alpha, int twist = 1);
  static ClassSpec F_spec(Rational c, int twist = 1);
  static ClassSpec G_spec(Rational c, int twist = 1);

  void validate() const;  // throws std::invalid_argument
  // true when every parameter is rational-representable (spiral and rotations are not)
  bool exact_capable() const;
  bool has_complex_A() const { return kind == ClassKind::janowski && A_im != 0; }
  std::string describe() const;
};

namespace detail {

template <class K>
K from_rational(const Rational& q) {
  if constexpr (backend_traits<K>::exact)
    return q;
  else
    return Complex(to_double(q), 0.0);
}

template <class K>
void require_backend_fit(const ClassSpec& spec) {
  if constexpr (backend_traits<K>::exact) {
    if (!spec.exact_capable())
      throw std::invalid_argument("exact backend needs rational parameters (no spiral/rotation/complex A)");
  }
}

// 2(1-beta) e^{i alpha} cos(alpha): derivative at 0 of the spiral subordination target.
inline Complex spiral_factor(const ClassSpec& spec) {
  return 2.0 * (1.0 - spec.beta) * std::cos(spec.alpha) * std::polar(1.0, spec.alpha);
}

template <class K>
K janowski_A(const ClassSpec& spec) {
  if constexpr (backend_traits<K>::exact)
    return spec.A_re;
  else
    return Complex(to_double(spec.A_re), to_double(spec.A_im));
}

}  // namespace detail

// zf'/f as a series (order N-1) for f with f(0)=0, f'(0)=1.
template <class K>
Series<K> z_log_derivative(const Series<K>& f) {
  Series<K> u = shift_down(f);   // f/z, unit constant term
  Series<K> v = derivative(f);   // f'
  return div(v, u);
}

// 1 + z f''/f' as a series (order N-1); f'(0) = 1 required.
template <class K>
Series<K> pre_schwarzian(const Series<K>& f) {
  Series<K> fp = derivative(f);
  Series<K> L = log_unit(fp);  // log f'
  const int n = L.order();
  Series<K> r(n);
  r.at(0) = backend_traits<K>::from_int(1);
  for (int k = 1; k <= n; ++k) r.at(k) = backend_traits<K>::from_int(k) * L[k];
  return r;
}

// Class member generated from a Schwarz function: the subordination is turned into a
// series through h = target(phi) and f = z exp(int (h-1)/t dt); for F/G the target
// drives 1 + zf''/f' instead, and f is the antiderivative of f'.
template <class K>
Series<K> member_from_schwarz(const ClassSpec& spec, const Schwarz<K>& schwarz, int order) {
  spec.validate();
  detail::require_backend_fit<K>(spec);
  if (order < 1) throw std::invalid_argument("member_from_schwarz: order must be >= 1");
  if (schwarz.order() < order)
    throw std::invalid_argument("member_from_schwarz: Schwarz function cached to a lower order");

  Series<K> phi = truncate(schwarz.phi, order);
  if (spec.rotation != 0.0) {
    if constexpr (backend_traits<K>::exact)
      throw std::invalid_argument("rotation requires the float backend");
    else
      phi = truncate(rotate(Schwarz<Complex>{schwarz.schur, schwarz.phi}, spec.rotation).phi, order);
  }

  const K one = backend_traits<K>::from_int(1);
  const Series<K> one_s = Series<K>::one(order);

  switch (spec.kind) {
    case ClassKind::janowski: {
      const K a = detail::janowski_A<K>(spec);
      const K b = detail::from_rational<K>(spec.B);
      Series<K> h = div(add_const(scale(a, phi), one), add_const(scale(b, phi), one));
      return shift_up(exp_zero(integrate_over_t(sub(h, one_s))));
    }
    case ClassKind::spiral: {
      if constexpr (backend_traits<K>::exact) {
        throw std::invalid_argument("spiral class requires the float backend");
      } else {
        const Complex gamma = detail::spiral_factor(spec);
        Series<K> hm1 = scale(gamma, div(phi, sub(one_s, phi)));
        return shift_up(exp_zero(integrate_over_t(hm1)));
      }
    }
    case ClassKind::strongly_starlike: {
      const K a = detail::from_rational<K>(spec.ss_alpha);
      Series<K> h = pow_unit(div(add(one_s, phi), sub(one_s, phi)), a);
      return shift_up(exp_zero(integrate_over_t(sub(h, one_s))));
    }
    case ClassKind::F:
    case ClassKind::G: {
      K c = detail::from_rational<K>(spec.c);
      if (spec.kind == ClassKind::G) c = -c;
      Series<K> pm1 = scale(c, div(phi, sub(one_s, phi)));  // P - 1 = +-c phi/(1-phi)
      Series<K> fp = exp_zero(integrate_over_t(pm1));
      return antiderivative(fp);  // f(0)=0, f'(0)=1
    }
  }
  throw std::logic_error("member_from_schwarz: unhandled kind");
}

// The named extremal of the class, with the n-fold twist. Coincides coefficient-wise
// with member_from_schwarz(spec, phi = z^twist).
template <class K>
Series<K> extremal_series(const ClassSpec& spec, int order) {
  spec.validate();
  detail::require_backend_fit<K>(spec);
  if (order < 1) throw std::invalid_argument("extremal_series: order must be >= 1");
  const int n = spec.twist;

  switch (spec.kind) {
    case ClassKind::janowski: {
      const K a = detail::janowski_A<K>(spec);
      const K b = detail::from_rational<K>(spec.B);
      if (spec.B == 0) {
        // z exp(A z^n / n)
        Series<K> arg = Series<K>::monomial(n, a / backend_traits<K>::from_int(n), order);
        return shift_up(exp_zero(arg));
      }
      // z (1 + B z^n)^{(A-B)/(nB)}
      const K e = (a - b) / (backend_traits<K>::from_int(n) * b);
      Series<K> base = add_const(Series<K>::monomial(n, b, order), backend_traits<K>::from_int(1));
      return shift_up(pow_unit(base, e));
    }
    case ClassKind::spiral:
    case ClassKind::strongly_starlike: {
      // driven by phi = z^n through the member pipeline
      ClassSpec plain = spec;
      plain.rotation = 0.0;
      std::vector<K> params(static_cast<size_t>(n), backend_traits<K>::from_int(0));
      params.back() = backend_traits<K>::from_int(1);
      return member_from_schwarz(plain, schwarz_from_schur(params, order), order);
    }
    case ClassKind::F:
    case ClassKind::G: {
      // f' = (1 - z^n)^{-c/n} for F, (1 - z^n)^{c/n} for G
      K e = detail::from_rational<K>(spec.c) / backend_traits<K>::from_int(n);
      if (spec.kind == ClassKind::F) e = -e;
      Series<K> base = add_const(Series<K>::monomial(n, -backend_traits<K>::from_int(1), order),
                                 backend_traits<K>::from_int(1));
      return antiderivative(pow_unit(base, e));
    }
  }
  throw std::logic_error("extremal_series: unhandled kind");
}

}  // namespace logcoeff
