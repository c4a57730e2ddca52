#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "logcoeff/series.hpp"

namespace logcoeff {

// Analytic self-map of the disk with phi(0)=0, encoded by Schur parameters so that
// validity holds by construction. phi = z*psi with |psi| <= 1 certified by the
// parameter moduli, never by post-hoc coefficient tests.
template <class K>
struct Schwarz {
  std::vector<K> schur;  // lambda_0..lambda_m, all |lambda_i| <= 1
  Series<K> phi;         // cached coefficients c_0..c_N of phi (c_0 = 0)

  int order() const { return phi.order(); }
};

namespace detail {

// modulus check with the refit tolerance: values in (1, 1+1e-12] count as unimodular
inline bool exceeds_disk(double mag) { return mag > 1.0 + 1e-12; }

template <class K>
bool is_unimodular(const K& lam) {
  return backend_traits<K>::magnitude(lam) >= 1.0 - 1e-14;
}

}  // namespace detail

// psi of order N-1 lifted to phi = z*psi of order N.
template <class K>
Series<K> shift_up_to(const Series<K>& psi, int order) {
  Series<K> phi(order);
  for (int k = 1; k <= order; ++k) phi.at(k) = psi[k - 1];
  return phi;
}

// Inverse Schur recursion: psi_m = lambda_m,
// psi_k = (lambda_k + z psi_{k+1}) / (1 + conj(lambda_k) z psi_{k+1}),
// phi = z * psi_0 expanded to the requested order. A unimodular lambda_k truncates
// the recursion (psi_k is the constant lambda_k).
template <class K>
Schwarz<K> schwarz_from_schur(const std::vector<K>& params, int order) {
  if (order < 1) throw std::invalid_argument("schwarz_from_schur: order must be >= 1");
  for (const K& lam : params)
    if (detail::exceeds_disk(backend_traits<K>::magnitude(lam)))
      throw std::invalid_argument("schwarz_from_schur: |lambda| > 1");

  const int m = static_cast<int>(params.size());
  int last = m - 1;
  for (int k = 0; k < m; ++k)
    if (detail::is_unimodular(params[k])) {
      last = k;
      break;
    }

  Series<K> psi(order - 1);
  if (m > 0) psi.at(0) = params[static_cast<size_t>(last)];
  for (int k = last - 1; k >= 0; --k) {
    const K& lam = params[static_cast<size_t>(k)];
    Series<K> zpsi = shift_up(psi);
    Series<K> num = add_const(zpsi, lam);
    Series<K> den = add_const(scale(backend_traits<K>::conj(lam), zpsi), backend_traits<K>::from_int(1));
    psi = div(num, den);
  }
  return Schwarz<K>{params, shift_up_to(psi, order)};
}

// Forward Schur refit for raw coefficients: lambda_k = psi_k(0),
// psi_{k+1} = (psi_k - lambda_k) / (z (1 - conj(lambda_k) psi_k)).
// Rejects inputs whose recursion leaves the closed disk by more than 1e-12.
template <class K>
Schwarz<K> schwarz_from_coeffs(const std::vector<K>& coeffs, int order) {
  if (order < 1) throw std::invalid_argument("schwarz_from_coeffs: order must be >= 1");
  // coeffs are c_1..c_n of phi
  Series<K> psi(order - 1);
  for (int k = 1; k <= order && k <= static_cast<int>(coeffs.size()); ++k)
    psi.at(k - 1) = coeffs[static_cast<size_t>(k - 1)];

  std::vector<K> params;
  for (int step = 0; step < order; ++step) {
    K lam = psi[0];
    const double mag = backend_traits<K>::magnitude(lam);
    if (detail::exceeds_disk(mag))
      throw std::invalid_argument("schwarz_from_coeffs: not a Schwarz function (Schur step leaves the disk)");
    params.push_back(lam);
    if (detail::is_unimodular(lam)) break;
    if (psi.order() == 0) break;
    Series<K> num = add_const(psi, -lam);
    Series<K> den = add_const(scale(-backend_traits<K>::conj(lam), psi), backend_traits<K>::from_int(1));
    psi = shift_down(div(num, den));
  }
  Schwarz<K> refit = schwarz_from_schur(params, order);
  // a unimodular step truncates the recursion, so the reconstruction must be compared
  // back against the input; a mismatch means the data was not a Schwarz function
  for (int k = 1; k <= order; ++k) {
    const K given = (k <= static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(k - 1)]
                                                           : backend_traits<K>::from_int(0);
    if (backend_traits<K>::magnitude(refit.phi[k] - given) > 1e-8)
      throw std::invalid_argument(
          "schwarz_from_coeffs: not a Schwarz function (coefficients are inconsistent)");
  }
  return refit;
}

template <class K>
std::vector<K> coefficients_of(const Schwarz<K>& phi, int k_max) {
  if (k_max > phi.order()) throw std::invalid_argument("coefficients_of: k_max beyond cached order");
  std::vector<K> out;
  out.reserve(static_cast<size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) out.push_back(phi.phi[k]);
  return out;
}

// phi(e^{i theta} z): multiplies lambda_k by e^{i (k+1) theta}, which preserves all
// moduli, so the rotated function is rebuilt through the same certified recursion.
inline Schwarz<Complex> rotate(const Schwarz<Complex>& s, double theta) {
  if (theta == 0.0) return s;
  std::vector<Complex> rotated;
  rotated.reserve(s.schur.size());
  for (size_t k = 0; k < s.schur.size(); ++k)
    rotated.push_back(s.schur[k] * std::polar(1.0, static_cast<double>(k + 1) * theta));
  return schwarz_from_schur(rotated, s.order());
}

}  // namespace logcoeff
