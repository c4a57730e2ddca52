#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "logcoeff/series.hpp"

namespace logcoeff {

// gamma_1..gamma_N of a normalized univalent function: log(f/z) = 2 sum gamma_n z^n.
template <class K>
struct GammaVector {
  std::vector<K> values;  // entry i holds gamma_{i+1}
  std::string source;

  int size() const { return static_cast<int>(values.size()); }
  const K& gamma(int n) const { return values.at(static_cast<size_t>(n - 1)); }
  double abs_gamma(int n) const { return backend_traits<K>::magnitude(gamma(n)); }
};

// Coefficients of 1 + zf''/f' (beta, with beta_0 = 1 implicit) and delta_n = 2n gamma_n.
template <class K>
struct BetaDelta {
  std::vector<K> beta;   // beta_1..beta_M
  std::vector<K> delta;  // delta_1..delta_M
};

namespace detail {

template <class K>
void require_normalized(const Series<K>& f, const char* op) {
  if (!backend_traits<K>::is_zero(f[0]) || !backend_traits<K>::is_one(f[1]))
    throw std::invalid_argument(std::string(op) + ": needs f(0)=0, f'(0)=1");
}

}  // namespace detail

// gamma_n = (1/2) [z^n] log(f/z); needs f through z^{n_max+1}.
template <class K>
GammaVector<K> log_coefficients(const Series<K>& f, int n_max) {
  detail::require_normalized(f, "log_coefficients");
  if (f.order() < n_max + 1)
    throw std::invalid_argument("log_coefficients: series order must be at least n_max+1");
  Series<K> L = log_unit(shift_down(f));
  GammaVector<K> g;
  g.values.reserve(static_cast<size_t>(n_max));
  const K two = backend_traits<K>::from_int(2);
  for (int n = 1; n <= n_max; ++n) g.values.push_back(L[n] / two);
  return g;
}

// beta through the log-derivative of f' (1 + z (log f')'), delta from the log
// coefficients of f itself; needs f through z^{n_max+1}.
template <class K>
BetaDelta<K> pre_schwarzian_coeffs(const Series<K>& f, int n_max) {
  detail::require_normalized(f, "pre_schwarzian_coeffs");
  if (f.order() < n_max + 1)
    throw std::invalid_argument("pre_schwarzian_coeffs: series order must be at least n_max+1");
  Series<K> L = log_unit(derivative(f));  // log f', order >= n_max
  GammaVector<K> g = log_coefficients(f, n_max);
  BetaDelta<K> bd;
  bd.beta.reserve(static_cast<size_t>(n_max));
  bd.delta.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    bd.beta.push_back(backend_traits<K>::from_int(n) * L[n]);
    bd.delta.push_back(backend_traits<K>::from_int(2 * n) * g.values[static_cast<size_t>(n - 1)]);
  }
  return bd;
}

// gamma_1..gamma_5 from beta alone, through the coefficient identities
//   gamma_1 = beta_1/4
//   gamma_2 = (beta_2 + beta_1^2/4)/12
//   gamma_3 = (beta_3 + beta_1 beta_2/2)/24
//   5 delta_4 = beta_4 + beta_3 delta_1 + delta_2 (beta_2 - delta_2)
//   6 delta_5 = beta_5 + beta_4 delta_1 + delta_2 (beta_3 - delta_3) + delta_3 (beta_2 - delta_2)
// with delta_n = 2n gamma_n rebuilt from the earlier lines. Independent of the series
// log kernel, so it cross-checks log_coefficients.
template <class K>
std::array<K, 5> gamma_from_beta(const std::vector<K>& beta) {
  if (beta.size() < 5) throw std::invalid_argument("gamma_from_beta: needs beta_1..beta_5");
  const K b1 = beta[0], b2 = beta[1], b3 = beta[2], b4 = beta[3], b5 = beta[4];
  auto ki = [](long n) { return backend_traits<K>::from_int(n); };

  const K g1 = b1 / ki(4);
  const K g2 = (b2 + b1 * b1 / ki(4)) / ki(12);
  const K g3 = (b3 + b1 * b2 / ki(2)) / ki(24);
  const K d1 = ki(2) * g1;
  const K d2 = ki(4) * g2;
  const K d3 = ki(6) * g3;
  const K d4 = (b4 + b3 * d1 + d2 * (b2 - d2)) / ki(5);
  const K g4 = d4 / ki(8);
  const K d5 = (b5 + b4 * d1 + d2 * (b3 - d3) + d3 * (b2 - d2)) / ki(6);
  const K g5 = d5 / ki(10);
  return {g1, g2, g3, g4, g5};
}

template <class K>
std::array<K, 5> gamma_from_beta(const BetaDelta<K>& bd) {
  return gamma_from_beta(bd.beta);
}

enum class Weight { ones, n_squared, n_plus1_pow_t, roth };

inline const char* weight_name(Weight w) {
  switch (w) {
    case Weight::ones: return "ones";
    case Weight::n_squared: return "n_squared";
    case Weight::n_plus1_pow_t: return "(n+1)^t";
    case Weight::roth: return "roth_p_n";
  }
  return "?";
}

template <class K>
struct EnergyTrajectory {
  using R = typename backend_traits<K>::real_type;
  std::vector<R> partial;           // partial sums sum_{n<=k} w_n |gamma_n|^2, k = 1..N
  bool outside_hypothesis = false;  // t > 2 is computed anyway but flagged
};

// Partial-sum trajectory of the weighted energy. The (n+1)^t weight needs t <= 2 to be
// inside the theorem hypothesis; on the exact backend t must be a nonnegative integer.
template <class K>
EnergyTrajectory<K> weighted_energy(const GammaVector<K>& g, Weight w, double t = 0.0) {
  using R = typename backend_traits<K>::real_type;
  EnergyTrajectory<K> out;
  out.outside_hypothesis = (w == Weight::n_plus1_pow_t && t > 2.0);
  out.partial.reserve(g.values.size());
  R acc = backend_traits<K>::real_from_int(0);
  for (int n = 1; n <= g.size(); ++n) {
    const K& gn = g.values[static_cast<size_t>(n - 1)];
    R sq = backend_traits<K>::abs_sq(gn);
    R wn = backend_traits<K>::real_from_int(1);
    switch (w) {
      case Weight::ones:
        break;
      case Weight::n_squared:
        wn = backend_traits<K>::real_from_int(static_cast<long>(n) * n);
        break;
      case Weight::roth:
        wn = backend_traits<K>::real_from_int(static_cast<long>(n) * n) /
             backend_traits<K>::real_from_int(static_cast<long>(n + 1) * (n + 1));
        break;
      case Weight::n_plus1_pow_t: {
        if constexpr (backend_traits<K>::exact) {
          if (t < 0 || t != std::floor(t))
            throw std::invalid_argument("weighted_energy: (n+1)^t needs integer t >= 0 on the exact backend");
          R p = backend_traits<K>::real_from_int(1);
          for (long i = 0; i < static_cast<long>(t); ++i) p *= backend_traits<K>::real_from_int(n + 1);
          wn = p;
        } else {
          wn = std::pow(static_cast<double>(n + 1), t);
        }
        break;
      }
    }
    acc += wn * sq;
    out.partial.push_back(acc);
  }
  return out;
}

}  // namespace logcoeff
