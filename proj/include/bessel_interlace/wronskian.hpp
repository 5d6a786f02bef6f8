#pragma once

// Cross-order Wronskian W_{nu,mu}(x) = J_nu(x) Y'_mu(x) - J'_nu(x) Y_mu(x)
// and the sign arguments built on it.
//
// d/dx [x W] = (mu^2 - nu^2) / x * J_nu(x) Y_mu(x), so x W is monotone between
// consecutive zeros of J_nu and Y_mu, and W keeps the sign of x W. Near 0+ W
// is positive for every admissible pair.

#include <optional>
#include <vector>

namespace bessel {

inline constexpr double kDefaultWronskianXMax = 60.0;

double eval_w(double nu, double mu, double x);

enum class ExtremumSource { JZero, YZero };

struct WronskianSample {
  double x = 0.0;
  double w = 0.0;
  ExtremumSource source = ExtremumSource::JZero;
  int s = 1;
};

struct WronskianProfile {
  double nu = 0.0;
  double mu = 0.0;
  std::vector<WronskianSample> samples;  // sorted by x
  /// Every sample is positive, the sign W takes near 0+.
  bool all_same_sign = false;
  double min_abs = 0.0;
};

/// W at j_{nu,s} and y_{mu,s} for s <= s_max. Requires nu != mu.
WronskianProfile profile_extrema(double nu, double mu, int s_max);

/// A zero of W on (0, x_max], located between consecutive stationary points
/// of x W and refined by bisection. Requires nu != mu.
std::optional<double> has_positive_zero(double nu, double mu, double x_max = kDefaultWronskianXMax);

struct SignSample {
  double x = 0.0;
  double y_nu = 0.0;
  double y_nu1 = 0.0;
  bool verdict = false;
};

/// Signs of Y_nu and Y_{nu+1} inside (y_{nu+1,s}, y_{nu,s+1}), where they
/// agree, and inside (y_{nu,s}, y_{nu+1,s}), where they differ.
struct SignIntervalReport {
  double nu = 0.0;
  int s = 1;
  double same_lo = 0.0, same_hi = 0.0;
  double differ_lo = 0.0, differ_hi = 0.0;
  std::vector<SignSample> same_samples;
  std::vector<SignSample> differ_samples;
  bool same_verdict = false;
  bool differ_verdict = false;
};

/// Samples each interval at n_samples Chebyshev interior points (n_samples >= 3).
SignIntervalReport sign_agreement(double nu, int s, int n_samples);

/// At x = y'_{nu,s}: |Y_{nu+1}(x) - (nu/x) Y_nu(x)|, which vanishes there, so
/// Y_{nu+1} and Y_nu share a sign.
struct DerivativeZeroResidual {
  double x = 0.0;
  double y_nu = 0.0;
  double y_nu1 = 0.0;
  double residual = 0.0;
  /// 1e-11 * max(1, |Y_nu(x)|).
  double bound = 0.0;
};

DerivativeZeroResidual derivative_zero_residual(double nu, int s);

}  // namespace bessel
