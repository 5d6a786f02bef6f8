#include "bessel_interlace/wronskian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/special_eval.hpp"
#include "bessel_interlace/zero_finder.hpp"

namespace bessel {

namespace {

constexpr int kMaxBisections = 200;
constexpr int kSignAtOrigin = 1;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Zeros of one kind up to x_max (inclusive).
void collect_zeros(ZeroKind kind, double nu, double x_max, std::vector<double>& out) {
  if (nu >= x_max) return;  // every zero of J_nu and Y_nu exceeds nu
  ZeroSequence seq(kind, nu);
  while (seq.count() < kMaxRank) {
    const double v = seq.next().value;
    if (v > x_max) break;
    out.push_back(v);
  }
}

double bisect_w(double nu, double mu, double lo, double hi, double wlo) {
  for (int i = 0; i < kMaxBisections && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double wm = eval_w(nu, mu, mid);
    if (wm == 0.0) return mid;
    if (sign_of(wm) == sign_of(wlo)) {
      lo = mid;
      wlo = wm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<SignSample> sample_interval(double nu, double lo, double hi, int n, bool want_same) {
  std::vector<SignSample> out;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int k = n; k >= 1; --k) {
    SignSample smp;
    smp.x = mid + half * std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
    smp.y_nu = eval_y(nu, smp.x).value;
    smp.y_nu1 = eval_y(nu + 1.0, smp.x).value;
    const int a = sign_of(smp.y_nu);
    const int b = sign_of(smp.y_nu1);
    smp.verdict = a != 0 && b != 0 && (want_same ? a == b : a != b);
    out.push_back(smp);
  }
  return out;
}

bool all_true(const std::vector<SignSample>& v) {
  return std::all_of(v.begin(), v.end(), [](const SignSample& s) { return s.verdict; });
}

}  // namespace

double eval_w(double nu, double mu, double x) {
  check_order(nu);
  check_order(mu);
  check_argument(x);
  const CylinderSet a = eval_all(nu, x);
  const CylinderSet b = nu == mu ? a : eval_all(mu, x);
  return std::fma(a.j.value, b.dy.value, -a.dj.value * b.y.value);
}

WronskianProfile profile_extrema(double nu, double mu, int s_max) {
  check_order(nu);
  check_order(mu);
  if (nu == mu) throw Error(ErrorCode::InvalidArgument, "nu and mu must differ");
  if (s_max < 1 || s_max > kMaxRank) throw Error(ErrorCode::InvalidArgument, "s_max must lie in [1, 10000]");

  WronskianProfile p;
  p.nu = nu;
  p.mu = mu;
  for (const auto& r : zeros_upto(ZeroKind::J, nu, s_max)) {
    p.samples.push_back({r.value, eval_w(nu, mu, r.value), ExtremumSource::JZero, r.id.s});
  }
  for (const auto& r : zeros_upto(ZeroKind::Y, mu, s_max)) {
    p.samples.push_back({r.value, eval_w(nu, mu, r.value), ExtremumSource::YZero, r.id.s});
  }
  std::stable_sort(p.samples.begin(), p.samples.end(),
                   [](const WronskianSample& a, const WronskianSample& b) { return a.x < b.x; });

  // The limit at 0+ bounds the first monotone stretch, so it joins the sign test.
  p.all_same_sign = true;
  p.min_abs = std::abs(p.samples.front().w);
  for (const auto& smp : p.samples) {
    if (sign_of(smp.w) != kSignAtOrigin) p.all_same_sign = false;
    p.min_abs = std::min(p.min_abs, std::abs(smp.w));
  }
  return p;
}

std::optional<double> has_positive_zero(double nu, double mu, double x_max) {
  check_order(nu);
  check_order(mu);
  if (nu == mu) throw Error(ErrorCode::InvalidArgument, "nu and mu must differ");
  if (!(std::isfinite(x_max) && x_max > 0.0)) throw Error(ErrorCode::DomainX, "x_max must be positive and finite");

  std::vector<double> points;
  collect_zeros(ZeroKind::J, nu, x_max, points);
  collect_zeros(ZeroKind::Y, mu, x_max, points);
  std::sort(points.begin(), points.end());
  if (points.empty() || points.back() < x_max) points.push_back(x_max);

  // W > 0 near the origin. On (0, points[0]) look for a positive value first.
  double a = points.front();
  double wa = eval_w(nu, mu, a);
  if (wa == 0.0) return a;
  if (wa < 0.0) {
    double lo = a;
    double wlo = wa;
    while (wlo <= 0.0 && lo > 1e-300) {
      lo *= 0.5;
      wlo = eval_w(nu, mu, lo);
    }
    if (wlo > 0.0) return bisect_w(nu, mu, lo, a, wlo);
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double b = points[i];
    const double wb = eval_w(nu, mu, b);
    if (wb == 0.0) return b;
    if (sign_of(wb) != sign_of(wa)) return bisect_w(nu, mu, a, b, wa);
    a = b;
    wa = wb;
  }
  return std::nullopt;
}

SignIntervalReport sign_agreement(double nu, int s, int n_samples) {
  check_order(nu);
  check_order(nu + 1.0);
  if (s < 1 || s >= kMaxRank) throw Error(ErrorCode::InvalidArgument, "rank must lie in [1, 9999]");
  if (n_samples < 3) throw Error(ErrorCode::InvalidArgument, "n_samples must be at least 3");

  SignIntervalReport r;
  r.nu = nu;
  r.s = s;
  const auto y0 = zeros_upto(ZeroKind::Y, nu, s + 1);
  const double y1 = zero({ZeroKind::Y, nu + 1.0, s}).value;
  r.differ_lo = y0[s - 1].value;
  r.differ_hi = y1;
  r.same_lo = y1;
  r.same_hi = y0[s].value;
  r.same_samples = sample_interval(nu, r.same_lo, r.same_hi, n_samples, true);
  r.differ_samples = sample_interval(nu, r.differ_lo, r.differ_hi, n_samples, false);
  r.same_verdict = r.same_lo < r.same_hi && all_true(r.same_samples);
  r.differ_verdict = r.differ_lo < r.differ_hi && all_true(r.differ_samples);
  return r;
}

DerivativeZeroResidual derivative_zero_residual(double nu, int s) {
  check_order(nu);
  check_order(nu + 1.0);
  DerivativeZeroResidual r;
  r.x = zero({ZeroKind::YPrime, nu, s}).value;
  r.y_nu = eval_y(nu, r.x).value;
  r.y_nu1 = eval_y(nu + 1.0, r.x).value;
  r.residual = std::abs(r.y_nu1 - (nu / r.x) * r.y_nu);
  r.bound = 1e-11 * std::max(1.0, std::abs(r.y_nu));
  return r;
}

}  // namespace bessel
