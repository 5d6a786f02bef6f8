#pragma once

// Real-order Bessel functions of the first and second kind, and their
// x-derivatives, on the positive real axis.
//
// Evaluation regimes:
//   x < 2                   ascending series for J, J' and Temme's series for
//                           Y at |mu| <= 1/2 followed by upward recurrence;
//   x >= 30 + nu^2/2        Hankel asymptotic expansions;
//   x >= max(20, nu)        Hankel expansions at nu - floor(nu), then upward
//                           recurrence of both J and Y;
//   otherwise               Steed's method: the J'/J continued fraction, the
//                           complex (p + iq) continued fraction and Wronskian
//                           normalisation.
//
// All entry points are pure and thread safe.

#include "bessel_interlace/error.hpp"

namespace bessel {

/// Largest order accepted by the library.
inline constexpr double kNuMax = 600.0;

struct EvalResult {
  double value = 0.0;
  /// Heuristic bound on the absolute error (truncation plus rounding slack).
  /// Advisory only.
  double est_abs_error = 0.0;
};

/// J, Y, J', Y' at one (nu, x), computed together.
struct CylinderSet {
  EvalResult j;
  EvalResult y;
  EvalResult dj;
  EvalResult dy;
};

/// Throws Error{DomainNu} / Error{OverflowNu} for an order outside [0, kNuMax].
void check_order(double nu);
/// Throws Error{DomainX} unless x is finite and strictly positive.
void check_argument(double x);

CylinderSet eval_all(double nu, double x);

EvalResult eval_j(double nu, double x);
EvalResult eval_y(double nu, double x);
EvalResult eval_dj(double nu, double x);
EvalResult eval_dy(double nu, double x);

/// cos(alpha) J_nu(x) - sin(alpha) Y_nu(x).
EvalResult eval_cylinder(double alpha, double nu, double x);

/// C'' for any cylinder function of order nu, from C and C' via the Bessel
/// differential equation.
inline double second_derivative(double nu, double x, double c, double dc) {
  return -dc / x - (1.0 - (nu / x) * (nu / x)) * c;
}

}  // namespace bessel
