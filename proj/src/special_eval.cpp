#include "bessel_interlace/special_eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this argument the ascending / Temme series are used.
constexpr double kSmallX = 2.0;
// Rescaling threshold for the downward J recurrence.
constexpr double kRescale = 1e250;
constexpr double kRescaleInv = 1e-250;
// Lowest argument for Hankel-plus-recurrence in the oscillatory region.
constexpr double kRecurrenceX = 20.0;

// Taylor coefficients of 1/Gamma(1+z) about z = 0.
constexpr std::array<double, 29> kRecipGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -0.0000012504934821426706573,
    0.0000011330272319816958824,
    -0.00000020563384169776071035,
    0.0000000061160951044814158179,
    0.0000000050020076444692229301,
    -0.0000000011812745704870201446,
    0.00000000010434267116911005105,
    0.000000000007782263439905071254,
    -0.0000000000036968056186422057082,
    0.0000000000005100370287454475979,
    -0.000000000000020583260535665067832,
    -0.0000000000000053481225394230179824,
    0.0000000000000012267786282382607902,
    -0.00000000000000011812593016974587695,
    0.0000000000000000011866922547516003326,
    0.0000000000000000014123806553180317816,
    -0.00000000000000000022987456844353702066,
};

struct Raw {
  double j = 0.0;
  double y = 0.0;
  double dj = 0.0;
  double dy = 0.0;
  int recurrence_steps = 0;
  double truncation = 0.0;  // relative to the amplitude sqrt(2/(pi x))
};

// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2,
// both smooth through mu = 0.
struct TemmeGammas {
  double gam1;
  double gam2;
};

TemmeGammas temme_gammas(double mu) {
  const double m2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  for (int k = 28; k >= 0; k -= 2) even = even * m2 + kRecipGammaTaylor[k];
  for (int k = 27; k >= 1; k -= 2) odd = odd * m2 + kRecipGammaTaylor[k];
  return {-odd, even};
}

// (x/2)^nu / Gamma(nu + 1)
double series_prefactor(double nu, double x) {
  if (nu == 0.0) return 1.0;
  if (nu <= 170.0) return std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
  return std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
}

// J_nu and J'_nu from the ascending series; only called for x < 2 where the
// terms decrease from the start.
void ascending_j(double nu, double x, double& j, double& dj) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  double dsum = nu;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (nu + k));
    const double dterm = (2.0 * k + nu) * term;
    sum += term;
    dsum += dterm;
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum) &&
        std::abs(dterm) <= 0.25 * kEps * std::abs(dsum))
      break;
  }
  const double pre = series_prefactor(nu, x);
  j = pre * sum;
  dj = pre * dsum / x;
}

// Y_mu, Y_{mu+1} for |mu| <= 1/2 and x < 2 by Temme's series.
void temme_y(double mu, double x, double& y_mu, double& y_mu1) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const auto [gam1, gam2] = temme_gammas(mu);
  const double gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
  const double gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
  double ff = 2.0 / kPi * fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
  e = std::exp(e);
  double p = e / (gampl * kPi);
  double q = 1.0 / (e * kPi * gammi);
  const double pimu2 = 0.5 * pimu;
  const double fact3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
  const double r = kPi * pimu2 * fact3 * fact3;
  double c = 1.0;
  d = -x2 * x2;
  double sum = ff + r * q;
  double sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i < 500; ++i) {
    ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
    c *= d / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * (ff + r * q);
    sum += del;
    const double del1 = c * p - i * del;
    sum1 += del1;
    if (std::abs(del) < (1.0 + std::abs(sum)) * kEps &&
        std::abs(del1) < (1.0 + std::abs(sum1)) * kEps)
      break;
  }
  y_mu = -sum;
  y_mu1 = -sum1 * 2.0 / x;
}

// Y_nu and Y_{nu+1} from Y_mu, Y_{mu+1} by upward recurrence. Returns false
// when Y_nu itself overflows; an overflowing Y_{nu+1} is left as -inf.
bool recur_y_up(double mu, double x, int steps, double& y, double& y1) {
  if (!std::isfinite(y1)) return steps == 0 && std::isfinite(y);
  const double xi2 = 2.0 / x;
  for (int i = 1; i <= steps; ++i) {
    const double next = (mu + i) * xi2 * y1 - y;
    y = y1;
    y1 = next;
    if (!std::isfinite(y1)) {
      if (i < steps) return false;
      y1 = -kInf;
    }
  }
  return true;
}

Raw small_x(double nu, double x) {
  Raw r;
  ascending_j(nu, x, r.j, r.dj);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  double y = 0.0;
  double y1 = 0.0;
  temme_y(mu, x, y, y1);
  r.recurrence_steps = nl;
  if (!recur_y_up(mu, x, nl, y, y1)) {
    // Overflow only happens far left of the first zero, where Y < 0 < Y'.
    r.y = -kInf;
    r.dy = kInf;
    return r;
  }
  r.y = y;
  r.dy = nu / x * y - y1;
  return r;
}

Raw steed(double nu, double x) {
  Raw r;
  const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: h -> J'_nu / J_nu; isign tracks the sign of J_nu.
  int isign = 1;
  double h = nu * xi;
  if (h < kFpMin) h = kFpMin;
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  const long max_iter = 100000 + static_cast<long>(4.0 * x);
  long it = 0;
  for (; it < max_iter; ++it) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  if (it >= max_iter) {
    std::ostringstream msg;
    msg << "J'/J continued fraction did not converge at nu=" << nu << ", x=" << x;
    throw Error(ErrorCode::NoConvergence, msg.str());
  }

  // Downward recurrence of the unnormalised (J, J') pair from nu to mu.
  double rjl = isign;
  double rjpl = h * rjl;
  const double rjl1 = rjl;
  const double rjp1 = rjpl;
  int rescales = 0;
  for (int l = nl - 1; l >= 0; --l) {
    const double rjtemp = (mu + l + 1) * xi * rjl + rjpl;
    rjpl = (mu + l) * xi * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > kRescale) {
      rjl *= kRescaleInv;
      rjpl *= kRescaleInv;
      ++rescales;
    }
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  // CF2: p + iq = (J'_mu + i Y'_mu) / (J_mu + i Y_mu).
  double a = 0.25 - mu * mu;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  int i = 1;
  for (; i < 100000; ++i) {
    a += 2 * i;
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
  }
  if (i >= 100000) {
    std::ostringstream msg;
    msg << "complex continued fraction did not converge at nu=" << nu << ", x=" << x;
    throw Error(ErrorCode::NoConvergence, msg.str());
  }

  // Wronskian normalisation.
  const double gam = (p - f) / q;
  double rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  double y = rjmu * gam;
  const double dy_mu = rjmu * (p * gam + q);
  double y1 = mu * xi * y - dy_mu;

  const double scale = rjmu / rjl;
  r.j = rjl1 * scale;
  r.dj = rjp1 * scale;
  for (int k = 0; k < rescales; ++k) {
    r.j *= kRescaleInv;
    r.dj *= kRescaleInv;
  }
  r.recurrence_steps = nl;
  if (!recur_y_up(mu, x, nl, y, y1)) {
    r.y = -kInf;
    r.dy = kInf;
    return r;
  }
  r.y = y;
  r.dy = nu * xi * y - y1;
  return r;
}

Raw hankel(double nu, double x) {
  const double mu4 = 4.0 * nu * nu;
  double pp = 1.0;  // P
  double qq = 0.0;  // Q
  double rr = 1.0;  // R (derivative)
  double ss = 0.0;  // S (derivative)
  double ak = 1.0;
  double last = 0.0;
  const int kmax = std::max(4, static_cast<int>(2.0 * x));
  for (int k = 1; k <= kmax; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double bk = ak * (mu4 + 4.0 * k * k - 1.0) / (8.0 * k * x);
    const double next_a = ak * (mu4 - odd * odd) / (8.0 * k * x);
    switch (k % 4) {
      case 0: pp += next_a; rr += bk; break;
      case 1: qq += next_a; ss += bk; break;
      case 2: pp -= next_a; rr -= bk; break;
      default: qq -= next_a; ss -= bk; break;
    }
    last = std::max(std::abs(next_a), std::abs(bk));
    if (next_a == 0.0 && bk == 0.0) break;
    if (last < 0.01 * kEps) break;
    ak = next_a;
  }

  // chi = x - (nu/2 + 1/4) pi, expanded so that x itself is reduced by libm.
  const double t = std::fmod(0.5 * nu + 0.25, 2.0);
  const double cphi = std::cos(kPi * t);
  const double sphi = std::sin(kPi * t);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cchi = cx * cphi + sx * sphi;
  const double schi = sx * cphi - cx * sphi;

  const double amp = std::sqrt(2.0 / (kPi * x));
  Raw r;
  r.j = amp * (pp * cchi - qq * schi);
  r.y = amp * (pp * schi + qq * cchi);
  r.dj = -amp * (rr * schi + ss * cchi);
  r.dy = amp * (rr * cchi - ss * schi);
  r.truncation = last;
  return r;
}

double hankel_threshold(double nu) { return 30.0 + 0.5 * nu * nu; }

// Oscillatory region x >= nu: Hankel expansions at the fractional order
// mu = nu - floor(nu), then upward recurrence of J and Y, which stays stable
// while the order does not exceed x.
Raw hankel_recur(double nu, double x) {
  const double whole = std::floor(nu);
  const int steps = static_cast<int>(whole);
  const double mu = nu - whole;
  const Raw base = hankel(mu, x);
  const double xi2 = 2.0 / x;
  double j0 = base.j;
  double j1 = mu / x * base.j - base.dj;
  double y0 = base.y;
  double y1 = mu / x * base.y - base.dy;
  for (int k = 1; k <= steps; ++k) {
    const double order = mu + k;
    const double jn = order * xi2 * j1 - j0;
    const double yn = order * xi2 * y1 - y0;
    j0 = j1;
    j1 = jn;
    y0 = y1;
    y1 = yn;
  }
  Raw r;
  r.j = j0;
  r.y = y0;
  r.dj = nu / x * j0 - j1;
  r.dy = nu / x * y0 - y1;
  r.recurrence_steps = steps;
  r.truncation = base.truncation;
  return r;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainNu: return "DOMAIN_NU";
    case ErrorCode::DomainX: return "DOMAIN_X";
    case ErrorCode::OverflowNu: return "OVERFLOW_NU";
    case ErrorCode::BracketNotFound: return "BRACKET_NOT_FOUND";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::NotFoundWithinCap: return "NOT_FOUND_WITHIN_CAP";
    case ErrorCode::OnlyOneOrdering: return "ONLY_ONE_ORDERING";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

void check_order(double nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    std::ostringstream msg;
    msg << "order must be finite and non-negative, got " << nu;
    throw Error(ErrorCode::DomainNu, msg.str());
  }
  if (nu > kNuMax) {
    std::ostringstream msg;
    msg << "order " << nu << " exceeds the supported maximum " << kNuMax;
    throw Error(ErrorCode::OverflowNu, msg.str());
  }
}

void check_argument(double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    std::ostringstream msg;
    msg << "argument must be finite and strictly positive, got " << x;
    throw Error(ErrorCode::DomainX, msg.str());
  }
}

CylinderSet eval_all(double nu, double x) {
  check_order(nu);
  check_argument(x);

  Raw r;
  if (x < kSmallX) {
    r = small_x(nu, x);
  } else if (x >= hankel_threshold(nu)) {
    r = hankel(nu, x);
  } else if (x >= kRecurrenceX && x >= nu) {
    r = hankel_recur(nu, x);
  } else {
    r = steed(nu, x);
  }

  // Y_{nu+1} overflowed while Y_nu did not: Y' = (nu/x) Y - Y_{nu+1} is then
  // inf - inf, but Y rises from -infinity there, so Y' is +infinity.
  if (std::isnan(r.dy) && !std::isnan(r.y)) r.dy = kInf;

  const double slack = 10.0 + r.recurrence_steps;
  const double amp_trunc = std::sqrt(2.0 / (kPi * x)) * r.truncation;
  auto estimate = [&](double c, double dc) {
    return EvalResult{c, kEps * (slack * std::abs(c) + 2.0 * x * std::abs(dc)) + amp_trunc};
  };
  auto estimate_prime = [&](double c, double dc) {
    const double ddc = second_derivative(nu, x, c, dc);
    return EvalResult{dc, kEps * (slack * std::abs(dc) + 2.0 * x * std::abs(ddc)) + amp_trunc};
  };

  CylinderSet out;
  out.j = estimate(r.j, r.dj);
  out.dj = estimate_prime(r.j, r.dj);
  if (std::isfinite(r.y)) {
    out.y = estimate(r.y, r.dy);
    out.dy = estimate_prime(r.y, r.dy);
  } else {
    out.y = {r.y, kInf};
    out.dy = {r.dy, kInf};
  }
  return out;
}

EvalResult eval_j(double nu, double x) { return eval_all(nu, x).j; }
EvalResult eval_y(double nu, double x) { return eval_all(nu, x).y; }
EvalResult eval_dj(double nu, double x) { return eval_all(nu, x).dj; }
EvalResult eval_dy(double nu, double x) { return eval_all(nu, x).dy; }

EvalResult eval_cylinder(double alpha, double nu, double x) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "mixing angle must be finite");
  }
  const CylinderSet s = eval_all(nu, x);
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  // Exact projections at alpha = 0 and alpha = pi/2 up to the rounding of
  // cos/sin; skip the vanishing branch so an infinite Y cannot leak in.
  double value = ca * s.j.value;
  double err = std::abs(ca) * s.j.est_abs_error;
  if (sa != 0.0) {
    value -= sa * s.y.value;
    err += std::abs(sa) * s.y.est_abs_error;
  }
  err += kEps * std::abs(value);
  return {value, err};
}

}  // namespace bessel
