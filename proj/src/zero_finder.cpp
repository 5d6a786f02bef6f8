#include "bessel_interlace/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/special_eval.hpp"

namespace bessel {

namespace {

constexpr double kPi = std::numbers::pi;
// Offset past the previous zero where the walk for the next one starts.
// Consecutive zeros of one kind are more than 1.5 apart.
constexpr double kAnchorOffset = 1e-3;
constexpr double kFirstAnchorAtZeroOrder = 1e-6;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

std::string describe(const ZeroId& id) {
  std::ostringstream out;
  out << to_string(id.kind) << "(nu=" << id.nu << ", s=" << id.s << ")";
  return out.str();
}

void check_id(const ZeroId& id) {
  check_order(id.nu);
  if (id.s < 1) {
    throw Error(ErrorCode::InvalidArgument, "zero rank must be >= 1");
  }
}

double scan_budget(double nu) { return 10.0 + 2.0 * kPi + 4.0 * std::cbrt(nu); }

// Walk from `start` in steps of `step` until the target changes sign.
Bracket walk(ZeroKind kind, double nu, double start, double step, const ZeroId& id) {
  const double budget = scan_budget(nu);
  double a = start;
  double fa = evaluate_target(kind, nu, a).f;
  for (int k = 1;; ++k) {
    const double b = start + k * step;
    if (b - start > budget) {
      throw Error(ErrorCode::BracketNotFound,
                  "no sign change found for " + describe(id) + " within the scan budget");
    }
    const double fb = evaluate_target(kind, nu, b).f;
    if (fa == 0.0) {
      // Landed exactly on a zero at the anchor; it cannot be the one sought.
      a = b;
      fa = fb;
      continue;
    }
    if (fb == 0.0 || sign_of(fa) != sign_of(fb)) return {a, b};
    a = b;
    fa = fb;
  }
}

}  // namespace

std::string_view to_string(ZeroKind kind) {
  switch (kind) {
    case ZeroKind::J: return "j";
    case ZeroKind::Y: return "y";
    case ZeroKind::JPrime: return "jp";
    case ZeroKind::YPrime: return "yp";
  }
  return "?";
}

std::optional<ZeroKind> parse_zero_kind(std::string_view text) {
  if (text == "j") return ZeroKind::J;
  if (text == "y") return ZeroKind::Y;
  if (text == "jp") return ZeroKind::JPrime;
  if (text == "yp") return ZeroKind::YPrime;
  return std::nullopt;
}

double resid_tol(double value) { return 1e-10 * std::max(1.0, std::abs(value)); }

bool is_conventional_zero(const ZeroId& id) {
  return id.kind == ZeroKind::JPrime && id.nu == 0.0 && id.s == 1;
}

ZeroId canonical(const ZeroId& id) {
  if (id.nu == 0.0 && id.kind == ZeroKind::JPrime && id.s >= 2) {
    return {ZeroKind::J, 1.0, id.s - 1};
  }
  if (id.nu == 0.0 && id.kind == ZeroKind::YPrime) return {ZeroKind::Y, 1.0, id.s};
  return id;
}

TargetValue evaluate_target(ZeroKind kind, double nu, double x) {
  const CylinderSet v = eval_all(nu, x);
  switch (kind) {
    case ZeroKind::J: return {v.j.value, v.dj.value};
    case ZeroKind::Y: return {v.y.value, v.dy.value};
    case ZeroKind::JPrime:
      return {v.dj.value, second_derivative(nu, x, v.j.value, v.dj.value)};
    case ZeroKind::YPrime:
      return {v.dy.value, second_derivative(nu, x, v.y.value, v.dy.value)};
  }
  return {};
}

double initial_guess(const ZeroId& id) {
  const double nu = id.nu;
  if (is_conventional_zero(id)) return 0.0;
  if (id.s == 1 && nu >= 1.0) {
    double c = 0.0;
    switch (id.kind) {
      case ZeroKind::J: c = 1.8557571; break;
      case ZeroKind::Y: c = 0.9315768; break;
      case ZeroKind::JPrime: c = 0.8086165; break;
      case ZeroKind::YPrime: c = 1.8210980; break;
    }
    return nu + c * std::cbrt(nu);
  }
  const double mu = 4.0 * nu * nu;
  const double s = id.s;
  switch (id.kind) {
    case ZeroKind::J: {
      const double beta = (s + 0.5 * nu - 0.25) * kPi;
      return beta - (mu - 1.0) / (8.0 * beta);
    }
    case ZeroKind::Y: {
      const double beta = (s + 0.5 * nu - 0.75) * kPi;
      return beta - (mu - 1.0) / (8.0 * beta);
    }
    case ZeroKind::JPrime: {
      const double beta = (s + 0.5 * nu - 0.75) * kPi;
      return beta - (mu + 3.0) / (8.0 * beta);
    }
    case ZeroKind::YPrime: {
      const double beta = (s + 0.5 * nu - 0.25) * kPi;
      return beta - (mu + 3.0) / (8.0 * beta);
    }
  }
  return 0.0;
}

ZeroRecord refine(const Bracket& bracket, const ZeroId& id) {
  check_id(id);
  if (is_conventional_zero(id)) {
    return ZeroRecord{id, 0.0, {0.0, 0.0}, 0.0, 0};
  }
  if (!(bracket.lo > 0.0) || !(bracket.lo < bracket.hi) || !std::isfinite(bracket.hi)) {
    throw Error(ErrorCode::InvalidArgument, "bracket for " + describe(id) + " must satisfy 0 < lo < hi");
  }

  double lo = bracket.lo;
  double hi = bracket.hi;
  double flo = evaluate_target(id.kind, id.nu, lo).f;
  const double fhi = evaluate_target(id.kind, id.nu, hi).f;
  if (sign_of(flo) * sign_of(fhi) > 0) {
    throw Error(ErrorCode::InvalidArgument, "bracket for " + describe(id) + " has no sign change");
  }

  ZeroRecord rec;
  rec.id = id;
  int evals = 0;
  bool converged = false;
  double x = 0.0;

  // Narrow [lo, hi] with the sign of the target at t; true on an exact zero.
  auto absorb = [&](double t, double ft) {
    if (ft == 0.0) {
      lo = hi = t;
      return true;
    }
    if (sign_of(ft) == sign_of(flo)) {
      lo = t;
      flo = ft;
    } else {
      hi = t;
    }
    return false;
  };
  auto tolerance = [&] { return kRefineRelWidth * std::max(1.0, hi); };
  auto narrow_enough = [&] { return hi - lo <= tolerance() || std::nextafter(lo, hi) >= hi; };

  if (flo == 0.0 || fhi == 0.0) {
    x = flo == 0.0 ? lo : hi;
    lo = hi = x;
    converged = true;
  } else {
    const double guess = initial_guess(id);
    x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    TargetValue t = evaluate_target(id.kind, id.nu, x);
    ++evals;
    converged = absorb(x, t.f);
    double width_before = hi - lo;
    while (!converged && evals < kMaxRefineIterations) {
      const double step = t.f / t.df;
      double next = x - step;
      // Newton unless it leaves the bracket; bisect when the bracket stalls.
      const bool stalled = hi - lo > 0.5 * width_before;
      if (!std::isfinite(next) || !(next > lo && next < hi)) {
        next = 0.5 * (lo + hi);
      } else if (std::abs(step) < 0.5 * tolerance()) {
        // Settled; probe both sides so the bracket itself certifies it.
        const double tol = tolerance();
        for (const double probe : {next - 0.5 * tol, next + 0.5 * tol}) {
          if (probe > lo && probe < hi && evals < kMaxRefineIterations) {
            ++evals;
            if (absorb(probe, evaluate_target(id.kind, id.nu, probe).f)) break;
          }
        }
        x = next;
        if (lo == hi || narrow_enough()) {
          converged = true;
          break;
        }
      } else if (stalled && evals % 4 == 0) {
        next = 0.5 * (lo + hi);
      }
      width_before = hi - lo;
      x = next;
      t = evaluate_target(id.kind, id.nu, x);
      ++evals;
      converged = absorb(x, t.f) || narrow_enough();
    }
    if (converged && lo < hi) {
      // Final Newton polish from the last iterate, kept inside the bracket.
      const double polished = x - t.f / t.df;
      if (std::isfinite(polished)) x = std::clamp(polished, lo, hi);
    }
  }

  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "refinement of " + describe(id) + " did not converge in " +
                    std::to_string(kMaxRefineIterations) + " iterations");
  }

  const double value = (x >= lo && x <= hi) ? x : 0.5 * (lo + hi);
  rec.value = value;
  rec.bracket = {lo, hi};
  rec.iterations = evals;
  rec.residual = evaluate_target(id.kind, id.nu, value).f;
  if (!(std::abs(rec.residual) <= resid_tol(value))) {
    std::ostringstream msg;
    msg << "refined " << describe(id) << " = " << value << " has residual " << rec.residual;
    throw Error(ErrorCode::NoConvergence, msg.str());
  }
  return rec;
}

ZeroSequence::ZeroSequence(ZeroKind kind, double nu) : kind_(kind), nu_(nu) { check_order(nu); }

Bracket ZeroSequence::next_bracket() const {
  const ZeroId id{kind_, nu_, count() + 1};
  if (is_conventional_zero(id)) return {0.0, 0.0};

  double start = 0.0;
  double spacing = kPi;
  if (records_.empty()) {
    start = nu_ > 0.0 ? nu_ : kFirstAnchorAtZeroOrder;
  } else {
    start = records_.back().value + kAnchorOffset;
    if (records_.size() >= 2) {
      spacing = records_.back().value - records_[records_.size() - 2].value;
    }
  }
  const double step = std::min(kPi / 8.0, 0.25 * spacing);
  return walk(kind_, nu_, start, step, id);
}

const ZeroRecord& ZeroSequence::next() {
  const ZeroId id{kind_, nu_, count() + 1};
  ZeroRecord rec = refine(next_bracket(), id);
  if (!records_.empty() && !(rec.value > records_.back().value)) {
    throw Error(ErrorCode::NoConvergence, "zeros of " + describe(id) + " are not increasing");
  }
  records_.push_back(rec);
  return records_.back();
}

const ZeroRecord& ZeroSequence::at(int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "zero rank must be >= 1");
  while (count() < s) next();
  return records_[static_cast<std::size_t>(s - 1)];
}

Bracket initial_bracket(const ZeroId& id) {
  check_id(id);
  ZeroSequence seq(id.kind, id.nu);
  if (id.s > 1) seq.at(id.s - 1);
  return seq.next_bracket();
}

ZeroRecord zero(const ZeroId& id) {
  check_id(id);
  ZeroSequence seq(id.kind, id.nu);
  return seq.at(id.s);
}

std::vector<ZeroRecord> zeros_upto(ZeroKind kind, double nu, int s_max) {
  if (s_max < 1 || s_max > kMaxRank) {
    throw Error(ErrorCode::InvalidArgument, "s_max must lie in [1, 10000]");
  }
  ZeroSequence seq(kind, nu);
  seq.at(s_max);
  return seq.records();
}

}  // namespace bessel
