#pragma once

// Positive real zeros j_{nu,s}, y_{nu,s}, j'_{nu,s}, y'_{nu,s}.
//
// Every zero is located by walking sign changes upward from a lower anchor
// (the order nu for the first zero, the previous zero afterwards), so the
// s-th record is the s-th zero by construction. For nu = 0 the origin is
// counted as the first zero of J'_0.

#include <optional>
#include <string_view>
#include <vector>

namespace bessel {

enum class ZeroKind { J, Y, JPrime, YPrime };

/// "j", "y", "jp", "yp".
std::string_view to_string(ZeroKind kind);
std::optional<ZeroKind> parse_zero_kind(std::string_view text);

struct ZeroId {
  ZeroKind kind = ZeroKind::J;
  double nu = 0.0;
  int s = 1;

  friend bool operator==(const ZeroId&, const ZeroId&) = default;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct ZeroRecord {
  ZeroId id;
  double value = 0.0;
  Bracket bracket;
  double residual = 0.0;
  int iterations = 0;
};

inline constexpr int kMaxRank = 10000;
inline constexpr int kMaxRefineIterations = 200;
inline constexpr double kRefineRelWidth = 1e-14;

/// Largest accepted |target(value)| for a refined zero.
double resid_tol(double value);

/// True for the conventional zero j'_{0,1} = 0.
bool is_conventional_zero(const ZeroId& id);

/// The same zero under the identities J'_0 = -J_1 and Y'_0 = -Y_1:
/// (JPrime, 0, s) -> (J, 1, s - 1) for s >= 2 and (YPrime, 0, s) -> (Y, 1, s).
/// Every other id maps to itself.
ZeroId canonical(const ZeroId& id);

struct TargetValue {
  double f = 0.0;
  double df = 0.0;
};

/// The function whose zeros `kind` enumerates, and its x-derivative.
TargetValue evaluate_target(ZeroKind kind, double nu, double x);

/// McMahon-type first guess. Only a refinement seed; never trusted for rank.
double initial_guess(const ZeroId& id);

Bracket initial_bracket(const ZeroId& id);
ZeroRecord refine(const Bracket& bracket, const ZeroId& id);
ZeroRecord zero(const ZeroId& id);
std::vector<ZeroRecord> zeros_upto(ZeroKind kind, double nu, int s_max);

/// Incremental enumerator for one (kind, nu); each rank anchors the next.
class ZeroSequence {
 public:
  ZeroSequence(ZeroKind kind, double nu);

  ZeroKind kind() const { return kind_; }
  double nu() const { return nu_; }
  int count() const { return static_cast<int>(records_.size()); }

  /// 1-based; extends the sequence as needed.
  const ZeroRecord& at(int s);
  const ZeroRecord& next();
  /// Sign-change bracket of the next, not yet computed, rank.
  Bracket next_bracket() const;

  const std::vector<ZeroRecord>& records() const { return records_; }

 private:
  ZeroKind kind_;
  double nu_;
  std::vector<ZeroRecord> records_;
};

}  // namespace bessel
