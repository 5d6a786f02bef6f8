#pragma once

// Interlacing checks between zeros of J, Y, J', Y' at neighbouring orders.
//
// A comparison "left < right" counts as strict when right - left exceeds
// strict_tol(right). The identities J'_0 = -J_1 and Y'_0 = -Y_1 make some
// comparisons at nu = 0 exact equalities; those are reported as exempt
// rather than violated when |gap| <= kEqTol.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bessel_interlace/zero_finder.hpp"

namespace bessel {

inline constexpr double kEqTol = 1e-10;
inline constexpr int kClassicalMaxRank = 100;
inline constexpr int kDefaultBreakingCap = 500;

double strict_tol(double right);

/// Caches one ZeroSequence per (kind, nu). Not thread safe; use one per task.
class ZeroTable {
 public:
  const ZeroRecord& record(const ZeroId& id);
  double value(ZeroKind kind, double nu, int s) { return record({kind, nu, s}).value; }

 private:
  std::map<std::pair<int, double>, ZeroSequence> sequences_;
};

/// Text label of a zero, e.g. "yp(0.5,3)".
std::string label(const ZeroId& id);

struct ChainNode {
  ZeroId id;
  std::string label;
  double value = 0.0;
};

inline constexpr int kChainNodes = 7;
inline constexpr int kChainGaps = kChainNodes - 1;

/// j'_{nu,s} < y_{nu,s} < y_{nu+eps,s} < y'_{nu,s} < j_{nu,s} < j_{nu+eps,s} < j'_{nu,s+1}
struct InterlaceChain {
  double nu = 0.0;
  double eps = 0.0;
  int s = 1;
  std::array<ChainNode, kChainNodes> nodes;
};

enum class GapStatus { Strict, Exempt, Violated };
std::string_view to_string(GapStatus status);

struct ChainReport {
  InterlaceChain chain;
  bool ok = false;
  /// Index i of the first failing pair (nodes[i], nodes[i + 1]).
  std::optional<int> first_failure;
  std::array<double, kChainGaps> margins{};
  std::array<GapStatus, kChainGaps> status{};
};

struct ViolationWitness {
  std::string family;
  double nu = 0.0;
  double eps = 0.0;
  int s = 1;
  std::string left_label;
  std::string right_label;
  double left_value = 0.0;
  double right_value = 0.0;
};

/// One claimed inequality left < right (or left <= right when non-strict).
struct Comparison {
  std::string family;
  double nu = 0.0;
  double eps = 0.0;
  int s = 1;
  std::string left_label;
  std::string right_label;
  double left_value = 0.0;
  double right_value = 0.0;
  GapStatus status = GapStatus::Strict;

  double gap() const { return right_value - left_value; }
  ViolationWitness witness() const;
};

/// Classify right - left for the claimed strict order left < right.
GapStatus classify(const ZeroId& left, double left_value, const ZeroId& right, double right_value);

InterlaceChain build_chain(double nu, double eps, int s);
InterlaceChain build_chain(double nu, double eps, int s, ZeroTable& table);
ChainReport check_chain(const InterlaceChain& chain);

// Each compare_* returns every comparison made; the matching check_* keeps
// only the violations.
std::vector<Comparison> compare_classical(double nu, int s_max, ZeroTable& table);
std::vector<Comparison> compare_proposition(double nu, int s_max, ZeroTable& table);
std::vector<Comparison> compare_derivative_chains(double nu, double eps, int s_max,
                                                  ZeroTable& table);

std::vector<ViolationWitness> violations(const std::vector<Comparison>& comparisons);

std::vector<ViolationWitness> check_classical(double nu, int s_max);
std::vector<ViolationWitness> check_proposition(double nu, int s_max);
std::vector<ViolationWitness> check_derivative_chains(double nu, double eps, int s_max);

/// Smallest s <= s_cap with y_{nu+eps,s} > j_{nu,s}. Requires eps > 1.
/// Throws Error{NotFoundWithinCap} when no such s exists up to s_cap.
ViolationWitness find_breaking(double nu, double eps, int s_cap = kDefaultBreakingCap);

/// Two witnesses of opposite ordering for one pair of zero families.
struct OrderingFlip {
  ViolationWitness below;  // left < right
  ViolationWitness above;  // left > right
};

struct CounterexampleResult {
  /// j'_{nu+eps,s} against y_{nu,s}.
  std::optional<OrderingFlip> jp_vs_y;
  /// y'_{nu+eps,s} against j_{nu,s}.
  std::optional<OrderingFlip> yp_vs_j;
};

/// Looks for both orderings of each family across nu_list.
/// Throws Error{OnlyOneOrdering} when neither family changes order.
CounterexampleResult counterexample_scan(double eps, const std::vector<double>& nu_list, int s);

}  // namespace bessel
