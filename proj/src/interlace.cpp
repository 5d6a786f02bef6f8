#include "bessel_interlace/interlace.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/special_eval.hpp"

namespace bessel {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

void require_rank(int s_max) { require(s_max >= 1 && s_max <= kMaxRank, "rank limit must lie in [1, 10000]"); }

struct Checker {
  ZeroTable& table;
  std::vector<Comparison>& out;
  std::string family;
  double nu;
  double eps;

  void less(int s, const ZeroId& left, const ZeroId& right) {
    Comparison c;
    c.family = family;
    c.nu = nu;
    c.eps = eps;
    c.s = s;
    c.left_label = label(left);
    c.right_label = label(right);
    c.left_value = table.record(left).value;
    c.right_value = table.record(right).value;
    c.status = classify(left, c.left_value, right, c.right_value);
    out.push_back(std::move(c));
  }

  // a_{nu,1} < b_{nu2,1} < a_{nu,2} < b_{nu2,2} < ... up to s_max pairs.
  void interleave(ZeroKind a, double nu_a, ZeroKind b, double nu_b, int s_max) {
    for (int s = 1; s <= s_max; ++s) {
      less(s, {a, nu_a, s}, {b, nu_b, s});
      less(s, {b, nu_b, s}, {a, nu_a, s + 1});
    }
  }
};

}  // namespace

double strict_tol(double right) { return std::max(1e-9, 1e-12 * std::abs(right)); }

std::string_view to_string(GapStatus status) {
  switch (status) {
    case GapStatus::Strict: return "strict";
    case GapStatus::Exempt: return "exempt";
    case GapStatus::Violated: return "violated";
  }
  return "?";
}

const ZeroRecord& ZeroTable::record(const ZeroId& id) {
  const auto key = std::make_pair(static_cast<int>(id.kind), id.nu);
  auto it = sequences_.find(key);
  if (it == sequences_.end()) it = sequences_.emplace(key, ZeroSequence(id.kind, id.nu)).first;
  return it->second.at(id.s);
}

std::string label(const ZeroId& id) {
  return std::string(to_string(id.kind)) + "(" + shortest(id.nu) + "," + std::to_string(id.s) + ")";
}

ViolationWitness Comparison::witness() const {
  return {family, nu, eps, s, left_label, right_label, left_value, right_value};
}

GapStatus classify(const ZeroId& left, double left_value, const ZeroId& right, double right_value) {
  const double gap = right_value - left_value;
  if (gap > strict_tol(right_value)) return GapStatus::Strict;
  // Only the identities J'_0 = -J_1 and Y'_0 = -Y_1 may turn "<" into "=".
  if (canonical(left) == canonical(right) && std::abs(gap) <= kEqTol) return GapStatus::Exempt;
  return GapStatus::Violated;
}

InterlaceChain build_chain(double nu, double eps, int s) {
  ZeroTable table;
  return build_chain(nu, eps, s, table);
}

InterlaceChain build_chain(double nu, double eps, int s, ZeroTable& table) {
  check_order(nu);
  require(std::isfinite(eps) && eps > 0.0, "eps must be positive");
  require(s >= 1 && s < kMaxRank, "rank must lie in [1, 9999]");
  const double nu_eps = nu + eps;
  check_order(nu_eps);

  InterlaceChain chain;
  chain.nu = nu;
  chain.eps = eps;
  chain.s = s;
  const std::array<ZeroId, kChainNodes> ids{{
      {ZeroKind::JPrime, nu, s},
      {ZeroKind::Y, nu, s},
      {ZeroKind::Y, nu_eps, s},
      {ZeroKind::YPrime, nu, s},
      {ZeroKind::J, nu, s},
      {ZeroKind::J, nu_eps, s},
      {ZeroKind::JPrime, nu, s + 1},
  }};
  for (int i = 0; i < kChainNodes; ++i) {
    chain.nodes[i] = {ids[i], label(ids[i]), table.record(ids[i]).value};
  }
  return chain;
}

ChainReport check_chain(const InterlaceChain& chain) {
  ChainReport report;
  report.chain = chain;
  report.ok = true;
  for (int i = 0; i < kChainGaps; ++i) {
    const ChainNode& l = chain.nodes[i];
    const ChainNode& r = chain.nodes[i + 1];
    report.margins[i] = r.value - l.value;
    report.status[i] = classify(l.id, l.value, r.id, r.value);
    if (report.status[i] == GapStatus::Violated && report.ok) {
      report.ok = false;
      report.first_failure = i;
    }
  }
  return report;
}

std::vector<Comparison> compare_classical(double nu, int s_max, ZeroTable& table) {
  check_order(nu);
  check_order(nu + 1.0);
  require(s_max >= 1 && s_max <= kClassicalMaxRank, "s_max must lie in [1, 100]");
  std::vector<Comparison> out;
  const double nu1 = nu + 1.0;

  Checker{table, out, "j_order_step", nu, 1.0}.interleave(ZeroKind::J, nu, ZeroKind::J, nu1, s_max);
  Checker{table, out, "y_order_step", nu, 1.0}.interleave(ZeroKind::Y, nu, ZeroKind::Y, nu1, s_max);

  // nu <= j'_{nu,1}, then j' < y < y' < j < j' (next rank) for every s.
  {
    Comparison c;
    c.family = "mixed";
    c.nu = nu;
    c.s = 1;
    c.left_label = "nu";
    c.right_label = label({ZeroKind::JPrime, nu, 1});
    c.left_value = nu;
    c.right_value = table.value(ZeroKind::JPrime, nu, 1);
    c.status = c.gap() >= -kEqTol ? (c.gap() > strict_tol(c.right_value) ? GapStatus::Strict : GapStatus::Exempt)
                                  : GapStatus::Violated;
    out.push_back(std::move(c));
  }
  Checker mixed{table, out, "mixed", nu, 0.0};
  for (int s = 1; s <= s_max; ++s) {
    mixed.less(s, {ZeroKind::JPrime, nu, s}, {ZeroKind::Y, nu, s});
    mixed.less(s, {ZeroKind::Y, nu, s}, {ZeroKind::YPrime, nu, s});
    mixed.less(s, {ZeroKind::YPrime, nu, s}, {ZeroKind::J, nu, s});
    mixed.less(s, {ZeroKind::J, nu, s}, {ZeroKind::JPrime, nu, s + 1});
  }

  Checker{table, out, "jp_order_step", nu, 1.0}.interleave(ZeroKind::JPrime, nu, ZeroKind::JPrime, nu1, s_max);
  Checker{table, out, "yp_order_step", nu, 1.0}.interleave(ZeroKind::YPrime, nu, ZeroKind::YPrime, nu1, s_max);
  return out;
}

std::vector<Comparison> compare_proposition(double nu, int s_max, ZeroTable& table) {
  check_order(nu);
  check_order(nu + 1.0);
  require_rank(s_max);
  std::vector<Comparison> out;
  const double nu1 = nu + 1.0;
  Checker j{table, out, "j_vs_jp", nu, 1.0};
  Checker y{table, out, "y_vs_yp", nu, 1.0};
  for (int s = 1; s <= s_max; ++s) {
    j.less(s, {ZeroKind::J, nu1, s}, {ZeroKind::JPrime, nu, s + 1});
    y.less(s, {ZeroKind::Y, nu1, s}, {ZeroKind::YPrime, nu, s});
  }
  return out;
}

std::vector<Comparison> compare_derivative_chains(double nu, double eps, int s_max, ZeroTable& table) {
  check_order(nu);
  require(std::isfinite(eps) && eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  check_order(nu + eps);
  require_rank(s_max);
  std::vector<Comparison> out;
  const double nu_eps = nu + eps;
  Checker{table, out, "jp_eps_step", nu, eps}.interleave(ZeroKind::JPrime, nu, ZeroKind::JPrime, nu_eps, s_max);
  Checker{table, out, "yp_eps_step", nu, eps}.interleave(ZeroKind::YPrime, nu, ZeroKind::YPrime, nu_eps, s_max);
  return out;
}

std::vector<ViolationWitness> violations(const std::vector<Comparison>& comparisons) {
  std::vector<ViolationWitness> out;
  for (const Comparison& c : comparisons) {
    if (c.status == GapStatus::Violated) out.push_back(c.witness());
  }
  return out;
}

std::vector<ViolationWitness> check_classical(double nu, int s_max) {
  ZeroTable table;
  return violations(compare_classical(nu, s_max, table));
}

std::vector<ViolationWitness> check_proposition(double nu, int s_max) {
  ZeroTable table;
  return violations(compare_proposition(nu, s_max, table));
}

std::vector<ViolationWitness> check_derivative_chains(double nu, double eps, int s_max) {
  ZeroTable table;
  return violations(compare_derivative_chains(nu, eps, s_max, table));
}

ViolationWitness find_breaking(double nu, double eps, int s_cap) {
  check_order(nu);
  require(std::isfinite(eps) && eps > 1.0, "breaking search needs eps > 1");
  check_order(nu + eps);
  require_rank(s_cap);
  ZeroSequence y(ZeroKind::Y, nu + eps);
  ZeroSequence j(ZeroKind::J, nu);
  for (int s = 1; s <= s_cap; ++s) {
    const ZeroRecord& ry = y.at(s);
    const ZeroRecord& rj = j.at(s);
    if (ry.value > rj.value) {
      return {"breaking", nu, eps, s, label(ry.id), label(rj.id), ry.value, rj.value};
    }
  }
  throw Error(ErrorCode::NotFoundWithinCap,
              "y(nu+eps,s) stays below j(nu,s) for every s <= " + std::to_string(s_cap) +
                  "; raise the rank cap");
}

CounterexampleResult counterexample_scan(double eps, const std::vector<double>& nu_list, int s) {
  require(std::isfinite(eps) && eps > 0.0 && eps <= 1.0, "eps must lie in (0, 1]");
  require(!nu_list.empty(), "order list must not be empty");
  require(s >= 1 && s <= kMaxRank, "rank must lie in [1, 10000]");

  struct Family {
    std::string name;
    ZeroKind left_kind;
    ZeroKind right_kind;
    std::optional<ViolationWitness> below;
    std::optional<ViolationWitness> above;
  };
  std::array<Family, 2> families{{
      {"jp_vs_y", ZeroKind::JPrime, ZeroKind::Y, {}, {}},
      {"yp_vs_j", ZeroKind::YPrime, ZeroKind::J, {}, {}},
  }};

  ZeroTable table;
  for (const double nu : nu_list) {
    check_order(nu);
    check_order(nu + eps);
    for (Family& f : families) {
      const ZeroId left{f.left_kind, nu + eps, s};
      const ZeroId right{f.right_kind, nu, s};
      const double lv = table.record(left).value;
      const double rv = table.record(right).value;
      const ViolationWitness w{f.name, nu, eps, s, label(left), label(right), lv, rv};
      if (rv - lv > strict_tol(rv)) {
        if (!f.below) f.below = w;
      } else if (lv - rv > strict_tol(lv)) {
        if (!f.above) f.above = w;
      }
    }
  }

  CounterexampleResult result;
  if (families[0].below && families[0].above) result.jp_vs_y = OrderingFlip{*families[0].below, *families[0].above};
  if (families[1].below && families[1].above) result.yp_vs_j = OrderingFlip{*families[1].below, *families[1].above};
  if (!result.jp_vs_y && !result.yp_vs_j) {
    throw Error(ErrorCode::OnlyOneOrdering,
                "each family keeps one ordering across the given orders; widen the order list");
  }
  return result;
}

}  // namespace bessel
