#include "bessel_interlace/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/interlace.hpp"
#include "bessel_interlace/parallel.hpp"
#include "bessel_interlace/report.hpp"
#include "bessel_interlace/special_eval.hpp"
#include "bessel_interlace/wronskian.hpp"
#include "bessel_interlace/zero_finder.hpp"

namespace bessel {

namespace {

using report::Json;
using report::number;

// A bad flag value; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct Common {
  std::string format;  // empty: the command's default
  std::string output;
  int threads = 0;
};

struct Grid {
  std::string text;
  std::vector<double> values;
};

std::string flag_message(const std::string& flag, const std::string& what) { return flag + ": " + what; }

void check_order_flag(const std::string& flag, double nu) {
  try {
    check_order(nu);
  } catch (const Error& e) {
    throw UsageError(flag_message(flag, e.what()));
  }
}

void check_rank_flag(const std::string& flag, int s, int hi) {
  if (s < 1 || s > hi) throw UsageError(flag_message(flag, "must lie in [1, " + std::to_string(hi) + "]"));
}

double parse_double(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw UsageError(flag_message(flag, "'" + text + "' is not a finite number"));
  }
  return v;
}

// lo:hi:step, both endpoints included within half a step.
Grid parse_grid(const std::string& flag, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError(flag_message(flag, "expected lo:hi:step, got '" + text + "'"));
  const double lo = parse_double(flag, parts[0]);
  const double hi = parse_double(flag, parts[1]);
  const double step = parse_double(flag, parts[2]);
  if (!(step > 0.0)) throw UsageError(flag_message(flag, "step must be positive"));
  if (hi < lo) throw UsageError(flag_message(flag, "hi must not be below lo"));
  const double count = std::floor((hi - lo) / step + 0.5);
  if (count > 1e6) throw UsageError(flag_message(flag, "grid has too many points"));
  Grid g{text, {}};
  for (int k = 0; k <= static_cast<int>(count); ++k) g.values.push_back(lo + k * step);
  return g;
}

std::vector<double> parse_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ',');) out.push_back(parse_double(flag, p));
  if (out.empty()) throw UsageError(flag_message(flag, "list must not be empty"));
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json witness_json(const ViolationWitness& w) {
  Json j = Json::object();
  j.set("family", w.family)
      .set("nu", w.nu)
      .set("eps", w.eps)
      .set("s", w.s)
      .set("left", w.left_label)
      .set("right", w.right_label)
      .set("left_value", w.left_value)
      .set("right_value", w.right_value);
  return j;
}

// ---------------------------------------------------------------- zeros

struct ZerosArgs {
  std::string kind;
  double nu = 0.0;
  int smax = 10;
};

int cmd_zeros(const ZerosArgs& a, Format fmt, std::ostream& out) {
  const auto kind = parse_zero_kind(a.kind);
  if (!kind) throw UsageError("--kind: must be one of j, y, jp, yp");
  check_order_flag("--nu", a.nu);
  check_rank_flag("--smax", a.smax, kMaxRank);
  const auto rows = zeros_upto(*kind, a.nu, a.smax);

  if (fmt == Format::Csv) {
    report::csv_row(out, {"kind", "nu", "s", "value", "bracket_lo", "bracket_hi", "residual"});
    for (const auto& r : rows) {
      report::csv_row(out, {a.kind, number(a.nu), std::to_string(r.id.s), number(r.value), number(r.bracket.lo),
                            number(r.bracket.hi), number(r.residual)});
    }
    return 0;
  }
  Json list = Json::array();
  for (const auto& r : rows) {
    Json row = Json::object();
    row.set("kind", a.kind)
        .set("nu", a.nu)
        .set("s", r.id.s)
        .set("value", r.value)
        .set("bracket_lo", r.bracket.lo)
        .set("bracket_hi", r.bracket.hi)
        .set("residual", r.residual);
    list.push(std::move(row));
  }
  Json doc = Json::object();
  doc.set("command", "zeros").set("kind", a.kind).set("nu", a.nu).set("smax", a.smax).set("rows", std::move(list));
  doc.write(out);
  return 0;
}

// ---------------------------------------------------------------- chain

struct ChainArgs {
  double nu = 0.0;
  double eps = 0.0;
  int smax = 20;
};

constexpr const char* kNodeColumns[kChainNodes] = {"jp_nu_s", "y_nu_s", "y_nueps_s", "yp_nu_s",
                                                   "j_nu_s",  "j_nueps_s", "jp_nu_s1"};

void check_pair_orders(double nu, double eps, const std::string& eps_flag) {
  check_order_flag("--nu", nu);
  if (!(eps > 0.0)) throw UsageError(flag_message(eps_flag, "must be positive"));
  if (nu + eps > kNuMax) throw UsageError(flag_message(eps_flag, "nu + eps must not exceed 600"));
}

std::string failure_text(const ChainReport& r) {
  if (!r.first_failure) return "";
  const int i = *r.first_failure;
  return r.chain.nodes[i].label + "<" + r.chain.nodes[i + 1].label;
}

int cmd_chain(const ChainArgs& a, Format fmt, std::ostream& out) {
  check_pair_orders(a.nu, a.eps, "--eps");
  check_rank_flag("--smax", a.smax, kMaxRank - 1);

  ZeroTable table;
  std::vector<ChainReport> reports;
  bool all_ok = true;
  for (int s = 1; s <= a.smax; ++s) {
    reports.push_back(check_chain(build_chain(a.nu, a.eps, s, table)));
    all_ok = all_ok && reports.back().ok;
  }

  if (fmt == Format::Csv) {
    std::vector<std::string> header{"nu", "eps", "s"};
    for (const char* c : kNodeColumns) header.emplace_back(c);
    for (int i = 1; i <= kChainGaps; ++i) header.push_back("gap_" + std::to_string(i));
    header.emplace_back("ok");
    header.emplace_back("first_failure");
    report::csv_row(out, header);
    for (const auto& r : reports) {
      std::vector<std::string> row{number(a.nu), number(a.eps), std::to_string(r.chain.s)};
      for (const auto& n : r.chain.nodes) row.push_back(number(n.value));
      for (const double g : r.margins) row.push_back(number(g));
      row.push_back(bool_text(r.ok));
      row.push_back(failure_text(r));
      report::csv_row(out, row);
    }
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) {
      Json row = Json::object();
      row.set("s", r.chain.s);
      Json nodes = Json::object();
      for (int i = 0; i < kChainNodes; ++i) nodes.set(kNodeColumns[i], r.chain.nodes[i].value);
      row.set("nodes", std::move(nodes));
      Json gaps = Json::array();
      Json status = Json::array();
      for (int i = 0; i < kChainGaps; ++i) {
        gaps.push(r.margins[i]);
        status.push(to_string(r.status[i]));
      }
      row.set("gaps", std::move(gaps)).set("status", std::move(status)).set("ok", r.ok);
      row.set("first_failure", r.first_failure ? Json(failure_text(r)) : Json(nullptr));
      rows.push(std::move(row));
    }
    Json doc = Json::object();
    doc.set("command", "chain")
        .set("nu", a.nu)
        .set("eps", a.eps)
        .set("smax", a.smax)
        .set("ok", all_ok)
        .set("rows", std::move(rows));
    doc.write(out);
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::string nu_grid = "0:10:0.25";
  std::string eps_grid = "0.25:1:0.25";
  int smax = 20;
};

// Suite names in emission order. "theorem1"/"theorem2" are the documented
// command-line names of the classical and unified chains.
const std::vector<std::string> kSuites{"theorem1", "proposition", "derivative-chains", "theorem2"};

struct Unit {
  std::string suite;
  double nu = 0.0;
  double eps = 0.0;
};

struct UnitResult {
  Unit unit;
  std::vector<Comparison> comparisons;
};

std::vector<Comparison> unified_comparisons(double nu, double eps, int smax, ZeroTable& table) {
  std::vector<Comparison> out;
  for (int s = 1; s <= smax; ++s) {
    const ChainReport r = check_chain(build_chain(nu, eps, s, table));
    for (int i = 0; i < kChainGaps; ++i) {
      const ChainNode& l = r.chain.nodes[i];
      const ChainNode& rr = r.chain.nodes[i + 1];
      out.push_back({"unified", nu, eps, s, l.label, rr.label, l.value, rr.value, r.status[i]});
    }
  }
  return out;
}

UnitResult run_unit(const Unit& u, int smax) {
  ZeroTable table;
  UnitResult r{u, {}};
  if (u.suite == "theorem1") {
    r.comparisons = compare_classical(u.nu, smax, table);
  } else if (u.suite == "proposition") {
    r.comparisons = compare_proposition(u.nu, smax, table);
  } else if (u.suite == "derivative-chains") {
    r.comparisons = compare_derivative_chains(u.nu, u.eps, smax, table);
  } else {
    r.comparisons = unified_comparisons(u.nu, u.eps, smax, table);
  }
  return r;
}

Json comparison_json(const std::string& suite, const Comparison& c) {
  Json j = Json::object();
  j.set("suite", suite)
      .set("family", c.family)
      .set("nu", c.nu)
      .set("eps", c.eps)
      .set("s", c.s)
      .set("left", c.left_label)
      .set("right", c.right_label)
      .set("left_value", c.left_value)
      .set("right_value", c.right_value)
      .set("gap", c.gap());
  return j;
}

int cmd_verify(const VerifyArgs& a, Format fmt, int threads, std::ostream& out) {
  const bool all = a.suite == "all";
  if (!all && std::find(kSuites.begin(), kSuites.end(), a.suite) == kSuites.end()) {
    throw UsageError("--suite: must be one of theorem1, proposition, derivative-chains, theorem2, all");
  }
  const Grid nus = parse_grid("--nu-grid", a.nu_grid);
  const Grid epss = parse_grid("--eps-grid", a.eps_grid);
  const bool needs_eps = all || a.suite == "derivative-chains" || a.suite == "theorem2";
  const bool needs_shift = all || a.suite == "theorem1" || a.suite == "proposition";
  check_rank_flag("--smax", a.smax, (all || a.suite == "theorem1") ? kClassicalMaxRank : kMaxRank - 1);
  for (const double nu : nus.values) {
    check_order_flag("--nu-grid", nu);
    if (needs_shift && nu + 1.0 > kNuMax) throw UsageError("--nu-grid: nu + 1 must not exceed 600");
  }
  if (needs_eps) {
    for (const double eps : epss.values) {
      if (!(eps > 0.0 && eps <= 1.0)) throw UsageError("--eps-grid: values must lie in (0, 1]");
      for (const double nu : nus.values) {
        if (nu + eps > kNuMax) throw UsageError("--eps-grid: nu + eps must not exceed 600");
      }
    }
  }

  std::vector<Unit> units;
  for (const auto& suite : kSuites) {
    if (!all && suite != a.suite) continue;
    const bool per_eps = suite == "derivative-chains" || suite == "theorem2";
    for (const double nu : nus.values) {
      if (per_eps) {
        for (const double eps : epss.values) units.push_back({suite, nu, eps});
      } else {
        units.push_back({suite, nu, suite == "theorem1" ? 0.0 : 1.0});
      }
    }
  }
  const auto results =
      parallel_map(units.size(), threads, [&](std::size_t i) { return run_unit(units[i], a.smax); });

  std::size_t checked = 0;
  std::optional<double> min_gap;
  std::vector<std::pair<std::string, const Comparison*>> exempt;
  std::vector<std::pair<std::string, const Comparison*>> violated;
  for (const auto& r : results) {
    for (const auto& c : r.comparisons) {
      ++checked;
      if (c.status == GapStatus::Strict) {
        if (!min_gap || c.gap() < *min_gap) min_gap = c.gap();
      } else if (c.status == GapStatus::Exempt) {
        exempt.emplace_back(r.unit.suite, &c);
      } else {
        violated.emplace_back(r.unit.suite, &c);
      }
    }
  }

  if (fmt == Format::Csv) {
    report::csv_row(out, {"suite", "family", "nu", "eps", "s", "left", "right", "left_value", "right_value", "gap",
                          "status"});
    for (const auto* list : {&exempt, &violated}) {
      for (const auto& [suite, c] : *list) {
        report::csv_row(out, {suite, c->family, number(c->nu), number(c->eps), std::to_string(c->s), c->left_label,
                              c->right_label, number(c->left_value), number(c->right_value), number(c->gap()),
                              std::string(to_string(c->status))});
      }
    }
  } else {
    Json grid = Json::object();
    grid.set("nu", nus.text).set("eps", needs_eps ? Json(epss.text) : Json(nullptr)).set("smax", a.smax);
    Json ex = Json::array();
    for (const auto& [suite, c] : exempt) ex.push(comparison_json(suite, *c));
    Json vi = Json::array();
    for (const auto& [suite, c] : violated) vi.push(comparison_json(suite, *c));
    Json doc = Json::object();
    doc.set("command", "verify")
        .set("suite", a.suite)
        .set("grid", std::move(grid))
        .set("comparisons", checked)
        .set("min_strict_gap", min_gap ? Json(*min_gap) : Json(nullptr))
        .set("exemptions", std::move(ex))
        .set("violations", std::move(vi));
    doc.write(out);
  }
  return violated.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- break

struct BreakArgs {
  double nu = 0.0;
  double eps = 0.0;
  int scap = kDefaultBreakingCap;
};

int cmd_break(const BreakArgs& a, Format fmt, std::ostream& out, std::ostream& err) {
  check_order_flag("--nu", a.nu);
  if (!(a.eps > 1.0)) throw UsageError("--eps: the breaking search needs eps > 1 (interlacing holds for eps <= 1)");
  if (a.nu + a.eps > kNuMax) throw UsageError("--eps: nu + eps must not exceed 600");
  check_rank_flag("--scap", a.scap, kMaxRank);

  ViolationWitness w;
  try {
    w = find_breaking(a.nu, a.eps, a.scap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFoundWithinCap) throw;
    err << "NOT_FOUND_WITHIN_CAP: " << e.what() << '\n';
    return 1;
  }
  if (fmt == Format::Csv) {
    report::csv_row(out, {"nu", "eps", "s", "y_label", "j_label", "y_value", "j_value", "gap"});
    report::csv_row(out, {number(w.nu), number(w.eps), std::to_string(w.s), w.left_label, w.right_label,
                          number(w.left_value), number(w.right_value), number(w.left_value - w.right_value)});
  } else {
    Json doc = Json::object();
    doc.set("command", "break")
        .set("nu", w.nu)
        .set("eps", w.eps)
        .set("s", w.s)
        .set("y_label", w.left_label)
        .set("j_label", w.right_label)
        .set("y_value", w.left_value)
        .set("j_value", w.right_value)
        .set("gap", w.left_value - w.right_value);
    doc.write(out);
  }
  return 0;
}

// ---------------------------------------------------------------- wronskian

struct WronskianArgs {
  double nu = 0.0;
  double mu = 0.0;
  int smax = 10;
  double xmax = kDefaultWronskianXMax;
};

int cmd_wronskian(const WronskianArgs& a, Format fmt, std::ostream& out) {
  check_order_flag("--nu", a.nu);
  check_order_flag("--mu", a.mu);
  if (a.nu == a.mu) throw UsageError("--mu: must differ from --nu");
  check_rank_flag("--smax", a.smax, kMaxRank);
  if (!(a.xmax > 0.0) || !std::isfinite(a.xmax)) throw UsageError("--xmax: must be positive and finite");

  const WronskianProfile p = profile_extrema(a.nu, a.mu, a.smax);
  const std::optional<double> z = has_positive_zero(a.nu, a.mu, a.xmax);
  auto source = [](ExtremumSource s) { return s == ExtremumSource::JZero ? "j" : "y"; };

  if (fmt == Format::Csv) {
    report::csv_row(out, {"x", "w", "source", "s"});
    for (const auto& smp : p.samples) {
      report::csv_row(out, {number(smp.x), number(smp.w), source(smp.source), std::to_string(smp.s)});
    }
    out << '\n';
    report::csv_row(out, {"nu", "mu", "all_same_sign", "min_abs", "first_zero"});
    report::csv_row(out, {number(a.nu), number(a.mu), bool_text(p.all_same_sign), number(p.min_abs),
                          z ? number(*z) : std::string()});
    return 0;
  }
  Json samples = Json::array();
  for (const auto& smp : p.samples) {
    Json j = Json::object();
    j.set("x", smp.x).set("w", smp.w).set("source", source(smp.source)).set("s", smp.s);
    samples.push(std::move(j));
  }
  Json doc = Json::object();
  doc.set("command", "wronskian")
      .set("nu", a.nu)
      .set("mu", a.mu)
      .set("smax", a.smax)
      .set("xmax", a.xmax)
      .set("samples", std::move(samples))
      .set("all_same_sign", p.all_same_sign)
      .set("min_abs", p.min_abs)
      .set("first_zero", z ? Json(*z) : Json(nullptr));
  doc.write(out);
  return 0;
}

// ---------------------------------------------------------------- counterexample

struct CounterexampleArgs {
  double eps = 0.0;
  std::string nu_list;
  int s = 1;
};

int cmd_counterexample(const CounterexampleArgs& a, Format fmt, std::ostream& out, std::ostream& err) {
  if (!(a.eps > 0.0 && a.eps <= 1.0)) throw UsageError("--eps: must lie in (0, 1]");
  const std::vector<double> nus = parse_list("--nu-list", a.nu_list);
  for (const double nu : nus) {
    check_order_flag("--nu-list", nu);
    if (nu + a.eps > kNuMax) throw UsageError("--nu-list: nu + eps must not exceed 600");
  }
  check_rank_flag("--s", a.s, kMaxRank);

  CounterexampleResult r;
  try {
    r = counterexample_scan(a.eps, nus, a.s);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OnlyOneOrdering) throw;
    err << "ONLY_ONE_ORDERING: " << e.what() << '\n';
    return 1;
  }

  const std::vector<std::pair<std::string, const std::optional<OrderingFlip>*>> families{
      {"jp_vs_y", &r.jp_vs_y}, {"yp_vs_j", &r.yp_vs_j}};
  if (fmt == Format::Csv) {
    report::csv_row(out, {"family", "ordering", "nu", "eps", "s", "left", "right", "left_value", "right_value"});
    for (const auto& [name, flip] : families) {
      if (!*flip) continue;
      for (const auto& [ordering, w] : {std::pair{"below", &(*flip)->below}, std::pair{"above", &(*flip)->above}}) {
        report::csv_row(out, {name, ordering, number(w->nu), number(w->eps), std::to_string(w->s), w->left_label,
                              w->right_label, number(w->left_value), number(w->right_value)});
      }
    }
    return 0;
  }
  Json doc = Json::object();
  Json list = Json::array();
  for (const double nu : nus) list.push(nu);
  doc.set("command", "counterexample").set("eps", a.eps).set("s", a.s).set("nu_list", std::move(list));
  for (const auto& [name, flip] : families) {
    if (!*flip) {
      doc.set(name, nullptr);
      continue;
    }
    Json f = Json::object();
    f.set("below", witness_json((*flip)->below)).set("above", witness_json((*flip)->above));
    doc.set(name, std::move(f));
  }
  doc.write(out);
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DomainNu:
    case ErrorCode::DomainX:
    case ErrorCode::OverflowNu:
    case ErrorCode::InvalidArgument:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of real-order Bessel functions and checks of their interlacing", "bessel-interlace"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", common.output, "Write output to this file instead of standard output");
  app.add_option("--threads", common.threads, "Worker threads (default: BESSEL_INTERLACE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  ZerosArgs zeros;
  auto* sc_zeros = app.add_subcommand("zeros", "Table of the first zeros of one kind");
  sc_zeros->add_option("--kind", zeros.kind, "j, y, jp or yp")->required();
  sc_zeros->add_option("--nu", zeros.nu, "Order")->required();
  sc_zeros->add_option("--smax", zeros.smax, "Number of zeros")->capture_default_str();

  ChainArgs chain;
  auto* sc_chain = app.add_subcommand("chain", "Check the seven-node interlacing chain for s = 1..smax");
  sc_chain->add_option("--nu", chain.nu, "Order")->required();
  sc_chain->add_option("--eps", chain.eps, "Order increment")->required();
  sc_chain->add_option("--smax", chain.smax, "Largest rank")->capture_default_str();

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify", "Run interlacing sweeps over a grid of orders");
  sc_verify->add_option("--suite", verify.suite, "theorem1, proposition, derivative-chains, theorem2 or all")
      ->capture_default_str();
  sc_verify->add_option("--nu-grid", verify.nu_grid, "Orders as lo:hi:step")->capture_default_str();
  sc_verify->add_option("--eps-grid", verify.eps_grid, "Increments as lo:hi:step")->capture_default_str();
  sc_verify->add_option("--smax", verify.smax, "Largest rank")->capture_default_str();

  BreakArgs brk;
  auto* sc_break = app.add_subcommand("break", "Smallest rank where y(nu+eps,s) exceeds j(nu,s), eps > 1");
  sc_break->add_option("--nu", brk.nu, "Order")->required();
  sc_break->add_option("--eps", brk.eps, "Order increment")->required();
  sc_break->add_option("--scap", brk.scap, "Rank cap")->capture_default_str();

  WronskianArgs wr;
  auto* sc_wr = app.add_subcommand("wronskian", "Cross-order Wronskian at its stationary points");
  sc_wr->add_option("--nu", wr.nu, "Order of J")->required();
  sc_wr->add_option("--mu", wr.mu, "Order of Y")->required();
  sc_wr->add_option("--smax", wr.smax, "Zeros per family")->capture_default_str();
  sc_wr->add_option("--xmax", wr.xmax, "Search limit for a zero of W")->capture_default_str();

  CounterexampleArgs ce;
  auto* sc_ce = app.add_subcommand("counterexample", "Look for both orderings of j'(nu+eps,s)/y(nu,s) and y'(nu+eps,s)/j(nu,s)");
  sc_ce->add_option("--eps", ce.eps, "Order increment")->required();
  sc_ce->add_option("--nu-list", ce.nu_list, "Comma-separated orders")->required();
  sc_ce->add_option("--s", ce.s, "Rank")->capture_default_str();

  std::vector<std::string> argv_store{"bessel-interlace"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // verify defaults to its JSON summary, every other command to CSV.
  const Format fmt = common.format == "json" ? Format::Json : Format::Csv;
  const int threads = common.threads > 0 ? common.threads : default_thread_count();
  std::ostringstream buffer;
  int code = 0;
  try {
    if (sc_zeros->parsed()) {
      code = cmd_zeros(zeros, fmt, buffer);
    } else if (sc_chain->parsed()) {
      code = cmd_chain(chain, fmt, buffer);
    } else if (sc_verify->parsed()) {
      code = cmd_verify(verify, common.format == "csv" ? Format::Csv : Format::Json, threads, buffer);
    } else if (sc_break->parsed()) {
      code = cmd_break(brk, fmt, buffer, err);
    } else if (sc_wr->parsed()) {
      code = cmd_wronskian(wr, fmt, buffer);
    } else if (sc_ce->parsed()) {
      code = cmd_counterexample(ce, fmt, buffer, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (common.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common.output, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: --output: cannot write '" << common.output << "'\n";
      return 2;
    }
  }
  return code;
}

}  // namespace bessel
