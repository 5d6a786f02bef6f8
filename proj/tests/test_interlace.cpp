#include <doctest.h>

#include <cmath>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/interlace.hpp"
#include "bessel_interlace/zero_finder.hpp"

using namespace bessel;

namespace {

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

bool strictly_increasing(const InterlaceChain& c) {
  for (int i = 0; i + 1 < kChainNodes; ++i) {
    if (!(c.nodes[i].value < c.nodes[i + 1].value)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("chain at nu = 0, eps = 1 has the two forced equalities") {
  const InterlaceChain c = build_chain(0, 1, 1);
  const double expected[kChainNodes] = {0,
                                        0.893576966279167,
                                        2.197141326031017,
                                        2.197141326031017,
                                        2.404825557695773,
                                        3.831705970207512,
                                        3.831705970207512};
  for (int i = 0; i < kChainNodes; ++i) CHECK(std::abs(c.nodes[i].value - expected[i]) <= 1e-12);
  CHECK(c.nodes[2].label == "y(1,1)");
  CHECK(c.nodes[3].label == "yp(0,1)");
  CHECK(c.nodes[6].label == "jp(0,2)");

  const ChainReport r = check_chain(c);
  CHECK(r.ok);
  CHECK_FALSE(r.first_failure.has_value());
  CHECK(r.status[2] == GapStatus::Exempt);
  CHECK(r.status[5] == GapStatus::Exempt);
  for (const int i : {0, 1, 3, 4}) CHECK(r.status[i] == GapStatus::Strict);
}

TEST_CASE("strict chains") {
  CHECK(strictly_increasing(build_chain(0.5, 0.5, 1)));
  CHECK(check_chain(build_chain(0.5, 0.5, 1)).ok);
  CHECK(strictly_increasing(build_chain(1, 1, 3)));
}

TEST_CASE("eps = 2 breaks the chain at y(nu+eps) vs y'(nu)") {
  const ChainReport r = check_chain(build_chain(0, 2, 1));
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == 2);
  CHECK(std::abs(r.chain.nodes[2].value - 3.384241767149593) <= 1e-12);
  CHECK(r.margins[2] < 0.0);
}

TEST_CASE("equality exemption applies only to identical zeros") {
  // Same canonical id: exempt.
  CHECK(classify({ZeroKind::Y, 1, 2}, 5.0, {ZeroKind::YPrime, 0, 2}, 5.0) == GapStatus::Exempt);
  // A genuine tie between different zeros is a violation.
  CHECK(classify({ZeroKind::Y, 1, 2}, 5.0, {ZeroKind::J, 0, 2}, 5.0) == GapStatus::Violated);
  // Identical ids but a gap larger than the equality tolerance.
  CHECK(classify({ZeroKind::J, 1, 1}, 3.0, {ZeroKind::JPrime, 0, 2}, 3.0 - 1e-9) == GapStatus::Violated);
  CHECK(classify({ZeroKind::J, 1, 1}, 3.0, {ZeroKind::JPrime, 0, 2}, 3.1) == GapStatus::Strict);
  CHECK(strict_tol(1.0) == 1e-9);
  CHECK(strict_tol(1e4) == 1e-8);
}

TEST_CASE("classical chains") {
  CHECK(check_classical(0.5, 20).empty());
  CHECK(check_classical(0, 20).empty());
  CHECK(check_classical(7.3, 10).empty());
  CHECK(code_of([] { check_classical(1, 101); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { check_classical(599.5, 1); }) == ErrorCode::OverflowNu);
}

TEST_CASE("classical chains at nu = 0 need no exemption beyond nu <= j'") {
  ZeroTable t;
  int exempt = 0;
  for (const auto& c : compare_classical(0, 20, t)) {
    if (c.status == GapStatus::Exempt) {
      ++exempt;
      CHECK(c.left_label == "nu");
    }
  }
  CHECK(exempt == 1);
}

TEST_CASE("proposition pairs") {
  CHECK(check_proposition(1, 20).empty());
  CHECK(check_proposition(3.5, 10).empty());
  ZeroTable t;
  const auto at_zero = compare_proposition(0, 20, t);
  CHECK(violations(at_zero).empty());
  // Both families are exact equalities at nu = 0.
  for (const auto& c : at_zero) CHECK(c.status == GapStatus::Exempt);
  CHECK(at_zero.size() == 40);
}

TEST_CASE("derivative chains") {
  ZeroTable t;
  const auto cmp = compare_derivative_chains(0, 1, 3, t);
  CHECK(violations(cmp).empty());
  // 0 < j'_{1,1} < j'_{0,2} < j'_{1,2}
  CHECK(cmp[0].left_value == 0.0);
  CHECK(std::abs(cmp[0].right_value - 1.841183781340659) <= 1e-12);
  CHECK(std::abs(cmp[1].right_value - 3.831705970207512) <= 1e-12);
  CHECK(std::abs(cmp[2].right_value - 5.331442773525033) <= 1e-12);
  CHECK(check_derivative_chains(2, 0.5, 10).empty());
  CHECK(check_derivative_chains(0.1, 1, 10).empty());
  CHECK(code_of([] { check_derivative_chains(1, 1.5, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { check_derivative_chains(1, 0, 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("breaking witnesses") {
  const ViolationWitness w = find_breaking(0, 2, 10);
  CHECK(w.s == 1);
  CHECK(std::abs(w.left_value - 3.384241767149593) <= 1e-12);
  CHECK(std::abs(w.right_value - 2.404825557695773) <= 1e-12);
  CHECK(std::abs((w.left_value - w.right_value) - 0.979416) <= 1e-6);

  const ViolationWitness w10 = find_breaking(10, 1.25, 500);
  CHECK(w10.s == 7);
  CHECK(w10.left_value > w10.right_value);

  const ViolationWitness close = find_breaking(0, 1.01, 10000);
  CHECK(close.s == 11);

  CHECK(code_of([] { find_breaking(0, 1.01, 5); }) == ErrorCode::NotFoundWithinCap);
  CHECK(code_of([] { find_breaking(0, 1.0, 10); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("breaking rank is the smallest one") {
  for (const double nu : {0.0, 3.0, 10.0}) {
    for (const double eps : {1.25, 1.5}) {
      const ViolationWitness w = find_breaking(nu, eps);
      for (int s = 1; s < w.s; ++s) {
        CHECK(zero({ZeroKind::Y, nu + eps, s}).value <= zero({ZeroKind::J, nu, s}).value);
      }
    }
  }
}

TEST_CASE("counterexample scan") {
  // Both families keep one ordering over {0.5, 5} for eps = 0.1.
  CHECK(code_of([] { counterexample_scan(0.1, {0.5, 5}, 1); }) == ErrorCode::OnlyOneOrdering);
  CHECK(code_of([] { counterexample_scan(0.1, {0.5}, 1); }) == ErrorCode::OnlyOneOrdering);

  const CounterexampleResult r = counterexample_scan(1, {0, 599}, 1);
  REQUIRE(r.jp_vs_y.has_value());
  CHECK(r.jp_vs_y->above.nu == 0.0);
  CHECK(r.jp_vs_y->above.left_value > r.jp_vs_y->above.right_value);
  CHECK(r.jp_vs_y->below.nu == 599.0);
  CHECK(r.jp_vs_y->below.left_value < r.jp_vs_y->below.right_value);
  CHECK_FALSE(r.yp_vs_j.has_value());

  const CounterexampleResult q = counterexample_scan(0.25, {0, 599}, 1);
  CHECK(q.yp_vs_j.has_value());

  CHECK(code_of([] { counterexample_scan(1, {0, 600}, 1); }) == ErrorCode::OverflowNu);
  CHECK(code_of([] { counterexample_scan(1.5, {0, 1}, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { counterexample_scan(0.5, {}, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("chain nodes equal zero-finder records bit for bit") {
  ZeroTable t;
  for (const double nu : {0.0, 2.25}) {
    for (const int s : {1, 4}) {
      const InterlaceChain c = build_chain(nu, 0.75, s, t);
      for (const auto& n : c.nodes) CHECK(n.value == zero(n.id).value);
    }
  }
}

TEST_CASE("build_chain preconditions") {
  CHECK(code_of([] { build_chain(1, 0, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_chain(1, 0.5, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_chain(599.9, 0.5, 1); }) == ErrorCode::OverflowNu);
  CHECK(code_of([] { build_chain(-1, 0.5, 1); }) == ErrorCode::DomainNu);
}
