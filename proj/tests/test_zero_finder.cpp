#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bessel_interlace/error.hpp"
#include "bessel_interlace/special_eval.hpp"
#include "bessel_interlace/zero_finder.hpp"
#include "oracle/fixtures.hpp"
#include "oracle/oracle.hpp"

using namespace bessel;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr ZeroKind kKinds[] = {ZeroKind::J, ZeroKind::Y, ZeroKind::JPrime, ZeroKind::YPrime};

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (const ZeroKind k : kKinds) CHECK(parse_zero_kind(to_string(k)) == k);
  CHECK_FALSE(parse_zero_kind("J").has_value());
  CHECK_FALSE(parse_zero_kind("").has_value());
}

TEST_CASE("mpmath reference zeros") {
  double worst = 0.0;
  for (const auto& f : oracle::kZeroFixtures) {
    const ZeroId id{static_cast<ZeroKind>(f.kind), f.nu, f.s};
    CAPTURE(f.kind);
    CAPTURE(f.nu);
    CAPTURE(f.s);
    const double got = zero(id).value;
    CHECK(std::abs(got - f.value) <= 1e-12 * std::max(1.0, f.value));
    worst = std::max(worst, std::abs(got - f.value) / std::max(1.0, f.value));
  }
  MESSAGE("worst relative zero error " << worst);
}

TEST_CASE("initial_bracket examples") {
  const Bracket b1 = initial_bracket({ZeroKind::J, 0, 1});
  CHECK(b1.lo < 2.404825557695773);
  CHECK(2.404825557695773 < b1.hi);
  CHECK(b1.width() <= kPi);
  CHECK(initial_bracket({ZeroKind::Y, 0.5, 1}).contains(kPi / 2));
  CHECK(initial_bracket({ZeroKind::JPrime, 0, 2}).contains(3.831705970207512));
}

TEST_CASE("brackets certify a sign change and contain the refined value") {
  for (const ZeroKind k : kKinds) {
    for (const double nu : {0.0, 0.5, 3.0, 120.0}) {
      for (const auto& r : zeros_upto(k, nu, 8)) {
        CAPTURE(to_string(k));
        CAPTURE(nu);
        CAPTURE(r.id.s);
        CHECK(r.bracket.contains(r.value));
        CHECK(std::abs(r.residual) <= resid_tol(r.value));
        if (is_conventional_zero(r.id)) continue;
        CHECK(r.bracket.width() <= kRefineRelWidth * std::max(1.0, r.bracket.hi) * (1 + 1e-12));
        const double flo = evaluate_target(k, nu, r.bracket.lo).f;
        const double fhi = evaluate_target(k, nu, r.bracket.hi).f;
        CHECK(flo * fhi <= 0.0);
      }
    }
  }
}

TEST_CASE("refine examples") {
  const ZeroRecord j01 = refine(initial_bracket({ZeroKind::J, 0, 1}), {ZeroKind::J, 0, 1});
  CHECK(std::abs(j01.value - 2.404825557695773) <= 1e-12);
  CHECK(j01.iterations > 0);
  const ZeroRecord y11 = refine(initial_bracket({ZeroKind::Y, 1, 1}), {ZeroKind::Y, 1, 1});
  CHECK(std::abs(y11.value - 2.197141326031017) <= 1e-12);
  const ZeroRecord conv = refine({0.0, 0.0}, {ZeroKind::JPrime, 0, 1});
  CHECK(conv.value == 0.0);
  CHECK(conv.residual == 0.0);
  CHECK(conv.iterations == 0);
}

TEST_CASE("refine rejects brackets that are not sign-change brackets") {
  CHECK(code_of([] { refine({3.0, 2.0}, {ZeroKind::J, 0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { refine({1.0, 2.0}, {ZeroKind::J, 0, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { refine({0.0, 3.0}, {ZeroKind::J, 0, 1}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("zero examples") {
  CHECK(zero({ZeroKind::JPrime, 0, 1}).value == 0.0);
  CHECK(std::abs(zero({ZeroKind::J, 0, 2}).value - 5.520078110286311) <= 1e-12);
  CHECK(std::abs(zero({ZeroKind::YPrime, 0, 1}).value - 2.197141326031017) <= 1e-12);
}

TEST_CASE("zeros_upto examples") {
  const auto j0 = zeros_upto(ZeroKind::J, 0, 2);
  REQUIRE(j0.size() == 2);
  CHECK(std::abs(j0[0].value - 2.404825557695773) <= 1e-12);
  CHECK(std::abs(j0[1].value - 5.520078110286311) <= 1e-12);

  const auto y = zeros_upto(ZeroKind::Y, 0.5, 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(y[k].value - (2 * k + 1) * kPi / 2) <= 1e-12);

  const auto jp = zeros_upto(ZeroKind::JPrime, 0, 3);
  CHECK(jp[0].value == 0.0);
  CHECK(std::abs(jp[1].value - 3.831705970207512) <= 1e-12);
  CHECK(std::abs(jp[2].value - 7.015586669815619) <= 1e-12);
}

TEST_CASE("zero and zeros_upto agree bit for bit") {
  const auto all = zeros_upto(ZeroKind::YPrime, 2.5, 12);
  for (const auto& r : all) CHECK(zero(r.id).value == r.value);
}

TEST_CASE("ranks are validated") {
  CHECK(code_of([] { zeros_upto(ZeroKind::J, 0, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { zeros_upto(ZeroKind::J, 0, 10001); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { zero({ZeroKind::J, 0, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { zero({ZeroKind::J, -0.5, 1}); }) == ErrorCode::DomainNu);
  CHECK(code_of([] { zero({ZeroKind::J, 601, 1}); }) == ErrorCode::OverflowNu);
}

TEST_CASE("canonical ids") {
  CHECK(canonical({ZeroKind::JPrime, 0, 3}) == ZeroId{ZeroKind::J, 1, 2});
  CHECK(canonical({ZeroKind::YPrime, 0, 3}) == ZeroId{ZeroKind::Y, 1, 3});
  CHECK(canonical({ZeroKind::JPrime, 0, 1}) == ZeroId{ZeroKind::JPrime, 0, 1});
  CHECK(canonical({ZeroKind::JPrime, 0.5, 3}) == ZeroId{ZeroKind::JPrime, 0.5, 3});
}

TEST_CASE("oracle_scan examples") {
  const auto j = oracle::oracle_scan(ZeroKind::J, 0, 10, 1e-3);
  const auto lib = zeros_upto(ZeroKind::J, 0, 3);
  REQUIRE(j.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(j[k] - lib[k].value) <= 1e-9);
  const auto y = oracle::oracle_scan(ZeroKind::Y, 0, 1, 1e-3);
  REQUIRE(y.size() == 1);
  CHECK(std::abs(y[0] - 0.893576966279167) <= 1e-9);
  CHECK(oracle::oracle_scan(ZeroKind::J, 5, 1, 1e-3).empty());
}

TEST_CASE("the ten-thousandth zero is reachable") {
  const auto all = zeros_upto(ZeroKind::J, 0, kMaxRank);
  REQUIRE(all.size() == static_cast<std::size_t>(kMaxRank));
  // McMahon: j_{0,s} ~ (s - 1/4) pi + 1 / (8 (s - 1/4) pi).
  const double beta = (kMaxRank - 0.25) * kPi;
  CHECK(std::abs(all.back().value - (beta + 1.0 / (8.0 * beta))) <= 1e-9);
}

TEST_CASE("high orders") {
  for (const ZeroKind k : kKinds) {
    const auto r = zeros_upto(k, 600, 300);
    CHECK(r.front().value > 600.0);
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i].value > r[i - 1].value);
  }
}
