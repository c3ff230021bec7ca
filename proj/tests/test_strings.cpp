#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "fz/strings.hpp"
#include "oracle/oracles.hpp"

using namespace fz;

namespace {
FractalString singleton() { return make_string({{1.0, 1}}); }
}  // namespace

TEST_CASE("make_string normalizes and validates") {
  const FractalString cs = make_string({{1.0 / 3.0, 1}}, {geometric_tail(1.0 / 3.0, 2.0)});
  CHECK(total_length(cs) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(total_length(singleton()) == 1.0);

  const FractalString merged = make_string({{0.5, 2}, {0.5, 1}});
  REQUIRE(merged.entries.size() == 1);
  CHECK(merged.entries[0].length == 0.5);
  CHECK(merged.entries[0].mult == 3);

  auto code_of = [](auto&& f) -> std::optional<Errc> {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  CHECK(code_of([] { make_string({{0.0, 1}}); }) == Errc::NonPositiveLength);
  CHECK(code_of([] { make_string({{-1.0, 1}}); }) == Errc::NonPositiveLength);
  CHECK(code_of([] { make_string({{0.5, 1}}, {geometric_tail(0.5, 2.0)}); }) == Errc::DivergentTail);
  CHECK_THROWS_AS(make_string({{0.5, 1.5}}), Error);
}

TEST_CASE("geometric zeta: anchors") {
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  CHECK(std::abs(geometric_zeta(cs, 1.0).value - 1.0) < 1e-13);
  CHECK(std::abs(geometric_zeta(cs, 2.0).value - 1.0 / 7.0) < 1e-14);
  const FractalString as = a_string(1.0, 200000);
  CHECK(as.entries.front().length == doctest::Approx(0.5));
  CHECK(std::abs(geometric_zeta(as, 1.0).value - 1.0) < 1e-10);
  CHECK(abscissa_estimate(a_string(0.5, 100)) == doctest::Approx(1.0 / 1.5).epsilon(1e-14));
}

TEST_CASE("geometric zeta matches the direct series oracle") {
  for (auto [m, a] : {std::pair{2, 1.0 / 3.0}, std::pair{3, 0.2}, std::pair{2, 0.1}}) {
    const FractalString L = cantor_string(m, a);
    for (cplx s : {cplx(1.0, 0.0), cplx(0.9, 4.0), cplx(2.5, -7.0)}) {
      const cplx ref = oracle::cantor_string_zeta(m, a, s, 400);
      CHECK(std::abs(geometric_zeta(L, s).value - ref) < 1e-12 * std::abs(ref));
      CHECK(std::abs(eval_expr(string_mero(L), s) - ref) < 1e-12 * std::abs(ref));
    }
  }
}

TEST_CASE("below the abscissa the series is refused") {
  CHECK_THROWS_AS(geometric_zeta(cantor_string(2, 1.0 / 3.0), 0.5), Error);
}

TEST_CASE("scaling") {
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  CHECK(std::abs(geometric_zeta(scale_string(cs, 1.0 / 3.0), 2.0).value - 1.0 / 63.0) < 1e-15);
  CHECK(std::abs(geometric_zeta(scale_string(singleton(), 2.0), 3.0).value - 8.0) < 1e-14);
  const FractalString id = scale_string(cs, 1.0);
  CHECK(id.entries.front().length == cs.entries.front().length);
  CHECK_THROWS_AS(scale_string(cs, 0.0), Error);
}

TEST_CASE("property: zeta(lambda L)(s) = lambda^s zeta(L)(s)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(0.05, 5.0), re(0.7, 3.0), im(-20.0, 20.0);
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  for (int i = 0; i < 200; ++i) {
    const double l = lam(rng);
    const cplx s(re(rng), im(rng));
    const cplx lhs = geometric_zeta(scale_string(cs, l), s).value;
    const cplx rhs = std::pow(l, s) * geometric_zeta(cs, s).value;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("tensor product") {
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  const FractalString p = tensor_product(cs, cs, 40);
  CHECK(std::abs(geometric_zeta(p, 2.0).value - 1.0 / 49.0) < 1e-9);
  CHECK(std::abs(eval_expr(string_mero(p), 2.0) - 1.0 / 49.0) < 1e-15);
  const FractalString id = tensor_product(cs, singleton(), 40);
  CHECK(std::abs(geometric_zeta(id, 1.3).value - geometric_zeta(cs, 1.3).value) < 1e-9);
  CHECK_THROWS_AS(tensor_product(cs, cs, 0), Error);
}

TEST_CASE("higher-order Cantor strings") {
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  const FractalString m2 = mth_order(cs, 2, 40);
  CHECK(std::abs(eval_expr(string_mero(m2), 2.0) - 1.0 / 49.0) < 1e-14);
  // principal poles D + i p k of multiplicity 2
  const Window w{0.0, 1.0, 12.0};
  const auto poles = poles_in_window(string_mero(m2), w);
  int principal = 0;
  for (const auto& p : poles)
    if (std::abs(p.s.real() - std::log(2.0) / std::log(3.0)) < 1e-9) {
      ++principal;
      CHECK(p.order == 2);
    }
  CHECK(principal == 5);  // |k| <= 2 since 2p < 12 < 3p
  const FractalString inf = infinite_order(cs, 3);
  cplx ref = 0;
  double fact = 1;
  for (int m = 1; m <= 3; ++m) {
    fact *= m;
    ref += std::pow(std::pow(3.0, -m) / fact, 2.0) * std::pow(1.0 / 7.0, m);
  }
  CHECK(std::abs(eval_expr(string_mero(inf), 2.0) - ref) < 1e-15);
}

TEST_CASE("disjoint union") {
  const FractalString u = disjoint_union({singleton(), singleton()});
  REQUIRE(u.entries.size() == 1);
  CHECK(u.entries[0].mult == 2);
  const FractalString cs = cantor_string(2, 1.0 / 3.0);
  const FractalString same = disjoint_union({cs});
  CHECK(std::abs(geometric_zeta(same, 1.5).value - geometric_zeta(cs, 1.5).value) < 1e-14);
  CHECK_THROWS_AS(disjoint_union({cs, cs}, {1.0}), Error);
}

TEST_CASE("simplify merges equal bases") {
  const MeroExpr e = mero_term(1.0, 0.5) + mero_term(2.0, 0.5) + mero_term(-1.0, 0.25) + mero_term(1.0, 0.25);
  const MeroExpr s = simplify(e);
  CHECK(s.terms.size() == 1);
  CHECK(std::abs(eval_expr(s, cplx(1.5, 2.0)) - eval_expr(e, cplx(1.5, 2.0))) < 1e-15);
}
