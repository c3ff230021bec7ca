#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fz/cantor.hpp"
#include "fz/relation.hpp"
#include "oracle/oracles.hpp"

using namespace fz;

namespace {
const double kD = std::log(2.0) / std::log(3.0);
// Frozen from the oracle: mpmath over one multiplicative period of |C_t| / t^(1-D), 30 digits.
constexpr double kMLower = 2.4949757159609744;
constexpr double kMUpper = 2.5830404686603904;
constexpr double kAvg = 2.5242753314668527;
constexpr double kResDist = 0.93163491863796229;
}  // namespace

TEST_CASE("invariants of C^(2,1/3)") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  CHECK(inv.D == doctest::Approx(0.6309297536).epsilon(1e-10));
  CHECK(std::abs(inv.D - kD) < 1e-15);
  CHECK(std::abs(C.c - 1.0 / 6.0) < 1e-16);
  CHECK(std::abs(inv.M_lower - kMLower) < 1e-9);
  CHECK(std::abs(inv.M_upper - kMUpper) < 1e-9);
  CHECK(std::abs(inv.res_tube_at_D - kAvg) < 1e-12);
  CHECK(std::abs(inv.res_distance_at_D - kResDist) < 1e-12);
  // the published rounded values, to their printed precision
  CHECK(std::abs(inv.M_lower - 2.49503) < 1e-4);
  CHECK(std::abs(inv.M_upper - 2.58300) < 1e-4);
  CHECK(std::abs(inv.res_distance_at_D - 0.93158) < 1e-4);
  CHECK(inv.M_lower < inv.res_tube_at_D);
  CHECK(inv.res_tube_at_D < inv.M_upper);

  auto [C2, inv2] = gcs_create(3, 1.0 / 9.0);
  CHECK(std::abs(inv2.D - 0.5) < 1e-15);
  CHECK_THROWS_AS(gcs_create(2, 0.5), Error);
  CHECK_THROWS_AS(gcs_create(1, 0.3), Error);
  CHECK_THROWS_AS(gcs_create(3, 0.0), Error);
}

TEST_CASE("intervals") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  CHECK(gcs_intervals(C, 0) == std::vector<std::pair<double, double>>{{0.0, 1.0}});
  const auto l1 = gcs_intervals(C, 1);
  REQUIRE(l1.size() == 2);
  CHECK(std::abs(l1[0].second - 1.0 / 3.0) < 1e-16);
  CHECK(std::abs(l1[1].first - 2.0 / 3.0) < 2.3e-16);
  auto [C3, i3] = gcs_create(3, 0.2);
  const auto k1 = gcs_intervals(C3, 1);
  REQUIRE(k1.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(std::abs(k1[j].second - k1[j].first - 0.2) < 1e-15);
  CHECK(std::abs(k1[1].first - k1[0].second - 0.2) < 1e-15);
  CHECK(std::abs(k1[2].first - k1[1].second - 0.2) < 1e-15);
}

TEST_CASE("tube volume anchors") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  CHECK(std::abs(tube_volume_closed(C, 1.0 / 6.0) - 4.0 / 3.0) < 1e-15);
  CHECK(std::abs(tube_volume_closed(C, 1.0 / 18.0) - 8.0 / 9.0) < 1e-15);
  CHECK(std::abs(tube_volume_oracle(C, 1.0 / 18.0, 6) - 8.0 / 9.0) < 1e-15);
  CHECK(std::abs(tube_volume_oracle(C, 1.0 / 6.0) - 4.0 / 3.0) < 1e-15);
  for (double t : {0.5, 0.7, 3.0}) CHECK(std::abs(tube_volume_closed(C, t) - (1 + 2 * t)) < 1e-15);
  CHECK(std::abs(tube_volume_closed(C, 0.01) - tube_volume_oracle(C, 0.01)) < 1e-12);
  CHECK_THROWS_AS(tube_volume_closed(C, 0.0), Error);
  CHECK_THROWS_AS(tube_volume_closed(C, -1.0), Error);
}

TEST_CASE("closed form and library oracle against the brute-force interval union") {
  for (auto [m, a] : {std::pair{2, 1.0 / 3.0}, std::pair{3, 0.2}, std::pair{2, 0.25}}) {
    auto [C, inv] = gcs_create(m, a);
    for (int i = 0; i < 12; ++i) {
      const double t = std::exp(std::log(1e-7) + (std::log(C.c) - std::log(1e-7)) * (i + 0.37) / 12.0);
      const double ref = oracle::cantor_tube(m, a, t);
      CHECK(std::abs(tube_volume_closed(C, t) - ref) <= 1e-12 * ref);
      CHECK(std::abs(tube_volume_oracle(C, t) - ref) <= 1e-12 * ref);
    }
  }
}

TEST_CASE("property: sweep-line union equals brute force on random intervals") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<double, double>> iv;
    for (int k = 0; k < 40; ++k) {
      const double x = u(rng), w = 0.05 * u(rng);
      iv.emplace_back(x, x + w);
    }
    const double t = 0.02 * u(rng);
    CHECK(std::abs(union_measure_sweep(iv, t) - oracle::union_length(iv, t)) < 1e-14);
  }
}

TEST_CASE("property: tube is increasing and the profile is multiplicatively periodic") {
  std::mt19937_64 rng(17);
  for (auto [m, a] : {std::pair{2, 1.0 / 3.0}, std::pair{4, 0.1}, std::pair{3, 0.3}}) {
    auto [C, inv] = gcs_create(m, a);
    std::uniform_real_distribution<double> lt(std::log(1e-9), std::log(C.c));
    for (int i = 0; i < 100; ++i) {
      const double t = std::exp(lt(rng));
      CHECK(tube_volume_closed(C, t) < tube_volume_closed(C, t * 1.001));
      const double g1 = tube_profile(C, t), g2 = tube_profile(C, t * a);
      CHECK(std::abs(g1 - g2) < 1e-11 * g1);
      CHECK(g1 >= inv.M_lower * (1 - 1e-9));
      CHECK(g1 <= inv.M_upper * (1 + 1e-9));
    }
  }
}

TEST_CASE("serial and parallel oracle agree bit for bit") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  for (double t : {1e-3, 2.2e-5, 4e-8}) CHECK(tube_volume_oracle(C, t, Exec::serial) == tube_volume_oracle(C, t, Exec::parallel));
  set_threads(3);
  const double a = tube_volume_oracle(C, 4e-8, Exec::parallel);
  set_threads(1);
  CHECK(a == tube_volume_oracle(C, 4e-8, Exec::parallel));
  set_threads(0);
}

TEST_CASE("content extrema by the oracle") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const ContentExtrema ex = content_extrema_oracle(C);
  CHECK(std::abs(ex.min - kMLower) < 1e-7);
  CHECK(std::abs(ex.max - kMUpper) < 1e-7);
  // the extrema are scale invariant once t is renormalized
  const ContentExtrema sc = content_extrema_oracle(C, 0.5);
  CHECK(std::abs(sc.min - ex.min * std::pow(0.5, inv.D)) < 1e-7);
}

TEST_CASE("distance zeta closed form") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  CHECK(std::abs(gcs_distance_zeta_closed(C, 0.5, 1.0) - 2.0) < 1e-14);
  const MeroExpr e = gcs_distance_mero(C, 0.5);
  for (cplx s : {cplx(1.0), cplx(0.8, 3.0), cplx(-0.5, 2.0)})
    CHECK(std::abs(eval_expr(e, s) - gcs_distance_zeta_closed(C, 0.5, s)) < 1e-13 * std::abs(eval_expr(e, s)));
  // (s - D) zeta(s) -> residue, numerically
  const double h = 1e-7;
  CHECK(std::abs(h * gcs_distance_zeta_closed(C, 0.5, inv.D + h) - kResDist) < 1e-6);
  const cplx r = oracle::contour_residue([&](cplx s) { return gcs_distance_zeta_closed(C, 0.5, s); }, inv.D, 0.1);
  CHECK(std::abs(r - kResDist) < 1e-12);
  // the apparent pole at 0 cancels: zeta stays bounded there
  CHECK(std::abs(gcs_distance_zeta_closed(C, 0.5, cplx(1e-6, 1e-6))) < 10.0);
  // pole set D + i p Z
  const auto poles = poles_in_window(e, {-1.0, 1.0, 20.0});
  int at_zero = 0, on_line = 0;
  for (const auto& p : poles) {
    if (p.cancelled) continue;
    if (std::abs(p.s) < 1e-9) ++at_zero;
    else if (std::abs(p.s.real() - inv.D) < 1e-9) {
      ++on_line;
      const double k = p.s.imag() / inv.p;
      CHECK(std::abs(k - std::round(k)) < 1e-9);
    } else {
      FAIL("unexpected pole");
    }
  }
  CHECK(at_zero == 0);
  CHECK(on_line == 2 * static_cast<int>(20.0 / inv.p) + 1);
}

TEST_CASE("independence and relations") {
  const auto rel = rational_relation_scan({std::log(2.0), std::log(4.0)});
  REQUIRE(!rel.independent);
  CHECK(rel.coefficients == std::vector<long long>{2, -1});
  const auto rel3 = rational_relation_scan({std::log(2.0), std::log(3.0), std::log(6.0)});
  REQUIRE(!rel3.independent);
  CHECK(rel3.coefficients == std::vector<long long>{1, 1, -1});
  CHECK(rational_relation_scan({std::log(2.0), std::log(3.0)}).independent);

  const auto cert = log_independence_certificate({2, 3, 5, 7});
  CHECK(cert.qmax == 10000);
  CHECK(cert.factorization_rank == 4);
  CHECK(cert.independent);
  CHECK(!log_independence_certificate({2, 3, 6}).independent);
  CHECK(!log_independence_certificate({4, 8}).independent);
}

TEST_CASE("quasiperiodic drum") {
  const auto q = quasiperiodic_drum_build(0.5, 3);
  REQUIRE(q.T.size() == 3);
  const double expect_T[] = {2 * std::log(2.0), 2 * std::log(3.0), 2 * std::log(5.0)};
  const double expect_a[] = {0.25, 1.0 / 9.0, 0.04};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(q.T[i] - expect_T[i]) < 1e-14);
    CHECK(std::abs(q.a[i] - expect_a[i]) < 1e-16);
  }
  CHECK(q.certificate.independent);
  const auto one = quasiperiodic_drum_build(0.5, 1);
  const auto lat = one.singularity_lattice(30.0);
  for (const auto& lp : lat) {
    CHECK(lp.component == 0);
    const double k = lp.s.imag() / (2 * kPi / one.T[0]);
    CHECK(std::abs(k - std::round(k)) < 1e-12);
    CHECK(lp.s.real() == 0.5);
  }
  CHECK(first_primes(5) == std::vector<long long>{2, 3, 5, 7, 11});
}
