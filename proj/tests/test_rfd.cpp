#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>

#include "fz/cantor.hpp"
#include "fz/rfd.hpp"
#include "oracle/oracles.hpp"

using namespace fz;

namespace {

std::optional<Errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

RfdParams with_N(int N) {
  RfdParams p;
  p.N = N;
  return p;
}

NumericConfig monte_carlo(std::size_t samples, std::uint64_t seed = 1234) {
  NumericConfig c;
  c.method = NumericConfig::Method::montecarlo;
  c.samples = samples;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("constructors") {
  const Rfd disk = build_rfd("ball", with_N(2));
  CHECK(std::abs(disk.measure - kPi) < 1e-15);
  CHECK(std::abs(disk.distance({0.5, 0.0, 0.0}) - 0.5) < 1e-15);
  CHECK(std::abs(disk.distance({0.0, 0.0, 0.0}) - 1.0) < 1e-15);
  const Rfd cusp = build_rfd("cusp");
  CHECK(std::abs(cusp.measure - 1.0 / 3.0) < 1e-15);
  const Rfd dust = build_rfd("cantor_dust");
  CHECK(dust.N == 2);
  CHECK(std::abs(dust.measure - 1.0) < 1e-15);
  CHECK(dust.distance({1.0 / 3.0, 0.0, 0.0}) < 1e-15);
  CHECK(std::abs(dust.distance({0.5, 0.0, 0.0}) - 1.0 / 6.0) < 1e-15);
  CHECK(code_of([] { build_rfd("klein_bottle"); }) == Errc::UnsupportedKind);
  CHECK_THROWS_AS(build_rfd("ball", with_N(4)), Error);
}

TEST_CASE("distance zeta anchors") {
  const Rfd gasket = build_rfd("gasket");
  CHECK(std::abs(distance_zeta_numeric(gasket, 2.0).value - std::sqrt(3.0) / 4.0) < 1e-4);

  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const Rfd cantor = build_rfd("cantor");
  CHECK(std::abs(distance_zeta_numeric(cantor, 1.2).value - gcs_distance_zeta_closed(C, 0.5, 1.2)) < 1e-6);

  const Rfd disk = build_rfd("ball", with_N(2));
  const NumericValue v = distance_zeta_numeric(disk, 1.5);
  CHECK(std::abs(v.value - 2 * kPi / (1.5 * 0.5)) < 1e-8);
  CHECK(std::abs(v.value.real() - 8.3776) < 1e-4);

  // the below-abscissa side is flagged rather than silently integrated
  CHECK(code_of([&] { distance_zeta_numeric(cantor, inv.D - 0.1); }) == Errc::NonIntegrable);
  CHECK(distance_zeta_numeric(cantor, inv.D + 0.3).value.real() > 0);
}

TEST_CASE("s = N returns the region measure") {
  for (const char* kind : {"cantor", "triangle", "square", "ball", "torus", "cusp", "gasket", "carpet", "cantor_graph",
                           "cantor_embedded"}) {
    const Rfd r = build_rfd(kind, kind == std::string("ball") ? with_N(3) : RfdParams{});
    const NumericValue v = distance_zeta_numeric(r, static_cast<double>(r.N));
    CAPTURE(kind);
    CHECK(std::abs(v.value - r.measure) <= std::max(1e-8, 5 * v.error) * r.measure);
  }
  const Rfd dust = build_rfd("cantor_dust");
  const NumericValue v = distance_zeta_numeric(dust, 2.0, monte_carlo(200000));
  CHECK(std::abs(v.value - 1.0) < 1e-12);  // d^0 = 1 for every sample
}

TEST_CASE("tube functions") {
  const Rfd cantor = build_rfd("cantor");
  const TubeSamples c = tube_function_numeric(cantor, {1.0 / 18.0});
  CHECK(c.method == "exact");
  CHECK(std::abs(c.volume[0] - 8.0 / 9.0) < 1e-15);

  const Rfd disk = build_rfd("ball", with_N(2));
  CHECK(std::abs(tube_volume_exact(disk, 0.1) - 0.19 * kPi) < 1e-14);

  RfdParams tp;
  tp.R = 2.0;
  tp.r = 0.5;
  const Rfd torus = build_rfd("torus", tp);
  for (double t : {0.01, 0.1, 0.4}) CHECK(std::abs(tube_volume_exact(torus, t) - 2 * kPi * kPi * 2.0 * (2 * 0.5 * t - t * t)) < 1e-13);
  const double delta = 0.3;
  const NumericValue tz = tube_zeta_numeric(torus, 3.0, delta);
  CHECK(std::abs(tz.value - 2 * kPi * kPi * 2.0 * (2 * 0.5 * delta - delta * delta / 2)) < 1e-10);
}

TEST_CASE("property: sampled tubes are monotone and bounded by the region") {
  for (const char* kind : {"gasket", "carpet", "cantor_dust", "cantor_graph"}) {
    const Rfd r = build_rfd(kind);
    const TubeSamples ts = tube_function_numeric(r, log_grid(1e-3, 1.0, 25), monte_carlo(200000));
    CAPTURE(kind);
    CHECK(ts.method == "montecarlo");
    for (std::size_t i = 0; i + 1 < ts.t.size(); ++i)
      CHECK(ts.volume[i + 1] >= ts.volume[i] - 3 * (ts.stderr_[i] + ts.stderr_[i + 1]));
    for (std::size_t i = 0; i < ts.t.size(); ++i) CHECK(ts.volume[i] <= r.measure + 3 * ts.stderr_[i]);
  }
}

TEST_CASE("Monte Carlo is reproducible and independent of the thread count") {
  const Rfd g = build_rfd("gasket");
  set_threads(1);
  const NumericValue a = distance_zeta_numeric(g, 1.8, monte_carlo(300000, 77));
  set_threads(5);
  const NumericValue b = distance_zeta_numeric(g, 1.8, monte_carlo(300000, 77));
  set_threads(0);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  const NumericValue c = distance_zeta_numeric(g, 1.8, monte_carlo(300000, 78));
  CHECK(a.value != c.value);
  CHECK(std::abs(a.value - c.value) < 6 * a.error);
}

TEST_CASE("Mellin form of the distance zeta") {
  // zeta(s) = (N - s) int_0^inf t^(s-N-1) |A_t ∩ Omega| dt for D < Re s < N
  for (const char* kind : {"cantor", "triangle", "ball"}) {
    const Rfd r = build_rfd(kind, kind == std::string("ball") ? with_N(2) : RfdParams{});
    for (double s : {0.85, 0.95}) {
      const double sr = kind == std::string("cantor") ? s : s + 1.0;
      const double N = r.N;
      // split at t = 1: the tail is |Omega| t^(s-N-1) once the tube saturates (all three by t = 1)
      const double head = oracle::integrate_graded(
          [&](double t) { return std::pow(t, sr - N - 1) * tube_volume_exact(r, t); }, 0.0, 1.0, 200, 8);
      const double tail = r.measure / (N - sr);
      const double mellin = (N - sr) * (head + tail);
      CAPTURE(kind);
      CAPTURE(sr);
      CHECK(std::abs(mellin - distance_zeta_numeric(r, sr).value.real()) < 1e-6 * std::abs(mellin));
    }
  }
}

TEST_CASE("box-dimension fits") {
  const TubeSamples c = tube_function_numeric(build_rfd("cantor"), log_grid(1e-7, 1e-1, 200));
  const DimensionFit fc = box_dimension_fit(c, 1);
  CHECK(std::abs(fc.D - 0.6309) < 0.01);
  CHECK(fc.D_lower <= fc.D_upper);
  CHECK(fc.D_upper <= 1.0);
  CHECK(fc.D_lower < fc.D);
  CHECK(fc.D < fc.D_upper);

  const TubeSamples cu = tube_function_numeric(build_rfd("cusp"), log_grid(1e-6, 1e-1, 100));
  CHECK(std::abs(box_dimension_fit(cu, 2).D + 1.0) < 0.05);

  const TubeSamples b = tube_function_numeric(build_rfd("ball", with_N(2)), log_grid(1e-6, 1e-1, 100));
  CHECK(std::abs(box_dimension_fit(b, 2).D - 1.0) < 0.01);

  CHECK(code_of([&] { box_dimension_fit(tube_function_numeric(build_rfd("cantor"), log_grid(1e-3, 1e-1, 30)), 1); }) ==
        Errc::InsufficientRange);
}

TEST_CASE("flat cusp: fitted dimension keeps falling as the range shrinks") {
  const TubeSamples ts = tube_function_numeric(build_rfd("exp_cusp"), log_grid(2e-3, 2.0, 121));
  double prev = INFINITY;
  for (double hi : {1.0, 0.2, 0.04, 0.01}) {
    const double D = box_dimension_fit(ts, 2, {hi / 10, hi}).D;
    CHECK(D < prev);
    prev = D;
  }
  CHECK(prev < -10.0);
}

TEST_CASE("Minkowski contents") {
  const TubeSamples cu = tube_function_numeric(build_rfd("cusp"), log_grid(1e-6, 1e-2, 60));
  CHECK(std::abs(minkowski_content_estimate(cu, 2, -1.0).average - 1.0 / 3.0) < 0.02);

  // |A_t|/t = 2 - O(t^(1 - log_3 2)): the approach is slow, so read the smallest decade
  const TubeSamples g = tube_function_numeric(build_rfd("cantor_graph"), log_grid(1e-9, 1e-2, 200));
  const ContentEstimate gc = minkowski_content_estimate(g, 2, 1.0);
  CHECK(std::abs(gc.lower - 2.0) < 0.05);
  CHECK(std::abs(gc.upper - 2.0) < 0.05);

  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const TubeSamples c = tube_function_numeric(build_rfd("cantor"), log_grid(C.c * std::pow(C.a, 12), C.c, 2000));
  const ContentEstimate ce = minkowski_content_estimate(c, 1, inv.D);
  CHECK(std::abs(ce.average - 2.524) < 0.02);
  CHECK(inv.M_lower < ce.average);
  CHECK(ce.average < inv.M_upper);
  CHECK(ce.lower >= inv.M_lower - 1e-3);
  CHECK(ce.upper <= inv.M_upper + 1e-3);

  // full-dimensional region: only the flat gauge makes sense
  const TubeSamples sq = tube_function_numeric(build_rfd("square"), log_grid(1e-4, 1e-1, 40));
  CHECK(code_of([&] { minkowski_content_estimate(sq, 2, 2.0); }) == Errc::DegenerateD);
  CHECK_THROWS_AS(minkowski_content_estimate(sq, 2, 1.0, -1), Error);
}

TEST_CASE("scaling and union identities") {
  const Rfd cantor = build_rfd("cantor");
  for (const auto& c : verify_scaling(cantor, 1.0 / 3.0, {cplx(1.2, 0.0)})) {
    CHECK(c.pass);
    CHECK(c.residual <= 1e-8);
  }
  for (const auto& c : verify_scaling(cantor, 1.0, {cplx(1.2, 0.0), cplx(0.9, 4.0)})) CHECK(c.residual == 0.0);

  // C in (0,1) is its two level-1 copies plus the middle gap, which is a one-gap string
  RfdParams pu;
  pu.omega = "unit";
  const Rfd whole = build_rfd("cantor", pu);
  RfdParams ps;
  ps.string = std::make_shared<FractalString>(make_string({{1.0 / 3.0, 1}}));
  const Rfd mid = transform_rfd(build_rfd("string", ps), 1.0, {1.0 / 3.0, 0, 0});
  for (const auto& c : verify_union(whole, {transform_rfd(whole, 1.0 / 3.0), transform_rfd(whole, 1.0 / 3.0, {2.0 / 3.0, 0, 0}), mid},
                                    {cplx(1.5, 0.0)})) {
    CHECK(c.pass);
    CHECK(c.residual <= 1e-8);
  }
  CHECK(code_of([&] { verify_union(whole, {whole, whole}, {cplx(1.5, 0.0)}); }) == Errc::IncompatibleUnion);

  RfdParams tp;
  tp.R = 2.0;
  tp.r = 0.5;
  for (const auto& c : verify_tube_scaling(build_rfd("torus", tp), 0.5, {0.01, 0.1})) CHECK(c.pass);
}

TEST_CASE("functional equation on the disk") {
  const Rfd disk = build_rfd("ball", with_N(2));
  const double delta = 0.5, s = 1.7;
  const NumericValue z = distance_zeta_numeric(disk, s);
  const NumericValue t = tube_zeta_numeric(disk, s, delta);
  const cplx rhs = std::pow(delta, s - 2.0) * tube_volume_exact(disk, delta) + (2.0 - s) * t.value;
  // Omega beyond delta contributes int_{d > delta} d^(s-2)
  const double far = oracle::integrate_graded(
      [&](double u) { return 2 * kPi * (1.0 - u) * std::pow(u, s - 2.0); }, 1.0, delta, 40, 8);
  CHECK(std::abs(z.value - (rhs - far)) < 1e-5);
}

TEST_CASE("distance oracles are 1-Lipschitz") {
  for (const char* kind : {"cantor", "cantor_embedded", "cantor_dust", "triangle", "square", "ball", "torus", "cusp",
                           "exp_cusp", "gasket", "carpet", "cantor_graph"}) {
    CAPTURE(kind);
    CHECK(lipschitz_violation(build_rfd(kind), 10000, 3) <= 1e-12);
  }
}

TEST_CASE("embedded and ambient fits agree") {
  const DimensionFit a = box_dimension_fit(tube_function_numeric(build_rfd("cantor"), log_grid(1e-7, 1e-1, 200)), 1);
  const DimensionFit b = box_dimension_fit(tube_function_numeric(build_rfd("cantor_embedded"), log_grid(1e-7, 1e-1, 200)), 2);
  CHECK(std::abs(a.D - b.D) < 0.02);
}
