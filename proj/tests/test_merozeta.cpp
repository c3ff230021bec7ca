#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "fz/mero.hpp"
#include "fz/sprays.hpp"
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

MeroExpr gasket() { return catalog_example("sierpinski-gasket", false).expr; }

}  // namespace

TEST_CASE("evaluation anchors") {
  CHECK(std::abs(eval_expr(gasket(), 2.0) - std::sqrt(3.0) / 4.0) < 1e-14);
  CHECK(std::abs(eval_expr(gasket(), 2.0).real() - 0.43301) < 1e-5);
  const MeroExpr ball = mero_term(2 * kPi, 1.0, {{0.0, 1}, {1.0, 1}});
  CHECK(std::abs(eval_expr(ball, 2.0) - kPi) < 1e-15);
  const MeroExpr graph = divide_by(mero_term(2.0 / 3.0, 1.0 / 3.0, {{0.0, 1}, {1.0, 1}}),
                                   DirichletPolynomial::make({{2.0, 1.0 / 3.0}}));
  // 2/(s (3^s - 2)(s - 1)) = (2/3^s) / (s (s-1) (1 - 2 3^-s))
  CHECK(std::abs(eval_expr(graph, 2.0) * 3.0 - 1.0 / 7.0) < 1e-15);
  CHECK(code_of([&] { eval_expr(ball, 0.0); }) == Errc::PoleHit);
  CHECK(code_of([&] { eval_expr(ball, 1.0 + 1e-14); }) == Errc::PoleHit);
}

TEST_CASE("Moran roots") {
  const double d1 = moran_root(DirichletPolynomial::make({{3.0, 0.5}}));
  CHECK(std::abs(d1 - std::log2(3.0)) < 1e-14);
  CHECK(d1 == doctest::Approx(1.5849625007).epsilon(1e-10));
  const double d2 = moran_root(DirichletPolynomial::make({{8.0, 1.0 / 3.0}}));
  CHECK(d2 == doctest::Approx(1.8927892607).epsilon(1e-10));
  CHECK(std::abs(8.0 * std::pow(1.0 / 3.0, d2) - 1.0) <= 1e-13);
  CHECK(std::abs(moran_root(DirichletPolynomial::make({{2.0, 0.5}})) - 1.0) < 1e-15);
  CHECK(code_of([] { moran_root(DirichletPolynomial::make({{0.5, 0.5}})); }) == Errc::NoRealRoot);
  CHECK_THROWS_AS(DirichletPolynomial::make({{1.0, 1.5}}), Error);
  CHECK_THROWS_AS(DirichletPolynomial::make({{-1.0, 0.5}}), Error);
  CHECK_THROWS_AS(DirichletPolynomial::make({}), Error);
}

TEST_CASE("property: Moran root agrees with bisection on random polynomials") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> br(0.3, 3.0), rr(0.05, 0.9);
  std::uniform_int_distribution<int> nt(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<double, double>> terms;
    const int n = nt(rng);
    double total = 0;
    for (int j = 0; j < n; ++j) {
      terms.emplace_back(br(rng), rr(rng));
      total += terms.back().first;
    }
    if (total <= 1.0) terms.emplace_back(1.5, 0.5);
    const auto f = DirichletPolynomial::make(terms);
    auto g = [&](double s) { return f.eval(s).real(); };
    const double ref = oracle::bisect(g, 0.0, 200.0);
    const double D = moran_root(f);
    CHECK(std::abs(D - ref) < 1e-12 * std::max(1.0, ref));
    CHECK(std::abs(f.eval(D)) <= 1e-13);
  }
}

TEST_CASE("lattice analysis") {
  const auto g = lattice_analysis(DirichletPolynomial::make({{1, 0.5}, {1, 0.5}, {1, 0.5}}));
  CHECK(g.lattice);
  CHECK(std::abs(g.generator - 0.5) < 1e-15);
  CHECK(std::abs(g.period - 2 * kPi / std::log(2.0)) < 1e-12);
  CHECK(g.period == doctest::Approx(9.06472).epsilon(1e-6));
  const auto q = lattice_analysis(DirichletPolynomial::make({{1, 0.25}, {1, 0.5}}));
  CHECK(q.lattice);
  CHECK(std::abs(q.generator - 0.5) < 1e-15);
  const auto n = lattice_analysis(DirichletPolynomial::make({{1, 0.5}, {1, 1.0 / 3.0}}), 10000);
  CHECK(!n.lattice);
  const auto c = lattice_analysis(DirichletPolynomial::make({{8, 1.0 / 3.0}}));
  CHECK(std::abs(c.period - 2 * kPi / std::log(3.0)) < 1e-12);
}

TEST_CASE("pole enumeration") {
  SUBCASE("gasket window") {
    const auto poles = poles_in_window(gasket(), {-1.0, 3.0, 30.0});
    REQUIRE(poles.size() == 9);
    const double D = std::log2(3.0), p = 2 * kPi / std::log(2.0);
    int lattice = 0;
    for (const auto& z : poles) {
      CHECK(z.order == 1);
      CHECK(!z.cancelled);
      if (std::abs(z.s.real() - D) < 1e-12) {
        ++lattice;
        const double k = z.s.imag() / p;
        CHECK(std::abs(k - std::round(k)) < 1e-10);
        CHECK(std::abs(k) <= 3.0 + 1e-9);
        CHECK(z.principal);
      } else {
        CHECK(std::abs(z.s.imag()) == 0.0);
        CHECK((std::abs(z.s.real()) < 1e-15 || std::abs(z.s.real() - 1.0) < 1e-15));
      }
    }
    CHECK(lattice == 7);
  }
  SUBCASE("3-gasket: double pole at 2") {
    const auto e = catalog_example("ngasket-3", false);
    const auto poles = poles_in_window(e.expr, e.window);
    bool found = false;
    for (const auto& z : poles)
      if (std::abs(z.s - cplx(2.0)) < 1e-9) {
        found = true;
        CHECK(z.order == 2);
        CHECK(z.principal_part.size() == 2);
      }
    CHECK(found);
  }
  SUBCASE("disk") {
    const MeroExpr ball = mero_term(2 * kPi, 1.0, {{0.0, 1}, {1.0, 1}});
    const auto poles = poles_in_window(ball, {-1.0, 3.0, 30.0});
    REQUIRE(poles.size() == 2);
    for (const auto& z : poles) {
      CHECK(z.order == 1);
      CHECK(z.s.imag() == 0.0);
    }
  }
}

TEST_CASE("property: enumerated zeros satisfy the equation, are i p periodic, and match the winding count") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> k(1, 3), nb(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    // lattice polynomials in r = 1/2 with random exponents, plus one nonlattice case per few
    std::vector<std::pair<double, double>> terms;
    const int n = nb(rng);
    for (int j = 0; j < n; ++j) terms.emplace_back(1.0 + j, std::pow(0.5, k(rng)));
    if (trial % 4 == 3) terms.emplace_back(1.0, 1.0 / 3.0);
    const auto f = DirichletPolynomial::make(terms);
    const Window w{-3.0, 3.0, 25.0};
    const auto zs = dirichlet_zeros(f, w);
    int total = 0;
    for (const auto& z : zs) {
      CHECK(std::abs(f.eval(z.s)) <= 1e-10);
      total += z.multiplicity;
    }
    CHECK(total == winding_count(f, w));
    CHECK(total == oracle::zero_count([&](cplx s) { return f.eval(s); }, w.re_min, w.re_max, -w.im_max, w.im_max));
    const auto li = lattice_analysis(f);
    if (li.lattice) {
      // the zero set is invariant under s -> s + i p
      for (const auto& z : zs) {
        if (z.s.imag() + li.period > w.im_max - 1e-9) continue;
        bool shifted = false;
        for (const auto& y : zs) shifted |= std::abs(y.s - (z.s + cplx(0.0, li.period))) < 1e-9;
        CHECK(shifted);
      }
    }
  }
}

TEST_CASE("residues") {
  SUBCASE("torus tube at 2") {
    const double R = 2.0, r = 0.5;
    const MeroExpr t = positive_reach_zeta({0.0, -2 * kPi * R, 4 * kPi * R * r}, 3, r);
    const ResidueReport rr = residue_at(t, 2.0);
    REQUIRE(rr.analytic);
    CHECK(std::abs(*rr.analytic - 4 * kPi * R * r) < 1e-13);
    CHECK(std::abs(rr.contour_residue - 4 * kPi * R * r) < 1e-8);
    const MeroExpr lin = positive_reach_zeta({0.0, 0.0, 8 * kPi * R * r}, 3, r);
    const auto lp = poles_in_window(lin, {-1.0, 4.0, 5.0});
    REQUIRE(lp.size() == 1);
    CHECK(std::abs(lp[0].s - cplx(2.0)) < 1e-15);
    CHECK(std::abs(lp[0].residue() - 8 * kPi * R * r) < 1e-12);
    CHECK(std::abs(abscissa_estimate(positive_reach_zeta({0.0, 0.0, 1.0}, 3, 1.0)) - 2.0) < 1e-15);
    CHECK(code_of([] { positive_reach_zeta({0.0, 0.0}, 2, 1.0); }) == Errc::AllZeroCoefficients);
  }
  SUBCASE("scaling moves residues by lambda^omega") {
    const MeroExpr g = gasket();
    const double D = std::log2(3.0);
    const cplx w(D, 2 * kPi / std::log(2.0));
    const cplx r1 = residue_at(g, w).residue(), r2 = residue_at(scale_expr(g, 2.0), w).residue();
    CHECK(std::abs(r2 - std::pow(2.0, w) * r1) < 1e-12 * std::abs(r2));
    CHECK(std::abs(eval_expr(scale_expr(g, 0.5), 2.0) - eval_expr(g, 2.0) / 4.0) < 1e-15);
    CHECK(std::abs(eval_expr(scale_expr(g, 1.0), cplx(1.2, 3.0)) - eval_expr(g, cplx(1.2, 3.0))) < 1e-15);
  }
  SUBCASE("analytic vs independent contour on the gasket") {
    for (const auto& z : poles_in_window(gasket(), {-1.0, 3.0, 30.0})) {
      const cplx ref = oracle::contour_residue([&](cplx s) { return eval_expr(gasket(), s); }, z.s, 0.05);
      CHECK(std::abs(z.residue() - ref) < 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
  SUBCASE("errors") {
    CHECK(code_of([] { residue_at(gasket(), cplx(1.3, 0.2)); }) == Errc::NotAPole);
  }
}

TEST_CASE("tube <-> distance transfer") {
  const double R = 2.0, r = 0.5;
  const MeroExpr tube = positive_reach_zeta({0.0, -2 * kPi * R, 4 * kPi * R * r}, 3, r);
  const double sat = 2 * kPi * kPi * R * r * r;
  const MeroExpr dist = tube_to_distance(tube, 3, r, sat);
  // N - omega = 1: residues equal
  CHECK(std::abs(residue_at(dist, 2.0).residue() - 4 * kPi * R * r) < 1e-12);
  // distance at s = N is the whole region
  CHECK(std::abs(eval_expr(dist, 3.0) - sat) < 1e-12);
  const MeroExpr back = distance_to_tube(dist, 3, r, sat);
  for (cplx s : {cplx(0.5, 1.0), cplx(2.5, -4.0)}) CHECK(std::abs(eval_expr(back, s) - eval_expr(tube, s)) < 1e-12);
  CHECK(code_of([] { distance_to_tube(mero_term(1.0, 1.0, {{1.0, 1}}), 1, 1.0, 1.0); }) == Errc::DegenerateDimension);
}

TEST_CASE("classification") {
  CHECK(classify_fractality(gasket(), {-1.0, 3.0, 30.0}).kind == Fractality::critically_fractal);
  const auto g = catalog_example("cantor-graph", false);
  const Classification c = classify_fractality(g.expr, g.window);
  CHECK(c.kind == Fractality::strictly_subcritically_fractal);
  REQUIRE(c.dims.size() == 1);
  CHECK(std::abs(c.dims[0] - std::log(2.0) / std::log(3.0)) < 1e-12);
  CHECK(std::abs(c.D - 1.0) < 1e-12);
  const MeroExpr ball = mero_term(2 * kPi, 1.0, {{0.0, 1}, {1.0, 1}});
  CHECK(classify_fractality(ball, {-1.0, 3.0, 30.0}).kind == Fractality::not_fractal);
  CHECK(std::string(fractality_name(Fractality::critically_fractal)) == "critically_fractal");
  CHECK(code_of([&] { classify_fractality(ball, {1.2, 1.4, 1.0}); }) == Errc::EmptyWindow);
}

TEST_CASE("pole search is repeatable and thread-count independent") {
  const auto e = catalog_example("sierpinski-carpet", false);
  set_threads(1);
  const auto a = poles_in_window(e.expr, e.window);
  set_threads(4);
  const auto b = poles_in_window(e.expr, e.window);
  set_threads(0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].s == b[i].s);
}
