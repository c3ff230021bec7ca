#include "fz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>

#include "fz/cantor.hpp"
#include "fz/embed.hpp"
#include "fz/mero.hpp"
#include "fz/rfd.hpp"
#include "fz/sprays.hpp"
#include "fz/strings.hpp"

namespace fz {

namespace {

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct Suite {
  std::string name;
  double scale;
  std::vector<Check> out;

  // residual <= limit passes
  void le(const std::string& what, double residual, double limit, const std::string& detail = {}) {
    const double lim = limit * scale;
    out.push_back({name, what, residual, lim, std::isfinite(residual) && residual <= lim, detail});
  }
  void truth(const std::string& what, bool ok, const std::string& detail = {}) {
    out.push_back({name, what, ok ? 1.0 : 0.0, 1.0, ok, detail});
  }
  // Runs body; an exception becomes a failed check instead of aborting the suite.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, what, NAN, 0.0, false, std::string("exception: ") + e.what()});
    }
  }
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

std::vector<cplx> sample_s(double re_lo, double re_hi, double im_hi, int n) {
  std::vector<cplx> s;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    s.emplace_back(re_lo + (re_hi - re_lo) * u, im_hi * std::sin(2.4 * i));
  }
  return s;
}

// ---- strings --------------------------------------------------------------------------------

void suite_strings(Suite& S) {
  const FractalString L = cantor_string(2, 1.0 / 3.0);
  const MeroExpr M = string_mero(L);
  S.guard("cantor string zeta: series vs closed form", [&] {
    double worst = 0;
    for (cplx s : {cplx(0.8, 0), cplx(1.3, 2.0), cplx(2.0, -5.0)}) worst = std::max(worst, rel(geometric_zeta(L, s).value, eval_expr(M, s)));
    S.le("cantor string zeta: series vs closed form", worst, 1e-11);
  });
  S.guard("string scaling", [&] {
    double worst = 0;
    const FractalString L2 = scale_string(L, 0.37);
    for (cplx s : sample_s(0.7, 2.5, 6.0, 8))
      worst = std::max(worst, rel(geometric_zeta(L2, s).value, real_pow(0.37, s) * geometric_zeta(L, s).value));
    S.le("string scaling zeta(lambda L) = lambda^s zeta(L)", worst, 1e-12);
  });
  S.guard("total length", [&] { S.le("cantor string total length = 1", std::abs(total_length(L) - 1.0), 1e-12); });
  S.guard("disjoint union additivity", [&] {
    const FractalString A = a_string(0.5, 2000);
    const FractalString U = disjoint_union({L, L});
    double worst = 0;
    for (cplx s : sample_s(0.8, 2.0, 3.0, 5)) worst = std::max(worst, rel(geometric_zeta(U, s).value, 2.0 * geometric_zeta(L, s).value));
    S.le("disjoint union zeta is additive", worst, 1e-12);
    S.le("a-string abscissa 1/(1+a)", std::abs(abscissa_estimate(A) - 2.0 / 3.0), 1e-12);
  });
  S.guard("tensor product", [&] {
    const FractalString T = tensor_product(L, L, 40, 1e-6);
    const cplx s(1.6, 0.0);
    S.le("tensor product zeta = product of zetas", rel(eval_expr(string_mero(T), s), geometric_zeta(L, s).value * geometric_zeta(L, s).value), 1e-10);
  });
}

// ---- cantor ---------------------------------------------------------------------------------

void suite_cantor(Suite& S) {
  S.guard("oracle vs closed", [&] {
    double worst = 0;
    for (auto [m, a] : {std::pair{2, 1.0 / 3.0}, std::pair{3, 0.2}, std::pair{2, 0.25}}) {
      auto [C, inv] = gcs_create(m, a);
      for (int i = 0; i < 50; ++i) {
        const double t = std::exp(std::log(1e-8) + (std::log(C.c) - std::log(1e-8)) * (i + 0.5) / 50.0);
        worst = std::max(worst, rel_diff(tube_volume_oracle(C, t), tube_volume_closed(C, t)));
      }
    }
    S.le("tube oracle vs closed form, 3 sets x 50 t", worst, 1e-12);
  });
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  S.guard("bracketing", [&] {
    S.truth("average content inside (M_lower, M_upper)", inv.M_lower < inv.res_tube_at_D && inv.res_tube_at_D < inv.M_upper,
            fmt("%.6f", inv.res_tube_at_D));
    const ContentExtrema ex = content_extrema_oracle(C);
    S.le("oracle extrema vs closed M_lower", rel_diff(ex.min, inv.M_lower), 1e-6);
    S.le("oracle extrema vs closed M_upper", rel_diff(ex.max, inv.M_upper), 1e-6);
  });
  S.guard("cesaro content", [&] {
    RfdParams pc;
    const TubeSamples ts = tube_function_numeric(build_rfd("cantor", pc), log_grid(C.c * std::pow(C.a, 14), C.c * C.a, 3000));
    const double avg = minkowski_content_estimate(ts, 1, C.D).average;
    S.le("Cesaro average content vs tube residue (relative)", rel_diff(avg, inv.res_tube_at_D), 0.01, fmt("%.6f", avg));
  });
  S.guard("serial vs parallel oracle", [&] {
    bool same = true;
    for (double t : {1e-3, 3.3e-5, 7e-7}) same &= tube_volume_oracle(C, t, Exec::serial) == tube_volume_oracle(C, t, Exec::parallel);
    S.truth("serial and parallel oracle are bit-identical", same);
  });
  S.guard("distance zeta", [&] {
    RfdParams p;
    p.delta = 0.5;
    const Rfd r = build_rfd("cantor", p);
    double worst = 0;
    for (cplx s : sample_s(0.8, 2.0, 8.0, 6)) worst = std::max(worst, rel(distance_zeta_numeric(r, s).value, gcs_distance_zeta_closed(C, 0.5, s)));
    S.le("distance zeta closed vs profile quadrature", worst, 1e-9);
  });
  S.guard("independence", [&] {
    auto cert = log_independence_certificate({2, 3, 5, 7});
    S.truth("log 2, log 3, log 5, log 7 independent (rank 4)", cert.independent && cert.factorization_rank == 4);
    auto dep = log_independence_certificate({2, 4, 3});
    S.truth("log 2, log 4, log 3 dependent", !dep.independent);
  });
  S.guard("quasiperiodic drum", [&] {
    auto q = quasiperiodic_drum_build(0.5, 4);
    double worst = 0;
    const auto p = first_primes(4);
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(q.T[i] - 2.0 * std::log(static_cast<double>(p[i]))));
    S.le("drum quasiperiods are 2 log p_i", worst, 1e-12);
    S.truth("drum independence certificate", q.certificate.independent);
  });
}

// ---- merozeta -------------------------------------------------------------------------------

void suite_merozeta(Suite& S) {
  S.guard("moran", [&] {
    for (auto [b, r, name] : {std::tuple{3.0, 0.5, "(3,1/2)"}, std::tuple{8.0, 1.0 / 3.0, "(8,1/3)"}}) {
      auto f = DirichletPolynomial::make({{b, r}});
      const double D = moran_root(f);
      S.le(std::string("Moran residual ") + name, std::abs(b * std::pow(r, D) - 1.0), 1e-13);
      S.le(std::string("Moran root ") + name, std::abs(D - std::log(b) / std::log(1.0 / r)), 1e-13);
      auto li = lattice_analysis(f);
      S.le(std::string("lattice period ") + name, std::abs(li.period - 2.0 * kPi / std::log(1.0 / r)), 1e-12);
    }
  });
  S.guard("zeros", [&] {
    const Window w{-2.0, 2.0, 40.0};
    for (auto f : {DirichletPolynomial::make({{3.0, 0.5}}), DirichletPolynomial::make({{1.0, 0.5}, {1.0, 1.0 / 3.0}})}) {
      auto a = dirichlet_zeros(f, w), b = dirichlet_zeros_newton(f, w);
      bool same = a.size() == b.size();
      for (size_t i = 0; same && i < a.size(); ++i) same = std::abs(a[i].s - b[i].s) < 1e-9;
      int total = 0;
      for (auto& z : a) total += z.multiplicity;
      S.truth("zero enumeration matches reference search and winding count",
              same && total == winding_count(f, w), std::to_string(a.size()) + " zeros");
    }
  });
  S.guard("residues", [&] {
    auto [C, inv] = gcs_create(2, 1.0 / 3.0);
    const MeroExpr e = gcs_distance_mero(C, 0.5);
    const ResidueReport rr = residue_at(e, C.D);
    S.le("Cantor distance residue analytic vs closed", std::abs(rr.residue() - inv.res_distance_at_D), 1e-10);
    S.le("Cantor distance residue contour vs closed", std::abs(rr.contour_residue - inv.res_distance_at_D), 1e-8);
  });
  S.guard("tube distance round trip", [&] {
    auto [C, inv] = gcs_create(2, 1.0 / 3.0);
    const MeroExpr dist = gcs_distance_mero(C, 0.5);
    const MeroExpr tube = distance_to_tube(dist, 1, 0.5, 2.0);
    const MeroExpr back = tube_to_distance(tube, 1, 0.5, 2.0);
    double worst = 0;
    for (cplx s : sample_s(-0.5, 1.8, 10.0, 8)) {
      worst = std::max(worst, rel(eval_expr(tube, s), eval_expr(gcs_tube_mero(C, 0.5), s)));
      worst = std::max(worst, rel(eval_expr(back, s), gcs_distance_zeta_closed(C, 0.5, s)));
    }
    S.le("tube <-> distance functional equation on the Cantor set", worst, 1e-12);
  });
  S.guard("residue transfer", [&] {
    auto [C, inv] = gcs_create(2, 1.0 / 3.0);
    const cplx rd = residue_at(gcs_distance_mero(C, 0.5), C.D).contour_residue;
    const cplx rt = residue_at(gcs_tube_mero(C, 0.5), C.D).contour_residue;
    S.le("Cantor: res(distance) = (N - D) res(tube), contour", std::abs(rd - (1.0 - C.D) * rt), 1e-8);
    const double R = 2.0, r = 0.5;
    const MeroExpr tube = positive_reach_zeta({0.0, -2.0 * kPi * R, 4.0 * kPi * R * r}, 3, r);
    const MeroExpr dist = tube_to_distance(tube, 3, r, 2.0 * kPi * kPi * R * r * r);
    const cplx td = residue_at(dist, 2.0).contour_residue, tt = residue_at(tube, 2.0).contour_residue;
    S.le("torus: res(distance) = (N - 2) res(tube), contour", std::abs(td - tt), 1e-8);
  });
  S.guard("positive reach", [&] {
    const double R = 2.0, r = 0.5;
    const MeroExpr t = positive_reach_zeta({0.0, -2.0 * kPi * R, 4.0 * kPi * R * r}, 3, r);
    const ResidueReport rr = residue_at(t, 2.0);
    S.le("positive-reach tube residue at 2 is 4 pi R r", std::abs(rr.residue() - 4.0 * kPi * R * r), 1e-12);
    S.le("positive-reach contour residue", std::abs(rr.contour_residue - 4.0 * kPi * R * r), 1e-8);
  });
}

// ---- rfd ------------------------------------------------------------------------------------

void suite_rfd(Suite& S, std::uint64_t seed) {
  RfdParams pc;
  pc.delta = 0.5;
  const Rfd cantor = build_rfd("cantor", pc);
  S.guard("scaling", [&] {
    double worst = 0;
    for (auto& c : verify_scaling(cantor, 1.0 / 3.0, sample_s(0.8, 2.2, 10.0, 20))) worst = std::max(worst, c.residual);
    S.le("scaling identity on the Cantor RFD, 20 s", worst, 1e-8);
  });
  S.guard("union", [&] {
    RfdParams pu;
    pu.omega = "unit";
    const Rfd u = build_rfd("cantor", pu);
    RfdParams ps;
    ps.string = std::make_shared<FractalString>(make_string({{1.0 / 3.0, 1}}));
    const Rfd mid = transform_rfd(build_rfd("string", ps), 1.0, {1.0 / 3.0, 0, 0});
    double worst = 0;
    for (auto& c : verify_union(u, {transform_rfd(u, 1.0 / 3.0), transform_rfd(u, 1.0 / 3.0, {2.0 / 3.0, 0, 0}), mid},
                                sample_s(0.8, 2.2, 10.0, 20)))
      worst = std::max(worst, c.residual);
    S.le("union additivity on the Cantor RFD, 20 s", worst, 1e-8);
  });
  S.guard("functional equation", [&] {
    RfdParams pb;
    pb.N = 3;
    RfdParams pt;
    pt.R = 2.0;
    pt.r = 0.5;
    struct G {
      Rfd r;
      double delta, lo, hi;
    };
    std::vector<G> gs{{build_rfd("ball", pb), 1.0, 2.2, 2.9},
                      {build_rfd("torus", pt), 0.5, 2.2, 2.9},
                      {cantor, 0.5, 0.75, 0.98},
                      {build_rfd("gasket"), 1.0, 1.65, 1.98}};
    for (auto& g : gs) {
      double worst_ratio = 0;
      for (cplx s : sample_s(g.lo, g.hi, 5.0, 10)) {
        const NumericValue d = distance_zeta_numeric(g.r, s);
        const NumericValue t = tube_zeta_numeric(g.r, s, g.delta);
        const double vol = tube_volume_exact(g.r, g.delta);
        const cplx rhs = real_pow(g.delta, s - static_cast<double>(g.r.N)) * vol + (static_cast<double>(g.r.N) - s) * t.value;
        const double err = d.error + std::abs(static_cast<double>(g.r.N) - s) * t.error;
        const double allowed = std::max(5.0 * err, 1e-13 * (1.0 + std::abs(d.value)));
        worst_ratio = std::max(worst_ratio, std::abs(d.value - rhs) / allowed);
      }
      S.le("functional equation on " + g.r.kind + " (residual / 5x error)", worst_ratio, 1.0);
    }
  });
  S.guard("lipschitz", [&] {
    double worst = -1;
    for (const char* k : {"gasket", "carpet", "cantor_graph", "cusp", "cantor_dust"}) worst = std::max(worst, lipschitz_violation(build_rfd(k), 5000, seed));
    S.le("distance functions are 1-Lipschitz", std::max(0.0, worst), 1e-12);
  });
  S.guard("monte carlo", [&] {
    NumericConfig mc;
    mc.method = NumericConfig::Method::montecarlo;
    mc.seed = seed;
    const Rfd g = build_rfd("gasket");
    const NumericValue a = distance_zeta_numeric(g, 1.8, mc), b = distance_zeta_numeric(g, 1.8);
    S.le("gasket Monte Carlo vs profile (standard errors)", std::abs(a.value - b.value) / a.error, 4.0);
    const NumericValue m1 = distance_zeta_numeric(g, 1.8, mc);
    S.truth("Monte Carlo is reproducible for a fixed seed", m1.value == a.value);
  });
  S.guard("fits", [&] {
    const TubeSamples tc = tube_function_numeric(cantor, log_grid(1e-7, 1e-1, 200));
    S.le("Cantor set box dimension fit", std::abs(box_dimension_fit(tc, 1).D - std::log(2.0) / std::log(3.0)), 0.01);
    NumericConfig mc;
    mc.method = NumericConfig::Method::montecarlo;
    mc.samples = 1000000;
    mc.seed = seed;
    const TubeSamples td = tube_function_numeric(build_rfd("cantor_dust"), log_grid(1e-5, 1e-1, 80), mc);
    S.le("Cantor dust box dimension fit (Monte Carlo)", std::abs(box_dimension_fit(td, 2, {1e-4, 1e-2}).D - std::log(4.0) / std::log(3.0)), 0.03);
    const Rfd cusp = build_rfd("cusp");
    const TubeSamples tu = tube_function_numeric(cusp, log_grid(1e-6, 1e-1, 100));
    S.le("cusp alpha=2 box dimension fit", std::abs(box_dimension_fit(tu, 2).D + 1.0), 0.05);
  });
}

// ---- sprays ---------------------------------------------------------------------------------

void suite_sprays(Suite& S) {
  for (const auto& name : catalog_names()) {
    S.guard(name, [&] {
      const CatalogEntry e = catalog_example(name);
      S.le(name + ": zeta(N) = |Omega|", rel_diff(eval_expr(e.expr, static_cast<double>(e.N)).real(), e.measure), 1e-6);
      S.truth(name + ": generator validated", e.validated, fmt("residual %.2e", e.validation_residual));
      std::vector<AuditRecord> audit;
      const auto poles = poles_in_window(e.expr, e.window, {}, &audit);
      bool aud = true;
      for (auto& a : audit) aud &= a.enumerated == a.winding;
      S.truth(name + ": argument-principle counts match enumeration", aud);
      const Classification c = classify_poles(poles);
      S.le(name + ": dimension", std::abs(c.D - e.expected_D), 1e-9);
      S.truth(name + ": classification " + e.expected_class, fractality_name(c.kind) == e.expected_class, fractality_name(c.kind));
      int order = 0;
      for (auto& p : poles)
        if (!p.cancelled && std::abs(p.s - cplx(e.expected_D, 0)) < 1e-8) order = p.order;
      S.truth(name + ": order of the pole at D", order == e.expected_D_order, std::to_string(order));
      if (e.spray) {
        double worst = 0;
        for (cplx s : sample_s(e.expected_D + 0.1, e.expected_D + 2.0, 12.0, 20)) {
          const cplx g = eval_expr(e.spray->generator_zeta, s);
          worst = std::max(worst, std::abs(eval_expr(e.expr, s) * e.spray->ratios.eval(s) - g) / (1.0 + std::abs(g)));
        }
        S.le(name + ": self-similar identity", worst, 1e-12);
      }
    });
  }
  S.guard("printed constants", [&] {
    const CatalogEntry g = catalog_example("sierpinski-gasket", false);
    const double s3 = std::sqrt(3.0);
    MeroExpr printed = mero_term(6.0 * s3, 1.0 / (2.0 * s3), {{0.0, 1}, {1.0, 1}});
    CrossCheck cc = generator_crosscheck(printed, *g.spray, {1.7, 2.05, 2.35, 2.8, 3.45});
    S.truth("printed gasket generator rejected; quadrature implies base factor 1/2",
            !cc.pass && cc.uniform_mismatch && std::abs(cc.implied_base - 0.5) < 1e-9 && std::abs(cc.implied_coeff - 1.0) < 1e-9);
    const CatalogEntry h = catalog_example("half-square", false);
    MeroExpr printed_h = mero_term(1.0, 0.25, {{0.0, 1}, {1.0, 1}});
    CrossCheck ch = generator_crosscheck(printed_h, *h.spray, {1.7, 2.05, 2.35, 2.8, 3.45});
    S.truth("printed half-square generator rejected; quadrature implies factor 16",
            !ch.pass && ch.uniform_mismatch && std::abs(ch.implied_coeff - 16.0) < 1e-9);
  });
  S.guard("measure divergence", [&] {
    SpraySpec bad;
    bad.N = 2;
    bad.generator_zeta = mero_term(1.0, 0.5, {{0.0, 1}});
    bad.ratios = DirichletPolynomial::make({{5.0, 0.5}});
    bool threw = false;
    try {
      spray_zeta(bad);
    } catch (const Error& e) {
      threw = e.code() == Errc::MeasureDivergence;
    }
    S.truth("sum b r^N >= 1 raises MeasureDivergence", threw);
  });
}

// ---- embed ----------------------------------------------------------------------------------

void suite_embed(Suite& S, std::uint64_t seed) {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const TubeZetaHandle h = [C = C](cplx s, double d) { return gcs_tube_zeta(C, s, d); };
  S.guard("embedding identity", [&] {
    RfdParams p;
    const Rfd emb = build_rfd("cantor_embedded", p);
    double worst = 0;
    for (cplx s : {cplx(0.9, 0), cplx(1.2, 3.0), cplx(1.7, -1.0)}) {
      const EmbedValue v = embed_tube_zeta(h, s, 1.0 / 3.0, 1);
      worst = std::max(worst, rel(v.value, tube_zeta_numeric(emb, s, 1.0 / 3.0).value));
    }
    S.le("tube zeta of C x {0} from the one-dimensional tube zeta", worst, 1e-3);
  });
  S.guard("gamma composition", [&] {
    double worst = 0;
    for (cplx s : sample_s(-3.0, 2.5, 7.0, 10))
      for (int M1 = 1; M1 <= 2; ++M1)
        for (int M2 = 1; M2 <= 2; ++M2)
          worst = std::max(worst, rel(gamma_ratio_factor(1, M1 + M2, s), gamma_ratio_factor(1, M1, s) * gamma_ratio_factor(1 + M1, M2, s)));
    S.le("gamma ratio composition", worst, 1e-12);
    S.le("gamma ratio M=1 at s=N is 2", std::abs(gamma_ratio_factor(3, 1, 3.0) - 2.0), 1e-14);
    S.le("gamma ratio M=2 at s=N is pi", std::abs(gamma_ratio_factor(3, 2, 3.0) - kPi), 1e-14);
  });
  S.guard("error bound", [&] {
    bool ok = true;
    for (double s : {0.4, 0.9, 1.5}) {
      const double E = std::abs(embedding_error_term(h, s, 1.0 / 3.0, 1).value);
      ok &= E <= embedding_error_bound(s, 1, 1.0 / 3.0, tube_volume_closed(C, 1.0 / 3.0));
    }
    S.truth("|E(s)| within 2 delta^(s-N) |A_delta| (pi/2 - 1)", ok);
  });
  S.guard("error residues", [&] {
    double worst = 0;
    for (int M = 1; M <= 3; ++M)
      for (int k = 0; k <= 2; ++k) {
        const int N = 1;
        const double sk = N + 2.0 + 2.0 * k;
        // E = zeta~_{A_M} - ratio * zeta~_A, so res E / zeta~_A(s_k) = -res(ratio)
        auto f = [&](cplx s) { return -gamma_ratio_factor(N, M, s); };
        const auto pp = contour_principal_part(f, sk, 1, 1e-3, 256);
        worst = std::max(worst, std::abs(pp.back() - embedding_error_residue_factor(M, k)));
      }
    S.le("embedding error residues vs contour", worst, 1e-9);
    S.truth("even M kills residues for k >= M/2", embedding_error_residue_factor(2, 1) == 0.0 && embedding_error_residue_factor(4, 3) == 0.0);
  });
  S.guard("residue transfer", [&] {
    RfdParams p;
    const Rfd emb = build_rfd("cantor_embedded", p);
    const double t1 = C.c * std::pow(C.a, 12), t2 = C.c * std::pow(C.a, 2);
    const TubeSamples ts = tube_function_numeric(emb, log_grid(t1, t2, 2000));
    const double avg2 = minkowski_content_estimate(ts, 2, C.D).average;
    const double transferred = residue_transfer(inv.res_tube_at_D, 1, 1, C.D);
    S.le("transferred residue vs planar average content (relative)", rel_diff(avg2, transferred), 0.01,
         fmt("planar %.6f", avg2) + fmt(" transferred %.6f", transferred));
    S.le("normalized content is invariant under embedding",
         rel_diff(kneser_normalized_content(inv.res_tube_at_D, 1, C.D), kneser_normalized_content(transferred, 2, C.D)), 1e-12);
  });
  S.guard("embedded fit", [&] {
    RfdParams p;
    const Rfd emb = build_rfd("cantor_embedded", p);
    RfdParams pc;
    pc.delta = 0.5;
    const double a = box_dimension_fit(tube_function_numeric(build_rfd("cantor", pc), log_grid(1e-7, 1e-1, 200)), 1).D;
    const double b = box_dimension_fit(tube_function_numeric(emb, log_grid(1e-7, 1e-1, 200)), 2).D;
    S.le("embedded vs ambient box dimension", std::abs(a - b), 0.02);
  });
  S.guard("cantor dust", [&] {
    S.le("dust zeta(2) = 1", std::abs(cantor_dust_zeta(2.0) - 1.0), 1e-10);
    const ResidueReport r0 = residue_at(cantor_dust_mero(), 0.0);
    S.le("dust residue at 0 is 2 pi", std::abs(r0.residue() - 2.0 * kPi), 1e-8);
    double worst = 0;
    for (cplx s : {cplx(1.5, 0), cplx(2.2, 1.0), cplx(1.1, -3.0)}) worst = std::max(worst, rel(dust_strip_zeta_direct(s), dust_strip_zeta(s)));
    S.le("strip zeta: direct sum vs Gamma route", worst, 1e-10);
    NumericConfig mc;
    mc.seed = seed;
    const NumericValue v = distance_zeta_numeric(build_rfd("cantor_dust"), 2.2, mc);
    S.le("dust zeta(2.2) vs Monte Carlo (relative)", rel(cantor_dust_zeta(2.2), v.value), 2e-2);
  });
}

}  // namespace

std::vector<std::string> suite_names() { return {"strings", "cantor", "merozeta", "rfd", "sprays", "embed"}; }

std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  Suite S{suite, cfg.tol_scale, {}};
  if (suite == "strings") suite_strings(S);
  else if (suite == "cantor") suite_cantor(S);
  else if (suite == "merozeta") suite_merozeta(S);
  else if (suite == "rfd") suite_rfd(S, cfg.seed);
  else if (suite == "sprays") suite_sprays(S);
  else if (suite == "embed") suite_embed(S, cfg.seed);
  else throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
  return S.out;
}

}  // namespace fz
