#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fz/cantor.hpp"
#include "fz/embed.hpp"
#include "fz/rfd.hpp"
#include "oracle/oracles.hpp"

using namespace fz;

namespace {
double reldiff(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
const double kDc = std::log(2.0) / std::log(3.0);

// Distance from x in [0,1] to the middle-third Cantor set, by ternary descent.
double dist_cantor(double x) {
  double scale = 1.0;
  for (int k = 0; k < 45; ++k) {
    if (x > 1.0 / 3.0 && x < 2.0 / 3.0) return scale * std::min(x - 1.0 / 3.0, 2.0 / 3.0 - x);
    if (x >= 2.0 / 3.0) x -= 2.0 / 3.0;
    x *= 3.0;
    scale /= 3.0;
  }
  return 0.0;
}
}  // namespace

TEST_CASE("gamma ratio anchors") {
  for (cplx s : {cplx(0.3), cplx(-4.1, 2.0), cplx(7.5, -3.0)}) CHECK(gamma_ratio_factor(2, 0, s) == cplx(1.0));
  CHECK(std::abs(gamma_ratio_factor(3, 1, 3.0) - 2.0) < 1e-14);
  CHECK(std::abs(gamma_ratio_factor(3, 2, 3.0) - oracle::pi) < 1e-14);
  CHECK(std::abs(gamma_ratio_factor(1, 1, 1.0) - 2.0) < 1e-14);
  // D = N - 1 with M = 1: sqrt(pi) Gamma(3/2) / Gamma(2) = pi / 2
  CHECK(std::abs(residue_transfer(1.0, 2, 1, 1.0) - oracle::pi / 2) < 1e-14);
  CHECK(residue_transfer(2.52, 1, 0, kDc) == 2.52);
}

TEST_CASE("gamma ratio against tgamma on the real line, including the reflected half") {
  for (int N = 1; N <= 3; ++N)
    for (int M = 1; M <= 4; ++M)
      for (double s = -9.7; s < N + 1.9; s += 0.37) {
        const double a = (N - s) / 2 + 1, b = (N + M - s) / 2 + 1;
        if (std::abs(a - std::round(a)) < 1e-9 && a <= 0) continue;
        const double ref = std::pow(oracle::pi, M / 2.0) * std::tgamma(a) / std::tgamma(b);
        CAPTURE(N);
        CAPTURE(M);
        CAPTURE(s);
        CHECK(std::abs(gamma_ratio_factor(N, M, s).real() - ref) <= 1e-12 * std::abs(ref) + 1e-300);
      }
  CHECK(std::abs(gamma_quotient(0.5, 1.0) - std::sqrt(oracle::pi)) < 1e-14);
  CHECK(std::abs(gamma_quotient(2.5, -3.0)) == 0.0);
  // numerator pole alone: s = N + 2 + 2k
  CHECK_THROWS_AS(gamma_ratio_factor(1, 1, 3.0), Error);
}

TEST_CASE("property: composition of embeddings") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(-6.0, 3.0), im(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const cplx s(re(rng), im(rng));
    for (int N = 1; N <= 2; ++N)
      for (int M1 = 1; M1 <= 2; ++M1)
        for (int M2 = 1; M2 <= 2; ++M2) {
          const cplx lhs = gamma_ratio_factor(N, M1 + M2, s);
          const cplx rhs = gamma_ratio_factor(N, M1, s) * gamma_ratio_factor(N + M1, M2, s);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
  }
}

TEST_CASE("embedding the unit segment into the plane") {
  // |A_t| = 1 + 2t on the line and 2t + pi t^2 in the plane; both tube zetas are elementary
  const TubeZetaHandle seg = [](cplx s, double d) {
    return std::exp((s - 1.0) * std::log(d)) / (s - 1.0) + 2.0 * std::exp(s * std::log(d)) / s;
  };
  for (double d : {0.25, 1.0})
    for (cplx s : {cplx(1.4), cplx(2.3, 1.5), cplx(1.05, -6.0)}) {
      const cplx ref = 2.0 * std::exp((s - 1.0) * std::log(d)) / (s - 1.0) + oracle::pi * std::exp(s * std::log(d)) / s;
      CHECK(reldiff(embed_tube_zeta(seg, s, d, 1).value, ref) < 1e-9);
    }
}

TEST_CASE("embedding the Cantor set into the plane") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const TubeZetaHandle h = [C = C](cplx s, double d) { return gcs_tube_zeta(C, s, d); };
  const Rfd emb = build_rfd("cantor_embedded", RfdParams{});
  for (cplx s : {cplx(0.9), cplx(1.2, 3.0), cplx(1.7, -1.0)}) {
    CAPTURE(s);
    const EmbedValue v = embed_tube_zeta(h, s, 1.0 / 3.0, 1);
    CHECK(reldiff(v.value, tube_zeta_numeric(emb, s, 1.0 / 3.0).value) < 1e-3);
  }
  // error term bound for Re s < N + 1
  for (double d : {1.0 / 3.0, 0.1})
    for (double s : {0.4, 0.9, 1.5, 1.9}) {
      CAPTURE(s);
      const double E = std::abs(embedding_error_term(h, s, d, 1).value);
      CHECK(E <= embedding_error_bound(s, 1, d, tube_volume_closed(C, d)));
    }
}

TEST_CASE("error-term residues and their parity") {
  const int N = 1;
  for (int M = 1; M <= 4; ++M)
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(M);
      CAPTURE(k);
      const double sk = N + 2.0 + 2.0 * k;
      // E = zeta~_{A x R^0...} - ratio zeta~_A, so res E / zeta~_A(s_k) = -res(ratio)
      const cplx r = oracle::contour_residue([&](cplx s) { return -gamma_ratio_factor(N, M, s); }, sk, 0.3);
      const double f = embedding_error_residue_factor(M, k);
      CHECK(std::abs(r - f) < 1e-10 * (1 + std::abs(f)));
      if (M % 2 == 0 && k >= M / 2) CHECK(f == 0.0);
      if (M % 2 == 1) CHECK(f != 0.0);
    }
}

TEST_CASE("residue transfer and the normalized content") {
  auto [C, inv] = gcs_create(2, 1.0 / 3.0);
  const double tr = residue_transfer(inv.res_tube_at_D, 1, 1, C.D);
  const double ref = inv.res_tube_at_D * std::sqrt(oracle::pi) * std::tgamma((1 - C.D) / 2 + 1) / std::tgamma((2 - C.D) / 2 + 1);
  CHECK(std::abs(tr - ref) < 1e-12 * ref);
  CHECK(std::abs(kneser_normalized_content(inv.res_tube_at_D, 1, C.D) - kneser_normalized_content(tr, 2, C.D)) < 1e-12);
  for (double D : {0.2, 0.5, 0.9})
    for (int M = 1; M <= 3; ++M)
      CHECK(std::abs(kneser_normalized_content(1.0, 1, D) - kneser_normalized_content(residue_transfer(1.0, 1, M, D), 1 + M, D)) < 1e-12);

  // the planar average content of C x {0} over whole periods
  const Rfd emb = build_rfd("cantor_embedded", RfdParams{});
  const TubeSamples ts = tube_function_numeric(emb, log_grid(C.c * std::pow(C.a, 12), C.c * std::pow(C.a, 2), 2000));
  CHECK(std::abs(minkowski_content_estimate(ts, 2, C.D).average - tr) < 0.05 * tr);
}

TEST_CASE("Cantor dust") {
  CHECK(std::abs(cantor_dust_zeta(2.0) - 1.0) < 1e-10);
  CHECK(std::abs(residue_at(cantor_dust_mero(), 0.0).residue() - 2 * oracle::pi) < 1e-8);
  CHECK(std::abs(dust_corner_integral(0.0) - oracle::pi / 4) < 1e-14);
  CHECK(std::abs(dust_corner_integral(2.0) - 1.0) < 1e-13);
  for (cplx s : {cplx(1.5), cplx(2.2, 1.0), cplx(1.1, -3.0)}) CHECK(reldiff(dust_strip_zeta_direct(s), dust_strip_zeta(s)) < 1e-10);

  // plain Monte Carlo: d(x, C x C)^2 = d_C(x)^2 + d_C(y)^2
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = 1000000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double dx = dist_cantor(u(rng)), dy = dist_cantor(u(rng));
    const double v = std::pow(dx * dx + dy * dy, 0.1);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / n, se = std::sqrt((sum2 / n - mean * mean) / n);
  const double z = cantor_dust_zeta(2.2).real();
  CHECK(std::abs(z - mean) < 2e-2 * mean);
  CHECK(std::abs(z - mean) < 6 * se);

  // dimensions: the critical line at log3 4 with the Cantor lattice among the candidates
  const auto dims = cantor_dust_dimensions({-0.5, 2.0, 6.0});
  int crit = 0, cantor = 0, crit_real = 0;
  for (const auto& d : dims) {
    if (d.lattice == "critical") {
      ++crit;
      if (std::abs(d.dim.s.imag()) < 1e-8) {
        ++crit_real;
        CHECK(std::abs(d.dim.s.real() - std::log(4.0) / std::log(3.0)) < 1e-12);
        CHECK(d.status == "pole");
      } else if (!d.dim.cancelled) {
        CHECK(d.status.rfind("conjecture", 0) == 0);
      }
    }
    if (d.lattice == "cantor") ++cantor;
  }
  CHECK(crit_real == 1);
  CHECK(crit >= 3);
  CHECK(cantor >= 1);
  std::vector<ComplexDimension> poles;
  for (const auto& d : dims) poles.push_back(d.dim);
  CHECK(std::abs(classify_poles(poles).D - 1.2618595071429148) < 1e-12);
}
