#include "fz/embed.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "fz/quad.hpp"

namespace fz {

namespace {

cplx lngamma(cplx z) {
  gsl_sf_result lnr, arg;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS) throw Error(Errc::PoleHit, "log-Gamma failed near a pole");
  return {lnr.val, arg.val};
}

// Nonpositive integer -k when z is within tol of one, else 1.
long long gamma_pole_index(cplx z, double tol = 1e-12) {
  double k = std::round(z.real());
  if (k <= 0.0 && std::abs(z - cplx(k, 0.0)) < tol) return static_cast<long long>(-k);
  return -1;
}

double factorial(long long k) { return std::exp(std::lgamma(static_cast<double>(k) + 1.0)); }

constexpr double kDustBase = 1.0 / 6.0;  // half of the strip height, equal to its gap offset

}  // namespace

cplx gamma_quotient(cplx a, cplx b) {
  long long ka = gamma_pole_index(a), kb = gamma_pole_index(b);
  if (ka >= 0 && kb >= 0) {
    // Gamma(-k + e) / Gamma(-j + e) -> (-1)^(k-j) j! / k!
    double sign = ((ka - kb) % 2 == 0) ? 1.0 : -1.0;
    return sign * factorial(kb) / factorial(ka);
  }
  if (ka >= 0) throw Error(Errc::PoleHit, "Gamma pole in numerator");
  if (kb >= 0) return 0.0;
  return std::exp(lngamma(a) - lngamma(b));
}

cplx gamma_ratio_factor(int N, int M, cplx s) {
  if (M < 0) throw Error(Errc::InvalidArgument, "M must be nonnegative");
  cplx a = (static_cast<double>(N) - s) / 2.0 + 1.0;
  cplx b = (static_cast<double>(N + M) - s) / 2.0 + 1.0;
  return std::pow(kPi, M / 2.0) * gamma_quotient(a, b);
}

EmbedValue embed_tube_zeta(const TubeZetaHandle& tube, cplx s, double delta, int N, double tol) {
  if (!(delta > 0.0)) throw Error(Errc::InvalidArgument, "delta must be positive");
  cplx e = static_cast<double>(N + 1) - s;
  if (e.real() <= -1.0) throw Error(Errc::NonIntegrable, "sin^(N+1-s) not integrable at 0");
  auto f = [&](double tau) -> cplx {
    double st = std::sin(tau);
    if (st <= 0.0) return 0.0;
    return 2.0 * tube(s, delta * st) * std::exp(e * std::log(st));
  };
  Quad q = integrate_ts(f, 0.0, kPi / 2.0, tol);
  return {q.value, q.error};
}

EmbedValue embedding_error_term(const TubeZetaHandle& tube, cplx s, double delta, int N, double tol) {
  cplx e = static_cast<double>(N + 1) - s;
  if (e.real() <= -1.0) throw Error(Errc::NonIntegrable, "sin^(N+1-s) not integrable at 0");
  cplx full = tube(s, delta);
  auto f = [&](double v) -> cplx {
    double sv = std::sin(v);
    if (sv <= 0.0) return 0.0;
    return -2.0 * std::exp(e * std::log(sv)) * (full - tube(s, delta * sv));
  };
  Quad q = integrate_ts(f, 0.0, kPi / 2.0, tol);
  return {q.value, q.error};
}

double embedding_error_bound(double re_s, int N, double delta, double tube_volume_at_delta) {
  if (re_s >= N + 1) throw Error(Errc::InvalidArgument, "bound requires Re s < N + 1");
  return 2.0 * std::pow(delta, re_s - N) * tube_volume_at_delta * (kPi / 2.0 - 1.0);
}

double embedding_error_residue_factor(int M, int k) {
  if (M < 1 || k < 0) throw Error(Errc::InvalidArgument, "need M >= 1, k >= 0");
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return 2.0 * sign * std::pow(kPi, M / 2.0) * gsl_sf_gammainv(M / 2.0 - k) / factorial(k);
}

double residue_transfer(double res, int N, int M, double D) {
  if (D >= N) throw Error(Errc::InvalidArgument, "transfer needs D < N");
  return gamma_ratio_factor(N, M, D).real() * res;
}

double kneser_normalized_content(double content, int N, double D) {
  double x = (N - D) / 2.0;
  return content * std::tgamma(x + 1.0) / std::pow(kPi, x);
}

// ---- Cantor dust --------------------------------------------------------------------------
//
// Omega \ A splits into the central squares of the removed crosses (distance to four corners)
// and eight strips (0,1/3) x (0,1/6) per cross, each seeing C/3 on its long edge. With
// g = 1 - 4 * 3^-s collecting the self-similar copies:
//   zeta = [8 I(s) 6^-s / s + 8 zeta_strip(s)] / g(s).

cplx dust_corner_integral(cplx s) {
  int panels = 2 + static_cast<int>(std::abs(s.imag()) / 8.0);
  return integrate_gl([&](double phi) { return std::exp(-s * std::log(std::cos(phi))); }, 0.0,
                      kPi / 4.0, panels);
}

// E(s) = -int_{(0,1/3) x [1/6, inf)} d^(s-2). Expanding (u^2 + y^2)^p in u/y <= 1/3 leaves the
// even moments of the distance to C/3, which are geometric sums.
cplx dust_strip_error(cplx s) {
  cplx p = (s - 2.0) / 2.0;
  ComplexSum acc;
  cplx binom = 1.0;
  double pow3 = 3.0;  // 3^(2j+1)
  for (int j = 0; j < 400; ++j) {
    double odd = 2.0 * j + 1.0;
    cplx den = odd - s;
    if (std::abs(den) < 1e-14) throw Error(Errc::PoleHit, "error series pole at odd integer");
    cplx term = binom / (odd * (pow3 - 2.0) * den);
    acc.add(term);
    if (j >= 3 && std::abs(term) < 1e-18 * std::abs(acc.value())) break;
    binom *= (p - static_cast<double>(j)) / static_cast<double>(j + 1);
    pow3 *= 9.0;
  }
  return -real_pow(kDustBase, s - 1.0) / 3.0 * acc.value();
}

cplx dust_strip_zeta_direct(cplx s) {
  if (s.real() <= std::log(2.0) / std::log(3.0))
    throw Error(Errc::AbscissaViolation, "direct strip sum needs Re s > log_3 2");
  const double b = kDustBase;
  const cplx e = s - 1.0;
  // f(u) = 2 u^(s-1) int_0^{asinh(b/u)} cosh^(s-1) w dw; level k contributes 2^(k-1) int_0^{h_k} f,
  // h_k = b 3^-k. Regrouped by panels [h_(j+1), h_j] the weight is 2^j - 1 and each panel is done once.
  auto f = [&](double u) -> cplx {
    const double W = std::asinh(b / u), lu = std::log(u);
    // u^(s-1) cosh^(s-1) w = (u^2 + y^2)^((s-1)/2), combined in the exponent to avoid overflow
    auto inner = [&](double w) -> cplx {
      double lc = w + std::log1p(std::exp(-2.0 * w)) - std::log(2.0);
      return std::exp(e * (lu + lc));
    };
    return 2.0 * integrate_gk(inner, 0.0, W, 1e-14).value;
  };
  ComplexSum acc;
  double weight = 1.0;  // 2^j - 1
  double h = b / 3.0;
  int small = 0;
  for (int j = 1; j < 400 && small < 3; ++j) {
    const cplx term = weight * integrate_gl(f, h / 3.0, h, 3);
    acc.add(term);
    small = std::abs(term) < 1e-17 * std::abs(acc.value()) ? small + 1 : 0;
    weight = 2.0 * weight + 1.0;
    h /= 3.0;
  }
  return acc.value();
}

cplx dust_strip_zeta(cplx s) {
  // sqrt(pi) Gamma((1-s)/2) / Gamma((2-s)/2) * 6^-s / (s (3^s - 2)) + E(s)
  cplx g = std::sqrt(kPi) * gamma_quotient((1.0 - s) / 2.0, (2.0 - s) / 2.0);
  return g * real_pow(kDustBase, s) / (s * (real_pow(3.0, s) - 2.0)) + dust_strip_error(s);
}

namespace {

// Phi(s) = s (3^s - 2) zeta_strip(s) is entire; the Gamma and error-series poles at odd
// integers cancel, so near them the direct sum is used instead.
cplx dust_strip_entire(cplx s) {
  double k = std::round((s.real() - 1.0) / 2.0);
  bool near_odd = k >= 0.0 && std::abs(s - cplx(2.0 * k + 1.0, 0.0)) < 0.1;
  if (near_odd) return s * (real_pow(3.0, s) - 2.0) * dust_strip_zeta_direct(s);
  cplx g = std::sqrt(kPi) * gamma_quotient((1.0 - s) / 2.0, (2.0 - s) / 2.0);
  return g * real_pow(kDustBase, s) + s * (real_pow(3.0, s) - 2.0) * dust_strip_error(s);
}

MeroExpr build_dust_mero() {
  auto f2 = DirichletPolynomial::make({{2.0, 1.0 / 3.0}});
  auto f4 = DirichletPolynomial::make({{4.0, 1.0 / 3.0}});
  MeroTerm corner;
  corner.coeff = 8.0;
  corner.base = kDustBase;
  corner.poles = {{0.0, 1}};
  corner.denoms = {{f4, 1}};
  corner.entire = std::make_shared<EntireFactor>(EntireFactor{"corner_integral", dust_corner_integral, 1e-14});
  MeroTerm strip;
  strip.coeff = 8.0;
  strip.base = 1.0 / 3.0;
  strip.poles = {{0.0, 1}};
  strip.denoms = {{f2, 1}, {f4, 1}};
  strip.entire = std::make_shared<EntireFactor>(EntireFactor{"strip_entire", dust_strip_entire, 1e-10});
  MeroExpr e;
  e.terms = {corner, strip};
  e.label = "cantor-dust";
  return e;
}

}  // namespace

MeroExpr cantor_dust_mero() {
  static const MeroExpr expr = build_dust_mero();
  return expr;
}

cplx cantor_dust_zeta(cplx s) { return eval_expr(cantor_dust_mero(), s); }

std::vector<DustDimension> cantor_dust_dimensions(const Window& w, const PoleOptions& opt) {
  const double Dc = std::log(4.0) / std::log(3.0);
  const double Dk = std::log(2.0) / std::log(3.0);
  std::vector<DustDimension> out;
  for (const auto& d : poles_in_window(cantor_dust_mero(), w, opt)) {
    DustDimension x;
    x.dim = d;
    double re = d.s.real();
    if (std::abs(re - Dc) < 1e-8) x.lattice = "critical";
    else if (std::abs(re - Dk) < 1e-8) x.lattice = "cantor";
    else if (std::abs(d.s) < 1e-8) x.lattice = "origin";
    else x.lattice = "other";
    if (d.cancelled) x.status = "cancelled";
    else if (x.lattice == "critical" && std::abs(d.s.imag()) > 1e-8)
      x.status = "conjecture: nonzero residue observed numerically, not proved";
    else x.status = "pole";
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace fz
