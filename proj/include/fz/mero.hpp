#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fz/common.hpp"
#include "fz/parallel.hpp"

namespace fz {

// f(s) = 1 - sum_j b_j r_j^s with b_j > 0, r_j in (0, 1).
struct DirichletPolynomial {
  std::vector<std::pair<double, double>> terms;  // (b, r), sorted by r descending then b

  static DirichletPolynomial make(std::vector<std::pair<double, double>> terms);
  cplx eval(cplx s) const;
  // k-th derivative of f.
  cplx deriv(cplx s, int k = 1) const;
  // sum_j b_j |r_j^s| |log r_j|^k, a magnitude scale for derivative tests.
  double deriv_scale(cplx s, int k) const;
  double total_weight() const;
  bool operator==(const DirichletPolynomial& o) const { return terms == o.terms; }
};

// Real root of f for any sign; the unique root since sum b r^s is strictly decreasing.
double dirichlet_real_root(const DirichletPolynomial& f);
// Similarity dimension; requires sum b_j > 1 so the root is positive.
double moran_root(const DirichletPolynomial& f);

struct LatticeInfo {
  bool lattice = false;
  double generator = 0.0;      // r with every r_j = r^{k_j}
  double period = 0.0;         // 2 pi / log(1/r)
  std::vector<int> exponents;  // k_j per term
};
LatticeInfo lattice_analysis(const DirichletPolynomial& f, long long qmax = 10000);

struct RationalPole {
  cplx p;
  int order = 1;
};

struct DirichletFactor {
  DirichletPolynomial poly;
  int order = 1;
};

// Entire function given numerically; tol is its evaluation accuracy.
struct EntireFactor {
  std::string name;
  std::function<cplx(cplx)> f;
  double tol = 1e-10;
};

// coeff * base^s * numerator(s) * entire(s) / prod (s - p)^k / prod f(s)^k
struct MeroTerm {
  cplx coeff{1.0, 0.0};
  double base = 1.0;
  std::vector<cplx> numerator;  // ascending powers of s; empty means 1
  std::vector<RationalPole> poles;
  std::vector<DirichletFactor> denoms;
  std::shared_ptr<const EntireFactor> entire;
};

struct MeroExpr {
  std::vector<MeroTerm> terms;
  std::string label;
};

MeroExpr operator+(const MeroExpr& a, const MeroExpr& b);
MeroExpr operator*(const MeroExpr& a, const MeroExpr& b);
MeroExpr operator*(cplx c, const MeroExpr& e);
MeroExpr divide_by(const MeroExpr& e, const DirichletPolynomial& f, int order = 1);
MeroExpr power(const MeroExpr& e, int m);

// Single-term helpers.
MeroExpr mero_term(cplx coeff, double base, std::vector<RationalPole> poles = {},
                   std::vector<DirichletFactor> denoms = {});

cplx eval_term(const MeroTerm& t, cplx s);
cplx eval_expr(const MeroExpr& e, cplx s);
MeroExpr scale_expr(const MeroExpr& e, double lambda);

// Largest real part among declared pole candidates (rational poles, real roots of denominators).
double abscissa_estimate(const MeroExpr& e);

struct Window {
  double re_min = -1.0;
  double re_max = 1.0;
  double im_max = 1.0;
  bool contains(cplx s, double margin = 0.0) const {
    return s.real() >= re_min - margin && s.real() <= re_max + margin &&
           std::abs(s.imag()) <= im_max + margin;
  }
};

struct ComplexDimension {
  cplx s;
  int order = 1;
  std::vector<cplx> principal_part;  // c_{-order}, ..., c_{-1}
  bool principal = false;
  bool cancelled = false;
  cplx residue() const { return principal_part.empty() ? cplx{} : principal_part.back(); }
};

struct PoleOptions {
  double seed_spacing = 0.25;
  double newton_tol = 1e-12;
  int newton_max_iter = 60;
  double dedupe_tol = 1e-9;
  double contour_radius = 1e-3;
  int contour_nodes = 512;
  int audit_nodes = 4096;
  double cancel_tol = 1e-9;
  long long qmax = 10000;
  Exec exec = Exec::parallel;
};

struct DirichletZero {
  cplx s;
  int multiplicity = 1;
};

// Zeros of f inside w; lattice enumeration when the ratios are lattice, Newton seeds otherwise.
std::vector<DirichletZero> dirichlet_zeros(const DirichletPolynomial& f, const Window& w,
                                           const PoleOptions& opt = {});
// Same search forced through the seed grid (reference path for the lattice enumerator).
std::vector<DirichletZero> dirichlet_zeros_newton(const DirichletPolynomial& f, const Window& w,
                                                  const PoleOptions& opt = {});
// Argument-principle zero count of f inside w.
int winding_count(const DirichletPolynomial& f, const Window& w, int nodes = 4096);

struct AuditRecord {
  DirichletPolynomial poly;
  int enumerated = 0;
  int winding = 0;
};

std::vector<ComplexDimension> poles_in_window(const MeroExpr& e, const Window& w,
                                              const PoleOptions& opt = {},
                                              std::vector<AuditRecord>* audit = nullptr);

// Laurent coefficients c_{-K}..c_{-1} on a circle of radius rho.
std::vector<cplx> contour_principal_part(const std::function<cplx(cplx)>& f, cplx omega, int K,
                                         double rho, int nodes);

struct ResidueReport {
  int order = 0;
  std::vector<cplx> principal_part;  // c_{-order}..c_{-1} (contour)
  std::optional<cplx> analytic;      // simple poles only
  cplx contour_residue;
  double discrepancy = 0.0;  // |analytic - contour| when both exist
  cplx residue() const { return analytic ? *analytic : contour_residue; }
};
ResidueReport residue_at(const MeroExpr& e, cplx omega, const PoleOptions& opt = {});

// distance = delta^{s-N} * sat_volume + (N - s) * tube
MeroExpr tube_to_distance(const MeroExpr& tube, int N, double delta, double sat_volume);
MeroExpr distance_to_tube(const MeroExpr& dist, int N, double delta, double sat_volume);

// Tube zeta of a set with tube polynomial |A_t| = sum_k c_k t^{N-k} for t < delta.
MeroExpr positive_reach_zeta(const std::vector<double>& c, int N, double delta);

enum class Fractality { not_fractal, critically_fractal, strictly_subcritically_fractal };
const char* fractality_name(Fractality f);

struct Classification {
  Fractality kind = Fractality::not_fractal;
  double D = 0.0;
  std::vector<double> dims;  // real parts carrying nonreal poles below D
};
Classification classify_poles(const std::vector<ComplexDimension>& poles, double tol = 1e-9);
Classification classify_fractality(const MeroExpr& e, const Window& w, const PoleOptions& opt = {});

}  // namespace fz
