#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fz/mero.hpp"
#include "fz/rfd.hpp"

namespace fz {

struct SpraySpec {
  std::string label;
  int N = 2;
  MeroExpr generator_zeta;
  DirichletPolynomial ratios;  // 1 - sum b_j r_j^s
  double generator_measure = NAN;
  std::optional<Rfd> generator_rfd;
  // Independent quadrature of int_G d(x, dG)^(s-N) dx for real s above the generator abscissa.
  std::function<NumericValue(double)> generator_quadrature;
  std::string generator_description;
};

struct SprayZeta {
  MeroExpr zeta;
  double declared_D = 0.0;  // max(abscissa of generator, real root of the ratio polynomial)
  double measure = NAN;     // |G| / (1 - sum b r^N)
};

SprayZeta spray_zeta(const SpraySpec& spec);

struct CrossCheck {
  std::vector<double> s;
  std::vector<double> closed, numeric, residual;  // residual relative to |numeric|
  double max_residual = 0.0;
  bool pass = false;
  // numeric / closed ~ coeff * base^s when the mismatch is of that uniform type
  bool uniform_mismatch = false;
  double implied_coeff = 1.0, implied_base = 1.0;
  std::string method;
};

// Report only. Uses generator_quadrature when present, otherwise distance_zeta_numeric on the rfd.
CrossCheck generator_crosscheck(const SpraySpec& spec, const std::vector<double>& s_list, double tol = 1e-6);
CrossCheck generator_crosscheck(const MeroExpr& candidate, const SpraySpec& spec,
                                const std::vector<double>& s_list, double tol = 1e-6);

struct CatalogEntry {
  std::string name;
  std::string description;
  int N = 2;
  double measure = NAN;  // |Omega|
  double expected_D = 0.0;
  int expected_D_order = 1;
  double expected_period = 0.0;  // oscillatory period of the principal lattice, 0 when none
  std::string expected_class;    // fractality_name value
  MeroExpr expr;                 // distance zeta of (A, Omega)
  std::optional<MeroExpr> tube_expr;          // tube zeta when served
  std::optional<MeroExpr> printed_tube_expr;  // published form where it differs
  Window window;
  std::optional<SpraySpec> spray;
  std::string printed_generator;  // published generator form where it differs
  std::vector<std::string> notes;
  bool validated = false;
  bool substituted = false;  // generator constants replaced by quadrature-implied ones
  double validation_residual = 0.0;
};

std::vector<std::string> catalog_names();
// Names: sierpinski-gasket, sierpinski-carpet, ncarpet-N, ngasket-N, half-square, third-square,
// nest, cantor-graph, ball-N, torus, cantor-set, cantor-dust.
CatalogEntry catalog_example(const std::string& name, bool validate = true);

// Generator pieces shared with the tests.
MeroExpr ngasket_generator_zeta(int N);
double ngasket_generator_measure(int N);
double simplex_volume(int N);  // regular N-simplex with unit edge
double simplex_height(int N);
// Inner parallel volume |{x in G : d(x, dG) > u}| of the rectified simplex generator.
double ngasket_inner_volume(int N, double u);
cplx third_square_Z(cplx s);  // int_0^{pi/2} (cos + sin)^-s

}  // namespace fz
