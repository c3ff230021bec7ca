#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fz/cantor.hpp"
#include "fz/common.hpp"
#include "fz/parallel.hpp"
#include "fz/strings.hpp"

namespace fz {

using Point = std::array<double, 3>;

// Pushforward of Lebesgue measure on one region piece under u = d(x, A):
// density m(u) on [0, width], cumulative V(u) = int_0^u m. A family repeats the piece
// b^j times at scale r^j for j >= 0 (b = 0 means a single copy).
struct ProfilePiece {
  std::function<double(double)> density;
  std::function<double(double)> volume;
  double width = 0.0;
  double measure = 0.0;  // V(width)
  double order0 = 0.0;   // m(u) ~ u^order0 as u -> 0
  std::vector<double> kinks;  // interior points where m is not smooth
  double mult = 1.0;
  double b = 0.0, r = 0.0;
  std::string label;
};

struct Rfd {
  int N = 1;
  std::string kind;
  std::string label;
  std::function<double(const Point&)> distance;  // d(x, A)
  std::function<bool(const Point&)> inside;      // x in Omega
  Point lo{}, hi{};                              // bounding box of Omega
  double measure = NAN;                          // |Omega| when known
  std::vector<ProfilePiece> profile;             // empty: Monte Carlo only
  std::function<double(double)> tube_fn;         // exact |A_t ∩ Omega| when no profile exists
  bool profile_truncated = false;
  double dim_hint = NAN;  // expected upper box dimension, for abscissa checks

  bool has_profile() const { return !profile.empty(); }
};

struct RfdParams {
  int m = 2;
  double a = 1.0 / 3.0;
  double delta = 0.5;       // cantor: Omega = A_delta when omega == "delta"
  std::string omega = "delta";
  int N = 2;
  double R = 1.0, r = 0.5;  // ball radius; torus radii
  double alpha = 2.0;       // cusp exponent
  double side = 1.0;        // triangle / square side
  std::vector<std::array<double, 2>> vertices;  // convex polygon
  std::shared_ptr<const FractalString> string;
};

// Kinds: cantor, cantor_embedded (C x {0} in the plane), cantor_dust, polygon, triangle, square,
// ball, torus, cusp, exp_cusp, string, gasket, carpet, cantor_graph.
Rfd build_rfd(const std::string& kind, const RfdParams& p = {});

// x -> lambda x + shift applied to both A and Omega.
Rfd transform_rfd(const Rfd& r, double lambda, const Point& shift = {0, 0, 0});

// Regions must be pairwise disjoint; each part keeps its own distance (compatibility condition).
Rfd rfd_union(const std::vector<Rfd>& parts, std::uint64_t seed = 1);

double distance_to_cantor(const GeneralizedCantorSet& C, double x);

struct NumericConfig {
  enum class Method { automatic, profile, montecarlo };
  Method method = Method::automatic;
  double tol = 1e-10;
  std::uint64_t seed = 20240531;
  std::size_t samples = 0;  // 0: 1e6 in 2D, 4e6 in 3D
  Exec exec = Exec::parallel;
};

struct NumericValue {
  cplx value;
  double error = 0.0;  // quadrature estimate, or Monte Carlo standard error
  std::string method;
  bool below_abscissa_warning = false;
};

NumericValue distance_zeta_numeric(const Rfd& r, cplx s, const NumericConfig& cfg = {});
NumericValue tube_zeta_numeric(const Rfd& r, cplx s, double delta, const NumericConfig& cfg = {});

struct TubeSamples {
  std::vector<double> t, volume, stderr_;
  std::string method;  // "exact" or "montecarlo"
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

TubeSamples tube_function_numeric(const Rfd& r, const std::vector<double>& t_grid,
                                  const NumericConfig& cfg = {});
double tube_volume_exact(const Rfd& r, double t);
std::vector<double> log_grid(double tmin, double tmax, int points);

struct FitRange {
  double tmin = NAN, tmax = NAN;  // NaN: default per method
};

struct DimensionFit {
  double D = 0.0;  // from the global least-squares slope
  double D_upper = 0.0, D_lower = 0.0;
  double slope = 0.0, slope_stderr = 0.0;
  double tmin = 0.0, tmax = 0.0;
  double rms_residual = 0.0;
  std::size_t used = 0;
};

DimensionFit box_dimension_fit(const TubeSamples& samples, int N, FitRange range = {});

struct ContentEstimate {
  double lower = 0.0, upper = 0.0, average = 0.0;
  bool degenerate = false;
};

ContentEstimate minkowski_content_estimate(const TubeSamples& samples, int N, double D, int gauge_m = 0);

struct IdentityCheck {
  std::string name;
  double param = 0.0;
  double residual = 0.0;
  double allowed = 0.0;
  bool pass = false;
};

std::vector<IdentityCheck> verify_scaling(const Rfd& r, double lambda, const std::vector<cplx>& s_list,
                                          const NumericConfig& cfg = {});
std::vector<IdentityCheck> verify_union(const Rfd& whole, const std::vector<Rfd>& parts,
                                        const std::vector<cplx>& s_list, const NumericConfig& cfg = {});
std::vector<IdentityCheck> verify_tube_scaling(const Rfd& r, double lambda, const std::vector<double>& t_list);

// Largest |d(x) - d(y)| - |x - y| over random pairs in the bounding box (<= 0 passes).
double lipschitz_violation(const Rfd& r, std::size_t pairs = 10000, std::uint64_t seed = 7);

// Exact tube |(C x {0})_t| in the plane.
double embedded_cantor_tube(const GeneralizedCantorSet& C, double t);
// 1D tube zeta int_0^delta t^(s-2) |C_t| dt for any delta > 0 (piecewise closed form).
cplx gcs_tube_zeta(const GeneralizedCantorSet& C, cplx s, double delta);

}  // namespace fz
