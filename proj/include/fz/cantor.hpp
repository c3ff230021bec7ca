#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fz/common.hpp"
#include "fz/mero.hpp"
#include "fz/parallel.hpp"
#include "fz/relation.hpp"

namespace fz {

// C^(m,a): keep m equally spaced subintervals of relative length a at every step.
struct GeneralizedCantorSet {
  int m = 2;
  double a = 1.0 / 3.0;
  double D = 0.0;  // log m / log(1/a)
  double T = 0.0;  // log(1/a), multiplicative period of the tube function
  double p = 0.0;  // 2 pi / T
  double c = 0.0;  // half of the first-level gap, (1 - m a) / (2 (m - 1))
  // false when the closed tube formula disagreed with the interval oracle at build time;
  // tube_volume_closed then defers to the oracle.
  bool closed_form_ok = true;
  std::string diagnostic;
};

struct CantorInvariants {
  double D, T, p;
  double M_lower, M_upper;
  double res_distance_at_D;
  double res_tube_at_D;  // average Minkowski content
};

std::pair<GeneralizedCantorSet, CantorInvariants> gcs_create(int m, double a);

// m^depth intervals [lo, hi] in increasing order.
std::vector<std::pair<double, double>> gcs_intervals(const GeneralizedCantorSet& C, int depth);

// |C_t| from the periodic closed form; t >= c uses 1 + 2t.
double tube_volume_closed(const GeneralizedCantorSet& C, double t);
// G at log(1/t): |C_t| / t^(1-D) for t < c.
double tube_profile(const GeneralizedCantorSet& C, double t);

// Smallest depth with a^depth < t/10.
int oracle_depth(const GeneralizedCantorSet& C, double t);

// Measure of the t-neighbourhood of the depth-level intervals of scale * C.
double tube_volume_oracle(const GeneralizedCantorSet& C, double t, int depth, Exec ex = Exec::parallel,
                          double scale = 1.0);
double tube_volume_oracle(const GeneralizedCantorSet& C, double t, Exec ex = Exec::parallel);

// Reference: generic sort-and-merge of [lo - t, hi + t] over arbitrary intervals.
double union_measure_sweep(std::vector<std::pair<double, double>> intervals, double t);

// Extrema of |C_t| / t^(1-D) over one multiplicative period, using the oracle.
struct ContentExtrema {
  double min, max, t_min, t_max;
};
ContentExtrema content_extrema_oracle(const GeneralizedCantorSet& C, double scale = 1.0);

// zeta_A(s) for A = C, Omega = A_delta, delta >= c.
cplx gcs_distance_zeta_closed(const GeneralizedCantorSet& C, double delta, cplx s);
MeroExpr gcs_distance_mero(const GeneralizedCantorSet& C, double delta);
// Tube zeta int_0^delta t^(s-2) |C_t| dt, delta >= c.
MeroExpr gcs_tube_mero(const GeneralizedCantorSet& C, double delta);

struct IndependenceCertificate {
  long long qmax = 10000;
  bool pairwise_independent = true;  // no pairwise relation up to qmax
  RelationResult scan;               // full bounded scan over all quantities
  bool scan_candidate_refuted = false;  // candidate relation shown false in exact arithmetic
  int factorization_rank = 0;        // rank of prime-exponent vectors of the integers m_i
  bool independent = false;          // exact: factorization_rank == n
};

// Exact test for integers: log m_i are Q-independent iff their prime-exponent vectors are.
IndependenceCertificate log_independence_certificate(const std::vector<long long>& ms,
                                                     long long qmax = 10000);

struct QuasiperiodicDrum {
  int n = 0;
  double D = 0.5;
  double C1 = 1.0;
  std::vector<long long> m;
  std::vector<double> a, c, omega_caps, T;
  IndependenceCertificate certificate;

  struct LatticePoint {
    cplx s;
    int component;  // index i of the quasiperiod T_i
  };
  // Constructed singularities D + (2 pi / T_i) i k with |Im| <= im_max, sorted by Im.
  std::vector<LatticePoint> singularity_lattice(double im_max) const;
};

// m_list empty means the first n primes; c_list empty means c_i = 2^-i.
QuasiperiodicDrum quasiperiodic_drum_build(double D, int n, double C1 = 1.0,
                                           std::vector<double> c_list = {},
                                           std::vector<long long> m_list = {});

std::vector<long long> first_primes(int n);

}  // namespace fz
