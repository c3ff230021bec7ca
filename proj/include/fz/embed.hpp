#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fz/common.hpp"
#include "fz/mero.hpp"

namespace fz {

// pi^(M/2) Gamma((N-s)/2 + 1) / Gamma((N+M-s)/2 + 1). Where both Gammas have poles the
// finite limit is returned; a pole of the numerator alone throws PoleHit.
cplx gamma_ratio_factor(int N, int M, cplx s);

// Gamma(a) / Gamma(b) through complex log-Gamma; b may be a pole (result 0).
cplx gamma_quotient(cplx a, cplx b);

// zeta~_A(s; delta') for a set A in R^N, as a function of (s, delta').
using TubeZetaHandle = std::function<cplx(cplx, double)>;

struct EmbedValue {
  cplx value;
  double error = 0.0;
};

// 2 int_0^{pi/2} zeta~_A(s; delta sin tau) sin^{N+1-s} tau dtau: tube zeta of A x {0} in R^{N+1}.
EmbedValue embed_tube_zeta(const TubeZetaHandle& tube, cplx s, double delta, int N, double tol = 1e-11);

// E(s; delta) = zeta~_{A x {0}} - gamma_ratio_factor(N, 1, s) zeta~_A, from its defining integral.
EmbedValue embedding_error_term(const TubeZetaHandle& tube, cplx s, double delta, int N, double tol = 1e-11);

// 2 delta^(Re s - N) |A_delta| (pi/2 - 1), valid for Re s < N + 1.
double embedding_error_bound(double re_s, int N, double delta, double tube_volume_at_delta);

// Residue of E(.; delta) at s_k = N + 2 + 2k divided by zeta~_A(s_k; delta):
// 2 (-1)^k pi^(M/2) / (k! Gamma(M/2 - k)), zero when M is even and k >= M/2.
double embedding_error_residue_factor(int M, int k);

// res(zeta~_{A_M}, D) from res(zeta~_A, D) for a simple pole D < N.
double residue_transfer(double res, int N, int M, double D);

// Content normalization invariant under A -> A x {0}: M Gamma((N-D)/2 + 1) / pi^((N-D)/2).
double kneser_normalized_content(double content, int N, double D);

// Cantor dust C x C in Omega = (0,1)^2, C the middle-third set.
cplx cantor_dust_zeta(cplx s);
MeroExpr cantor_dust_mero();

// Building blocks: I(s) = int_0^{pi/4} cos^-s; strip RFD (C/3 x {0}, (0,1/3) x (0,1/6)).
cplx dust_corner_integral(cplx s);
cplx dust_strip_zeta(cplx s);         // Gamma route plus error series; all s off the poles
cplx dust_strip_zeta_direct(cplx s);  // direct gap quadrature; Re s > log_3 2
cplx dust_strip_error(cplx s);        // E(s; 1/6), meromorphic with poles at odd integers

struct DustDimension {
  ComplexDimension dim;
  std::string lattice;  // "critical", "cantor", "origin", "other"
  std::string status;   // critical-line members off the real axis carry "conjecture (paper)"
};
std::vector<DustDimension> cantor_dust_dimensions(const Window& w, const PoleOptions& opt = {});

}  // namespace fz
