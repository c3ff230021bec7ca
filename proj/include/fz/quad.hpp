#pragma once

#include <functional>

#include "fz/common.hpp"

namespace fz {

struct Quad {
  cplx value;
  double error;
};

using CFun = std::function<cplx(double)>;
using RFun = std::function<double(double)>;

// Adaptive Gauss-Kronrod (15/31) for integrands smooth on [a, b].
Quad integrate_gk(const CFun& f, double a, double b, double tol, unsigned max_depth = 18);
double integrate_gk_real(const RFun& f, double a, double b, double tol, double* err = nullptr,
                         unsigned max_depth = 18);

// Double-exponential rule; tolerates integrable algebraic singularities at a and b.
Quad integrate_ts(const CFun& f, double a, double b, double tol);
double integrate_ts_real(const RFun& f, double a, double b, double tol, double* err = nullptr);

// Half line [a, inf); f must decay.
Quad integrate_halfline(const CFun& f, double a, double tol);

// Fixed 40-point Gauss-Legendre on `panels` equal panels; for entire-function handles.
cplx integrate_gl(const CFun& f, double a, double b, int panels);

}  // namespace fz
