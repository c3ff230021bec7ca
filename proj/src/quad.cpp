#include "fz/quad.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace fz {

namespace bq = boost::math::quadrature;

Quad integrate_gk(const CFun& f, double a, double b, double tol, unsigned max_depth) {
  double err = 0.0;
  cplx v = bq::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, tol, &err);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(Errc::QuadratureFailure, "non-finite Gauss-Kronrod result");
  return {v, err * std::max(1.0, std::abs(v))};
}

double integrate_gk_real(const RFun& f, double a, double b, double tol, double* err,
                         unsigned max_depth) {
  double e = 0.0;
  double v = bq::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, tol, &e);
  if (!std::isfinite(v)) throw Error(Errc::QuadratureFailure, "non-finite Gauss-Kronrod result");
  if (err) *err = e * std::max(1.0, std::abs(v));
  return v;
}

namespace {
bq::tanh_sinh<double>& ts_rule() {
  thread_local bq::tanh_sinh<double> rule(15);
  return rule;
}
}  // namespace

Quad integrate_ts(const CFun& f, double a, double b, double tol) {
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  cplx v = ts_rule().integrate(f, a, b, tol, &err, &l1, &levels);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(Errc::QuadratureFailure, "non-finite tanh-sinh result");
  return {v, err};
}

double integrate_ts_real(const RFun& f, double a, double b, double tol, double* err) {
  double e = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  double v = ts_rule().integrate(f, a, b, tol, &e, &l1, &levels);
  if (!std::isfinite(v)) throw Error(Errc::QuadratureFailure, "non-finite tanh-sinh result");
  if (err) *err = e;
  return v;
}

Quad integrate_halfline(const CFun& f, double a, double tol) {
  thread_local bq::exp_sinh<double> rule(12);
  double err = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  auto g = [&](double u) { return f(a + u); };
  cplx v = rule.integrate(g, tol, &err, &l1, &levels);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(Errc::QuadratureFailure, "non-finite exp-sinh result");
  return {v, err};
}

cplx integrate_gl(const CFun& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  ComplexSum acc;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    acc.add(bq::gauss<double, 40>::integrate(f, lo, lo + h));
  }
  return acc.value();
}

}  // namespace fz
