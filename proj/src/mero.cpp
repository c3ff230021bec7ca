#include "fz/mero.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <map>
#include <numeric>

#include "fz/relation.hpp"

namespace fz {

// ---------------------------------------------------------------- Dirichlet polynomials

DirichletPolynomial DirichletPolynomial::make(std::vector<std::pair<double, double>> terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "Dirichlet polynomial needs a term");
  for (auto& [b, r] : terms) {
    if (!(b > 0.0) || !(r > 0.0 && r < 1.0))
      throw Error(Errc::InvalidArgument, "Dirichlet term needs b > 0 and 0 < r < 1");
  }
  std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) { return x.second > y.second; });
  DirichletPolynomial f;
  for (auto& [b, r] : terms) {
    if (!f.terms.empty() && f.terms.back().second == r)
      f.terms.back().first += b;
    else
      f.terms.emplace_back(b, r);
  }
  return f;
}

cplx DirichletPolynomial::eval(cplx s) const {
  cplx acc = 1.0;
  for (auto& [b, r] : terms) acc -= b * real_pow(r, s);
  return acc;
}

cplx DirichletPolynomial::deriv(cplx s, int k) const {
  cplx acc = 0.0;
  for (auto& [b, r] : terms) acc -= b * real_pow(r, s) * std::pow(std::log(r), k);
  return acc;
}

double DirichletPolynomial::deriv_scale(cplx s, int k) const {
  double acc = k == 0 ? 1.0 : 0.0;
  for (auto& [b, r] : terms) acc += b * std::pow(r, s.real()) * std::pow(std::abs(std::log(r)), k);
  return acc;
}

double DirichletPolynomial::total_weight() const {
  double w = 0;
  for (auto& t : terms) w += t.first;
  return w;
}

double dirichlet_real_root(const DirichletPolynomial& f) {
  auto g = [&](double s) {
    double acc = 0;
    for (auto& [b, r] : f.terms) acc += b * std::pow(r, s);
    return acc - 1.0;
  };
  auto dg = [&](double s) {
    double acc = 0;
    for (auto& [b, r] : f.terms) acc += b * std::pow(r, s) * std::log(r);
    return acc;
  };
  double lo = 0.0, hi = 0.0;
  if (g(0.0) > 0) {
    hi = 1.0;
    while (g(hi) > 0) hi *= 2.0;
  } else {
    lo = -1.0;
    while (g(lo) < 0) lo *= 2.0;
  }
  for (int it = 0; it < 300 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 6; ++it) {
    const double step = g(x) / dg(x);
    if (!std::isfinite(step)) break;
    const double y = x - step;
    if (std::abs(g(y)) >= std::abs(g(x))) break;
    x = y;
  }
  return x;
}

double moran_root(const DirichletPolynomial& f) {
  if (f.total_weight() <= 1.0)
    throw Error(Errc::NoRealRoot, "sum of weights <= 1: no positive similarity dimension");
  return dirichlet_real_root(f);
}

LatticeInfo lattice_analysis(const DirichletPolynomial& f, long long qmax) {
  LatticeInfo info;
  const double l0 = std::log(f.terms.front().second);
  std::vector<Rational> rs;
  for (auto& [b, r] : f.terms) {
    auto q = best_rational(std::log(r) / l0, qmax, 1e-12);
    if (!q || q->p <= 0) return info;
    rs.push_back(*q);
  }
  long long Q = 1;
  for (auto& q : rs) Q = std::lcm(Q, q.q);
  std::vector<long long> e;
  long long g = 0;
  for (auto& q : rs) {
    e.push_back(q.p * (Q / q.q));
    g = std::gcd(g, e.back());
  }
  info.lattice = true;
  const double lr = l0 * static_cast<double>(g) / static_cast<double>(Q);
  info.generator = std::exp(lr);
  info.period = 2.0 * kPi / -lr;
  for (long long v : e) info.exponents.push_back(static_cast<int>(v / g));
  return info;
}

// ---------------------------------------------------------------- expression algebra

namespace {

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<cplx> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

cplx poly_eval(const std::vector<cplx>& p, cplx s) {
  if (p.empty()) return 1.0;
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * s + *it;
  return acc;
}

void add_pole(std::vector<RationalPole>& ps, RationalPole p) {
  for (auto& q : ps)
    if (q.p == p.p) {
      q.order += p.order;
      return;
    }
  ps.push_back(p);
}

void add_denom(std::vector<DirichletFactor>& ds, const DirichletFactor& d) {
  for (auto& x : ds)
    if (x.poly == d.poly) {
      x.order += d.order;
      return;
    }
  ds.push_back(d);
}

MeroTerm term_product(const MeroTerm& a, const MeroTerm& b) {
  MeroTerm t;
  t.coeff = a.coeff * b.coeff;
  t.base = a.base * b.base;
  t.numerator = poly_mul(a.numerator, b.numerator);
  t.poles = a.poles;
  for (auto& p : b.poles) add_pole(t.poles, p);
  t.denoms = a.denoms;
  for (auto& d : b.denoms) add_denom(t.denoms, d);
  if (a.entire && b.entire) {
    auto fa = a.entire, fb = b.entire;
    t.entire = std::make_shared<EntireFactor>(EntireFactor{
        fa->name + "*" + fb->name, [fa, fb](cplx s) { return fa->f(s) * fb->f(s); },
        fa->tol + fb->tol});
  } else {
    t.entire = a.entire ? a.entire : b.entire;
  }
  return t;
}

}  // namespace

MeroExpr operator+(const MeroExpr& a, const MeroExpr& b) {
  MeroExpr e = a;
  e.terms.insert(e.terms.end(), b.terms.begin(), b.terms.end());
  return e;
}

MeroExpr operator*(const MeroExpr& a, const MeroExpr& b) {
  MeroExpr e;
  e.label = a.label.empty() || b.label.empty() ? a.label + b.label : a.label + "*" + b.label;
  for (auto& x : a.terms)
    for (auto& y : b.terms) e.terms.push_back(term_product(x, y));
  return e;
}

MeroExpr operator*(cplx c, const MeroExpr& e) {
  MeroExpr r = e;
  for (auto& t : r.terms) t.coeff *= c;
  return r;
}

MeroExpr divide_by(const MeroExpr& e, const DirichletPolynomial& f, int order) {
  MeroExpr r = e;
  for (auto& t : r.terms) add_denom(t.denoms, DirichletFactor{f, order});
  return r;
}

MeroExpr power(const MeroExpr& e, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "power needs m >= 1");
  MeroExpr r = e;
  for (int i = 1; i < m; ++i) r = r * e;
  return r;
}

MeroExpr mero_term(cplx coeff, double base, std::vector<RationalPole> poles,
                   std::vector<DirichletFactor> denoms) {
  MeroTerm t;
  t.coeff = coeff;
  t.base = base;
  for (auto& p : poles) add_pole(t.poles, p);
  for (auto& d : denoms) add_denom(t.denoms, d);
  MeroExpr e;
  e.terms.push_back(std::move(t));
  return e;
}

// ---------------------------------------------------------------- evaluation

cplx eval_term(const MeroTerm& t, cplx s) {
  cplx v = t.coeff;
  if (t.base != 1.0) v *= real_pow(t.base, s);
  if (!t.numerator.empty()) v *= poly_eval(t.numerator, s);
  for (auto& p : t.poles) {
    const cplx d = s - p.p;
    if (std::abs(d) < 1e-13 * std::max(1.0, std::abs(p.p)))
      throw Error(Errc::PoleHit, "evaluation point on a rational pole");
    v /= std::pow(d, p.order);
  }
  for (auto& d : t.denoms) {
    const cplx fv = d.poly.eval(s);
    if (std::abs(fv) < 1e-13) throw Error(Errc::PoleHit, "evaluation point on a Dirichlet zero");
    v /= std::pow(fv, d.order);
  }
  if (t.entire) {
    cplx ev;
    try {
      ev = t.entire->f(s);
    } catch (const Error&) {
      throw Error(Errc::EntireFactorFailure, "entire factor " + t.entire->name);
    }
    if (!std::isfinite(ev.real()) || !std::isfinite(ev.imag()))
      throw Error(Errc::EntireFactorFailure, "entire factor " + t.entire->name + " not finite");
    v *= ev;
  }
  return v;
}

cplx eval_expr(const MeroExpr& e, cplx s) {
  ComplexSum acc;
  for (auto& t : e.terms) acc.add(eval_term(t, s));
  return acc.value();
}

MeroExpr scale_expr(const MeroExpr& e, double lambda) {
  if (!(lambda > 0)) throw Error(Errc::NonPositiveScale, "scale must be positive");
  MeroExpr r = e;
  for (auto& t : r.terms) t.base *= lambda;
  return r;
}

double abscissa_estimate(const MeroExpr& e) {
  double D = -std::numeric_limits<double>::infinity();
  for (auto& t : e.terms) {
    for (auto& p : t.poles) D = std::max(D, p.p.real());
    for (auto& d : t.denoms) D = std::max(D, dirichlet_real_root(d.poly));
  }
  return D;
}

// ---------------------------------------------------------------- zeros of Dirichlet polynomials

namespace {

int zero_multiplicity(const DirichletPolynomial& f, cplx s) {
  int m = 1;
  while (m < 8 && std::abs(f.deriv(s, m)) <= 1e-7 * f.deriv_scale(s, m)) ++m;
  return m;
}

// Newton (modified for multiplicity) polishing; returns false if it wanders off.
bool polish(const DirichletPolynomial& f, cplx& s, int mult, double tol, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    const cplx d = f.deriv(s, 1);
    if (std::abs(d) == 0.0) return std::abs(f.eval(s)) < 1e-12;
    const cplx step = static_cast<double>(mult) * f.eval(s) / d;
    s -= step;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(s))) return true;
  }
  return false;
}

std::vector<DirichletZero> dedupe(std::vector<DirichletZero> zs, double tol) {
  std::sort(zs.begin(), zs.end(), [](auto& a, auto& b) {
    return a.s.real() != b.s.real() ? a.s.real() < b.s.real() : a.s.imag() < b.s.imag();
  });
  std::vector<DirichletZero> out;
  for (auto& z : zs) {
    bool dup = false;
    for (auto& o : out)
      if (std::abs(o.s - z.s) <= tol * std::max(1.0, std::abs(z.s))) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(z);
  }
  return out;
}

std::vector<DirichletZero> lattice_zeros(const DirichletPolynomial& f, const LatticeInfo& info,
                                         const Window& w, const PoleOptions& opt) {
  int K = 0;
  for (int k : info.exponents) K = std::max(K, k);
  std::vector<double> a(K + 1, 0.0);
  a[0] = 1.0;
  for (std::size_t j = 0; j < f.terms.size(); ++j) a[info.exponents[j]] -= f.terms[j].first;
  // companion matrix of the monic polynomial
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(K, K);
  for (int i = 1; i < K; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < K; ++i) C(i, K - 1) = -a[i] / a[K];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  std::vector<std::complex<long double>> roots;
  for (int i = 0; i < K; ++i) roots.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
  // cluster repeated roots, then polish clusters in long double
  std::vector<std::pair<std::complex<long double>, int>> clusters;
  for (auto& z : roots) {
    bool merged = false;
    for (auto& [c, m] : clusters)
      if (std::abs(c - z) <= 1e-5L * std::max(1.0L, std::abs(z))) {
        c = (c * static_cast<long double>(m) + z) / static_cast<long double>(m + 1);
        ++m;
        merged = true;
        break;
      }
    if (!merged) clusters.emplace_back(z, 1);
  }
  const double lr = std::log(info.generator);
  std::vector<DirichletZero> out;
  for (auto& [z, m] : clusters) {
    if (std::abs(z) == 0.0L) continue;
    const double logabs = std::log(static_cast<double>(std::abs(z)));
    const double arg = std::arg(std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag())));
    const double re = logabs / lr;
    if (re < w.re_min - 1e-6 || re > w.re_max + 1e-6) continue;
    const double span = w.im_max * std::abs(lr);
    const long long n_lo = static_cast<long long>(std::ceil((-span - arg) / (2 * kPi))) - 1;
    const long long n_hi = static_cast<long long>(std::floor((span - arg) / (2 * kPi))) + 1;
    for (long long n = n_lo; n <= n_hi; ++n) {
      cplx s(re, (arg + 2 * kPi * static_cast<double>(n)) / lr);
      const cplx s0 = s;
      if (!polish(f, s, m, opt.newton_tol, opt.newton_max_iter) || std::abs(s - s0) > 1e-4) s = s0;
      if (!w.contains(s, 1e-9)) continue;
      out.push_back({s, m});
    }
  }
  return dedupe(std::move(out), opt.dedupe_tol);
}

}  // namespace

std::vector<DirichletZero> dirichlet_zeros_newton(const DirichletPolynomial& f, const Window& w,
                                                  const PoleOptions& opt) {
  const double h = opt.seed_spacing;
  const int nre = static_cast<int>(std::floor((w.re_max - w.re_min) / h)) + 1;
  const int nim = static_cast<int>(std::floor(2 * w.im_max / h)) + 1;
  const std::size_t nseeds = static_cast<std::size_t>(nre) * static_cast<std::size_t>(nim);
  std::vector<std::optional<cplx>> found(nseeds);
  for_each_index(nseeds, opt.exec, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / static_cast<std::size_t>(nim));
    const int j = static_cast<int>(idx % static_cast<std::size_t>(nim));
    cplx s(w.re_min + i * h, -w.im_max + j * h);
    bool ok = false;
    for (int it = 0; it < opt.newton_max_iter; ++it) {
      const cplx d = f.deriv(s, 1);
      if (std::abs(d) == 0.0) break;
      const cplx step = f.eval(s) / d;
      s -= step;
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) || !w.contains(s, 1.0)) break;
      if (std::abs(step) <= opt.newton_tol * std::max(1.0, std::abs(s))) {
        ok = true;
        break;
      }
    }
    if (ok && std::abs(f.eval(s)) <= 1e-10 && w.contains(s, 1e-9)) found[idx] = s;
  });
  std::vector<DirichletZero> zs;
  for (auto& s : found)
    if (s) {
      cplx z = *s;
      const int m = zero_multiplicity(f, z);
      if (m > 1) polish(f, z, m, opt.newton_tol, opt.newton_max_iter);
      zs.push_back({z, m});
    }
  return dedupe(std::move(zs), opt.dedupe_tol);
}

std::vector<DirichletZero> dirichlet_zeros(const DirichletPolynomial& f, const Window& w,
                                           const PoleOptions& opt) {
  const LatticeInfo info = lattice_analysis(f, opt.qmax);
  int K = 0;
  for (int k : info.exponents) K = std::max(K, k);
  if (info.lattice && K <= 400) return lattice_zeros(f, info, w, opt);
  return dirichlet_zeros_newton(f, w, opt);
}

namespace {

double arg_step(const std::function<cplx(double)>& path, const DirichletPolynomial& f, double u0,
                double u1, cplx f0, cplx f1, int depth) {
  const double d = std::arg(f1 / f0);
  if (std::abs(d) <= 0.5 || depth > 30) return d;
  const double um = 0.5 * (u0 + u1);
  const cplx fm = f.eval(path(um));
  return arg_step(path, f, u0, um, f0, fm, depth + 1) + arg_step(path, f, um, u1, fm, f1, depth + 1);
}

}  // namespace

int winding_count(const DirichletPolynomial& f, const Window& w, int nodes) {
  const double wr = w.re_max - w.re_min, hi = 2 * w.im_max;
  const double per = 2 * (wr + hi);
  const cplx c0(w.re_min, -w.im_max), c1(w.re_max, -w.im_max), c2(w.re_max, w.im_max),
      c3(w.re_min, w.im_max);
  auto path = [&](double u) -> cplx {  // u in [0, per)
    if (u < wr) return c0 + cplx(u, 0);
    u -= wr;
    if (u < hi) return c1 + cplx(0, u);
    u -= hi;
    if (u < wr) return c2 - cplx(u, 0);
    u -= wr;
    return c3 - cplx(0, u);
  };
  double total = 0.0;
  const double du = per / nodes;
  cplx fprev = f.eval(path(0.0));
  for (int k = 1; k <= nodes; ++k) {
    const double u0 = (k - 1) * du, u1 = k == nodes ? per : k * du;
    const cplx fcur = f.eval(k == nodes ? path(0.0) : path(u1));
    total += arg_step(path, f, u0, u1, fprev, fcur, 0);
    fprev = fcur;
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

// ---------------------------------------------------------------- poles and residues

std::vector<cplx> contour_principal_part(const std::function<cplx(cplx)>& f, cplx omega, int K,
                                         double rho, int nodes) {
  std::vector<ComplexSum> acc(K);
  for (int j = 0; j < nodes; ++j) {
    const double th = 2 * kPi * j / nodes;
    const cplx e(std::cos(th), std::sin(th));
    const cplx v = f(omega + rho * e);
    cplx ek = e;
    for (int k = 1; k <= K; ++k) {
      acc[k - 1].add(v * ek);
      ek *= e;
    }
  }
  std::vector<cplx> c(K);  // c[K-k] = c_{-k}
  for (int k = 1; k <= K; ++k) c[K - k] = acc[k - 1].value() / static_cast<double>(nodes) * std::pow(rho, k);
  return c;
}

namespace {

struct Candidate {
  cplx s;
  bool rational = false;
};

int local_order(const MeroTerm& t, cplx s, double tol) {
  int k = 0;
  for (auto& p : t.poles)
    if (std::abs(p.p - s) <= tol) k += p.order;
  for (auto& d : t.denoms)
    if (std::abs(d.poly.eval(s)) <= 1e-8 * d.poly.deriv_scale(s, 0))
      k += d.order * zero_multiplicity(d.poly, s);
  return k;
}

int declared_order(const MeroExpr& e, cplx s, double tol) {
  int K = 0;
  for (auto& t : e.terms) K = std::max(K, local_order(t, s, tol));
  return K;
}

struct PartResult {
  std::vector<cplx> c;      // c_{-K}..c_{-1}
  std::vector<double> mag;  // sum over terms of |c_{-k}| per term, same layout
};

PartResult principal_part_with_scale(const MeroExpr& e, cplx omega, int K, double rho, int nodes) {
  PartResult r;
  r.c.assign(K, 0.0);
  r.mag.assign(K, 0.0);
  std::vector<ComplexSum> total(K);
  for (auto& t : e.terms) {
    auto ct = contour_principal_part([&](cplx z) { return eval_term(t, z); }, omega, K, rho, nodes);
    for (int i = 0; i < K; ++i) {
      total[i].add(ct[i]);
      r.mag[i] += std::abs(ct[i]);
    }
  }
  for (int i = 0; i < K; ++i) r.c[i] = total[i].value();
  return r;
}

std::vector<DirichletPolynomial> distinct_denoms(const MeroExpr& e) {
  std::vector<DirichletPolynomial> out;
  for (auto& t : e.terms)
    for (auto& d : t.denoms)
      if (std::find(out.begin(), out.end(), d.poly) == out.end()) out.push_back(d.poly);
  return out;
}

}  // namespace

std::vector<ComplexDimension> poles_in_window(const MeroExpr& e, const Window& w,
                                              const PoleOptions& opt,
                                              std::vector<AuditRecord>* audit) {
  if (!(w.re_min < w.re_max) || !(w.im_max > 0)) throw Error(Errc::InvalidArgument, "bad window");
  std::vector<Candidate> cands;
  auto push = [&](cplx s, bool rational) {
    for (auto& c : cands)
      if (std::abs(c.s - s) <= opt.dedupe_tol * std::max(1.0, std::abs(s))) {
        if (rational && !c.rational) c = {s, true};
        return;
      }
    cands.push_back({s, rational});
  };
  for (auto& t : e.terms)
    for (auto& p : t.poles)
      if (w.contains(p.p, 1e-12)) push(p.p, true);

  const double eps = 1e-7;
  const Window wa{w.re_min - eps, w.re_max + eps, w.im_max + eps};
  for (auto& f : distinct_denoms(e)) {
    auto zs = dirichlet_zeros(f, wa, opt);
    int count = 0;
    for (auto& z : zs) count += z.multiplicity;
    const int wind = winding_count(f, wa, opt.audit_nodes);
    if (audit) audit->push_back({f, count, wind});
    if (wind != count) {
      // the lattice enumerator and the seed grid must agree with the boundary count
      auto zn = dirichlet_zeros_newton(f, wa, opt);
      int cn = 0;
      for (auto& z : zn) cn += z.multiplicity;
      if (cn != wind)
        throw Error(Errc::SeedGridTooCoarse, "argument-principle count " + std::to_string(wind) +
                                                 " vs enumerated " + std::to_string(count));
      zs = zn;
      if (audit) audit->back().enumerated = cn;
    }
    for (auto& z : zs)
      if (w.contains(z.s, 1e-9)) push(z.s, false);
  }
  std::sort(cands.begin(), cands.end(), [](auto& a, auto& b) {
    return a.s.real() != b.s.real() ? a.s.real() < b.s.real() : a.s.imag() < b.s.imag();
  });
  for (std::size_t i = 0; i + 1 < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (std::abs(cands[i].s - cands[j].s) < 1.5 * opt.contour_radius)
        throw Error(Errc::ContourContainsOtherPole, "candidate poles closer than the contour radius");

  std::vector<ComplexDimension> dims(cands.size());
  for_each_index(cands.size(), opt.exec, [&](std::size_t i) {
    const cplx s = cands[i].s;
    const int K = declared_order(e, s, opt.dedupe_tol);
    ComplexDimension cd;
    cd.s = s;
    if (K == 0) {
      cd.order = 1;
      cd.cancelled = true;
      cd.principal_part = {0.0};
      dims[i] = cd;
      return;
    }
    auto pr = principal_part_with_scale(e, s, K, opt.contour_radius, opt.contour_nodes);
    int order = 0;
    for (int k = K; k >= 1; --k)
      if (std::abs(pr.c[K - k]) > opt.cancel_tol * std::max(1.0, pr.mag[K - k])) {
        order = k;
        break;
      }
    if (order == 0) {
      cd.order = K;
      cd.cancelled = true;
      cd.principal_part = pr.c;
    } else {
      cd.order = order;
      cd.principal_part.assign(pr.c.begin() + (K - order), pr.c.end());
    }
    dims[i] = cd;
  });
  double D = -std::numeric_limits<double>::infinity();
  for (auto& d : dims)
    if (!d.cancelled) D = std::max(D, d.s.real());
  for (auto& d : dims) d.principal = !d.cancelled && std::abs(d.s.real() - D) <= 1e-9;
  return dims;
}

namespace {

int circle_winding(const DirichletPolynomial& f, cplx c, double r, int nodes) {
  double total = 0;
  cplx prev = f.eval(c + r);
  for (int j = 1; j <= nodes; ++j) {
    const double th = 2 * kPi * j / nodes;
    const cplx cur = f.eval(c + r * cplx(std::cos(th), std::sin(th)));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

}  // namespace

ResidueReport residue_at(const MeroExpr& e, cplx omega, const PoleOptions& opt) {
  const double rho = opt.contour_radius;
  bool declared = false;
  cplx w = omega;
  for (auto& t : e.terms)
    for (auto& p : t.poles)
      if (std::abs(p.p - omega) <= 1e-8 * std::max(1.0, std::abs(p.p))) {
        w = p.p;
        declared = true;
      }
  const auto denoms = distinct_denoms(e);
  if (!declared) {
    for (auto& f : denoms) {
      if (std::abs(f.eval(omega)) > 1e-6 * f.deriv_scale(omega, 0)) continue;
      cplx z = omega;
      const int m = zero_multiplicity(f, z);
      polish(f, z, m, opt.newton_tol, opt.newton_max_iter);
      if (std::abs(f.eval(z)) <= 1e-10 * f.deriv_scale(z, 0)) {
        w = z;
        declared = true;
        break;
      }
    }
  }
  if (!declared) throw Error(Errc::NotAPole, "no declared pole at the requested point");

  for (auto& t : e.terms)
    for (auto& p : t.poles)
      if (std::abs(p.p - w) > 1e-12 && std::abs(p.p - w) < 1.5 * rho)
        throw Error(Errc::ContourContainsOtherPole, "rational pole inside contour");
  for (auto& f : denoms) {
    const bool here = std::abs(f.eval(w)) <= 1e-8 * f.deriv_scale(w, 0);
    const int expect = here ? zero_multiplicity(f, w) : 0;
    if (circle_winding(f, w, 1.5 * rho, 256) != expect)
      throw Error(Errc::ContourContainsOtherPole, "Dirichlet zero inside contour");
  }

  ResidueReport rep;
  const int K = declared_order(e, w, 1e-12);
  auto pr = principal_part_with_scale(e, w, K, rho, opt.contour_nodes);
  for (int k = K; k >= 1; --k)
    if (std::abs(pr.c[K - k]) > opt.cancel_tol * std::max(1.0, pr.mag[K - k])) {
      rep.order = k;
      break;
    }
  rep.principal_part.assign(pr.c.begin() + (K - std::max(rep.order, 1)), pr.c.end());
  rep.contour_residue = pr.c.back();

  bool simple_terms = true;
  for (auto& t : e.terms)
    if (local_order(t, w, 1e-12) > 1) simple_terms = false;
  if (rep.order == 1 && simple_terms) {
    ComplexSum acc;
    for (auto& t : e.terms) {
      if (local_order(t, w, 1e-12) == 0) continue;
      cplx v = t.coeff * real_pow(t.base, w) * poly_eval(t.numerator, w);
      if (t.entire) v *= t.entire->f(w);
      for (auto& p : t.poles) {
        if (std::abs(p.p - w) <= 1e-12) continue;
        v /= std::pow(w - p.p, p.order);
      }
      for (auto& d : t.denoms) {
        const cplx fv = d.poly.eval(w);
        if (std::abs(fv) <= 1e-8 * d.poly.deriv_scale(w, 0))
          v /= d.poly.deriv(w, 1);
        else
          v /= std::pow(fv, d.order);
      }
      acc.add(v);
    }
    rep.analytic = acc.value();
    rep.discrepancy = std::abs(*rep.analytic - rep.contour_residue);
  }
  return rep;
}

// ---------------------------------------------------------------- transfers and classification

MeroExpr tube_to_distance(const MeroExpr& tube, int N, double delta, double sat_volume) {
  MeroExpr r = tube;
  for (auto& t : r.terms) t.numerator = poly_mul(t.numerator, {cplx(N), cplx(-1.0)});
  if (sat_volume != 0.0) r = r + mero_term(sat_volume * std::pow(delta, -N), delta);
  r.label = tube.label.empty() ? "distance" : tube.label + ":distance";
  return r;
}

MeroExpr distance_to_tube(const MeroExpr& dist, int N, double delta, double sat_volume) {
  const double D = abscissa_estimate(dist);
  if (D >= N - 1e-12) throw Error(Errc::DegenerateDimension, "abscissa reaches the ambient dimension");
  MeroExpr r = dist;
  if (sat_volume != 0.0) r = r + mero_term(-sat_volume * std::pow(delta, -N), delta);
  for (auto& t : r.terms) {
    t.coeff = -t.coeff;
    add_pole(t.poles, RationalPole{cplx(N), 1});
  }
  r.label = dist.label.empty() ? "tube" : dist.label + ":tube";
  return r;
}

MeroExpr positive_reach_zeta(const std::vector<double>& c, int N, double delta) {
  if (static_cast<int>(c.size()) > N) throw Error(Errc::InvalidArgument, "need at most N coefficients");
  MeroExpr e;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0.0) continue;
    e = e + mero_term(c[k] * std::pow(delta, -static_cast<double>(k)), delta,
                      {RationalPole{cplx(static_cast<double>(k)), 1}});
  }
  if (e.terms.empty()) throw Error(Errc::AllZeroCoefficients, "all coefficients vanish");
  e.label = "positive-reach";
  return e;
}

const char* fractality_name(Fractality f) {
  switch (f) {
    case Fractality::not_fractal: return "not_fractal";
    case Fractality::critically_fractal: return "critically_fractal";
    case Fractality::strictly_subcritically_fractal: return "strictly_subcritically_fractal";
  }
  return "?";
}

Classification classify_poles(const std::vector<ComplexDimension>& poles, double tol) {
  Classification c;
  bool any = false;
  c.D = -std::numeric_limits<double>::infinity();
  for (auto& p : poles)
    if (!p.cancelled) {
      any = true;
      c.D = std::max(c.D, p.s.real());
    }
  if (!any) throw Error(Errc::EmptyWindow, "no poles in window");
  bool critical = false, nonreal = false;
  std::vector<double> res;
  for (auto& p : poles) {
    if (p.cancelled || std::abs(p.s.imag()) <= tol) continue;
    nonreal = true;
    if (std::abs(p.s.real() - c.D) <= tol)
      critical = true;
    else
      res.push_back(p.s.real());
  }
  std::sort(res.begin(), res.end(), std::greater<>());
  for (double r : res)
    if (c.dims.empty() || std::abs(c.dims.back() - r) > tol) c.dims.push_back(r);
  if (critical)
    c.kind = Fractality::critically_fractal;
  else if (nonreal)
    c.kind = Fractality::strictly_subcritically_fractal;
  else
    c.kind = Fractality::not_fractal;
  if (c.kind != Fractality::strictly_subcritically_fractal) c.dims.clear();
  return c;
}

Classification classify_fractality(const MeroExpr& e, const Window& w, const PoleOptions& opt) {
  return classify_poles(poles_in_window(e, w, opt));
}

}  // namespace fz
