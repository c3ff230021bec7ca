#include "fz/cantor.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace fz {

namespace {

constexpr double kIntervalCap = 1e7;

// Left endpoint of interval `idx` at `depth`, from its base-m digits.
long double left_end(const GeneralizedCantorSet& C, std::size_t idx, int depth) {
  const long double step = static_cast<long double>(C.a) + (1.0L - C.m * static_cast<long double>(C.a)) / (C.m - 1);
  long double x = 0.0L, w = step * std::pow(static_cast<long double>(C.a), depth - 1);
  for (int k = depth; k >= 1; --k) {
    x += static_cast<long double>(idx % static_cast<std::size_t>(C.m)) * w;
    idx /= static_cast<std::size_t>(C.m);
    w /= C.a;
  }
  return x;
}

void check_depth(const GeneralizedCantorSet& C, int depth) {
  if (depth < 0) throw Error(Errc::InvalidArgument, "depth must be >= 0");
  if (std::pow(static_cast<double>(C.m), depth) > kIntervalCap)
    throw Error(Errc::DepthOverflow, "m^depth exceeds 1e7 intervals");
}

}  // namespace

std::pair<GeneralizedCantorSet, CantorInvariants> gcs_create(int m, double a) {
  if (m < 2 || !(a > 0.0) || !(m * a < 1.0))
    throw Error(Errc::InvalidCantorParameters, "need m >= 2 and 0 < a < 1/m");
  GeneralizedCantorSet C;
  C.m = m;
  C.a = a;
  C.T = std::log(1.0 / a);
  C.D = std::log(static_cast<double>(m)) / C.T;
  C.p = 2.0 * kPi / C.T;
  C.c = (1.0 - m * a) / (2.0 * (m - 1));

  CantorInvariants inv;
  inv.D = C.D;
  inv.T = C.T;
  inv.p = C.p;
  const double D = C.D;
  inv.M_lower = std::pow(2.0 * D / (1.0 - D), 1.0 - D) / D;
  inv.M_upper = std::pow(C.c, D - 1.0) * m * (1.0 - a) / (m - 1);
  inv.res_distance_at_D = (1.0 - m * a) * std::pow(C.c, D - 1.0) / (D * C.T);
  inv.res_tube_at_D = inv.res_distance_at_D / (1.0 - D);

  // Geometry is the ground truth: probe the closed form against the oracle.
  double worst = 0.0;
  for (double g : {0.05, 0.37, 0.71, 0.93}) {
    const double t = C.c * std::pow(a, 2.0 - g);
    if (std::pow(static_cast<double>(m), oracle_depth(C, t)) > kIntervalCap) continue;
    const double o = tube_volume_oracle(C, t, Exec::serial);
    C.closed_form_ok = true;
    worst = std::max(worst, std::abs(tube_volume_closed(C, t) - o) / o);
  }
  C.closed_form_ok = worst <= 1e-9;
  if (!C.closed_form_ok)
    C.diagnostic = "closed tube formula disagrees with interval oracle (rel " + std::to_string(worst) +
                   "); oracle used";
  return {C, inv};
}

std::vector<std::pair<double, double>> gcs_intervals(const GeneralizedCantorSet& C, int depth) {
  check_depth(C, depth);
  const std::size_t n = static_cast<std::size_t>(std::llround(std::pow(C.m, depth)));
  const double len = std::pow(C.a, depth);
  std::vector<std::pair<double, double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double x = left_end(C, i, depth);
    out[i] = {static_cast<double>(x), static_cast<double>(x + len)};
  }
  return out;
}

double tube_profile(const GeneralizedCantorSet& C, double t) {
  // G = c^(D-1) (ma)^g + 2 c^D m^g with g = ceil(u) - u, u = log(c/t) / T
  const double u = std::log(C.c / t) / C.T;
  const double g = std::ceil(u) - u;
  return std::pow(C.c, C.D - 1.0) * std::pow(C.m * C.a, g) + 2.0 * std::pow(C.c, C.D) * std::pow(C.m, g);
}

double tube_volume_closed(const GeneralizedCantorSet& C, double t) {
  if (!(t > 0.0)) throw Error(Errc::NonPositiveT, "t must be positive");
  if (t >= C.c) return 1.0 + 2.0 * t;
  if (!C.closed_form_ok) return tube_volume_oracle(C, t, Exec::parallel);
  return std::pow(t, 1.0 - C.D) * tube_profile(C, t);
}

int oracle_depth(const GeneralizedCantorSet& C, double t) {
  if (!(t > 0.0)) throw Error(Errc::NonPositiveT, "t must be positive");
  int k = 0;
  while (!(std::pow(C.a, k) < t / 10.0)) ++k;
  return k;
}

double tube_volume_oracle(const GeneralizedCantorSet& C, double t, int depth, Exec ex, double scale) {
  if (!(t > 0.0)) throw Error(Errc::NonPositiveT, "t must be positive");
  check_depth(C, depth);
  if (!(scale * std::pow(C.a, depth) < t / 10.0))
    throw Error(Errc::InsufficientDepth, "a^depth must be below t/10");
  const std::size_t n = static_cast<std::size_t>(std::llround(std::pow(C.m, depth)));
  const long double len = scale * std::pow(static_cast<long double>(C.a), depth);
  const long double cover = len + 2.0L * t;
  // Equal-length sorted intervals: each contributes min(cover, distance to its predecessor).
  std::vector<long double> partial(block_count(n));
  // Going from interval i-1 to i carries through the trailing zero base-m digits of i; the left
  // endpoint moves by diff[k] = w[k] - (m-1) sum_{j<k} w[j], w[k] the offset of digit k.
  const long double step = static_cast<long double>(C.a) + (1.0L - C.m * static_cast<long double>(C.a)) / (C.m - 1);
  std::vector<long double> diff(std::max(depth, 1));
  long double below = 0.0L;
  for (int k = 0; k < depth; ++k) {
    const long double w = scale * step * std::pow(static_cast<long double>(C.a), depth - 1 - k);
    diff[k] = w - (C.m - 1) * below;
    below += w;
  }
  for_each_index(partial.size(), ex, [&](std::size_t blk) {
    CompensatedSum<long double> acc;
    const std::size_t lo = blk * kBlock, hi = std::min(n, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      if (i == 0) {
        acc.add(cover);
        continue;
      }
      int k = 0;
      for (std::size_t q = i; q % C.m == 0; q /= C.m) ++k;
      acc.add(std::min(cover, diff[k]));
    }
    partial[blk] = acc.value();
  });
  return static_cast<double>(ordered_sum(partial));
}

double tube_volume_oracle(const GeneralizedCantorSet& C, double t, Exec ex) {
  return tube_volume_oracle(C, t, oracle_depth(C, t), ex);
}

double union_measure_sweep(std::vector<std::pair<double, double>> intervals, double t) {
  std::sort(intervals.begin(), intervals.end());
  CompensatedSum<long double> acc;
  bool open = false;
  long double lo = 0, hi = 0;
  for (auto& [a, b] : intervals) {
    const long double l = static_cast<long double>(a) - t, r = static_cast<long double>(b) + t;
    if (open && l <= hi) {
      hi = std::max(hi, r);
      continue;
    }
    if (open) acc.add(hi - lo);
    lo = l;
    hi = r;
    open = true;
  }
  if (open) acc.add(hi - lo);
  return static_cast<double>(acc.value());
}

ContentExtrema content_extrema_oracle(const GeneralizedCantorSet& C, double scale) {
  // One period in log t: t in [scale c a^3, scale c a^2]. The profile is convex in log t
  // (a sum of two exponentials), so golden section finds the minimum and the maximum sits
  // at a period endpoint.
  const double lt0 = std::log(scale * C.c) + 3.0 * std::log(C.a);
  const double lt1 = lt0 + C.T;
  auto h = [&](double lt) {
    const double t = std::exp(lt);
    const int depth = oracle_depth(C, t / scale);
    return tube_volume_oracle(C, t, depth, Exec::parallel, scale) / std::pow(t, 1.0 - C.D);
  };
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = lt0, hi = lt1;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = h(x1), f2 = h(x2);
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = h(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = h(x2);
    }
  }
  ContentExtrema r;
  r.t_min = std::exp(0.5 * (lo + hi));
  r.min = h(0.5 * (lo + hi));
  r.t_max = std::exp(lt1);
  r.max = std::max(h(lt1), h(lt0));
  return r;
}

cplx gcs_distance_zeta_closed(const GeneralizedCantorSet& C, double delta, cplx s) {
  if (delta < C.c) throw Error(Errc::InvalidArgument, "delta must be >= c");
  const cplx f = 1.0 - static_cast<double>(C.m) * real_pow(C.a, s);
  if (std::abs(s) < 1e-13 || std::abs(f) < 1e-13) throw Error(Errc::PoleHit, "s on a pole of the closed form");
  return real_pow(C.c, s - 1.0) * (1.0 - C.m * C.a) / (s * f) + 2.0 * real_pow(delta, s) / s;
}

MeroExpr gcs_distance_mero(const GeneralizedCantorSet& C, double delta) {
  if (delta < C.c) throw Error(Errc::InvalidArgument, "delta must be >= c");
  const auto f = DirichletPolynomial::make({{static_cast<double>(C.m), C.a}});
  MeroExpr e = mero_term((1.0 - C.m * C.a) / C.c, C.c, {{0.0, 1}}, {{f, 1}}) +
               mero_term(2.0, delta, {{0.0, 1}});
  e.label = "cantor-distance";
  return e;
}

MeroExpr gcs_tube_mero(const GeneralizedCantorSet& C, double delta) {
  if (delta < C.c) throw Error(Errc::InvalidArgument, "delta must be >= c");
  const double m = C.m, a = C.a, c = C.c;
  const auto f = DirichletPolynomial::make({{m, a}});
  // piece [c a^n, c a^(n-1)] contributes (ma)^n t^(s-2) + 2 m^n t^(s-1); summed over n >= 1
  MeroExpr e = mero_term(m * a / c, c, {{1.0, 1}}, {{f, 1}}) +
               mero_term(-m / c, c * a, {{1.0, 1}}, {{f, 1}}) +
               mero_term(2.0 * m, c, {{0.0, 1}}, {{f, 1}}) +
               mero_term(-2.0 * m, c * a, {{0.0, 1}}, {{f, 1}});
  if (delta > c) {
    // saturated range [c, delta]: |C_t| = 1 + 2t
    e = e + mero_term(1.0 / delta, delta, {{1.0, 1}}) + mero_term(-1.0 / c, c, {{1.0, 1}}) +
        mero_term(2.0, delta, {{0.0, 1}}) + mero_term(-2.0, c, {{0.0, 1}});
  }
  e.label = "cantor-tube";
  return e;
}

std::vector<long long> first_primes(int n) {
  std::vector<long long> ps;
  for (long long k = 2; static_cast<int>(ps.size()) < n; ++k) {
    bool prime = true;
    for (long long p : ps) {
      if (p * p > k) break;
      if (k % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(k);
  }
  return ps;
}

namespace {

std::map<long long, int> factorize(long long v) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= v; ++p)
    while (v % p == 0) {
      ++f[p];
      v /= p;
    }
  if (v > 1) ++f[v];
  return f;
}

int rational_rank(std::vector<std::vector<long double>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const long double f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// prod m_i^q_i == 1 in exact integer arithmetic.
bool relation_holds_exactly(const std::vector<long long>& ms, const std::vector<long long>& q) {
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const long long e = q[i] < 0 ? -q[i] : q[i];
    cpp_int pw = boost::multiprecision::pow(cpp_int(ms[i]), static_cast<unsigned>(e));
    (q[i] > 0 ? num : den) *= pw;
  }
  return num == den;
}

}  // namespace

IndependenceCertificate log_independence_certificate(const std::vector<long long>& ms, long long qmax) {
  IndependenceCertificate cert;
  cert.qmax = qmax;
  std::vector<double> logs;
  for (long long v : ms) {
    if (v < 2) throw Error(Errc::InvalidArgument, "integers must be >= 2");
    logs.push_back(std::log(static_cast<double>(v)));
  }
  for (std::size_t i = 0; i < logs.size(); ++i)
    for (std::size_t j = i + 1; j < logs.size(); ++j)
      if (!rational_relation_scan({logs[i], logs[j]}, qmax).independent) cert.pairwise_independent = false;
  cert.scan = rational_relation_scan(logs, qmax);
  if (!cert.scan.independent) cert.scan_candidate_refuted = !relation_holds_exactly(ms, cert.scan.coefficients);

  std::map<long long, std::size_t> col;
  std::vector<std::map<long long, int>> fs;
  for (long long v : ms) {
    fs.push_back(factorize(v));
    for (auto& [p, e] : fs.back()) col.emplace(p, col.size());
  }
  std::vector<std::vector<long double>> rows(ms.size(), std::vector<long double>(col.size(), 0.0L));
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (auto& [p, e] : fs[i]) rows[i][col[p]] = e;
  cert.factorization_rank = rational_rank(rows);
  cert.independent = cert.factorization_rank == static_cast<int>(ms.size());
  return cert;
}

QuasiperiodicDrum quasiperiodic_drum_build(double D, int n, double C1, std::vector<double> c_list,
                                           std::vector<long long> m_list) {
  if (!(D > 0.0 && D < 1.0)) throw Error(Errc::InvalidArgument, "D must lie in (0, 1)");
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (!(C1 > 0.0)) throw Error(Errc::InvalidArgument, "C1 must be positive");
  if (m_list.empty()) m_list = first_primes(n);
  if (static_cast<int>(m_list.size()) != n) throw Error(Errc::ArityMismatch, "need n integers m_i");
  if (c_list.empty())
    for (int i = 1; i <= n; ++i) c_list.push_back(std::ldexp(1.0, -i));
  if (static_cast<int>(c_list.size()) != n) throw Error(Errc::ArityMismatch, "need n constants c_i");

  QuasiperiodicDrum q;
  q.n = n;
  q.D = D;
  q.C1 = C1;
  q.m = m_list;
  q.c = c_list;
  for (int i = 0; i < n; ++i) {
    const double mi = static_cast<double>(q.m[i]);
    if (mi < 2) throw Error(Errc::InvalidCantorParameters, "m_i must be >= 2");
    if (!(q.c[i] > 0.0)) throw Error(Errc::InvalidArgument, "c_i must be positive");
    q.a.push_back(std::pow(mi, -1.0 / D));
    q.omega_caps.push_back(C1 * std::pow(mi, 1.0 - 1.0 / D) * std::pow(q.c[i], 1.0 / D));
    q.T.push_back(std::log(mi) / D);
  }
  q.certificate = log_independence_certificate(q.m);
  return q;
}

std::vector<QuasiperiodicDrum::LatticePoint> QuasiperiodicDrum::singularity_lattice(double im_max) const {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < n; ++i) {
    const double step = 2.0 * kPi / T[i];
    const long long kmax = static_cast<long long>(std::floor(im_max / step));
    for (long long k = -kmax; k <= kmax; ++k) {
      if (k == 0 && i > 0) continue;  // D itself is shared by every component
      pts.push_back({cplx(D, step * static_cast<double>(k)), i});
    }
  }
  std::sort(pts.begin(), pts.end(), [](auto& x, auto& y) { return x.s.imag() < y.s.imag(); });
  return pts;
}

}  // namespace fz
