#include "fz/relation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fz {

std::optional<Rational> best_rational(double x, long long qmax, double tol) {
  const long double xl = x;
  long double rem = xl;
  long double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  const long double thr = tol * std::max(1.0, std::abs(x));
  for (int it = 0; it < 80; ++it) {
    const long double ai = std::floor(rem);
    const long double h2 = ai * h1 + h0;
    const long double k2 = ai * k1 + k0;
    if (k2 > static_cast<long double>(qmax)) break;
    if (std::fabs(xl - h2 / k2) <= thr)
      return Rational{static_cast<long long>(h2), static_cast<long long>(k2)};
    const long double frac = rem - ai;
    if (frac < 1e-30L) break;
    rem = 1.0L / frac;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

namespace {

void normalize(std::vector<long long>& q) {
  long long g = 0;
  for (long long v : q) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (long long& v : q) v /= g;
  for (long long v : q) {
    if (v == 0) continue;
    if (v < 0)
      for (long long& w : q) w = -w;
    break;
  }
}

long double residual_of(const std::vector<long long>& q, const std::vector<double>& xs) {
  long double r = 0;
  for (std::size_t i = 0; i < q.size(); ++i) r += static_cast<long double>(q[i]) * xs[i];
  return std::fabs(r);
}

long long max_abs(const std::vector<long long>& q) {
  long long m = 0;
  for (long long v : q) m = std::max(m, v < 0 ? -v : v);
  return m;
}

}  // namespace

std::vector<std::vector<long long>> lll_relations(const std::vector<long double>& xs, long double w) {
  const int n = static_cast<int>(xs.size());
  const int m = n + 1;
  std::vector<std::vector<long double>> b(n, std::vector<long double>(m, 0.0L));
  for (int i = 0; i < n; ++i) {
    b[i][i] = 1.0L;
    b[i][n] = w * xs[i];
  }
  auto dot = [m](const std::vector<long double>& u, const std::vector<long double>& v) {
    long double s = 0;
    for (int i = 0; i < m; ++i) s += u[i] * v[i];
    return s;
  };
  std::vector<std::vector<long double>> bs(n, std::vector<long double>(m));
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0.0L));
  std::vector<long double> bn(n);
  auto gram_schmidt = [&]() {
    for (int i = 0; i < n; ++i) {
      bs[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = bn[j] > 0 ? dot(b[i], bs[j]) / bn[j] : 0.0L;
        for (int c = 0; c < m; ++c) bs[i][c] -= mu[i][j] * bs[j][c];
      }
      bn[i] = dot(bs[i], bs[i]);
    }
  };
  const long double delta = 0.99L;
  gram_schmidt();
  int k = 1;
  for (int guard = 0; k < n && guard < 200000; ++guard) {
    for (int j = k - 1; j >= 0; --j) {
      const long double q = std::nearbyint(mu[k][j]);
      if (q != 0) {
        for (int c = 0; c < m; ++c) b[k][c] -= q * b[j][c];
        gram_schmidt();
      }
    }
    if (bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max(k - 1, 1);
    }
  }
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> q(n);
    for (int c = 0; c < n; ++c) q[c] = static_cast<long long>(std::llround(b[i][c]));
    out.push_back(q);
  }
  return out;
}

RelationResult rational_relation_scan(const std::vector<double>& xs, long long qmax, double tol) {
  RelationResult res;
  res.method = "none";
  const std::size_t n = xs.size();
  if (n == 0) return res;
  double xmax = 0;
  for (double x : xs) xmax = std::max(xmax, std::abs(x));
  const long double thr = tol * xmax;

  auto accept = [&](std::vector<long long> q, const char* method) {
    normalize(q);
    if (max_abs(q) == 0 || max_abs(q) > qmax) return false;
    const long double r = residual_of(q, xs);
    if (r > thr) return false;
    res.independent = false;
    res.coefficients = std::move(q);
    res.residual = static_cast<double>(r);
    res.method = method;
    return true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] == 0.0) {
      std::vector<long long> q(n, 0);
      q[i] = 1;
      if (accept(q, "pairwise")) return res;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (xs[i] == 0.0) continue;
      auto r = best_rational(xs[j] / xs[i], qmax, tol);
      if (!r) continue;
      std::vector<long long> q(n, 0);
      q[i] = -r->p;
      q[j] = r->q;
      if (accept(q, "pairwise")) return res;
    }
  if (n < 3) return res;

  // Exhaustive box small enough for ~1e6 candidates.
  long long bound = static_cast<long long>((std::pow(1e6, 1.0 / static_cast<double>(n)) - 1.0) / 2.0);
  bound = std::min(bound, qmax);
  if (bound >= 1) {
    std::vector<long long> q(n, -bound);
    for (;;) {
      bool first_positive = false;
      for (long long v : q)
        if (v != 0) {
          first_positive = v > 0;
          break;
        }
      if (first_positive && accept(q, "exhaustive")) return res;
      std::size_t d = 0;
      while (d < n && q[d] == bound) q[d++] = -bound;
      if (d == n) break;
      ++q[d];
    }
  }

  std::vector<long double> xl(xs.begin(), xs.end());
  const long double w = 1.0L / (static_cast<long double>(tol) * xmax);
  for (auto& q : lll_relations(xl, w))
    if (accept(q, "lll")) return res;
  return res;
}

}  // namespace fz
