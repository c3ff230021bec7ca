#include "fz/rfd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fz/quad.hpp"

namespace fz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double unit_ball_volume(int N) { return std::pow(kPi, 0.5 * N) / std::tgamma(0.5 * N + 1.0); }

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Piece with density c on [0, w] (one side of a gap, an end interval, a flat strip).
ProfilePiece flat_piece(double c, double w, double mult, std::string label) {
  ProfilePiece p;
  p.density = [c, w](double u) { return u <= w ? c : 0.0; };
  p.volume = [c, w](double u) { return c * std::min(u, w); };
  p.width = w;
  p.measure = c * w;
  p.mult = mult;
  p.label = std::move(label);
  return p;
}

// Interior of a tangential polygon with area A and inradius rho; inner parallel sets are homothetic.
ProfilePiece tangential_piece(double A, double rho, double mult, std::string label) {
  ProfilePiece p;
  p.density = [A, rho](double u) { return u >= rho ? 0.0 : 2.0 * A / rho * (1.0 - u / rho); };
  p.volume = [A, rho](double u) {
    const double q = 1.0 - std::min(u, rho) / rho;
    return A * (1.0 - q * q);
  };
  p.width = rho;
  p.measure = A;
  p.mult = mult;
  p.label = std::move(label);
  return p;
}

// Square of side L: inner parallel square of side L - 2u.
ProfilePiece square_piece(double L, double mult, std::string label) {
  return tangential_piece(L * L, 0.5 * L, mult, std::move(label));
}

// Right triangle with legs L above (or below) a horizontal segment of length L, distance vertical.
ProfilePiece vertical_triangle_piece(double L, double mult, std::string label) {
  ProfilePiece p;
  p.density = [L](double u) { return u >= L ? 0.0 : L - u; };
  p.volume = [L](double u) {
    const double v = std::min(u, L);
    return L * v - 0.5 * v * v;
  };
  p.width = L;
  p.measure = 0.5 * L * L;
  p.mult = mult;
  p.label = std::move(label);
  return p;
}

ProfilePiece family(ProfilePiece p, double b, double r) {
  p.b = b;
  p.r = r;
  return p;
}

struct CuspShape {
  std::function<double(double)> h;
  std::function<double(double)> area_below;  // int_0^x h
};

// Region {0 < x < 1, 0 < y < h(x)} with A = {0}; h increasing, h(x) < x near 0.
ProfilePiece cusp_piece(const CuspShape& cs, double order0, std::string label) {
  const double h1 = cs.h(1.0);
  const double width = std::sqrt(1.0 + h1 * h1);
  auto xstar = [cs](double u) {
    double lo = 0.0, hi = std::min(u, 1.0);
    for (int it = 0; it < 200 && hi - lo > 1e-17 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      const double hm = cs.h(mid);
      (mid * mid + hm * hm < u * u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  ProfilePiece p;
  p.density = [cs, xstar, width](double u) {
    if (u <= 0.0 || u >= width) return 0.0;
    const double x = xstar(u);
    const double th = std::atan2(cs.h(x), x);
    const double th1 = u > 1.0 ? std::acos(1.0 / u) : 0.0;
    return u * std::max(0.0, th - th1);
  };
  const double total = cs.area_below(1.0);
  p.volume = [cs, xstar, width, total](double u) {
    if (u <= 0.0) return 0.0;
    if (u >= width) return total;
    const double x = xstar(u);
    const double hx = cs.h(x);
    const double th = std::atan2(hx, x);
    double v = cs.area_below(x) + 0.5 * (u * u * th - x * hx);
    if (u > 1.0) v -= 0.5 * (u * u * std::acos(1.0 / u) - std::sqrt(u * u - 1.0));
    return std::clamp(v, 0.0, total);
  };
  p.width = width;
  p.measure = total;
  p.order0 = order0;
  if (width > 1.0) p.kinks = {1.0};
  p.label = std::move(label);
  return p;
}

struct ConvexPolygon {
  std::vector<std::array<double, 2>> v;  // counter-clockwise
  double area = 0.0, perimeter = 0.0;
};

ConvexPolygon make_polygon(std::vector<std::array<double, 2>> v) {
  if (v.size() < 3) throw Error(Errc::InvalidArgument, "polygon needs at least 3 vertices");
  ConvexPolygon P;
  double a2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    a2 += p[0] * q[1] - q[0] * p[1];
  }
  if (a2 < 0) std::reverse(v.begin(), v.end());
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    const auto& w = v[(i + 2) % n];
    const double cross = (q[0] - p[0]) * (w[1] - q[1]) - (q[1] - p[1]) * (w[0] - q[0]);
    if (cross <= 0) throw Error(Errc::InvalidArgument, "polygon must be strictly convex");
    P.perimeter += std::hypot(q[0] - p[0], q[1] - p[1]);
  }
  P.area = 0.5 * std::abs(a2);
  P.v = std::move(v);
  return P;
}

// Signed distance to the boundary; positive inside.
double polygon_depth(const ConvexPolygon& P, double x, double y) {
  double d = kInf;
  const std::size_t n = P.v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = P.v[i];
    const auto& q = P.v[(i + 1) % n];
    const double ex = q[0] - p[0], ey = q[1] - p[1];
    const double len = std::hypot(ex, ey);
    d = std::min(d, ((x - p[0]) * ey * -1.0 + (y - p[1]) * ex) / len);
  }
  return d;
}

// Center of a circle tangent to every edge line, if one exists.
bool incircle(const ConvexPolygon& P, double& rho) {
  rho = 2.0 * P.area / P.perimeter;
  if (P.v.size() == 3) return true;
  const std::size_t n = P.v.size();
  double cx = 0, cy = 0;
  for (const auto& p : P.v) {
    cx += p[0] / n;
    cy += p[1] / n;
  }
  // regular polygons only: all vertices equidistant from the centroid, equal sides
  const double r0 = std::hypot(P.v[0][0] - cx, P.v[0][1] - cy);
  const double s0 = std::hypot(P.v[1][0] - P.v[0][0], P.v[1][1] - P.v[0][1]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = P.v[i];
    const auto& q = P.v[(i + 1) % n];
    if (std::abs(std::hypot(p[0] - cx, p[1] - cy) - r0) > 1e-12 * r0) return false;
    if (std::abs(std::hypot(q[0] - p[0], q[1] - p[1]) - s0) > 1e-12 * s0) return false;
  }
  return true;
}

Rfd polygon_rfd(const ConvexPolygon& P, std::string label) {
  Rfd r;
  r.N = 2;
  r.kind = "polygon";
  r.label = std::move(label);
  r.distance = [P](const Point& x) { return std::abs(polygon_depth(P, x[0], x[1])); };
  r.inside = [P](const Point& x) { return polygon_depth(P, x[0], x[1]) > 0.0; };
  r.lo = {kInf, kInf, 0};
  r.hi = {-kInf, -kInf, 0};
  for (const auto& p : P.v) {
    for (int k = 0; k < 2; ++k) {
      r.lo[k] = std::min(r.lo[k], p[k]);
      r.hi[k] = std::max(r.hi[k], p[k]);
    }
  }
  r.measure = P.area;
  r.dim_hint = 1.0;
  double rho = 0.0;
  if (incircle(P, rho)) r.profile.push_back(tangential_piece(P.area, rho, 1.0, "interior"));
  return r;
}

// Gasket descent in barycentric coordinates of the current triangle of height H.
double gasket_distance(const Point& x) {
  const double s3 = std::sqrt(3.0);
  double l2 = x[1] / (0.5 * s3);
  double l1 = x[0] - 0.5 * l2;
  double l0 = 1.0 - l1 - l2;
  if (l0 < 0 || l1 < 0 || l2 < 0) return 0.0;
  double H = 0.5 * s3;
  for (int level = 0; level < 60; ++level) {
    if (l0 < 0.5 && l1 < 0.5 && l2 < 0.5)
      return H * std::min({0.5 - l0, 0.5 - l1, 0.5 - l2});
    if (l0 >= 0.5) {
      l0 = 2 * l0 - 1; l1 *= 2; l2 *= 2;
    } else if (l1 >= 0.5) {
      l1 = 2 * l1 - 1; l0 *= 2; l2 *= 2;
    } else {
      l2 = 2 * l2 - 1; l0 *= 2; l1 *= 2;
    }
    H *= 0.5;
  }
  return 0.0;
}

double carpet_distance(const Point& p) {
  double x = p[0], y = p[1], scale = 1.0;
  if (x <= 0 || x >= 1 || y <= 0 || y >= 1) return 0.0;
  for (int level = 0; level < 40; ++level) {
    const double X = 3 * x, Y = 3 * y;
    const int i = std::clamp(static_cast<int>(X), 0, 2);
    const int j = std::clamp(static_cast<int>(Y), 0, 2);
    if (i == 1 && j == 1) return scale / 3.0 * std::min({X - 1, 2 - X, Y - 1, 2 - Y});
    x = X - i;
    y = Y - j;
    scale /= 3.0;
  }
  return 0.0;
}

struct CantorGraphCell {
  bool found = false;
  double x0 = 0, len = 0, h = 0;
};

// Flat piece of the Cantor function over the middle-third gap containing x.
CantorGraphCell cantor_graph_cell(double x) {
  CantorGraphCell c;
  double x0 = 0, xs = 1, base = 0, w = 1;
  if (x <= 0 || x >= 1) return c;
  for (int k = 0; k < 40; ++k) {
    const double X = 3 * (x - x0) / xs;
    if (X < 1) {
      xs /= 3;
      w /= 2;
    } else if (X < 2) {
      c.found = true;
      c.x0 = x0 + xs / 3;
      c.len = xs / 3;
      c.h = base + w / 2;
      return c;
    } else {
      x0 += 2 * xs / 3;
      base += w / 2;
      xs /= 3;
      w /= 2;
    }
  }
  return c;
}

// Which of the two triangles over the flat piece contains p (0: none).
int cantor_graph_side(const CantorGraphCell& c, const Point& p) {
  if (!c.found) return 0;
  const double dx = p[0] - c.x0;
  if (dx <= 0 || dx >= c.len) return 0;
  const double dy = p[1] - c.h;
  if (dy > 0 && dy < c.len - dx) return 1;
  if (dy < 0 && -dy < dx) return -1;
  return 0;
}

Rfd string_rfd(const FractalString& L) {
  Rfd r;
  r.N = 1;
  r.kind = "string";
  r.label = L.label.empty() ? "string" : L.label;
  bool analytic_tails = true;
  for (const auto& t : L.tails)
    if (t.kind != TailPiece::Kind::geometric) analytic_tails = false;
  const FractalString E = analytic_tails ? L : expand_string(L, 100000);
  r.profile_truncated = !analytic_tails;
  for (const auto& e : E.entries) r.profile.push_back(flat_piece(2.0, 0.5 * e.length, e.mult, "gap"));
  if (analytic_tails) {
    for (const auto& t : E.tails) {
      const double len = t.scale * t.first_length * std::pow(t.r, static_cast<double>(t.offset));
      const double mult = t.first_mult * std::pow(t.b, static_cast<double>(t.offset));
      r.profile.push_back(family(flat_piece(2.0, 0.5 * len, mult, "gap-family"), t.b, t.r));
    }
  }
  const double total = total_length(L);
  r.measure = total;
  r.lo = {0, 0, 0};
  r.hi = {total, 0, 0};
  r.dim_hint = std::max(0.0, abscissa_estimate(L));

  // canonical layout: gaps in decreasing length from the right end toward 0
  const FractalString X = expand_string(L, 100000);
  auto lefts = std::make_shared<std::vector<std::pair<double, double>>>();
  double right = total;
  for (const auto& e : X.entries) {
    const double copies = std::min(e.mult, 1e5);
    for (double k = 0; k < copies && lefts->size() < 100000; ++k) {
      lefts->push_back({right - e.length, e.length});
      right -= e.length;
    }
    if (lefts->size() >= 100000) break;
  }
  std::reverse(lefts->begin(), lefts->end());  // ascending left endpoints
  r.distance = [lefts, total](const Point& p) {
    const double x = p[0];
    if (x <= 0) return -x;
    if (x >= total) return x - total;
    auto it = std::upper_bound(lefts->begin(), lefts->end(), x,
                               [](double v, const std::pair<double, double>& g) { return v < g.first; });
    if (it == lefts->begin()) return 0.0;  // inside the unresolved tail near 0
    --it;
    const double off = x - it->first;
    if (off > it->second) return 0.0;
    return std::min(off, it->second - off);
  };
  r.inside = [total](const Point& p) { return p[0] > 0 && p[0] < total; };
  return r;
}

void require_finite_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw Error(Errc::InvalidArgument, std::string(what) + " must be positive");
}

// Mass of one piece (with its family copies) within distance t.
double piece_tube(const ProfilePiece& p, int N, double t) {
  if (p.b <= 0) return p.mult * p.volume(std::min(t, p.width));
  const double q = p.b * std::pow(p.r, N);
  if (q >= 1) throw Error(Errc::MeasureDivergence, "family of infinite total measure");
  CompensatedSum<double> acc;
  int j = 0;
  double lam = 1.0, bj = 1.0;
  for (; lam * p.width > t && j < 4000; ++j) {
    acc.add(bj * std::pow(lam, N) * p.volume(t / lam));
    lam *= p.r;
    bj *= p.b;
  }
  acc.add(p.measure * std::pow(q, j) / (1.0 - q));
  return p.mult * acc.value();
}

void check_integrable(const ProfilePiece& p, int N, cplx s) {
  if (s.real() - N + p.order0 <= -1.0)
    throw Error(Errc::NonIntegrable, "d^(s-N) not integrable near A on piece " + p.label);
  if (p.b > 0 && p.b * std::pow(p.r, s.real()) >= 1.0)
    throw Error(Errc::NonIntegrable, "family sum diverges at Re s on piece " + p.label);
}

// Integral over [0, X] split at the piece kinks; tanh-sinh copes with endpoint power laws.
Quad split_integral(const ProfilePiece& p, double X, const CFun& f, double tol) {
  std::vector<double> cuts{0.0};
  for (double k : p.kinks)
    if (k > 0 && k < X) cuts.push_back(k);
  cuts.push_back(X);
  Quad out{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Quad q = integrate_ts(f, cuts[i], cuts[i + 1], tol);
    out.value += q.value;
    out.error += q.error;
  }
  return out;
}

cplx pow_c(double x, cplx e) { return real_pow(x, e); }

// c u^e without overflow of u^e near u = 0.
cplx weighted_pow(double u, cplx e, double c) {
  if (u <= 0 || c == 0) return 0.0;
  return std::exp(e * std::log(u) + std::log(std::abs(c))) * (c < 0 ? -1.0 : 1.0);
}

NumericValue profile_distance_zeta(const Rfd& r, cplx s, double tol) {
  const int N = r.N;
  ComplexSum acc;
  double err = 0.0;
  for (const auto& p : r.profile) {
    check_integrable(p, N, s);
    auto f = [&p, s, N](double u) -> cplx {
      return weighted_pow(u, s - static_cast<double>(N), p.density(u));
    };
    Quad I = split_integral(p, p.width, f, tol);
    cplx fam = 1.0;
    if (p.b > 0) fam = 1.0 / (1.0 - p.b * pow_c(p.r, s));
    acc.add(p.mult * I.value * fam);
    err += p.mult * I.error * std::abs(fam);
  }
  return {acc.value(), err, "profile", false};
}

NumericValue profile_tube_zeta(const Rfd& r, cplx s, double delta, double tol) {
  const int N = r.N;
  const cplx e = s - static_cast<double>(N);
  // s = N is a regular point; only the saturated-copy bookkeeping divides by s - N there.
  // The mean over four points on a small circle is exact through cubic terms.
  if (std::abs(e) < 1e-6) {
    const double h = 1e-3;
    ComplexSum mean;
    double err = 0.0;
    for (cplx w : {cplx(h, 0), cplx(0, h), cplx(-h, 0), cplx(0, -h)}) {
      const NumericValue v = profile_tube_zeta(r, s + w, delta, tol);
      mean.add(0.25 * v.value);
      err = std::max(err, v.error);
    }
    return {mean.value(), err + 1e-12 * std::abs(mean.value()), "profile", false};
  }
  ComplexSum acc;
  double err = 0.0;
  for (const auto& p : r.profile) {
    check_integrable(p, N, s);
    auto g = [&p, e](double tau) -> cplx {
      return weighted_pow(tau, e - 1.0, p.volume(tau));
    };
    // int_0^X tau^(s-N-1) V(tau) dtau for one copy scaled to 1
    auto partial = [&](double X) {
      if (X <= p.width) return split_integral(p, X, g, tol);
      Quad q = split_integral(p, p.width, g, tol);
      q.value += p.measure * (pow_c(X, e) - pow_c(p.width, e)) / e;
      return q;
    };
    if (p.b <= 0) {
      Quad q = partial(delta);
      acc.add(p.mult * q.value);
      err += p.mult * q.error;
      continue;
    }
    // copies with lambda_j w > delta individually; the rest saturate and sum geometrically
    int j = 0;
    double lam = 1.0, bj = 1.0;
    for (; lam * p.width > delta && j < 4000; ++j) {
      Quad q = partial(delta / lam);
      const cplx w = bj * pow_c(lam, s);
      acc.add(p.mult * w * q.value);
      err += p.mult * std::abs(w) * q.error;
      lam *= p.r;
      bj *= p.b;
    }
    const cplx z = p.b * pow_c(p.r, s);
    const double qN = p.b * std::pow(p.r, N);
    const cplx zJ = std::pow(z, static_cast<double>(j));
    Quad IV = split_integral(p, p.width, g, tol);
    const cplx saturated = IV.value * zJ / (1.0 - z) +
                           p.measure / e *
                               (pow_c(delta, e) * std::pow(qN, j) / (1.0 - qN) -
                                pow_c(p.width, e) * zJ / (1.0 - z));
    acc.add(p.mult * saturated);
    err += p.mult * IV.error * std::abs(zJ / (1.0 - z));
  }
  return {acc.value(), err, "profile", false};
}

struct McDistances {
  std::vector<double> d;  // inside points only, block order
  std::size_t n = 0;
  double box = 0.0;
};

McDistances mc_distances(const Rfd& r, std::size_t n, std::uint64_t seed, Exec ex) {
  McDistances out;
  out.n = n;
  out.box = 1.0;
  for (int k = 0; k < r.N; ++k) out.box *= r.hi[k] - r.lo[k];
  const std::size_t nb = block_count(n);
  std::vector<std::vector<double>> parts(nb);
  for_each_index(nb, ex, [&](std::size_t b) {
    auto g = stratum_rng(seed, b);
    const std::size_t cnt = std::min(kBlock, n - b * kBlock);
    auto& v = parts[b];
    v.reserve(cnt);
    for (std::size_t i = 0; i < cnt; ++i) {
      Point x{0, 0, 0};
      for (int k = 0; k < r.N; ++k) x[k] = r.lo[k] + (r.hi[k] - r.lo[k]) * uniform01(g);
      if (r.inside(x)) v.push_back(r.distance(x));
    }
  });
  for (auto& v : parts) out.d.insert(out.d.end(), v.begin(), v.end());
  return out;
}

std::size_t default_samples(const Rfd& r, const NumericConfig& cfg) {
  if (cfg.samples) return cfg.samples;
  return r.N >= 3 ? 4000000 : 1000000;
}

bool use_profile(const Rfd& r, const NumericConfig& cfg) {
  switch (cfg.method) {
    case NumericConfig::Method::profile:
      if (!r.has_profile()) throw Error(Errc::UnsupportedKind, r.kind + " has no exact distance profile");
      return true;
    case NumericConfig::Method::montecarlo:
      return false;
    default:
      return r.has_profile();
  }
}

}  // namespace

double distance_to_cantor(const GeneralizedCantorSet& C, double x) {
  if (x <= 0) return -x;
  if (x >= 1) return x - 1;
  const double g = 2.0 * C.c;
  double scale = 1.0;
  for (int level = 0; level < 60; ++level) {
    int k = static_cast<int>(x / (C.a + g));
    k = std::clamp(k, 0, C.m - 1);
    const double off = x - k * (C.a + g);
    if (off <= C.a) {
      x = off / C.a;
      scale *= C.a;
      continue;
    }
    return scale * std::min(off - C.a, C.a + g - off);
  }
  return 0.0;
}

double embedded_cantor_tube(const GeneralizedCantorSet& C, double t) {
  if (!(t > 0)) throw Error(Errc::NonPositiveT, "t must be positive");
  auto F = [t](double a) { return 0.5 * (a * std::sqrt(std::max(0.0, t * t - a * a)) + t * t * std::asin(a / t)); };
  CompensatedSum<double> acc;
  acc.add(kPi * t * t);
  double mult = C.m - 1, g = 2.0 * C.c;
  for (int k = 1; k < 400; ++k) {
    const double a = std::min(0.5 * g, t);
    const double term = mult * 4.0 * F(a);
    acc.add(term);
    if (term < 1e-18 * t && 0.5 * g < t) break;
    mult *= C.m;
    g *= C.a;
  }
  return acc.value();
}

cplx gcs_tube_zeta(const GeneralizedCantorSet& C, cplx s, double delta) {
  require_finite_positive(delta, "delta");
  if (delta >= C.c) return eval_expr(gcs_tube_mero(C, delta), s);
  // int_lo^hi t^(e-1) dt
  auto pint = [](cplx e, double lo, double hi) -> cplx {
    if (std::abs(e) < 1e-14) return std::log(hi / lo);
    return (real_pow(hi, e) - real_pow(lo, e)) / e;
  };
  const double T = C.T;
  const int nd = static_cast<int>(std::ceil(std::log(C.c / delta) / T - 1e-12));
  ComplexSum acc;
  acc.add(eval_expr(gcs_tube_mero(C, C.c), s));
  // remove [delta, c] where |C_t| = (ma)^n + 2 t m^n on [c a^n, c a^(n-1)]
  for (int n = 1; n <= nd; ++n) {
    const double hi = C.c * std::pow(C.a, n - 1);
    const double lo = n == nd ? delta : C.c * std::pow(C.a, n);
    if (hi <= lo) continue;
    acc.add(-std::pow(C.m * C.a, n) * pint(s - 1.0, lo, hi) - 2.0 * std::pow(C.m, n) * pint(s, lo, hi));
  }
  return acc.value();
}

Rfd build_rfd(const std::string& kind, const RfdParams& p) {
  Rfd r;
  r.kind = kind;
  r.label = kind;
  if (kind == "cantor" || kind == "cantor_embedded" || kind == "cantor_dust") {
    auto [C, inv] = gcs_create(p.m, p.a);
    (void)inv;
    if (kind == "cantor") {
      r.N = 1;
      r.dim_hint = C.D;
      const auto gaps = family(flat_piece(2.0, C.c, C.m - 1, "gaps"), C.m, C.a);
      if (p.omega == "unit") {
        r.lo = {0, 0, 0};
        r.hi = {1, 0, 0};
        r.measure = 1.0;
        r.profile = {gaps};
      } else {
        require_finite_positive(p.delta, "delta");
        if (p.delta < C.c) throw Error(Errc::InvalidArgument, "delta must be >= c for Omega = A_delta");
        r.lo = {-p.delta, 0, 0};
        r.hi = {1 + p.delta, 0, 0};
        r.measure = 1.0 + 2.0 * p.delta;
        r.profile = {flat_piece(1.0, p.delta, 2.0, "ends"), gaps};
      }
      const Point lo = r.lo, hi = r.hi;
      r.distance = [C](const Point& x) { return distance_to_cantor(C, x[0]); };
      r.inside = [lo, hi](const Point& x) { return x[0] > lo[0] && x[0] < hi[0]; };
    } else if (kind == "cantor_embedded") {
      require_finite_positive(p.delta, "delta");
      const double d = p.delta;
      r.N = 2;
      r.dim_hint = C.D;
      r.lo = {-d, -d, 0};
      r.hi = {1 + d, d, 0};
      r.measure = embedded_cantor_tube(C, d);
      r.distance = [C](const Point& x) { return std::hypot(distance_to_cantor(C, x[0]), x[1]); };
      r.inside = [C, d](const Point& x) { return std::hypot(distance_to_cantor(C, x[0]), x[1]) < d; };
      const double meas = r.measure;
      r.tube_fn = [C, d, meas](double t) { return t >= d ? meas : embedded_cantor_tube(C, t); };
    } else {
      r.N = 2;
      r.dim_hint = 2.0 * C.D;
      r.lo = {0, 0, 0};
      r.hi = {1, 1, 0};
      r.measure = 1.0;
      r.distance = [C](const Point& x) {
        return std::hypot(distance_to_cantor(C, x[0]), distance_to_cantor(C, x[1]));
      };
      r.inside = [](const Point& x) { return x[0] > 0 && x[0] < 1 && x[1] > 0 && x[1] < 1; };
    }
    return r;
  }
  if (kind == "polygon" || kind == "triangle" || kind == "square") {
    std::vector<std::array<double, 2>> v = p.vertices;
    const double L = p.side;
    require_finite_positive(L, "side");
    if (kind == "triangle") v = {{0, 0}, {L, 0}, {0.5 * L, 0.5 * std::sqrt(3.0) * L}};
    if (kind == "square") v = {{0, 0}, {L, 0}, {L, L}, {0, L}};
    Rfd out = polygon_rfd(make_polygon(v), kind);
    out.kind = kind;
    return out;
  }
  if (kind == "ball") {
    if (p.N < 1 || p.N > 3) throw Error(Errc::InvalidArgument, "ball dimension must be 1, 2 or 3");
    require_finite_positive(p.R, "R");
    const int N = p.N;
    const double R = p.R, w = unit_ball_volume(N);
    r.N = N;
    r.dim_hint = N - 1;
    r.measure = w * std::pow(R, N);
    for (int k = 0; k < N; ++k) {
      r.lo[k] = -R;
      r.hi[k] = R;
    }
    auto norm = [N](const Point& x) {
      double q = 0;
      for (int k = 0; k < N; ++k) q += x[k] * x[k];
      return std::sqrt(q);
    };
    r.distance = [norm, R](const Point& x) { return std::abs(R - norm(x)); };
    r.inside = [norm, R](const Point& x) { return norm(x) < R; };
    ProfilePiece pc;
    pc.density = [N, R, w](double u) { return u >= R ? 0.0 : N * w * std::pow(R - u, N - 1); };
    // R^N - (R-u)^N = u * sum_k R^(N-1-k) (R-u)^k, free of cancellation for small u
    pc.volume = [N, R, w](double u) {
      const double v = R - std::min(u, R);
      double acc = 0.0;
      for (int k = 0; k < N; ++k) acc += std::pow(R, N - 1 - k) * std::pow(v, k);
      return w * std::min(u, R) * acc;
    };
    pc.width = R;
    pc.measure = r.measure;
    pc.label = "ball";
    r.profile = {pc};
    return r;
  }
  if (kind == "torus") {
    const double R = p.R, a = p.r;
    require_finite_positive(a, "r");
    if (!(R > a)) throw Error(Errc::InvalidArgument, "torus needs R > r > 0");
    r.N = 3;
    r.dim_hint = 2.0;
    r.measure = 2.0 * kPi * kPi * R * a * a;
    r.lo = {-R - a, -R - a, -a};
    r.hi = {R + a, R + a, a};
    auto rho = [R](const Point& x) { return std::hypot(std::hypot(x[0], x[1]) - R, x[2]); };
    r.distance = [rho, a](const Point& x) { return std::abs(a - rho(x)); };
    r.inside = [rho, a](const Point& x) { return rho(x) < a; };
    ProfilePiece pc;
    pc.density = [R, a](double u) { return u >= a ? 0.0 : 4.0 * kPi * kPi * R * (a - u); };
    pc.volume = [R, a](double u) {
      const double v = std::min(u, a);
      return 2.0 * kPi * kPi * R * (2.0 * a * v - v * v);
    };
    pc.width = a;
    pc.measure = r.measure;
    pc.label = "torus";
    r.profile = {pc};
    return r;
  }
  if (kind == "cusp" || kind == "exp_cusp") {
    CuspShape cs;
    double order0;
    if (kind == "cusp") {
      const double al = p.alpha;
      if (!(al > 1)) throw Error(Errc::InvalidArgument, "cusp exponent must exceed 1");
      cs.h = [al](double x) { return std::pow(x, al); };
      cs.area_below = [al](double x) { return std::pow(x, al + 1) / (al + 1); };
      order0 = al;
      r.dim_hint = 1.0 - al;
    } else {
      cs.h = [](double x) { return x <= 0 ? 0.0 : std::exp(-1.0 / x); };
      // int_0^x e^(-1/t) dt = x e^(-1/x) - E1(1/x), and Ei(-z) = -E1(z)
      cs.area_below = [](double x) { return x <= 0 ? 0.0 : x * std::exp(-1.0 / x) + std::expint(-1.0 / x); };
      order0 = kInf;
      r.dim_hint = -kInf;
    }
    r.N = 2;
    r.profile = {cusp_piece(cs, order0, kind)};
    r.measure = r.profile[0].measure;
    r.lo = {0, 0, 0};
    r.hi = {1, cs.h(1.0), 0};
    r.distance = [](const Point& x) { return std::hypot(x[0], x[1]); };
    auto h = cs.h;
    r.inside = [h](const Point& x) { return x[0] > 0 && x[0] < 1 && x[1] > 0 && x[1] < h(x[0]); };
    return r;
  }
  if (kind == "string") {
    if (!p.string) throw Error(Errc::InvalidArgument, "string RFD needs a fractal string");
    return string_rfd(*p.string);
  }
  if (kind == "gasket") {
    const double s3 = std::sqrt(3.0);
    r.N = 2;
    r.dim_hint = std::log(3.0) / std::log(2.0);
    r.measure = s3 / 4.0;
    r.lo = {0, 0, 0};
    r.hi = {1, 0.5 * s3, 0};
    r.distance = gasket_distance;
    r.inside = [s3](const Point& x) { return x[1] > 0 && s3 * x[0] > x[1] && s3 * (1 - x[0]) > x[1]; };
    const double side = 0.5;
    r.profile = {family(tangential_piece(s3 / 4 * side * side, side / (2 * s3), 1.0, "removed-triangles"), 3.0, 0.5)};
    return r;
  }
  if (kind == "carpet") {
    r.N = 2;
    r.dim_hint = std::log(8.0) / std::log(3.0);
    r.measure = 1.0;
    r.lo = {0, 0, 0};
    r.hi = {1, 1, 0};
    r.distance = carpet_distance;
    r.inside = [](const Point& x) { return x[0] > 0 && x[0] < 1 && x[1] > 0 && x[1] < 1; };
    r.profile = {family(square_piece(1.0 / 3.0, 1.0, "removed-squares"), 8.0, 1.0 / 3.0)};
    return r;
  }
  if (kind == "cantor_graph") {
    r.N = 2;
    r.dim_hint = 1.0;
    r.measure = 1.0 / 7.0;
    r.lo = {0, 0, 0};
    r.hi = {1, 1, 0};
    // distance inside each triangle is measured vertically to the flat piece it sits on
    r.distance = [](const Point& x) {
      const auto c = cantor_graph_cell(x[0]);
      return cantor_graph_side(c, x) ? std::abs(x[1] - c.h) : 0.0;
    };
    r.inside = [](const Point& x) { return cantor_graph_side(cantor_graph_cell(x[0]), x) != 0; };
    r.profile = {family(vertical_triangle_piece(1.0 / 3.0, 2.0, "triangles"), 2.0, 1.0 / 3.0)};
    return r;
  }
  throw Error(Errc::UnsupportedKind, "unknown RFD kind '" + kind + "'");
}

Rfd transform_rfd(const Rfd& r, double lambda, const Point& shift) {
  if (!(lambda > 0)) throw Error(Errc::NonPositiveScale, "lambda must be positive");
  Rfd out = r;
  const int N = r.N;
  const auto dist = r.distance;
  const auto ins = r.inside;
  auto back = [lambda, shift, N](const Point& x) {
    Point y{0, 0, 0};
    for (int k = 0; k < N; ++k) y[k] = (x[k] - shift[k]) / lambda;
    return y;
  };
  out.distance = [dist, back, lambda](const Point& x) { return lambda * dist(back(x)); };
  out.inside = [ins, back](const Point& x) { return ins(back(x)); };
  for (int k = 0; k < N; ++k) {
    out.lo[k] = lambda * r.lo[k] + shift[k];
    out.hi[k] = lambda * r.hi[k] + shift[k];
  }
  const double volN = std::pow(lambda, N);
  out.measure = r.measure * volN;
  for (auto& p : out.profile) {
    const auto m = p.density;
    const auto V = p.volume;
    const double dN = std::pow(lambda, N - 1);
    p.density = [m, lambda, dN](double u) { return dN * m(u / lambda); };
    p.volume = [V, lambda, volN](double u) { return volN * V(u / lambda); };
    p.width *= lambda;
    p.measure *= volN;
    for (double& k : p.kinks) k *= lambda;
  }
  if (r.tube_fn) {
    const auto f = r.tube_fn;
    out.tube_fn = [f, lambda, volN](double t) { return volN * f(t / lambda); };
  }
  out.label = r.label + "-scaled";
  return out;
}

Rfd rfd_union(const std::vector<Rfd>& parts, std::uint64_t seed) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "empty union");
  const int N = parts[0].N;
  Rfd out;
  out.N = N;
  out.kind = "union";
  out.label = "union";
  out.lo = parts[0].lo;
  out.hi = parts[0].hi;
  out.measure = 0.0;
  out.dim_hint = -kInf;
  bool all_profile = true, all_exact = true;
  for (const auto& p : parts) {
    if (p.N != N) throw Error(Errc::ArityMismatch, "union parts live in different dimensions");
    for (int k = 0; k < N; ++k) {
      out.lo[k] = std::min(out.lo[k], p.lo[k]);
      out.hi[k] = std::max(out.hi[k], p.hi[k]);
    }
    out.measure += p.measure;
    out.dim_hint = std::max(out.dim_hint, p.dim_hint);
    all_profile = all_profile && p.has_profile();
    all_exact = all_exact && (p.has_profile() || p.tube_fn);
    out.profile_truncated = out.profile_truncated || p.profile_truncated;
  }
  // disjointness spot check
  auto g = stratum_rng(seed, 0);
  for (int i = 0; i < 20000; ++i) {
    Point x{0, 0, 0};
    for (int k = 0; k < N; ++k) x[k] = out.lo[k] + (out.hi[k] - out.lo[k]) * uniform01(g);
    int hits = 0;
    for (const auto& p : parts) hits += p.inside(x) ? 1 : 0;
    if (hits > 1) throw Error(Errc::IncompatibleUnion, "union parts overlap");
  }
  auto shared = std::make_shared<std::vector<Rfd>>(parts);
  out.distance = [shared](const Point& x) {
    for (const auto& p : *shared)
      if (p.inside(x)) return p.distance(x);
    double d = kInf;
    for (const auto& p : *shared) d = std::min(d, p.distance(x));
    return d;
  };
  out.inside = [shared](const Point& x) {
    for (const auto& p : *shared)
      if (p.inside(x)) return true;
    return false;
  };
  if (all_profile) {
    for (const auto& p : parts) out.profile.insert(out.profile.end(), p.profile.begin(), p.profile.end());
  } else if (all_exact) {
    out.tube_fn = [shared](double t) {
      CompensatedSum<double> acc;
      for (const auto& p : *shared) acc.add(tube_volume_exact(p, t));
      return acc.value();
    };
  }
  return out;
}

NumericValue distance_zeta_numeric(const Rfd& r, cplx s, const NumericConfig& cfg) {
  const bool warn = std::isfinite(r.dim_hint) && s.real() <= r.dim_hint;
  NumericValue v;
  if (use_profile(r, cfg)) {
    v = profile_distance_zeta(r, s, cfg.tol);
  } else {
    const std::size_t n = default_samples(r, cfg);
    const McDistances mc = mc_distances(r, n, cfg.seed, cfg.exec);
    ComplexSum sum;
    CompensatedSum<double> sq;
    const cplx e = s - static_cast<double>(r.N);
    for (double d : mc.d) {
      if (d <= 0) continue;
      const cplx f = real_pow(d, e);
      sum.add(f);
      sq.add(std::norm(f));
    }
    const cplx mean = sum.value() / static_cast<double>(n);
    const double var = std::max(0.0, sq.value() / n - std::norm(mean));
    v.value = mc.box * mean;
    v.error = mc.box * std::sqrt(var / n);
    v.method = "montecarlo";
    if (!std::isfinite(v.value.real()) || !std::isfinite(v.value.imag()))
      throw Error(Errc::NonIntegrable, "Monte Carlo estimate is not finite");
  }
  v.below_abscissa_warning = warn;
  if (v.error > std::max(cfg.tol, 1e-3) * std::max(1.0, std::abs(v.value)) && v.method == "profile")
    throw Error(Errc::ToleranceUnreachable, "quadrature error estimate too large");
  return v;
}

NumericValue tube_zeta_numeric(const Rfd& r, cplx s, double delta, const NumericConfig& cfg) {
  require_finite_positive(delta, "delta");
  NumericValue v;
  if (r.has_profile() && cfg.method != NumericConfig::Method::montecarlo) {
    v = profile_tube_zeta(r, s, delta, cfg.tol);
  } else if (r.tube_fn) {
    // t = e^x turns the endpoint power law into exponential decay
    const cplx e = s - static_cast<double>(r.N);
    auto f = [&r, e](double x) -> cplx {
      const double t = std::exp(x);
      if (t < 1e-290) return 0.0;  // the integrand has already decayed below resolution
      return real_pow(t, e) * r.tube_fn(t);
    };
    Quad q = integrate_halfline([&](double y) { return f(std::log(delta) - y); }, 0.0, cfg.tol);
    v = {q.value, q.error, "exact-tube", false};
  } else {
    throw Error(Errc::UnsupportedKind, r.kind + ": tube zeta needs an exact tube function");
  }
  v.below_abscissa_warning = std::isfinite(r.dim_hint) && s.real() <= r.dim_hint;
  return v;
}

double tube_volume_exact(const Rfd& r, double t) {
  if (!(t > 0)) throw Error(Errc::NonPositiveT, "t must be positive");
  if (r.tube_fn) return r.tube_fn(t);
  if (!r.has_profile()) throw Error(Errc::UnsupportedKind, r.kind + " has no exact tube function");
  CompensatedSum<double> acc;
  for (const auto& p : r.profile) acc.add(piece_tube(p, r.N, t));
  return acc.value();
}

std::vector<double> log_grid(double tmin, double tmax, int points) {
  if (!(tmin > 0) || !(tmax > tmin) || points < 2) throw Error(Errc::InvalidArgument, "bad log grid");
  std::vector<double> g(points);
  const double l0 = std::log(tmin), l1 = std::log(tmax);
  for (int i = 0; i < points; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  g.front() = tmin;
  g.back() = tmax;
  return g;
}

TubeSamples tube_function_numeric(const Rfd& r, const std::vector<double>& t_grid, const NumericConfig& cfg) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0)) throw Error(Errc::NonPositiveT, "grid must be positive");
    if (i && !(t_grid[i] > t_grid[i - 1])) throw Error(Errc::InvalidArgument, "grid must be ascending");
  }
  TubeSamples out;
  out.t = t_grid;
  const bool exact = (r.has_profile() || r.tube_fn) && cfg.method != NumericConfig::Method::montecarlo;
  if (exact) {
    out.method = "exact";
    out.volume.resize(t_grid.size());
    out.stderr_.assign(t_grid.size(), 0.0);
    for_each_index(t_grid.size(), cfg.exec, [&](std::size_t i) { out.volume[i] = tube_volume_exact(r, t_grid[i]); });
    return out;
  }
  const std::size_t n = default_samples(r, cfg);
  McDistances mc = mc_distances(r, n, cfg.seed, cfg.exec);
  std::sort(mc.d.begin(), mc.d.end());
  out.method = "montecarlo";
  out.seed = cfg.seed;
  out.samples = n;
  for (double t : t_grid) {
    const auto cnt = static_cast<double>(std::upper_bound(mc.d.begin(), mc.d.end(), t) - mc.d.begin());
    const double pr = cnt / n;
    out.volume.push_back(mc.box * pr);
    out.stderr_.push_back(mc.box * std::sqrt(pr * (1 - pr) / n));
  }
  return out;
}

namespace {

struct LineFit {
  double slope, intercept, slope_stderr, rms;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - f.intercept - f.slope * x[i];
    ss += e * e;
  }
  f.rms = std::sqrt(ss / n);
  f.slope_stderr = x.size() > 2 ? std::sqrt(ss / (n - 2) / sxx) : 0.0;
  return f;
}

}  // namespace

DimensionFit box_dimension_fit(const TubeSamples& samples, int N, FitRange range) {
  std::vector<double> ts;
  for (std::size_t i = 0; i < samples.t.size(); ++i)
    if (samples.volume[i] > 0) ts.push_back(samples.t[i]);
  if (ts.size() < 8 || std::log10(ts.back() / ts.front()) < 3.0 - 1e-9)
    throw Error(Errc::InsufficientRange, "need at least 8 positive samples spanning 3 decades");
  const bool exact = samples.method == "exact";
  double tmin = std::isnan(range.tmin) ? (exact ? 1e-6 : 1e-3) : range.tmin;
  double tmax = std::isnan(range.tmax) ? 1e-1 : range.tmax;
  tmin = std::max(tmin, ts.front());
  tmax = std::min(tmax, ts.back());
  std::vector<double> x, y;
  for (std::size_t i = 0; i < samples.t.size(); ++i) {
    const double t = samples.t[i];
    if (t >= tmin * (1 - 1e-12) && t <= tmax * (1 + 1e-12) && samples.volume[i] > 0) {
      x.push_back(std::log(t));
      y.push_back(std::log(samples.volume[i]));
    }
  }
  if (x.size() < 8) throw Error(Errc::InsufficientRange, "fewer than 8 samples inside the fit range");
  const LineFit f = least_squares(x, y);
  DimensionFit out;
  out.slope = f.slope;
  out.slope_stderr = f.slope_stderr;
  out.D = N - f.slope;
  out.tmin = tmin;
  out.tmax = tmax;
  out.rms_residual = f.rms;
  out.used = x.size();
  out.D_upper = -kInf;
  out.D_lower = kInf;
  const double half_decade = 0.5 * std::log(10.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t j = i;
    while (j + 1 < x.size() && x[j + 1] - x[i] <= half_decade + 1e-12) ++j;
    // windows hold every point within half a decade; stop once one would run past the data
    if (x[i] + half_decade > x.back() + 1e-9) break;
    if (j - i + 1 < 3) continue;
    const LineFit w = least_squares(std::vector<double>(x.begin() + i, x.begin() + j + 1),
                                    std::vector<double>(y.begin() + i, y.begin() + j + 1));
    out.D_upper = std::max(out.D_upper, N - w.slope);
    out.D_lower = std::min(out.D_lower, N - w.slope);
  }
  if (!std::isfinite(out.D_upper)) out.D_upper = out.D_lower = out.D;
  out.D_upper = std::min(out.D_upper, static_cast<double>(N));
  out.D_lower = std::min(out.D_lower, out.D_upper);
  return out;
}

ContentEstimate minkowski_content_estimate(const TubeSamples& samples, int N, double D, int gauge_m) {
  if (samples.t.size() < 2) throw Error(Errc::InsufficientRange, "need at least two samples");
  if (gauge_m < 0) throw Error(Errc::InvalidArgument, "gauge exponent must be nonnegative");
  ContentEstimate out;
  const bool full = std::abs(D - N) < 1e-12;
  if (full) {
    // volume must already be ~ constant; otherwise D = N tells nothing
    const double v0 = samples.volume.front(), v1 = samples.volume.back();
    if (rel_diff(v0, v1) > 0.1) throw Error(Errc::DegenerateD, "D = N but the tube volume is not constant");
    out.degenerate = true;
    gauge_m = 0;
  }
  auto gauge = [gauge_m](double t) { return gauge_m ? std::pow(std::log(1.0 / t), gauge_m) : 1.0; };
  auto ratio = [&](std::size_t i) {
    const double t = samples.t[i];
    return samples.volume[i] / (std::pow(t, N - D) * gauge(t));
  };
  const double t0 = samples.t.front();
  out.lower = kInf;
  out.upper = -kInf;
  for (std::size_t i = 0; i < samples.t.size() && samples.t[i] <= 10.0 * t0 * (1 + 1e-12); ++i) {
    out.lower = std::min(out.lower, ratio(i));
    out.upper = std::max(out.upper, ratio(i));
  }
  CompensatedSum<double> acc;
  for (std::size_t i = 0; i + 1 < samples.t.size(); ++i) {
    const double dl = std::log(samples.t[i + 1] / samples.t[i]);
    acc.add(0.5 * dl * (ratio(i) + ratio(i + 1)));
  }
  out.average = acc.value() / std::log(samples.t.back() / t0);
  return out;
}

namespace {

double allowed_residual(double err, cplx ref) { return std::max(5.0 * err, 1e-12 * (1.0 + std::abs(ref))); }

}  // namespace

std::vector<IdentityCheck> verify_scaling(const Rfd& r, double lambda, const std::vector<cplx>& s_list,
                                          const NumericConfig& cfg) {
  const Rfd scaled = transform_rfd(r, lambda);
  std::vector<IdentityCheck> out;
  for (const cplx& s : s_list) {
    const NumericValue a = distance_zeta_numeric(scaled, s, cfg);
    const NumericValue b = distance_zeta_numeric(r, s, cfg);
    const cplx ls = real_pow(lambda, s);
    IdentityCheck c;
    c.name = "scaling";
    c.param = s.real();
    c.residual = std::abs(a.value - ls * b.value);
    c.allowed = allowed_residual(a.error + std::abs(ls) * b.error, a.value);
    c.pass = c.residual <= c.allowed;
    out.push_back(c);
  }
  return out;
}

std::vector<IdentityCheck> verify_union(const Rfd& whole, const std::vector<Rfd>& parts,
                                        const std::vector<cplx>& s_list, const NumericConfig& cfg) {
  const Rfd u = rfd_union(parts);  // throws IncompatibleUnion on overlap
  if (std::isfinite(whole.measure) && rel_diff(u.measure, whole.measure) > 1e-9)
    throw Error(Errc::IncompatibleUnion, "parts do not tile the whole region");
  std::vector<IdentityCheck> out;
  for (const cplx& s : s_list) {
    const NumericValue w = distance_zeta_numeric(whole, s, cfg);
    ComplexSum acc;
    double err = w.error;
    for (const auto& p : parts) {
      const NumericValue v = distance_zeta_numeric(p, s, cfg);
      acc.add(v.value);
      err += v.error;
    }
    IdentityCheck c;
    c.name = "union";
    c.param = s.real();
    c.residual = std::abs(w.value - acc.value());
    c.allowed = allowed_residual(err, w.value);
    c.pass = c.residual <= c.allowed;
    out.push_back(c);
  }
  return out;
}

std::vector<IdentityCheck> verify_tube_scaling(const Rfd& r, double lambda, const std::vector<double>& t_list) {
  const Rfd scaled = transform_rfd(r, lambda);
  const double volN = std::pow(lambda, r.N);
  std::vector<IdentityCheck> out;
  for (double t : t_list) {
    const double a = tube_volume_exact(scaled, t);
    const double b = volN * tube_volume_exact(r, t / lambda);
    IdentityCheck c;
    c.name = "tube_scaling";
    c.param = t;
    c.residual = std::abs(a - b);
    c.allowed = 1e-13 * (1.0 + std::abs(a));
    c.pass = c.residual <= c.allowed;
    out.push_back(c);
  }
  return out;
}

double lipschitz_violation(const Rfd& r, std::size_t pairs, std::uint64_t seed) {
  auto g = stratum_rng(seed, 0);
  double worst = -kInf;
  std::size_t done = 0;
  for (std::size_t tries = 0; done < pairs && tries < 200 * pairs; ++tries) {
    Point x{0, 0, 0}, y{0, 0, 0};
    for (int k = 0; k < r.N; ++k) {
      x[k] = r.lo[k] + (r.hi[k] - r.lo[k]) * uniform01(g);
      y[k] = r.lo[k] + (r.hi[k] - r.lo[k]) * uniform01(g);
    }
    if (!r.inside(x) || !r.inside(y)) continue;
    double dist = 0;
    for (int k = 0; k < r.N; ++k) dist += (x[k] - y[k]) * (x[k] - y[k]);
    dist = std::sqrt(dist);
    worst = std::max(worst, std::abs(r.distance(x) - r.distance(y)) - dist);
    ++done;
  }
  return worst;
}

}  // namespace fz
