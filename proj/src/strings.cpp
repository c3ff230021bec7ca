#include "fz/strings.hpp"

#include <algorithm>
#include <limits>

namespace fz {

namespace {

constexpr double kCoalesceTol = 1e-15;
constexpr long long kPowerTermCap = 50'000'000;

double geometric_length(const TailPiece& t, long long k) {
  return t.scale * t.first_length * std::pow(t.r, static_cast<double>(k));
}

double geometric_mult(const TailPiece& t, long long k) {
  return t.first_mult * std::pow(t.b, static_cast<double>(k));
}

// a-string length k^-a - (k+1)^-a without cancellation.
double a_length(double a, long long k) {
  const double kk = static_cast<double>(k);
  return -std::pow(kk, -a) * std::expm1(-a * std::log1p(1.0 / kk));
}

double tail_abscissa(const TailPiece& t) {
  switch (t.kind) {
    case TailPiece::Kind::geometric: return std::log(t.b) / std::log(1.0 / t.r);
    case TailPiece::Kind::power: return 1.0 / (1.0 + t.a);
    case TailPiece::Kind::product:
      return std::max(abscissa_estimate(*t.left), abscissa_estimate(*t.right));
  }
  return 0.0;
}

void coalesce(std::vector<StringEntry>& es) {
  std::sort(es.begin(), es.end(), [](auto& x, auto& y) { return x.length > y.length; });
  std::vector<StringEntry> out;
  for (auto& e : es) {
    if (!out.empty() && out.back().length - e.length <= kCoalesceTol * out.back().length)
      out.back().mult += e.mult;
    else
      out.push_back(e);
  }
  es = std::move(out);
}

// sum_{k=k0}^{k1-1} (scale * l_k)^s in fixed blocks, reduced in block order.
cplx power_block_sum(double a, double scale, long long k0, long long k1, cplx s) {
  const std::size_t n = static_cast<std::size_t>(k1 - k0);
  std::vector<cplx> partial(block_count(n));
  for_each_index(partial.size(), Exec::parallel, [&](std::size_t blk) {
    ComplexSum acc;
    const std::size_t lo = blk * kBlock, hi = std::min(n, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i)
      acc.add(real_pow(scale * a_length(a, k0 + static_cast<long long>(i)), s));
    partial[blk] = acc.value();
  });
  return ordered_sum(partial);
}

double power_tail_bound(double a, double scale, long long from, double sigma) {
  // l_k <= a k^-(1+a), so sum_{k>from} l_k^sigma <= (a scale)^sigma int_from^inf x^-(1+a)sigma dx
  const double q = (1.0 + a) * sigma;
  return std::pow(a * scale, sigma) * std::pow(static_cast<double>(from), 1.0 - q) / (q - 1.0);
}

}  // namespace

TailPiece geometric_tail(double r, double b, double first_length, double first_mult) {
  TailPiece t;
  t.kind = TailPiece::Kind::geometric;
  t.r = r;
  t.b = b;
  t.first_length = first_length;
  t.first_mult = first_mult;
  return t;
}

TailPiece power_tail(double a, long long start) {
  TailPiece t;
  t.kind = TailPiece::Kind::power;
  t.a = a;
  t.start = start;
  return t;
}

FractalString make_string(std::vector<StringEntry> entries, std::vector<TailPiece> tails,
                          std::string label) {
  if (entries.empty() && tails.empty())
    throw Error(Errc::InvalidArgument, "string needs at least one entry");
  for (auto& e : entries) {
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw Error(Errc::NonPositiveLength, "lengths must be positive");
    if (!(e.mult >= 1.0) || e.mult != std::floor(e.mult))
      throw Error(Errc::InvalidArgument, "multiplicities must be positive integers");
  }
  coalesce(entries);
  for (auto& t : tails) {
    if (!(t.scale > 0.0)) throw Error(Errc::NonPositiveScale, "tail scale must be positive");
    if (t.kind == TailPiece::Kind::geometric) {
      if (!(t.r > 0.0 && t.r < 1.0) || !(t.b > 0.0))
        throw Error(Errc::InvalidArgument, "geometric tail needs 0 < r < 1, b > 0");
      if (t.first_length == 0.0) {
        if (entries.empty()) throw Error(Errc::InvalidArgument, "geometric tail has no anchor");
        t.first_length = entries.back().length * t.r / t.scale;
        t.first_mult = entries.back().mult * t.b;
      }
      if (!(t.first_length > 0.0)) throw Error(Errc::NonPositiveLength, "tail length must be positive");
      if (t.b * t.r >= 1.0) throw Error(Errc::DivergentTail, "geometric tail with b*r >= 1");
    } else if (t.kind == TailPiece::Kind::power) {
      if (!(t.a > 0.0) || t.start < 1) throw Error(Errc::InvalidArgument, "power tail needs a > 0");
    } else if (!t.left || !t.right || !t.left_kept || !t.right_kept) {
      throw Error(Errc::InvalidArgument, "product tail needs both factors");
    }
  }
  return FractalString{std::move(entries), std::move(tails), std::move(label)};
}

double abscissa_estimate(const FractalString& L) {
  double D = -std::numeric_limits<double>::infinity();
  for (auto& t : L.tails) D = std::max(D, tail_abscissa(t));
  return D;
}

cplx explicit_zeta(const FractalString& L, cplx s, Exec ex) {
  const std::size_t n = L.entries.size();
  std::vector<cplx> partial(block_count(n));
  for_each_index(partial.size(), ex, [&](std::size_t blk) {
    ComplexSum acc;
    const std::size_t lo = blk * kBlock, hi = std::min(n, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) acc.add(L.entries[i].mult * real_pow(L.entries[i].length, s));
    partial[blk] = acc.value();
  });
  return ordered_sum(partial);
}

ZetaValue geometric_zeta(const FractalString& L, cplx s, double rel_tol) {
  const double sigma = s.real();
  for (auto& t : L.tails)
    if (sigma <= tail_abscissa(t) + 1e-12)
      throw Error(Errc::AbscissaViolation, "Re s at or below the convergence abscissa");

  ComplexSum acc;
  acc.add(explicit_zeta(L, s));
  double bound = 0.0;
  std::vector<const TailPiece*> power_tails;
  for (auto& t : L.tails) {
    switch (t.kind) {
      case TailPiece::Kind::geometric:
        acc.add(geometric_mult(t, t.offset) * real_pow(geometric_length(t, t.offset), s) /
                (1.0 - t.b * real_pow(t.r, s)));
        break;
      case TailPiece::Kind::power:
        if (s == cplx(1.0, 0.0))
          acc.add(t.scale * std::pow(static_cast<double>(t.start), -t.a));  // telescoping
        else
          power_tails.push_back(&t);
        break;
      case TailPiece::Kind::product: {
        const double inf = std::numeric_limits<double>::infinity();
        auto upper = [&](const FractalString& F) {
          auto z = geometric_zeta(F, sigma, inf);
          return z.value.real() + z.tail.bound;
        };
        const double full = upper(*t.left) * upper(*t.right);
        const double kept = explicit_zeta(*t.left_kept, sigma).real() *
                            explicit_zeta(*t.right_kept, sigma).real();
        bound += std::pow(t.scale, sigma) * std::max(0.0, full - kept);
        break;
      }
    }
  }
  for (const TailPiece* t : power_tails) {
    // A short head first gives a value estimate to size the remaining sum.
    long long k = t->start;
    const long long head = k + 1000;
    acc.add(power_block_sum(t->a, t->scale, k, head, s));
    k = head;
    const double target = rel_tol * std::abs(acc.value());
    const double q = (1.0 + t->a) * sigma;
    const double need = std::pow(target * (q - 1.0) / std::pow(t->a * t->scale, sigma), 1.0 / (1.0 - q));
    const long long stop =
        std::isfinite(need) ? std::min<long long>(kPowerTermCap, std::max<long long>(k, static_cast<long long>(need) + 1))
                            : k;
    if (stop > k) acc.add(power_block_sum(t->a, t->scale, k, stop, s));
    bound += power_tail_bound(t->a, t->scale, stop - 1, sigma);
  }
  const cplx value = acc.value();
  if (bound > rel_tol * std::abs(value))
    throw Error(Errc::ToleranceUnreachable, "tail bound exceeds requested tolerance");
  return {value, {sigma, bound}};
}

double total_length(const FractalString& L) {
  auto z = geometric_zeta(L, 1.0, std::numeric_limits<double>::infinity());
  return z.value.real();
}

FractalString scale_string(const FractalString& L, double lambda) {
  if (!(lambda > 0.0)) throw Error(Errc::NonPositiveScale, "scale must be positive");
  FractalString r = L;
  for (auto& e : r.entries) e.length *= lambda;
  for (auto& t : r.tails) t.scale *= lambda;
  return r;
}

FractalString expand_string(const FractalString& L, std::size_t max_entries) {
  FractalString r = L;
  auto next_length = [](const TailPiece& t) {
    if (t.kind == TailPiece::Kind::geometric) return geometric_length(t, t.offset);
    if (t.kind == TailPiece::Kind::power) return t.scale * a_length(t.a, t.start);
    return -1.0;
  };
  while (r.entries.size() < max_entries) {
    TailPiece* best = nullptr;
    for (auto& t : r.tails)
      if (next_length(t) > 0 && (!best || next_length(t) > next_length(*best))) best = &t;
    if (!best) break;
    if (best->kind == TailPiece::Kind::geometric) {
      r.entries.push_back({geometric_length(*best, best->offset), geometric_mult(*best, best->offset)});
      ++best->offset;
    } else {
      r.entries.push_back({best->scale * a_length(best->a, best->start), 1.0});
      ++best->start;
    }
  }
  coalesce(r.entries);
  return r;
}

FractalString tensor_product(const FractalString& L1, const FractalString& L2,
                             std::size_t truncation, double tol, double probe_sigma) {
  if (truncation < 1) throw Error(Errc::TruncationTooSmall, "truncation must be positive");
  FractalString e1 = expand_string(L1, truncation), e2 = expand_string(L2, truncation);
  std::vector<StringEntry> prod;
  prod.reserve(e1.entries.size() * e2.entries.size());
  for (auto& x : e1.entries)
    for (auto& y : e2.entries) prod.push_back({x.length * y.length, x.mult * y.mult});
  std::vector<TailPiece> tails;
  if (!L1.tails.empty() || !L2.tails.empty()) {
    TailPiece t;
    t.kind = TailPiece::Kind::product;
    t.left = std::make_shared<const FractalString>(L1);
    t.right = std::make_shared<const FractalString>(L2);
    t.left_kept = std::make_shared<const FractalString>(FractalString{e1.entries, {}, e1.label});
    t.right_kept = std::make_shared<const FractalString>(FractalString{e2.entries, {}, e2.label});
    tails.push_back(std::move(t));
  }
  FractalString r = make_string(std::move(prod), std::move(tails), "(" + L1.label + ")x(" + L2.label + ")");
  if (!r.tails.empty()) {
    const double sigma = std::isnan(probe_sigma) ? abscissa_estimate(r) + 0.5 : probe_sigma;
    auto z = geometric_zeta(r, sigma, std::numeric_limits<double>::infinity());
    if (z.tail.bound > tol * std::abs(z.value))
      throw Error(Errc::TruncationTooSmall, "product tail bound exceeds tolerance at probe abscissa");
  }
  return r;
}

FractalString disjoint_union(const std::vector<FractalString>& Ls, const std::vector<double>& scales) {
  if (Ls.empty()) throw Error(Errc::InvalidArgument, "union of no strings");
  if (!scales.empty() && scales.size() != Ls.size())
    throw Error(Errc::ArityMismatch, "one scale per string");
  std::vector<StringEntry> entries;
  std::vector<TailPiece> tails;
  std::string label;
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    const FractalString part = scales.empty() ? Ls[i] : scale_string(Ls[i], scales[i]);
    entries.insert(entries.end(), part.entries.begin(), part.entries.end());
    tails.insert(tails.end(), part.tails.begin(), part.tails.end());
    label += (i ? "+" : "") + part.label;
  }
  return make_string(std::move(entries), std::move(tails), label);
}

FractalString a_string(double a, long long count) {
  if (!(a > 0.0) || count < 1) throw Error(Errc::InvalidArgument, "a-string needs a > 0, count >= 1");
  std::vector<StringEntry> es;
  for (long long k = 1; k <= count; ++k) es.push_back({a_length(a, k), 1.0});
  return make_string(std::move(es), {power_tail(a, count + 1)}, "a-string(" + std::to_string(a) + ")");
}

FractalString cantor_string(int m, double a) {
  if (m < 2 || !(a > 0.0) || m * a >= 1.0)
    throw Error(Errc::InvalidCantorParameters, "need m >= 2 and 0 < a < 1/m");
  const double gap = (1.0 - m * a) / (m - 1);
  return make_string({{gap, static_cast<double>(m - 1)}},
                     {geometric_tail(a, m, gap * a, static_cast<double>((m - 1) * m))},
                     "cantor(" + std::to_string(m) + "," + std::to_string(a) + ")");
}

FractalString mth_order(const FractalString& base, int m, std::size_t truncation) {
  if (m < 1) throw Error(Errc::InvalidArgument, "order must be >= 1");
  FractalString r = base;
  for (int i = 2; i <= m; ++i) r = tensor_product(r, base, truncation);
  r.label = base.label + "^" + std::to_string(m);
  return r;
}

FractalString infinite_order(const FractalString& base, int M, std::size_t truncation) {
  if (M < 1) throw Error(Errc::InvalidArgument, "M must be >= 1");
  std::vector<FractalString> parts;
  std::vector<double> scales;
  double fact = 1.0;
  for (int m = 1; m <= M; ++m) {
    fact *= m;
    parts.push_back(mth_order(base, m, truncation));
    scales.push_back(std::pow(3.0, -m) / fact);
  }
  FractalString r = disjoint_union(parts, scales);
  r.label = base.label + "^inf(M=" + std::to_string(M) + ")";
  return r;
}

MeroExpr simplify(const MeroExpr& e) {
  MeroExpr out;
  out.label = e.label;
  struct Pure {
    double base;
    ComplexSum coeff;
    double mag;
  };
  std::vector<Pure> pure;
  for (auto& t : e.terms) {
    const bool is_pure = t.numerator.empty() && t.poles.empty() && t.denoms.empty() && !t.entire;
    if (!is_pure) {
      out.terms.push_back(t);
      continue;
    }
    pure.push_back({t.base, {}, std::abs(t.coeff)});
    pure.back().coeff.add(t.coeff);
  }
  std::sort(pure.begin(), pure.end(), [](auto& x, auto& y) { return x.base > y.base; });
  std::vector<Pure> merged;
  for (auto& p : pure) {
    if (!merged.empty() && merged.back().base - p.base <= 1e-12 * merged.back().base) {
      merged.back().coeff.add(p.coeff.value());
      merged.back().mag += p.mag;
    } else {
      merged.push_back(p);
    }
  }
  for (auto& p : merged) {
    const cplx c = p.coeff.value();
    if (std::abs(c) <= 1e-13 * p.mag) continue;
    out.terms.push_back(mero_term(c, p.base).terms.front());
  }
  return out;
}

MeroExpr string_mero(const FractalString& L) {
  MeroExpr e;
  for (auto& en : L.entries) e = e + mero_term(en.mult, en.length);
  for (auto& t : L.tails) {
    switch (t.kind) {
      case TailPiece::Kind::geometric:
        e = e + mero_term(geometric_mult(t, t.offset), geometric_length(t, t.offset), {},
                          {DirichletFactor{DirichletPolynomial::make({{t.b, t.r}}), 1}});
        break;
      case TailPiece::Kind::power:
        throw Error(Errc::UnsupportedKind, "a-string tails have no closed form");
      case TailPiece::Kind::product: {
        MeroExpr full = string_mero(*t.left) * string_mero(*t.right);
        MeroExpr kept = string_mero(*t.left_kept) * string_mero(*t.right_kept);
        e = e + scale_expr(full + cplx(-1.0) * kept, t.scale);
        break;
      }
    }
  }
  MeroExpr r = simplify(e);
  r.label = L.label;
  return r;
}

}  // namespace fz
