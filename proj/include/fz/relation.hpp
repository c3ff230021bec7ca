#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fz {

struct Rational {
  long long p;
  long long q;  // q >= 1
};

// First continued-fraction convergent p/q (q <= qmax) with |x - p/q| <= tol * max(1, |x|).
std::optional<Rational> best_rational(double x, long long qmax, double tol);

struct RelationResult {
  bool independent = true;
  std::vector<long long> coefficients;  // gcd 1, first nonzero entry positive
  double residual = 0.0;                // |sum q_i x_i|
  std::string method;                   // "pairwise", "exhaustive", "lll" or "none"
};

// Integer relations sum q_i x_i = 0 with |q_i| <= qmax and residual <= tol * max|x_i|.
// "independent" certifies absence up to qmax for the searches performed, not a proof.
RelationResult rational_relation_scan(const std::vector<double>& xs, long long qmax = 10000,
                                      double tol = 1e-12);

// LLL-reduced integer combinations of xs (weighted by w); exposed for tests.
std::vector<std::vector<long long>> lll_relations(const std::vector<long double>& xs, long double w);

}  // namespace fz
