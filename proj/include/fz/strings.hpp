#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fz/common.hpp"
#include "fz/mero.hpp"

namespace fz {

struct FractalString;

// Analytic description of the lengths omitted from the explicit entries.
// All lengths of a piece are multiplied by `scale`.
struct TailPiece {
  enum class Kind { geometric, power, product };
  Kind kind = Kind::geometric;
  double scale = 1.0;

  // geometric: length first_length * r^k with multiplicity first_mult * b^k, k >= offset
  double r = 0.0, b = 0.0, first_length = 0.0, first_mult = 0.0;
  long long offset = 0;

  // power: lengths k^-a - (k+1)^-a for k >= start (a-string tail)
  double a = 0.0;
  long long start = 1;

  // product: (left (x) right) minus (left_kept (x) right_kept); bound only
  std::shared_ptr<const FractalString> left, right, left_kept, right_kept;
};

struct StringEntry {
  double length;
  double mult;  // integer valued; double so deep tensor products do not overflow
};

struct FractalString {
  std::vector<StringEntry> entries;  // strictly descending lengths
  std::vector<TailPiece> tails;
  std::string label;
};

struct TailBound {
  double sigma = 0.0;
  double bound = 0.0;
};

struct ZetaValue {
  cplx value;
  TailBound tail;
};

// Convenience constructors for a single tail piece.
TailPiece geometric_tail(double r, double b, double first_length = 0.0, double first_mult = 0.0);
TailPiece power_tail(double a, long long start);

// Sorts, coalesces (1e-15 relative) and validates. A geometric tail with first_length = 0
// continues from the last entry: first_length = r * last, first_mult = b * last_mult.
FractalString make_string(std::vector<StringEntry> entries, std::vector<TailPiece> tails = {},
                          std::string label = {});

// Convergence abscissa of the tails (-inf for a finite string).
double abscissa_estimate(const FractalString& L);

ZetaValue geometric_zeta(const FractalString& L, cplx s, double rel_tol = 1e-12);
// Sum over explicit entries only.
cplx explicit_zeta(const FractalString& L, cplx s, Exec ex = Exec::serial);
double total_length(const FractalString& L);

FractalString scale_string(const FractalString& L, double lambda);

// Converts geometric/power tail levels into explicit entries until at least max_entries exist.
FractalString expand_string(const FractalString& L, std::size_t max_entries);

// `truncation` caps the explicit entries kept per factor; the remainder becomes a product tail.
// Throws TruncationTooSmall when the tail bound at probe_sigma (default abscissa + 0.5) exceeds
// tol times the explicit value there.
FractalString tensor_product(const FractalString& L1, const FractalString& L2,
                             std::size_t truncation, double tol = 1e-6, double probe_sigma = NAN);

FractalString disjoint_union(const std::vector<FractalString>& Ls,
                             const std::vector<double>& scales = {});

FractalString a_string(double a, long long count);
FractalString cantor_string(int m, double a);
FractalString mth_order(const FractalString& base, int m, std::size_t truncation);
FractalString infinite_order(const FractalString& base, int M = 6, std::size_t truncation = 40);

// Closed-form meromorphic geometric zeta. Product tails are represented exactly
// as products of the factors; power tails have no closed form (UnsupportedKind).
MeroExpr string_mero(const FractalString& L);

// Merges pure exponential terms with equal base and drops cancelled ones.
MeroExpr simplify(const MeroExpr& e);

}  // namespace fz
