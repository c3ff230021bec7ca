#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fz {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class Errc {
  InvalidArgument,
  NonPositiveLength,
  DivergentTail,
  AbscissaViolation,
  ToleranceUnreachable,
  NonPositiveScale,
  TruncationTooSmall,
  ArityMismatch,
  InvalidCantorParameters,
  DepthOverflow,
  NonPositiveT,
  InsufficientDepth,
  PoleHit,
  EntireFactorFailure,
  NoRealRoot,
  SeedGridTooCoarse,
  NotAPole,
  ContourContainsOtherPole,
  DegenerateDimension,
  AllZeroCoefficients,
  EmptyWindow,
  UnsupportedKind,
  NonIntegrable,
  InsufficientRange,
  DegenerateD,
  IncompatibleUnion,
  MeasureDivergence,
  UnknownExample,
  GeneratorValidationFailed,
  QuadratureFailure,
};

const char* errc_name(Errc e) noexcept;

// Errors caused by bad input rather than by a numerical breakdown.
bool is_validation_error(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Neumaier summation; order of add() calls fixes the result bit pattern.
template <class T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

class ComplexSum {
 public:
  void add(cplx z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_, im_;
};

template <class T>
T ordered_sum(const std::vector<T>& xs) {
  CompensatedSum<T> acc;
  for (const T& x : xs) acc.add(x);
  return acc.value();
}

inline cplx ordered_sum(const std::vector<cplx>& xs) {
  ComplexSum acc;
  for (const cplx& x : xs) acc.add(x);
  return acc.value();
}

// base^s for base > 0.
inline cplx real_pow(double base, cplx s) { return std::exp(s * std::log(base)); }

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1e-300, std::max(std::abs(a), std::abs(b)));
}

}  // namespace fz
