#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fz {

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;  // measured residual or quantity
  double limit = 0.0;  // pass threshold (meaning stated in detail)
  bool pass = false;
  std::string detail;
};

struct VerifyConfig {
  std::uint64_t seed = 20240531;
  double tol_scale = 1.0;  // multiplies every tolerance; --tol on the command line
};

// Suites: strings, cantor, merozeta, rfd, sprays, embed, all.
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg = {});

}  // namespace fz
