#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "fz/mero.hpp"
#include "fz/rfd.hpp"
#include "fz/sprays.hpp"

namespace fz {

using Json = nlohmann::ordered_json;

// %.17g; non-finite values become null.
std::string format_double(double x);
// Serializer that writes every floating-point number through format_double.
std::string dump_json(const Json& j, int indent = 2);

Json complex_json(cplx z);
Json mero_json(const MeroExpr& e);
Json poles_json(const std::vector<ComplexDimension>& poles);
// Columns re,im,order,residue_re,residue_im,principal,cancelled.
std::string poles_csv(const std::vector<ComplexDimension>& poles);
Json classification_json(const Classification& c);
Json fit_json(const DimensionFit& f);
Json catalog_entry_json(const CatalogEntry& e);
// Manifest of every catalog entry; validation is skipped so this stays cheap.
Json catalog_manifest_json();

// A finite `codim` (N - D) adds the column volume / t^codim.
void write_tube_csv(std::ostream& os, const TubeSamples& s, double codim = NAN);
// Columns t,volume[,stderr]; lines starting with '#' are comments.
TubeSamples read_tube_csv(std::istream& is);

std::string sha256_hex(const std::string& bytes);

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::string tool_version;
  double elapsed = 0.0;  // the only field allowed to vary between identical runs
  struct Output {
    std::string path, sha256;
  };
  std::vector<Output> outputs;

  Json to_json() const;
};

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace fz
