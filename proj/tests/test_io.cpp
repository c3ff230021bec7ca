#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <random>
#include <sstream>

#include "fz/io.hpp"

using namespace fz;

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(3.0) == "3");
  CHECK(format_double(NAN) == "null");
  CHECK(format_double(INFINITY) == "null");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("property: format_double round-trips bit patterns") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t bits = rng();
    double x;
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    const double y = std::strtod(format_double(x).c_str(), nullptr);
    CHECK(std::memcmp(&x, &y, sizeof x) == 0);
  }
}

TEST_CASE("dump_json") {
  Json j;
  j["a"] = 0.1;
  j["b"] = Json::array({1, 2.5, NAN});
  j["c"] = "text";
  const std::string s = dump_json(j, -1);
  CHECK(s == R"({"a":0.10000000000000001,"b":[1,2.5,null],"c":"text"})" "\n");
  // parses back to the same doubles
  const Json back = Json::parse(s);
  CHECK(back["a"].get<double>() == 0.1);
  CHECK(back["b"][2].is_null());
  CHECK(complex_json(cplx(1.0, -2.0)) == Json{{"re", 1.0}, {"im", -2.0}});
}

TEST_CASE("tube CSV round trip") {
  TubeSamples s;
  s.method = "montecarlo";
  s.seed = 42;
  s.samples = 1000;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    s.t.push_back(std::pow(10.0, -8.0 * u(rng)));
    s.volume.push_back(u(rng));
    s.stderr_.push_back(1e-3 * u(rng));
  }
  std::stringstream ss;
  write_tube_csv(ss, s);
  CHECK(ss.str().rfind("# method=montecarlo seed=42", 0) == 0);
  std::stringstream in(ss.str());
  const TubeSamples r = read_tube_csv(in);
  CHECK(r.t == s.t);
  CHECK(r.volume == s.volume);
  CHECK(r.stderr_ == s.stderr_);

  std::stringstream bad("t,volume\n0.1,abc\n");
  CHECK_THROWS_AS(read_tube_csv(bad), Error);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("run manifest") {
  RunManifest m;
  m.command = "tube";
  m.parameters = Json{{"points", 12}};
  m.seed = 99;
  m.tool_version = kToolVersion;
  m.outputs.push_back({"t.csv", sha256_hex("x")});
  const Json j = m.to_json();
  for (const char* k : {"schema_version", "command", "parameters", "seed", "tool_version", "elapsed", "outputs"})
    CHECK(j.contains(k));
  CHECK(j["seed"] == 99);
  CHECK(j["outputs"][0]["sha256"] == sha256_hex("x"));
  CHECK(j["schema_version"] == kSchemaVersion);
}

TEST_CASE("catalog manifest") {
  const Json c = catalog_manifest_json();
  const auto names = catalog_names();
  REQUIRE(c.is_object());
  REQUIRE(c.contains("entries"));
  CHECK(c["entries"].size() == names.size());
  for (const auto& e : c["entries"]) {
    CHECK(e.contains("name"));
    CHECK(e.contains("N"));
    CHECK(e.contains("expected_D"));
  }
}
