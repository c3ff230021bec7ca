// Command-line front end: catalog, estimators, pole searches and the verification suites.
// Exit codes: 0 ok, 1 verify found failures, 2 usage, 3 validation failure, 4 numeric failure.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fz/cantor.hpp"
#include "fz/common.hpp"
#include "fz/io.hpp"
#include "fz/mero.hpp"
#include "fz/parallel.hpp"
#include "fz/rfd.hpp"
#include "fz/sprays.hpp"
#include "fz/verify.hpp"

using namespace fz;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("bad number for " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// RE or RE,IM
cplx parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_number(parts[0], "real part"), 0.0};
  if (parts.size() == 2) return {parse_number(parts[0], "real part"), parse_number(parts[1], "imaginary part")};
  throw UsageError("complex value must be RE or RE,IM: '" + text + "'");
}

// a:b:H  ->  Re in [a,b], |Im| <= H
Window parse_window(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("window must be a:b:H, got '" + text + "'");
  Window w{parse_number(parts[0], "window re_min"), parse_number(parts[1], "window re_max"),
           parse_number(parts[2], "window im_max")};
  if (!(w.re_min < w.re_max) || !(w.im_max >= 0)) throw UsageError("window needs a < b and H >= 0");
  return w;
}

struct Geometry {
  std::string kind;
  RfdParams params;
  NumericConfig cfg;
  Json json = Json::object();
};

// kind:key=val,key=val  (vertices as x0/y0/x1/y1/...)
Geometry parse_geometry(const std::string& spec, const NumericConfig& base) {
  Geometry g;
  g.cfg = base;
  const auto colon = spec.find(':');
  g.kind = spec.substr(0, colon);
  g.json["kind"] = g.kind;
  if (colon == std::string::npos) return g;
  for (const auto& kv : split(spec.substr(colon + 1), ',')) {
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("geometry parameter needs key=value: '" + kv + "'");
    const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    g.json[key] = val;
    auto& p = g.params;
    if (key == "m") p.m = static_cast<int>(parse_number(val, key));
    else if (key == "a") p.a = parse_number(val, key);
    else if (key == "delta") p.delta = parse_number(val, key);
    else if (key == "omega") p.omega = val;
    else if (key == "N") p.N = static_cast<int>(parse_number(val, key));
    else if (key == "R") p.R = parse_number(val, key);
    else if (key == "r") p.r = parse_number(val, key);
    else if (key == "alpha") p.alpha = parse_number(val, key);
    else if (key == "side") p.side = parse_number(val, key);
    else if (key == "vertices") {
      const auto xs = split(val, '/');
      if (xs.size() < 6 || xs.size() % 2) throw UsageError("vertices needs at least 3 x/y pairs");
      for (std::size_t i = 0; i < xs.size(); i += 2)
        p.vertices.push_back({parse_number(xs[i], "vertex"), parse_number(xs[i + 1], "vertex")});
    } else if (key == "method") {
      if (val == "exact" || val == "profile") g.cfg.method = NumericConfig::Method::profile;
      else if (val == "mc" || val == "montecarlo") g.cfg.method = NumericConfig::Method::montecarlo;
      else if (val == "auto") g.cfg.method = NumericConfig::Method::automatic;
      else throw UsageError("method must be exact, mc or auto");
    } else if (key == "samples") {
      g.cfg.samples = static_cast<std::size_t>(parse_number(val, key));
    } else {
      throw UsageError("unknown geometry parameter '" + key + "'");
    }
  }
  return g;
}

struct Globals {
  std::uint64_t seed = 20240531;
  int threads = 0;
  double tol = 1.0;
  std::string manifest;
};

// Collects output bytes so the manifest can hash exactly what was written.
struct Sink {
  std::string out_path;  // empty: stdout
  std::vector<RunManifest::Output> written;

  void emit(const std::string& bytes) {
    if (out_path.empty() || out_path == "-") {
      std::cout << bytes;
      written.push_back({"-", sha256_hex(bytes)});
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + out_path + "'");
      f << bytes;
      written.push_back({out_path, sha256_hex(bytes)});
    }
  }
};

Json dims_json(const CatalogEntry& e, const Window& w, const PoleOptions& opt) {
  std::vector<AuditRecord> audit;
  const auto poles = poles_in_window(e.expr, w, opt, &audit);
  Json aj = Json::array();
  for (const auto& a : audit) {
    Json pj = Json::array();
    for (auto [b, r] : a.poly.terms) pj.push_back(Json{{"b", b}, {"r", r}});
    aj.push_back(Json{{"one_minus_sum", pj}, {"enumerated", a.enumerated}, {"winding", a.winding},
                      {"match", a.enumerated == a.winding}});
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["example"] = e.name;
  j["window"] = Json{{"re_min", w.re_min}, {"re_max", w.re_max}, {"im_max", w.im_max}};
  j["poles"] = poles_json(poles);
  j["audit"] = aj;
  j["notes"] = e.notes;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractal zeta functions: complex dimensions, tube estimators, verification"};
  app.require_subcommand(1);
  Globals G;
  std::string out_path;
  app.add_option("--seed", G.seed, "random seed for Monte Carlo estimators");
  app.add_option("--threads", G.threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", G.tol, "tolerance multiplier for verify, absolute tolerance for quadrature")
      ->check(CLI::PositiveNumber);
  app.add_option("--manifest", G.manifest, "write a run manifest (JSON) to this path");

  // dims
  auto* dims = app.add_subcommand("dims", "complex dimensions of a catalog example in a window");
  std::string example, window_text, s_text, at_text, geometry, csv_in, suite = "all", dims_format = "json";
  bool list = false;
  dims->add_flag("--list", list, "list catalog names");
  dims->add_option("--example", example, "catalog name");
  dims->add_option("--window", window_text, "a:b:H (Re in [a,b], |Im| <= H); default per example");
  dims->add_option("--out", out_path, "output path (default stdout)");
  dims->add_option("--format", dims_format, "json or csv (pole list only)")->check(CLI::IsMember({"json", "csv"}));

  auto* eval = app.add_subcommand("eval", "evaluate a zeta function at s");
  eval->add_option("--example", example, "catalog name");
  eval->add_option("--geometry", geometry, "kind:key=val,... (numeric distance zeta)");
  eval->add_option("--s", s_text, "RE or RE,IM")->required();
  eval->add_option("--out", out_path, "output path (default stdout)");

  auto* tube = app.add_subcommand("tube", "sample the tube function of a geometry to CSV");
  double tmin = 1e-6, tmax = 1e-1;
  int points = 100;
  tube->add_option("--geometry", geometry, "kind:key=val,...")->required();
  tube->add_option("--tmin", tmin)->check(CLI::PositiveNumber);
  tube->add_option("--tmax", tmax)->check(CLI::PositiveNumber);
  tube->add_option("--points", points)->check(CLI::Range(2, 1000000));
  tube->add_option("--out", out_path, "CSV path (default stdout)");

  auto* fit = app.add_subcommand("fit", "box-dimension fit of tube samples");
  int fitN = 0;
  double fit_tmin = NAN, fit_tmax = NAN;
  fit->add_option("--in", csv_in, "CSV with t,volume[,stderr]")->required();
  fit->add_option("--N", fitN, "ambient dimension")->required()->check(CLI::Range(1, 3));
  fit->add_option("--fit-tmin", fit_tmin, "lower end of the fit range");
  fit->add_option("--fit-tmax", fit_tmax, "upper end of the fit range");
  fit->add_option("--out", out_path, "output path (default stdout)");

  auto* residue = app.add_subcommand("residue", "principal part at a pole of a catalog example");
  residue->add_option("--example", example, "catalog name")->required();
  residue->add_option("--at", at_text, "RE or RE,IM")->required();
  residue->add_option("--out", out_path, "output path (default stdout)");

  auto* classify = app.add_subcommand("classify", "fractality class of a catalog example");
  bool classify_json = false;
  classify->add_option("--example", example, "catalog name")->required();
  classify->add_option("--window", window_text, "a:b:H; default per example");
  classify->add_flag("--json", classify_json, "JSON instead of one line");

  auto* verify = app.add_subcommand("verify", "run invariant suites (exit 0 iff all pass)");
  bool verbose = false;
  verify->add_option("--suite", suite)->check(CLI::IsMember({"strings", "cantor", "merozeta", "rfd", "sprays", "embed", "all"}));
  verify->add_flag("-v,--verbose", verbose, "print passing checks too");
  verify->add_option("--out", out_path, "JSON report path");

  auto* catalog = app.add_subcommand("catalog", "write the catalog manifest JSON");
  catalog->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Sink sink{out_path, {}};
  RunManifest manifest;
  manifest.seed = G.seed;
  manifest.tool_version = kToolVersion;
  int rc = 0;
  NumericConfig ncfg;
  ncfg.seed = G.seed;
  if (app.get_option("--tol")->count()) ncfg.tol = G.tol;
  PoleOptions popt;

  try {
    if (G.threads > 0) set_threads(G.threads);
    auto* sub = app.get_subcommands().front();
    manifest.command = sub->get_name();
    manifest.parameters["threads"] = G.threads;
    manifest.parameters["tol"] = G.tol;

    if (sub == dims) {
      if (list) {
        std::string text;
        for (const auto& n : catalog_names()) text += n + "\n";
        sink.emit(text);
      } else {
        if (example.empty()) throw UsageError("dims needs --example or --list");
        const CatalogEntry e = catalog_example(example);
        const Window w = window_text.empty() ? e.window : parse_window(window_text);
        manifest.parameters["example"] = example;
        manifest.parameters["window"] = window_text;
        manifest.parameters["format"] = dims_format;
        if (dims_format == "csv") sink.emit(poles_csv(poles_in_window(e.expr, w, popt)));
        else sink.emit(dump_json(dims_json(e, w, popt)));
      }
    } else if (sub == eval) {
      const cplx s = parse_complex(s_text);
      manifest.parameters["s"] = s_text;
      Json j;
      j["schema_version"] = kSchemaVersion;
      if (!example.empty() == !geometry.empty()) throw UsageError("eval needs exactly one of --example, --geometry");
      if (!example.empty()) {
        const CatalogEntry e = catalog_example(example);
        manifest.parameters["example"] = example;
        j["example"] = example;
        j["s"] = complex_json(s);
        j["value"] = complex_json(eval_expr(e.expr, s));
        j["method"] = "closed_form";
      } else {
        const Geometry g = parse_geometry(geometry, ncfg);
        manifest.parameters["geometry"] = g.json;
        const NumericValue v = distance_zeta_numeric(build_rfd(g.kind, g.params), s, g.cfg);
        j["geometry"] = g.json;
        j["s"] = complex_json(s);
        j["value"] = complex_json(v.value);
        j["error"] = v.error;
        j["method"] = v.method;
        j["below_abscissa_warning"] = v.below_abscissa_warning;
      }
      sink.emit(dump_json(j));
    } else if (sub == tube) {
      if (!(tmin < tmax)) throw UsageError("need tmin < tmax");
      const Geometry g = parse_geometry(geometry, ncfg);
      manifest.parameters["geometry"] = g.json;
      manifest.parameters["tmin"] = tmin;
      manifest.parameters["tmax"] = tmax;
      manifest.parameters["points"] = points;
      const Rfd r = build_rfd(g.kind, g.params);
      const TubeSamples ts = tube_function_numeric(r, log_grid(tmin, tmax, points), g.cfg);
      std::ostringstream os;
      write_tube_csv(os, ts, r.N - r.dim_hint);
      sink.emit(os.str());
    } else if (sub == fit) {
      std::ifstream f(csv_in);
      if (!f) throw UsageError("cannot read '" + csv_in + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      std::istringstream is(buf.str());
      TubeSamples ts = read_tube_csv(is);
      // keep the producing method so the default fit range matches it
      const std::string first = buf.str().substr(0, buf.str().find('\n'));
      if (first.rfind("# method=", 0) == 0) ts.method = first.substr(9, first.find(' ', 9) - 9);
      manifest.parameters["in"] = csv_in;
      manifest.parameters["in_sha256"] = sha256_hex(buf.str());
      manifest.parameters["N"] = fitN;
      const DimensionFit df = box_dimension_fit(ts, fitN, {fit_tmin, fit_tmax});
      Json j = fit_json(df);
      j["schema_version"] = kSchemaVersion;
      sink.emit(dump_json(j));
    } else if (sub == residue) {
      const CatalogEntry e = catalog_example(example);
      const cplx at = parse_complex(at_text);
      manifest.parameters["example"] = example;
      manifest.parameters["at"] = at_text;
      const ResidueReport rr = residue_at(e.expr, at, popt);
      Json pp = Json::array();
      for (auto c : rr.principal_part) pp.push_back(complex_json(c));
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["example"] = example;
      j["at"] = complex_json(at);
      j["order"] = rr.order;
      j["residue"] = complex_json(rr.residue());
      j["analytic"] = rr.analytic ? complex_json(*rr.analytic) : Json(nullptr);
      j["contour_residue"] = complex_json(rr.contour_residue);
      j["principal_part"] = pp;
      j["discrepancy"] = rr.discrepancy;
      sink.emit(dump_json(j));
    } else if (sub == classify) {
      const CatalogEntry e = catalog_example(example);
      const Window w = window_text.empty() ? e.window : parse_window(window_text);
      manifest.parameters["example"] = example;
      const Classification c = classify_fractality(e.expr, w, popt);
      if (classify_json) {
        Json j = classification_json(c);
        j["schema_version"] = kSchemaVersion;
        j["example"] = example;
        sink.emit(dump_json(j));
      } else {
        std::string line = fractality_name(c.kind);
        if (!c.dims.empty()) {
          line += " d=[";
          for (std::size_t i = 0; i < c.dims.size(); ++i) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%.5g", i ? "," : "", c.dims[i]);
            line += buf;
          }
          line += "]";
        }
        sink.emit(line + "\n");
      }
    } else if (sub == verify) {
      VerifyConfig vc;
      vc.seed = G.seed;
      vc.tol_scale = G.tol;
      manifest.parameters["suite"] = suite;
      const auto checks = run_suite(suite, vc);
      int failed = 0;
      Json arr = Json::array();
      for (const auto& c : checks) {
        failed += !c.pass;
        if (verbose || !c.pass)
          std::fprintf(stderr, "%s [%s] %s: %.3e (limit %.3e) %s\n", c.pass ? "PASS" : "FAIL", c.suite.c_str(),
                       c.name.c_str(), c.value, c.limit, c.detail.c_str());
        arr.push_back(Json{{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"limit", c.limit},
                           {"pass", c.pass}, {"detail", c.detail}});
      }
      std::fprintf(stderr, "%zu checks, %d failed\n", checks.size(), failed);
      if (!out_path.empty()) {
        sink.emit(dump_json(Json{{"schema_version", kSchemaVersion}, {"suite", suite}, {"failed", failed}, {"checks", arr}}));
      }
      rc = failed ? 1 : 0;
    } else if (sub == catalog) {
      sink.emit(dump_json(catalog_manifest_json()));
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_validation_error(e.code()) ? kExitValidation : kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  }

  if (!G.manifest.empty()) {
    manifest.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    manifest.outputs = sink.written;
    std::ofstream f(G.manifest, std::ios::binary);
    f << dump_json(manifest.to_json());
  }
  return rc;
}
