#include "fz/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace fz {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<size_t>(indent * (depth + 1)), ' ') : "";
  const std::string pad_close = indent > 0 ? std::string(static_cast<size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += nl;
      out += pad_close;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        dump_rec(j[i], out, indent, depth + 1);
      }
      out += nl;
      out += pad_close;
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

Json complex_json(cplx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json mero_json(const MeroExpr& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) {
    Json jt;
    jt["coeff"] = complex_json(t.coeff);
    jt["base"] = t.base;
    Json num = Json::array();
    for (auto c : t.numerator) num.push_back(complex_json(c));
    jt["numerator"] = num;
    Json poles = Json::array();
    for (auto& p : t.poles) poles.push_back(Json{{"at", complex_json(p.p)}, {"order", p.order}});
    jt["poles"] = poles;
    Json den = Json::array();
    for (auto& d : t.denoms) {
      Json pj = Json::array();
      for (auto [b, r] : d.poly.terms) pj.push_back(Json{{"b", b}, {"r", r}});
      den.push_back(Json{{"one_minus_sum", pj}, {"order", d.order}});
    }
    jt["dirichlet_denominators"] = den;
    jt["entire_factor"] = t.entire ? Json(t.entire->name) : Json(nullptr);
    terms.push_back(jt);
  }
  return Json{{"label", e.label}, {"terms", terms}};
}

Json poles_json(const std::vector<ComplexDimension>& poles) {
  Json arr = Json::array();
  for (const auto& p : poles) {
    Json pp = Json::array();
    for (auto c : p.principal_part) pp.push_back(complex_json(c));
    arr.push_back(Json{{"s", complex_json(p.s)},
                       {"order", p.order},
                       {"residue", complex_json(p.residue())},
                       {"principal_part", pp},
                       {"principal", p.principal},
                       {"cancelled", p.cancelled}});
  }
  return arr;
}

std::string poles_csv(const std::vector<ComplexDimension>& poles) {
  std::string out = "re,im,order,residue_re,residue_im,principal,cancelled\n";
  for (const auto& p : poles) {
    const cplx r = p.residue();
    out += format_double(p.s.real()) + "," + format_double(p.s.imag()) + "," + std::to_string(p.order) + "," +
           format_double(r.real()) + "," + format_double(r.imag()) + "," + (p.principal ? "1" : "0") + "," +
           (p.cancelled ? "1" : "0") + "\n";
  }
  return out;
}

Json classification_json(const Classification& c) {
  return Json{{"class", fractality_name(c.kind)}, {"D", c.D}, {"subcritical_dims", c.dims}};
}

Json fit_json(const DimensionFit& f) {
  return Json{{"D", f.D},           {"D_upper", f.D_upper},        {"D_lower", f.D_lower},
              {"slope", f.slope},   {"slope_stderr", f.slope_stderr}, {"tmin", f.tmin},
              {"tmax", f.tmax},     {"rms_residual", f.rms_residual}, {"used", f.used}};
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["description"] = e.description;
  j["N"] = e.N;
  j["measure"] = e.measure;
  j["expected_D"] = e.expected_D;
  j["expected_D_order"] = e.expected_D_order;
  j["expected_class"] = e.expected_class;
  if (e.expected_period > 0)
    j["principal_lattice"] = Json{{"re", e.expected_D}, {"period", e.expected_period}};
  else
    j["principal_lattice"] = nullptr;
  j["window"] = Json{{"re_min", e.window.re_min}, {"re_max", e.window.re_max}, {"im_max", e.window.im_max}};
  if (e.spray) {
    Json r = Json::array();
    for (auto [b, rr] : e.spray->ratios.terms) r.push_back(Json{{"b", b}, {"r", rr}});
    j["ratios"] = r;
    j["generator"] = e.spray->generator_description;
    j["generator_measure"] = e.spray->generator_measure;
  } else {
    j["ratios"] = nullptr;
    j["generator"] = nullptr;
  }
  j["printed_generator"] = e.printed_generator.empty() ? Json(nullptr) : Json(e.printed_generator);
  j["notes"] = e.notes;
  j["expression"] = mero_json(e.expr);
  return j;
}

Json catalog_manifest_json() {
  Json arr = Json::array();
  for (const auto& n : catalog_names()) arr.push_back(catalog_entry_json(catalog_example(n, false)));
  return Json{{"schema_version", kSchemaVersion}, {"entries", arr}};
}

void write_tube_csv(std::ostream& os, const TubeSamples& s, double codim) {
  const bool norm = std::isfinite(codim);
  os << "# method=" << s.method << " seed=" << s.seed << " samples=" << s.samples;
  if (norm) os << " codim=" << format_double(codim);
  os << "\n" << (norm ? "t,volume,stderr,normalized\n" : "t,volume,stderr\n");
  for (size_t i = 0; i < s.t.size(); ++i) {
    const double se = i < s.stderr_.size() ? s.stderr_[i] : 0.0;
    os << format_double(s.t[i]) << "," << format_double(s.volume[i]) << "," << format_double(se);
    if (norm) os << "," << format_double(s.volume[i] / std::pow(s.t[i], codim));
    os << "\n";
  }
}

TubeSamples read_tube_csv(std::istream& is) {
  TubeSamples s;
  s.method = "csv";
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen && line.find_first_not_of("0123456789+-.eE, \t\r") != std::string::npos) {
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) {
      try {
        vals.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, "csv line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (vals.size() < 2) throw Error(Errc::InvalidArgument, "csv line " + std::to_string(lineno) + ": need t,volume");
    s.t.push_back(vals[0]);
    s.volume.push_back(vals[1]);
    s.stderr_.push_back(vals.size() > 2 ? vals[2] : 0.0);
  }
  return s;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Json RunManifest::to_json() const {
  Json outs = Json::array();
  for (const auto& o : outputs) outs.push_back(Json{{"path", o.path}, {"sha256", o.sha256}});
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", parameters},
              {"seed", seed},
              {"tool_version", tool_version},
              {"elapsed", elapsed},
              {"outputs", outs}};
}

}  // namespace fz
