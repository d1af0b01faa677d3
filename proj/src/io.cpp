#include "numrad/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace numrad {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string esc(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + esc(s) + "\""; }

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string params_json(const std::map<std::string, double>& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ",";
    first = false;
    out += jstr(k) + ":" + fmt17(v);
  }
  return out + "}";
}

std::string params_csv(const std::map<std::string, double>& params) {
  std::string out;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ";";
    first = false;
    out += k + "=" + fmt17(v);
  }
  return out;
}

std::string bound_json(const BoundReport& b) {
  std::string out = "{";
  out += jstr("name") + ":" + jstr(b.name);
  out += "," + jstr("kind") + ":" + jstr(bound_kind_name(b.kind));
  out += "," + jstr("lhs") + ":" + fmt17(b.lhs);
  out += "," + jstr("rhs") + ":" + fmt17(b.rhs);
  out += "," + jstr("margin") + ":" + fmt17(b.margin);
  out += "," + jstr("holds") + ":" + jbool(b.holds);
  if (!b.note.empty()) out += "," + jstr("note") + ":" + jstr(b.note);
  out += "," + jstr("params") + ":" + params_json(b.params);
  return out + "}";
}

std::string chain_json_body(const ChainReport& r) {
  std::string out = "{";
  out += jstr("matrix_id") + ":" + jstr(r.matrix_id);
  out += "," + jstr("anchors") + ":{" + jstr("half_norm") + ":" + fmt17(r.anchors.half_norm) +
         "," + jstr("radius") + ":" + fmt17(r.anchors.radius) + "," + jstr("norm") + ":" +
         fmt17(r.anchors.norm) + "}";
  out += "," + jstr("bounds") + ":[";
  for (size_t i = 0; i < r.bounds.size(); ++i) {
    if (i) out += ",";
    out += bound_json(r.bounds[i]);
  }
  out += "]";
  out += "," + jstr("violations") + ":[";
  for (size_t i = 0; i < r.violations.size(); ++i) {
    if (i) out += ",";
    out += jstr(r.violations[i]);
  }
  out += "]";
  if (r.witness) out += "," + jstr("witness_matrix") + ":" + matrix_to_json(*r.witness);
  return out + "}";
}

void chain_csv_rows(const ChainReport& r, std::string& out) {
  const std::string id = "\"" + esc(r.matrix_id) + "\"";
  out += id + ",anchor_half_norm,anchor," + fmt17(r.anchors.half_norm) + "," +
         fmt17(r.anchors.half_norm) + ",0,true,,\n";
  out += id + ",anchor_radius,anchor," + fmt17(r.anchors.radius) + "," +
         fmt17(r.anchors.radius) + ",0,true,,\n";
  out += id + ",anchor_norm,anchor," + fmt17(r.anchors.norm) + "," + fmt17(r.anchors.norm) +
         ",0,true,,\n";
  for (const BoundReport& b : r.bounds) {
    out += id + ",\"" + esc(b.name) + "\"," + bound_kind_name(b.kind) + "," + fmt17(b.lhs) + "," +
           fmt17(b.rhs) + "," + fmt17(b.margin) + "," + jbool(b.holds) + ",\"" + esc(b.note) +
           "\",\"" + esc(params_csv(b.params)) + "\"\n";
  }
}

constexpr const char* kChainCsvHeader = "matrix_id,name,kind,lhs,rhs,margin,holds,note,params\n";

}  // namespace

ComplexMatrix matrix_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BadInput(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw BadInput("matrix JSON must be an object with \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer()) throw BadInput("matrix JSON: \"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw BadInput("matrix JSON: \"dim\" must be >= 1");
  const auto& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<size_t>(dim) * dim) {
    throw BadInput("matrix JSON: \"entries\" must be an array of dim*dim pairs (row-major)");
  }
  CVector e;
  e.reserve(entries.size());
  for (const auto& item : entries) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw BadInput("matrix JSON: each entry must be a [re, im] number pair");
    }
    e.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  try {
    return ComplexMatrix(dim, std::move(e));
  } catch (const DomainError& err) {
    throw BadInput(std::string("matrix JSON: ") + err.what());
  }
}

ComplexMatrix load_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open matrix file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return matrix_from_json_text(ss.str());
}

std::string matrix_to_json(const ComplexMatrix& a) {
  std::string out = "{" + jstr("dim") + ":" + std::to_string(a.dim()) + "," + jstr("entries") + ":[";
  const CVector& e = a.entries();
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) out += ",";
    out += "[" + fmt17(e[k].real()) + "," + fmt17(e[k].imag()) + "]";
  }
  return out + "]}";
}

std::string chain_to_json(const ChainReport& r) { return chain_json_body(r); }

std::string chain_to_csv(const ChainReport& r) {
  std::string out = kChainCsvHeader;
  chain_csv_rows(r, out);
  return out;
}

std::string sweep_to_json(const SweepResult& r) {
  std::string out = "{";
  out += jstr("spec") + ":{" + jstr("family") + ":" + jstr(family_name(r.spec.family)) + "," +
         jstr("dim") + ":" + std::to_string(r.spec.dim) + "," + jstr("samples") + ":" +
         std::to_string(r.spec.samples) + "," + jstr("seed") + ":" + std::to_string(r.spec.seed) +
         "," + jstr("scale") + ":" + fmt17(r.spec.scale) + "}";
  out += "," + jstr("violation_count") + ":" + std::to_string(r.violation_count);
  out += "," + jstr("chains") + ":[";
  for (size_t i = 0; i < r.chains.size(); ++i) {
    if (i) out += ",";
    out += chain_json_body(r.chains[i]);
  }
  return out + "]}";
}

std::string sweep_to_csv(const SweepResult& r) {
  std::string out = kChainCsvHeader;
  for (const ChainReport& c : r.chains) chain_csv_rows(c, out);
  return out;
}

std::string repro_to_json(const ReproTable& t) {
  std::string out = "{" + jstr("ref_tol") + ":" + fmt17(t.ref_tol) + "," + jstr("cases") + ":[";
  for (size_t ci = 0; ci < t.cases.size(); ++ci) {
    const ReproCase& c = t.cases[ci];
    if (ci) out += ",";
    out += "{" + jstr("id") + ":" + jstr(c.id) + "," + jstr("matrix") + ":" +
           matrix_to_json(c.matrix) + "," + jstr("rows") + ":[";
    for (size_t i = 0; i < c.rows.size(); ++i) {
      const ReproRow& row = c.rows[i];
      if (i) out += ",";
      out += "{" + jstr("quantity") + ":" + jstr(row.quantity) + "," + jstr("reference") + ":" +
             fmt17(row.reference) + "," + jstr("recomputed") + ":" + fmt17(row.recomputed) + "," +
             jstr("abs_diff") + ":" + fmt17(row.abs_diff) + "," + jstr("match") + ":" +
             jbool(row.match) + "," + jstr("flag") + ":" +
             jstr(row.match ? "MATCH" : "MISMATCH") + "}";
    }
    out += "]," + jstr("checks") + ":[";
    for (size_t i = 0; i < c.checks.size(); ++i) {
      const ReproCheck& ch = c.checks[i];
      if (i) out += ",";
      out += "{" + jstr("name") + ":" + jstr(ch.name) + "," + jstr("lhs") + ":" + fmt17(ch.lhs) +
             "," + jstr("rhs") + ":" + fmt17(ch.rhs) + "," + jstr("holds") + ":" +
             jbool(ch.holds) + "," + jstr("premise") + ":" + jbool(ch.premise) + "}";
    }
    out += "]}";
  }
  return out + "]}";
}

std::string repro_to_csv(const ReproTable& t) {
  std::string out = "case,type,name,reference_or_lhs,recomputed_or_rhs,abs_diff,ok,flag\n";
  for (const ReproCase& c : t.cases) {
    for (const ReproRow& r : c.rows) {
      out += c.id + ",value," + r.quantity + "," + fmt17(r.reference) + "," + fmt17(r.recomputed) +
             "," + fmt17(r.abs_diff) + "," + jbool(r.match) + "," +
             (r.match ? "MATCH" : "MISMATCH") + "\n";
    }
    for (const ReproCheck& ch : c.checks) {
      out += c.id + "," + (ch.premise ? "premise" : "check") + "," + ch.name + "," +
             fmt17(ch.lhs) + "," + fmt17(ch.rhs) + "," + fmt17(ch.rhs - ch.lhs) + "," +
             jbool(ch.holds) + "," + (ch.holds ? "HOLDS" : "FAILS") + "\n";
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open output file: " + path);
  out << text;
  if (!out) throw BadInput("failed writing output file: " + path);
}

}  // namespace numrad
