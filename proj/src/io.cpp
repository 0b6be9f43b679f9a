#include "eub/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eub::io {

namespace {

using nlohmann::json;

std::string printf_double(const char* spec, double x) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), spec, x);
  return std::string(buf, buf + n);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open file: " + path,
                          {{"file_readable", 0.0}});
  }
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ValidationError("malformed JSON in " + path,
                          {{"json_well_formed", 0.0}});
  }
  return j;
}

std::vector<double> number_array(const json& j, const std::string& what) {
  if (!j.is_array()) {
    throw ValidationError(what + " must be an array", {{what + "_shape", 0.0}});
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw ValidationError(what + " must contain only numbers",
                            {{what + "_numeric", 0.0}});
    }
    out.push_back(v.get<double>());
  }
  return out;
}

// Parse {"re": [[...]], "im": [[...]]} style matrix parts into a complex
// matrix of the stated side length.
CMat matrix_from_parts(const json& re, const json& im, Eigen::Index side,
                       const std::string& what) {
  if (!re.is_array() || !im.is_array() ||
      re.size() != static_cast<std::size_t>(side) ||
      im.size() != static_cast<std::size_t>(side)) {
    throw ValidationError(what + ": re/im must be " + std::to_string(side) +
                              " rows each",
                          {{what + "_shape", 0.0}});
  }
  CMat m(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    auto rr = number_array(re[static_cast<std::size_t>(r)], what + "_re_row");
    auto ri = number_array(im[static_cast<std::size_t>(r)], what + "_im_row");
    if (rr.size() != static_cast<std::size_t>(side) ||
        ri.size() != static_cast<std::size_t>(side)) {
      throw ValidationError(what + ": row length mismatch",
                            {{what + "_shape", 0.0}});
    }
    for (Eigen::Index c = 0; c < side; ++c) {
      m(r, c) = Complex(rr[static_cast<std::size_t>(c)],
                        ri[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot open file for writing: " + path,
                          {{"file_writable", 0.0}});
  }
  out << text;
  if (!out) {
    throw ValidationError("write failed: " + path, {{"file_writable", 0.0}});
  }
}

json matrix_part(const CMat& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(imag ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  return printf_double("%.12g", x);
}

std::string fmt_exact(double x) {
  if (x == 0.0) x = 0.0;
  return printf_double("%.17g", x);
}

QuantumState read_state_file(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("dims") || !j.contains("re") ||
      !j.contains("im")) {
    throw ValidationError(
        "state file must be an object with dims, re, im: " + path,
        {{"state_file_fields", 0.0}});
  }
  auto dims_raw = number_array(j["dims"], "dims");
  std::vector<int> dims;
  dims.reserve(dims_raw.size());
  Eigen::Index total = 1;
  for (double d : dims_raw) {
    auto di = static_cast<int>(d);
    if (static_cast<double>(di) != d || di < 1) {
      throw ValidationError("dims must be positive integers",
                            {{"dims_integral", 0.0}});
    }
    dims.push_back(di);
    total *= di;
  }
  CMat rho = matrix_from_parts(j["re"], j["im"], total, "state");
  return make_state(rho, dims);
}

ProjectiveBasis read_basis_file(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors")) {
    throw ValidationError(
        "basis file must be an object with dim, vectors: " + path,
        {{"basis_file_fields", 0.0}});
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw ValidationError("dim must be a positive integer",
                          {{"dim_integral", 0.0}});
  }
  auto d = static_cast<Eigen::Index>(j["dim"].get<long long>());
  const json& vecs = j["vectors"];
  if (!vecs.is_array() || vecs.size() != static_cast<std::size_t>(d)) {
    throw ValidationError("vectors must list exactly dim entries",
                          {{"vectors_count", 0.0}});
  }
  CMat m(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const json& v = vecs[static_cast<std::size_t>(k)];
    if (!v.is_object() || !v.contains("re") || !v.contains("im")) {
      throw ValidationError("each basis vector needs re and im arrays",
                            {{"vector_fields", 0.0}});
    }
    auto re = number_array(v["re"], "vector_re");
    auto im = number_array(v["im"], "vector_im");
    if (re.size() != static_cast<std::size_t>(d) ||
        im.size() != static_cast<std::size_t>(d)) {
      throw ValidationError("basis vector length must equal dim",
                            {{"vector_length", 0.0}});
    }
    for (Eigen::Index r = 0; r < d; ++r) {
      m(r, k) = Complex(re[static_cast<std::size_t>(r)],
                        im[static_cast<std::size_t>(r)]);
    }
  }
  return make_basis(m);
}

void write_state_file(const std::string& path, const QuantumState& state) {
  json j;
  j["dims"] = json::array();
  for (auto d : state.dims) j["dims"].push_back(d);
  j["re"] = matrix_part(state.rho, false);
  j["im"] = matrix_part(state.rho, true);
  write_text(path, j.dump(2) + "\n");
}

void write_basis_file(const std::string& path, const ProjectiveBasis& basis) {
  json j;
  j["dim"] = basis.dim;
  j["vectors"] = json::array();
  for (Eigen::Index k = 0; k < basis.dim; ++k) {
    json v;
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < basis.dim; ++r) {
      re.push_back(basis.vectors(r, k).real());
      im.push_back(basis.vectors(r, k).imag());
    }
    v["re"] = re;
    v["im"] = im;
    j["vectors"].push_back(v);
  }
  write_text(path, j.dump(2) + "\n");
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void Report::add(const std::string& key, double value) {
  entries_[key] = fmt(value);
}

void Report::add(const std::string& key, int value) {
  entries_[key] = std::to_string(value);
}

void Report::add(const std::string& key, std::uint64_t value) {
  entries_[key] = std::to_string(value);
}

void Report::add(const std::string& key, bool value) {
  entries_[key] = value ? "true" : "false";
}

void Report::add(const std::string& key, const std::string& value) {
  entries_[key] = '"' + json_escape(value) + '"';
}

void Report::add(const std::string& key, const std::vector<double>& values) {
  std::string v = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) v += ", ";
    v += fmt(values[i]);
  }
  v += "]";
  entries_[key] = v;
}

void Report::add(const std::string& key, const std::vector<int>& values) {
  std::string v = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) v += ", ";
    v += std::to_string(values[i]);
  }
  v += "]";
  entries_[key] = v;
}

std::string Report::str() const {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, rendered] : entries_) {
    out += "  \"" + json_escape(key) + "\": " + rendered;
    if (++i < entries_.size()) out += ",";
    out += "\n";
  }
  out += "}\n";
  return out;
}

void Report::save(const std::string& path) const { write_text(path, str()); }

Csv::Csv(std::vector<std::string> header) : header_(std::move(header)) {}

void Csv::row(const std::vector<double>& values) {
  if (values.size() != header_.size()) {
    throw ValidationError("CSV row width does not match header",
                          {{"csv_row_width", 0.0}});
  }
  rows_.push_back(values);
}

std::string Csv::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ",";
    out += header_[i];
  }
  out += "\n";
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ",";
      out += fmt(r[i]);
    }
    out += "\n";
  }
  return out;
}

void Csv::save(const std::string& path) const { write_text(path, str()); }

}  // namespace eub::io
