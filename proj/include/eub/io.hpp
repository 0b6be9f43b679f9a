#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eub/qcore.hpp"

namespace eub::io {

// All numeric output goes through these: C-locale, '.' decimal separator.
// fmt() renders 12 significant digits (reports, CSV); fmt_exact() renders
// round-trip precision (state/basis dumps meant to be replayed).
std::string fmt(double x);
std::string fmt_exact(double x);

// ---- input files -----------------------------------------------------------
//
// State file:  {"dims": [dA, dB, ...], "re": [[...]], "im": [[...]]}
// Basis file:  {"dim": d, "vectors": [{"re": [...], "im": [...]}, ...]}
//
// Both are validated on read; malformed JSON, wrong shapes, or physics
// violations raise ValidationError with the violation list attached.

QuantumState read_state_file(const std::string& path);
ProjectiveBasis read_basis_file(const std::string& path);

void write_state_file(const std::string& path, const QuantumState& state);
void write_basis_file(const std::string& path, const ProjectiveBasis& basis);

// ---- output documents ------------------------------------------------------

// Flat JSON object emitted with keys in alphabetical order and all numerics
// through fmt(). Values are rendered at add() time.
class Report {
 public:
  void add(const std::string& key, double value);
  void add(const std::string& key, int value);
  void add(const std::string& key, std::uint64_t value);
  void add(const std::string& key, bool value);
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const std::vector<double>& values);
  void add(const std::string& key, const std::vector<int>& values);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  std::map<std::string, std::string> entries_;  // key -> rendered JSON value
};

// CSV document: one header row, then data rows through fmt().
class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  void row(const std::vector<double>& values);

  std::string str() const;
  void save(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace eub::io
