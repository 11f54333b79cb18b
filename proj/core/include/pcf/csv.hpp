#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

// Rectangular table with a mandatory header row.  Floats are serialized as
// shortest round-trip decimals and rationals as "p/q" (plain "p" when
// integral), so output is diffable and exact where exactness exists.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

  static std::string fmt(double v);
  static std::string fmt(const Rational& v) { return v.str(); }
  static std::string fmt(std::uint64_t v) { return std::to_string(v); }
  static std::string fmt(int v) { return std::to_string(v); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace pcf
