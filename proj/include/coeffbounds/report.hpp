#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace coeffbounds {

inline constexpr const char* kSchema = "coeff-bounds/1";

using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// Flat table; JSON rows are objects keyed by column, CSV rows follow the header.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Text-mode only: piecewise summary of a delta4 reduction.
struct CaseTable {
  std::string title;
  Table table;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  bool passed = true;
  std::vector<std::pair<std::string, Cell>> meta;
  Table table;
  std::vector<CaseTable> case_tables;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& s);

/// Doubles use 17 significant digits; non-finite values become null / empty.
std::string format_double(double v);

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);
std::string render(const Report& r, Format f);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace coeffbounds
