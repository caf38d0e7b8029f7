#include "coeffbounds/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "coeffbounds/errors.hpp"

namespace coeffbounds {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw ConfigError("unknown format '" + s + "'");
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  return fmt::format("{:.17g}", v);
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<int>(ch));
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_cell(const Cell& c) {
  struct V {
    std::string operator()(const std::string& s) const { return json_escape(s); }
    std::string operator()(double d) const {
      const auto s = format_double(d);
      return s.empty() ? "null" : s;
    }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

std::string plain_cell(const Cell& c) {
  struct V {
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void text_table(std::ostringstream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    auto& out = cells.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string s = plain_cell(row[j]);
      if (std::holds_alternative<double>(row[j]) && !s.empty()) s = fmt::format("{:.10g}", std::get<double>(row[j]));
      width[j] = std::max(width[j], s.size());
      out.push_back(std::move(s));
    }
  }
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << fmt::format("{:<{}}  ", t.columns[j], width[j]);
  os << '\n';
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) os << fmt::format("{:<{}}  ", row[j], width[j]);
    os << '\n';
  }
}

}  // namespace

std::string to_json(const Report& r) {
  std::ostringstream os;
  os << "{\"schema\":" << json_escape(kSchema) << ",\"command\":" << json_escape(r.command)
     << ",\"seed\":" << r.seed << ",\"passed\":" << (r.passed ? "true" : "false");
  for (const auto& [k, v] : r.meta) os << ',' << json_escape(k) << ':' << json_cell(v);
  os << ",\"rows\":[";
  for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
    if (i) os << ',';
    os << '{';
    const auto& row = r.table.rows[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << json_escape(r.table.columns[j]) << ':' << json_cell(row[j]);
    }
    os << '}';
  }
  os << "]}\n";
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (std::size_t j = 0; j < r.table.columns.size(); ++j) {
    if (j) os << ',';
    os << csv_field(r.table.columns[j]);
  }
  os << '\n';
  for (const auto& row : r.table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << csv_field(plain_cell(row[j]));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " (schema " << kSchema << ", seed " << r.seed << "): "
     << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.meta) os << "  " << k << " = " << plain_cell(v) << '\n';
  os << '\n';
  text_table(os, r.table);
  for (const auto& ct : r.case_tables) {
    os << '\n' << ct.title << '\n';
    text_table(os, ct.table);
  }
  return os.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r);
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
  }
  return {};
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp = dir / fmt::format(".{}.tmp{:08x}", path.filename().string(), rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ConfigError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move report into place at " + path.string());
  }
}

}  // namespace coeffbounds
