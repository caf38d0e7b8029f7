#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "coeffbounds/commands.hpp"
#include "coeffbounds/errors.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace coeffbounds;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += ch;
    }
  }
  return rows;
}

// Every JSON row value equals the matching CSV field once both are parsed.
void check_same_content(const Report& r) {
  const auto json = nlohmann::json::parse(to_json(r));
  const auto csv = parse_csv(to_csv(r));
  CHECK(json["schema"] == "coeff-bounds/1");
  REQUIRE(csv.size() == json["rows"].size() + 1);
  const auto& header = csv[0];
  for (std::size_t i = 0; i < json["rows"].size(); ++i) {
    const auto& obj = json["rows"][i];
    REQUIRE(obj.size() == header.size());
    for (std::size_t j = 0; j < header.size(); ++j) {
      const auto& v = obj.at(header[j]);
      const std::string& f = csv[i + 1][j];
      CAPTURE(header[j]);
      if (v.is_string()) {
        CHECK(v.get<std::string>() == f);
      } else if (v.is_boolean()) {
        CHECK((v.get<bool>() ? "true" : "false") == f);
      } else if (v.is_number_integer()) {
        CHECK(v.get<std::int64_t>() == std::stoll(f));
      } else if (v.is_number()) {
        CHECK(v.get<double>() == std::stod(f));
      } else {
        CHECK(v.is_null());
        CHECK(f.empty());
      }
    }
  }
}

RunConfig small(Command c) {
  RunConfig cfg;
  cfg.command = c;
  cfg.grid = 8;
  cfg.refine = 30;
  cfg.multistart = 2;
  cfg.samples = 200;
  return cfg;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(COEFF_BOUNDS_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(std::nan("")).empty());
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  cfg.n = 6;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.n = 3;
  cfg.grid = 2;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(parse_command("plot"), ConfigError);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  CHECK(parse_command("omega-check") == Command::omega_check);
}

TEST_CASE("search layout") {
  const SearchBudget b;
  CHECK(bound_search_space(ClassName::F1, 2, b, 1).ambient_size() == 2);
  CHECK(bound_search_space(ClassName::F1, 3, b, 1).ambient_size() == 4);
  CHECK(bound_search_space(ClassName::F2, 3, b, 1).ambient_size() == 3);
  CHECK(bound_search_space(ClassName::F3, 4, b, 1).ambient_size() == 5);
  CHECK(bound_search_space(ClassName::F4, 5, b, 1).ambient_size() == 7);
  const auto z = schur_from_point(ClassName::F1, 5, (Point(7) << 0.5, 0.1, 0.2, 0.3, 0.4, 0, -1).finished());
  CHECK(z.zeta1 == Complex(0.5, 0));
  CHECK(z.real_zeta1);
  CHECK(z.zeta4 == Complex(0, -1));
}

TEST_CASE("classification") {
  CHECK(classify(ClassName::F1, 2, 1.5) == BoundStatus::sharp_match);
  CHECK(classify(ClassName::F1, 2, 1.4) == BoundStatus::shortfall);
  CHECK(classify(ClassName::F1, 2, 1.6) == BoundStatus::violation);
  CHECK(classify(ClassName::F2, 2, 1 - 1e-7) == BoundStatus::sharp_match);
  CHECK(classify(ClassName::F2, 2, 1 - 1e-5) == BoundStatus::shortfall);
  CHECK(classify(ClassName::F2, 5, 791.0 / 392) == BoundStatus::within_range);
  CHECK(classify(ClassName::F2, 5, 2.5) == BoundStatus::within_range);
  CHECK(classify(ClassName::F2, 5, 2.0) == BoundStatus::shortfall);
  CHECK(classify(ClassName::F2, 5, 3.0) == BoundStatus::violation);
}

TEST_CASE("named extremals attain their targets") {
  for (const auto& spec : all_classes()) {
    for (int n = 2; n <= 5; ++n) {
      const auto e = named_extremal(spec.name, n);
      CAPTURE(e.label);
      CHECK(std::abs(e.abs_delta - e.target) <= 1e-9);
    }
  }
  const auto f2 = named_extremal(ClassName::F2, 5);
  CHECK(f2.target == 791.0 / 392);
  CHECK(f2.params.t == doctest::Approx((14 - std::sqrt(105.0)) / 56).epsilon(1e-15));
  CHECK(named_extremal(ClassName::F2, 4).derived);
  CHECK(named_extremal(ClassName::F2, 3).params.t == 0.0);
}

TEST_CASE("reports agree across formats and are byte stable") {
  auto verify = small(Command::verify);
  verify.cls = ClassName::F3;
  const auto a = run(verify);
  const auto b = run(verify);
  CHECK(to_json(a.report) == to_json(b.report));
  CHECK(to_csv(a.report) == to_csv(b.report));
  CHECK(a.report.table.rows.size() == 4);
  check_same_content(a.report);

  verify.format = Format::text;
  verify.n = 4;
  const auto text = run(verify);
  CHECK(text.report.case_tables.size() == 1);
  CHECK(to_text(text.report).find("F3") != std::string::npos);

  check_same_content(run(small(Command::identities)).report);
  check_same_content(run(small(Command::extremals)).report);
  check_same_content(run(small(Command::omega_check)).report);
}

TEST_CASE("identity suite") {
  const auto ok = run(small(Command::identities));
  CHECK(ok.exit_code == 0);
  CHECK(ok.report.passed);
  auto tampered = small(Command::identities);
  tampered.negative_control = true;
  const auto bad = run(tampered);
  CHECK(bad.exit_code == 2);
  CHECK_FALSE(bad.report.passed);
}

TEST_CASE("atomic write") {
  const fs::path dir = fs::temp_directory_path() / "coeff_bounds_atomic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path p = dir / "report.json";
  write_atomic(p, "first\n");
  write_atomic(p, "second\n");
  CHECK(slurp(p) == "second\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  CHECK_THROWS_AS(write_atomic(dir / "missing" / "r.json", "x"), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("command line exit codes") {
  const fs::path dir = fs::temp_directory_path() / "coeff_bounds_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path out = dir / "r.json";

  CHECK(run_cli("verify --class F1 --n 2 --out " + out.string()) == 0);
  const auto json = nlohmann::json::parse(slurp(out));
  CHECK(json["rows"][0]["status"] == "sharp_match");
  CHECK(std::abs(json["rows"][0]["searched_max"].get<double>() - 1.5) < 1e-6);
  CHECK(run_cli("verify --class F2 --n 3 --format csv") == 0);
  CHECK(run_cli("extremals --class F2") == 0);
  CHECK(run_cli("omega-check --samples 140 --seed 7") == 0);

  CHECK(run_cli("identities --samples 100 --negative-control") == 2);
  // A budget too small to reach the bound reports a verification failure.
  CHECK(run_cli("verify --class F2 --n 4 --grid 8 --refine 0 --multistart 1") == 2);

  CHECK(run_cli("") == 1);
  CHECK(run_cli("plot") == 1);
  CHECK(run_cli("verify --class F9") == 1);
  CHECK(run_cli("verify --n 7") == 1);
  CHECK(run_cli("verify --format xml") == 1);
  CHECK(run_cli("verify --grid 3") == 1);
  CHECK(run_cli("verify --class F1 --n 2 --out " + (dir / "none" / "r.json").string()) == 1);
  CHECK(run_cli("--help") == 0);
  fs::remove_all(dir);
}
