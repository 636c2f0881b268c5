#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "gmap/cache.hpp"
#include "gmap/commands.hpp"
#include "gmap/error.hpp"
#include "gmap/report.hpp"

using namespace gmap;
namespace fs = std::filesystem;

namespace {

// Timing fields are the only nondeterministic part of the output.
std::string scrub(const std::string& text) {
  static const std::regex json_ms(R"("elapsed_ms":[0-9]+)");
  static const std::regex text_s(R"(elapsed( +)[0-9.]+ s)");
  return std::regex_replace(std::regex_replace(text, json_ms, R"("elapsed_ms":0)"), text_s, "elapsed$1X s");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(GMAP_GOLDEN_DIR) / name;
  if (std::getenv("GMAP_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << scrub(actual);
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK(scrub(actual) == read_file(path));
}

CommandOptions with_format(OutputFormat f) {
  CommandOptions o;
  o.format = f;
  return o;
}

fs::path temp_cache(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("gmap_test_" + name + "_" + std::to_string(::getpid()) + ".jsonl");
  fs::remove(p);
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GMAP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("golden: rank") {
  const std::string reference = "m=4;a=1^2,3^2,2^2";
  auto opt = with_format(OutputFormat::json);
  opt.branch_points = "0,1,-1,2,-2,3";
  const auto json = cmd_rank(reference, opt);
  CHECK(json.exit_code == 0);
  check_golden("rank_reference.jsonl", json.out);
  opt.format = OutputFormat::text;
  check_golden("rank_reference.txt", cmd_rank(reference, opt).out);
  check_golden("rank_hyperelliptic.jsonl", cmd_rank("m=2;a=1^10", with_format(OutputFormat::json)).out);
}

TEST_CASE("golden: table") {
  const auto csv = cmd_table("5..8", with_format(OutputFormat::csv));
  CHECK(csv.exit_code == 0);
  check_golden("table_5_8.csv", csv.out);
  check_golden("table_9_10.jsonl", cmd_table("9..10", with_format(OutputFormat::json)).out);
  check_golden("table_5_6.txt", cmd_table("5..6", with_format(OutputFormat::text)).out);
}

TEST_CASE("golden: enumerate, validate, witness") {
  check_golden("enumerate_9_1.txt", cmd_enumerate(9, 1, with_format(OutputFormat::text)).out);
  check_golden("enumerate_8_2.jsonl", cmd_enumerate(8, 2, with_format(OutputFormat::json)).out);
  check_golden("validate_reference.jsonl", cmd_validate("m=4;a=1^2,3^2,2^2", with_format(OutputFormat::json)).out);
  check_golden("validate_bad.txt", cmd_validate("m=4;a=1^3", with_format(OutputFormat::text)).out);
  check_golden("witness_9_3.txt", cmd_witness(9, 3, with_format(OutputFormat::text)).out);
  check_golden("witness_8_2.jsonl", cmd_witness(8, 2, with_format(OutputFormat::json)).out);
}

TEST_CASE("machine records parse as JSON and round-trip") {
  auto opt = with_format(OutputFormat::json);
  const auto res = cmd_rank("[1^4:2^2]", opt);
  const Json j = Json::parse(res.out);
  const auto keys = std::vector<std::string>{"record", "monodromy", "m", "a", "branch_points", "genus", "policy",
                                             "precision", "mult_rank", "i2_dim", "mu2_rank", "stability",
                                             "stable", "elapsed_ms"};
  std::vector<std::string> actual;
  for (const auto& [k, v] : j.items()) actual.push_back(k);
  CHECK(actual == keys);
  CHECK(to_json(rank_report_from_json(j)) == j);
}

TEST_CASE("table rows round-trip through CSV and JSON") {
  TableRow exact{5, "[1^4:2^2]", 3, true, 3, 150, true, std::nullopt};
  TableRow bound{9, "[1^4:2^6]", 17, false, 21, 150, false, std::nullopt};
  TableRow failed{5, "", 0, false, 0, 0, false, std::string("EmptyLocus")};
  for (const auto& row : {exact, bound, failed}) {
    CHECK(table_row_from_csv(to_csv(row)) == row);
    CHECK(table_row_from_json(to_json(row)) == row);
  }
  CHECK(to_csv(bound) == "9,[1^4:2^6],>=17,21,150,no");
  CHECK(csv_header() == "genus,monodromy,rank_mu2,max_rank_mu2,precision,stable");
  CHECK_THROWS_AS(table_row_from_csv("1,2,3"), ParseError);
}

TEST_CASE("rank command errors and exit codes") {
  CommandOptions opt;
  const auto bad_sum = cmd_rank("m=4;a=1^3", opt);
  CHECK(bad_sum.exit_code == exit_code::domain);
  CHECK(bad_sum.err.find("not 0") != std::string::npos);

  const auto parse = cmd_rank("m=4;a=1^", opt);
  CHECK(parse.exit_code == exit_code::usage);
  CHECK(parse.err.find("position") != std::string::npos);

  auto capped = opt;
  capped.precision = 700;
  CHECK(cmd_rank("[1^4:2^2]", capped).exit_code == exit_code::resource);
  capped.limits.max_precision = 800;
  capped.precision = 40;
  CHECK(cmd_rank("[1^4:2^2]", capped).exit_code == exit_code::ok);

  auto big = opt;
  big.limits.max_genus = 6;
  CHECK(cmd_rank("[1^4:2^4]", big).exit_code == exit_code::resource);
  CHECK(cmd_table("5..7", big).exit_code == exit_code::resource);

  auto both = opt;
  both.precision = 100;
  both.escalate = "100:2:200";
  CHECK(cmd_rank("[1^4:2^2]", both).exit_code == exit_code::usage);

  auto wrong_count = opt;
  wrong_count.branch_points = "0,1,-1";
  CHECK(cmd_rank("[1^4:2^2]", wrong_count).exit_code == exit_code::usage);

  auto repeated = opt;
  repeated.branch_points = "0,1,1,2,-2,3";
  const auto rep = cmd_rank("[1^4:2^2]", repeated);
  CHECK(rep.exit_code == exit_code::domain);
  CHECK(rep.err.find("cover-model") != std::string::npos);

  auto unnormalizable = opt;
  CHECK(cmd_rank("m=4;a=2^4", unnormalizable).exit_code == exit_code::domain);
}

TEST_CASE("user branch points follow the normalization permutation") {
  CommandOptions opt;
  opt.format = OutputFormat::json;
  opt.precision = 60;
  opt.branch_points = "1,0,-1,2,-2,3";
  const Json j = Json::parse(cmd_rank("m=4;a=2,1,3^2,2,1", opt).out);
  CHECK(j["a"] == std::vector<int>{1, 2, 3, 3, 2, 1});
  CHECK(j["branch_points"][0] == "0");
  CHECK(j["branch_points"][1] == "1");
}

TEST_CASE("escalation policy parsing") {
  CHECK(parse_escalate("150:2:600").to_string() == "escalate:150:2:600");
  CHECK_THROWS_AS(parse_escalate("150:2"), ParseError);
  CHECK_THROWS_AS(parse_escalate("150:1:600"), ParseError);
  CHECK_THROWS_AS(parse_escalate("300:2:150"), ParseError);
  CHECK(parse_genus_range("5..8") == std::pair{5, 8});
  CHECK(parse_genus_range("7") == std::pair{7, 7});
  CHECK_THROWS_AS(parse_genus_range("8..5"), ParseError);
}

TEST_CASE("table reports per-row failures inline") {
  CommandOptions opt;
  opt.format = OutputFormat::csv;
  opt.gprime = 2;
  const auto res = cmd_table("5..6", opt);
  CHECK(res.exit_code == exit_code::domain);
  std::istringstream lines(res.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == csv_header());
  CHECK(first == "5,,ERROR(EmptyLocus),,,");
  CHECK(second.rfind("6,[1^5:3],", 0) == 0);
}

TEST_CASE("enumerate and witness errors") {
  CommandOptions opt;
  CHECK(cmd_enumerate(5, 2, opt).exit_code == exit_code::domain);
  opt.class_index = 1;  // [1^3:3^3], d_1 = 2
  const auto degenerate = cmd_witness(6, 2, opt);
  CHECK(degenerate.exit_code == exit_code::domain);
  CHECK(degenerate.err.find("DegenerateWitness") != std::string::npos);
  opt.class_index = 0;
  opt.format = OutputFormat::csv;
  CHECK(cmd_enumerate(9, 1, opt).exit_code == exit_code::usage);
}

TEST_CASE("cache hit returns the cold result") {
  const fs::path path = temp_cache("hit");
  CommandOptions opt;
  opt.format = OutputFormat::json;
  opt.cache = path;
  const auto cold = cmd_rank("[1^3:3:2^3]", opt);
  const auto warm = cmd_rank("[1^3:3:2^3]", opt);
  CHECK(cold.exit_code == 0);
  CHECK(cold.out == warm.out);

  std::size_t lines = 0;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 1);

  // A different policy is a different key.
  opt.precision = 80;
  const auto other = cmd_rank("[1^3:3:2^3]", opt);
  CHECK(Json::parse(other.out)["precision"] == 80);
  fs::remove(path);
}

TEST_CASE("cache survives corrupt lines and keeps the first record") {
  const fs::path path = temp_cache("corrupt");
  const MonodromyDatum d{4, {1, 1, 1, 1, 2, 2}};
  const std::vector<Rational> t{0, 1, -1, 2, -2, 3};
  RankReport r;
  r.datum = d;
  r.branch_points = t;
  r.genus = 5;
  r.policy = "fixed:150";
  r.precision_used = 150;
  r.mult_rank = 12;
  r.i2_dim = 3;
  r.mu2_rank_lower_bound = 3;
  r.stability = "saturated";
  r.stable = true;
  {
    std::ofstream out(path);
    out << "{not json\n" << R"({"record":"rank","m":4})" << "\n";
  }
  ResultCache cache(path);
  cache.append(r);
  RankReport later = r;
  later.mu2_rank_lower_bound = 2;
  cache.append(later);
  const auto hit = cache.lookup(d, t, "fixed:150");
  REQUIRE(hit.has_value());
  CHECK(hit->mu2_rank_lower_bound == 3);
  CHECK(cache.skipped_lines() == 2);
  CHECK_FALSE(cache.lookup(d, t, "fixed:151").has_value());
  fs::remove(path);
}

TEST_CASE("cache path from the environment") {
  ::setenv("GMAP_CACHE", "/tmp/somewhere.jsonl", 1);
  CHECK(ResultCache::path_from_environment() == fs::path("/tmp/somewhere.jsonl"));
  ::unsetenv("GMAP_CACHE");
  CHECK_FALSE(ResultCache::path_from_environment().has_value());
}

TEST_CASE("command-line binary exit codes") {
  CHECK(run_cli("validate \"m=4;a=1^2,3^2,2^2\"") == 0);
  CHECK(run_cli("validate \"m=4;a=1^3\"") == 1);
  CHECK(run_cli("validate \"m=4;a=1^\"") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("rank \"[1^4:2^2]\" --prec 10 --escalate 10:2:20") == 2);
  CHECK(run_cli("rank \"[1^4:2^2]\" --format yaml") == 2);
  CHECK(run_cli("rank \"[1^4:2^2]\" --prec 601") == 3);
  CHECK(run_cli("rank \"[1^4:2^2]\" --prec 601 --max-prec 700") == 0);
  CHECK(run_cli("table 29..31") == 3);
  CHECK(run_cli("enumerate 5 2") == 1);
  CHECK(run_cli("--help") == 0);
}
