#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "report_io.hpp"
#include "xilab/precision.hpp"

using namespace xilab;
using namespace xilab::tools;
using nlohmann::ordered_json;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("xilab_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "xilab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("CSV quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("two\nlines") == "\"two\nlines\"");

  Table empty("ledger", {{"k", ColumnType::integer}, {"note", ColumnType::text}});
  CHECK(to_csv(empty) == "k,note\r\n");
  empty.add_row({3L, std::string("x, y")});
  CHECK(to_csv(empty) == "k,note\r\n3,\"x, y\"\r\n");
  CHECK_THROWS_AS(empty.add_row({std::string("bad"), 1L}), std::logic_error);
}

TEST_CASE("check tables") {
  PrecisionScope scope(64);
  Table t = checks_table();
  std::vector<std::string> names;
  for (const auto& c : t.columns) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"check", "bound", "empirical", "margin", "pass", "detail"});
  BoundReport r;
  r.bound_name = "toy";
  r.bound_value = BigReal(2L);
  r.empirical_value = BigReal(0.5);
  r.add_param("n", "3");
  add_check(t, r);
  CHECK(to_csv(t) == "check,bound,empirical,margin,pass,detail\r\ntoy,2,0.5,1.5,true,n=3\r\n");
}

TEST_CASE("log-space serialization") {
  PrecisionScope scope(192);
  BigReal big = exp(BigReal::pi() * 729L);
  ordered_json j = real_to_json(big);
  REQUIRE(j.is_object());
  CHECK(j["sign"] == 1);
  double l10 = std::stod(j["log10"].get<std::string>());
  CHECK(l10 == doctest::Approx(729.0 * M_PI / std::log(10.0)).epsilon(1e-14));
  CHECK(j["digits"].get<std::string>().substr(0, 1) != "0");
  BigReal back = real_from_json(j);
  CHECK((abs(back - big) / big).to_double() < 1e-55);

  ordered_json neg = real_to_json(-BigReal(1L) / big);
  CHECK(neg["sign"] == -1);
  CHECK(real_to_json(BigReal(0.25)) == "0.25");
}

TEST_CASE("JSON round trip") {
  Report r;
  r.subcommand = "toy";
  r.precision_bits = 128;
  r.add_param("n", "9");
  {
    PrecisionScope scope(128);
    Table t("rows", {{"k", ColumnType::integer},
                     {"name", ColumnType::text},
                     {"ok", ColumnType::boolean},
                     {"value", ColumnType::real}});
    t.add_row({1L, std::string("one"), true, BigReal(1L) / BigReal(3L)});
    t.add_row({2L, std::string("huge"), false, exp(BigReal(2000L))});
    t.add_row({3L, std::string("tiny"), true, -exp(BigReal(-2000L))});
    r.tables.push_back(std::move(t));
    Table c = checks_table();
    add_check(c, "flag only", false, "no numbers");
    r.tables.push_back(std::move(c));
  }
  r.fail("something failed");
  std::string first = render(r, Format::json);
  Report back = from_json(ordered_json::parse(first));
  CHECK(render(back, Format::json) == first);
  CHECK(render(back, Format::csv) == render(r, Format::csv));
  CHECK_FALSE(back.pass);
  CHECK(back.tables.size() == 2);
}

TEST_CASE("precision resolution") {
  unsetenv("XI_LAB_PRECISION_BITS");
  CHECK(resolve_bits(std::nullopt, 9, 192) == PrecisionContext::for_n(9).mantissa_bits());
  CHECK(resolve_bits(std::nullopt, std::nullopt, 160) == 160);
  setenv("XI_LAB_PRECISION_BITS", "300", 1);
  CHECK(resolve_bits(std::nullopt, 9, 192) == 300);
  CHECK(resolve_bits(256L, 9, 192) == 256);
  setenv("XI_LAB_PRECISION_BITS", "lots", 1);
  CHECK_THROWS_AS(resolve_bits(std::nullopt, 9, 192), DomainError);
  unsetenv("XI_LAB_PRECISION_BITS");
  CHECK_THROWS_AS(resolve_bits(32L, std::nullopt, 192), DomainError);
}

TEST_CASE("subcommands") {
  unsetenv("XI_LAB_PRECISION_BITS");
  std::string out = temp_path("eval.json");
  CHECK(run_args({"eval", "--family", "f", "--n", "4", "--z", "0", "-o", out}) == kExitPass);
  ordered_json j = ordered_json::parse(slurp(out));
  CHECK(j["subcommand"] == "eval");
  double v = std::stod(j["tables"][0]["rows"][0]["value"].get<std::string>());
  CHECK(v == doctest::Approx(0.496878).epsilon(1e-6));

  CHECK(run_args({"bounds", "--eps", "1e-10", "-o", out}) == kExitPass);
  j = ordered_json::parse(slurp(out));
  CHECK(j["tables"][0]["rows"][0]["nu0_ceil"] == 17);
  CHECK(j["tables"][0]["rows"][0]["m_9"] == 44219);
  CHECK(j["tables"].size() == 1);

  // Interlacing fails at k = 1 for n = 3, so the run reports a failure.
  std::string csv = temp_path("interlace.csv");
  CHECK(run_args({"interlace", "--n", "3", "--k-max", "20", "--format", "csv", "-o", csv}) == kExitFail);
  std::string text = slurp(csv);
  long lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 21);
  CHECK(text.substr(0, text.find('\r')).find("interlace_ok") != std::string::npos);
  std::string again = temp_path("interlace2.csv");
  run_args({"--format", "csv", "interlace", "--n", "3", "--k-max", "20", "-o", again});
  CHECK(slurp(again) == text);

  CHECK(run_args({"interlace", "--n", "3", "--k-max", "0", "--format", "csv", "-o", csv}) == kExitPass);
  CHECK(slurp(csv) == "k,x_k,y_k,gap,order_resolved,premise_ok,interlace_ok\r\n");

  CHECK(run_args({"kernels", "--kernel", "exact", "--count", "5", "--format", "csv", "-o", csv}) == kExitPass);
  CHECK(run_args({"alt-xi", "--count", "2", "-o", out}) == kExitPass);

  CHECK(run_args({}) == kExitUsage);
  CHECK(run_args({"frobnicate"}) == kExitUsage);
  CHECK(run_args({"zeros", "--n", "4", "-o", out}) == kExitUsage);
  CHECK(run_args({"eval", "--family", "f", "--n", "1", "-o", out}) == kExitUsage);
  CHECK(run_args({"bounds", "--eps", "-1", "-o", out}) == kExitUsage);
  CHECK(run_args({"bounds", "-o", "/nonexistent-dir/x.json"}) == kExitUsage);
  std::filesystem::remove(out);
  std::filesystem::remove(csv);
  std::filesystem::remove(again);
}
