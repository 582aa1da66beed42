#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "heatlab/errors.hpp"
#include "heatlab/report.hpp"

using namespace heatlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return body;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("heatlab-report-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format_double round-trips and names non-finite values") {
  for (double v : {0.1, 1.0 / 3.0, 1e300, 1e-300, 0.0, -2.5, 12345.0,
                   6.62607015e-34}) {
    CAPTURE(v);
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("format_fixed pins the digit count") {
  CHECK(format_fixed(3.14159, 3) == "3.142");
  CHECK(format_fixed(2.0, 1) == "2.0");
  CHECK(format_fixed(-0.5, 2) == "-0.50");
}

TEST_CASE("fnv1a64 matches the published vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("config hash is 16 hex digits and order-sensitive") {
  Config a;
  a.set("x", "1");
  a.set("y", "2");
  Config b;
  b.set("y", "2");
  b.set("x", "1");
  const std::string ha = config_hash(a);
  CHECK(ha.size() == 16);
  CHECK(ha.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(ha != config_hash(b));
  CHECK(ha == config_hash(a));
}

TEST_CASE("config round-trips through its text form") {
  Config c;
  c.set("domain", "interval");
  c.set("a", 0.5);
  c.set("caps", "10,100,1000");
  c.set("note", "spaces are kept inside values");
  const Config back = Config::parse(c.serialize());
  CHECK(back.entries() == c.entries());
  CHECK(Config::parse(back.serialize()).entries() == c.entries());
}

TEST_CASE("config set replaces in place and getters coerce") {
  Config c;
  c.set("first", "1");
  c.set("second", "2");
  c.set("first", "1.5");
  REQUIRE(c.entries().size() == 2);
  CHECK(c.entries()[0].first == "first");
  CHECK(c.entries()[0].second == "1.5");
  CHECK(c.number_or("first", 0.0) == 1.5);
  CHECK(c.number_or("absent", -3.0) == -3.0);
  CHECK(c.get_or("second", "z") == "2");
  CHECK(c.find("absent") == nullptr);
  CHECK(c.has("second"));

  c.set("caps", "10, 100,1000");
  const auto caps = c.numbers_or("caps", {});
  REQUIRE(caps.size() == 3);
  CHECK(caps[0] == 10.0);
  CHECK(caps[2] == 1000.0);
  CHECK(c.numbers_or("absent", {7.0}) == std::vector<double>{7.0});

  c.set("word", "ten");
  CHECK_THROWS_AS((void)c.number_or("word", 0.0), InvalidQuery);
  CHECK_THROWS_AS((void)c.numbers_or("word", {}), InvalidQuery);
}

TEST_CASE("config parse skips comments and reports bad lines") {
  const Config c = Config::parse("# comment\n\n  key = value  \nn=3\n");
  REQUIRE(c.entries().size() == 2);
  CHECK(c.get_or("key", "") == "value");
  CHECK(c.get_or("n", "") == "3");

  try {
    Config::parse("ok=1\nbroken line\n");
    FAIL("expected InvalidQuery");
  } catch (const InvalidQuery& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(Config::parse("=value\n"), InvalidQuery);
}

TEST_CASE("csv builder emits a bare header for zero rows") {
  CsvBuilder csv({"x", "y", "slack"});
  CHECK(csv.str() == "x,y,slack\n");
  csv.row(std::vector<double>{1.0, 0.25, -0.5});
  CHECK(csv.str() == "x,y,slack\n1,0.25,-0.5\n");
  CHECK_THROWS_AS(csv.row(std::vector<double>{1.0}), InvalidQuery);
  CHECK_THROWS_AS(csv.row(std::vector<std::string>{"a", "b", "c", "d"}),
                  InvalidQuery);
}

TEST_CASE("line plot output is deterministic and complete") {
  LinePlot plot("kernel against bound", "x", "value");
  plot.add_series("kernel", {0.0, 0.25, 0.5, 0.75, 1.0},
                  {0.0, 1.2, 2.9, 1.1, 0.0});
  plot.add_series("bound", {0.0, 0.25, 0.5, 0.75, 1.0},
                  {0.0, 0.8, 2.1, 0.7, 0.0}, true);
  const std::string svg = plot.render();
  CHECK(svg == plot.render());
  CHECK(count_occurrences(svg, "<polyline") == 2);
  // the dashed series dashes both its curve and its legend swatch
  CHECK(count_occurrences(svg, "stroke-dasharray") == 2);
  CHECK(svg.find("kernel against bound") != std::string::npos);
  CHECK(svg.find(">x<") != std::string::npos);
  CHECK(svg.find(">value<") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("line plot drops non-finite points but keeps the series") {
  const double inf = std::numeric_limits<double>::infinity();
  LinePlot plot("t", "x", "y");
  plot.add_series("a", {0.0, 1.0, 2.0}, {1.0, inf, 3.0});
  const std::string svg = plot.render();
  CHECK(count_occurrences(svg, "<polyline") == 1);
  CHECK(count_occurrences(svg, "stroke-dasharray") == 0);
  CHECK(svg.find("inf") == std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("run directory collects files into a manifest") {
  TempDir tmp;
  Config cfg;
  cfg.set("command", "kernel");
  cfg.set("t", 0.02);
  RunDirectory run(tmp.path, "kernel", cfg);
  CHECK(run.id() == "kernel-" + config_hash(cfg).substr(0, 8));
  CHECK(run.path() == tmp.path / run.id());

  run.write_text("curve.csv", "x,k\n0,0\n");
  run.write_text("figure.svg", "<svg></svg>");
  run.write_text("curve.csv", "x,k\n0,1\n");
  REQUIRE(run.files() == std::vector<std::string>{"curve.csv", "figure.svg"});
  CHECK(slurp(run.path() / "curve.csv") == "x,k\n0,1\n");

  const auto manifest_path = run.finalize();
  CHECK(manifest_path.filename() == "manifest.json");
  const std::string manifest = slurp(manifest_path);
  CHECK(manifest.find("\"schema_version\": 1") != std::string::npos);
  CHECK(manifest.find(json_quote(run.id())) != std::string::npos);
  CHECK(manifest.find("\"curve.csv\"") != std::string::npos);
  CHECK(manifest.find("\"figure.svg\"") != std::string::npos);
  CHECK(manifest.find("\"manifest.json\"") == std::string::npos);
  CHECK(manifest.find(config_hash(cfg)) != std::string::npos);
  CHECK(manifest.find(std::string(kArtifactVersion)) != std::string::npos);
  CHECK(manifest.find("\"timestamp\": \"20") != std::string::npos);
}

TEST_CASE("json quoting escapes what JSON requires") {
  CHECK(json_quote("plain") == "\"plain\"");
  CHECK(json_quote("a\"b") == "\"a\\\"b\"");
  CHECK(json_quote("a\\b") == "\"a\\\\b\"");
  CHECK(json_quote("line\nbreak") == "\"line\\nbreak\"");
  CHECK(json_quote(std::string(1, '\x01')) == "\"\\u0001\"");
}

TEST_CASE("output directory resolution prefers explicit then environment") {
  ::unsetenv("HEATLAB_OUT");
  CHECK(resolve_out_dir("given") == std::filesystem::path("given"));
  CHECK(resolve_out_dir("") == std::filesystem::path("heatlab-out"));
  ::setenv("HEATLAB_OUT", "/tmp/elsewhere", 1);
  CHECK(resolve_out_dir("") == std::filesystem::path("/tmp/elsewhere"));
  CHECK(resolve_out_dir("given") == std::filesystem::path("given"));
  ::unsetenv("HEATLAB_OUT");
}

}  // TEST_SUITE
