#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "fdepth/csv.hpp"
#include "fdepth/errors.hpp"
#include "fdepth/simulate.hpp"
#include "test_helpers.hpp"

using namespace fdepth;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "fdepth_csv_XXXXXX").string();
    path = mkdtemp(tmpl.data());
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("sample csv round-trips bit-exactly") {
  TempDir dir;
  ModelSpec spec;
  spec.n = 7;
  const SimulatedSample sim = generate(spec, 3);
  const fs::path file = dir.path / "sample.csv";
  write_sample_csv(file, sim.sample);
  const FunctionalSample back = read_sample_csv(file);
  REQUIRE(back.values == sim.sample.values);
  REQUIRE(back.grid.points == sim.sample.grid.points);
  REQUIRE(back.grid.weights == sim.sample.grid.weights);

  // writing the parsed sample again reproduces the same bytes
  const fs::path file2 = dir.path / "sample2.csv";
  write_sample_csv(file2, back);
  REQUIRE(read_text(file) == read_text(file2));
}

TEST_CASE("parser accepts crlf and a trailing newline") {
  TempDir dir;
  const fs::path file = dir.path / "crlf.csv";
  write_text(file, "0,1\r\n1.5,2.5\r\n");
  const FunctionalSample sample = read_sample_csv(file);
  REQUIRE(sample.curve_count() == 1);
  REQUIRE(sample.values(0, 0) == 1.5);
  REQUIRE(sample.values(0, 1) == 2.5);
}

TEST_CASE("parser names the offending row") {
  TempDir dir;
  const fs::path ragged = dir.path / "ragged.csv";
  write_text(ragged, "0,1,2\n1,2,3\n4,5\n");
  REQUIRE_THROWS_WITH(read_sample_csv(ragged),
                      Catch::Matchers::ContainsSubstring("row 3"));

  const fs::path garbage = dir.path / "garbage.csv";
  write_text(garbage, "0,1\n1,x\n");
  REQUIRE_THROWS_WITH(read_sample_csv(garbage),
                      Catch::Matchers::ContainsSubstring("row 2"));

  const fs::path nonfinite = dir.path / "nonfinite.csv";
  write_text(nonfinite, "0,1\n1,inf\n");
  REQUIRE_THROWS_AS(read_sample_csv(nonfinite), ParseError);

  const fs::path empty_field = dir.path / "empty_field.csv";
  write_text(empty_field, "0,1\n1,\n");
  REQUIRE_THROWS_AS(read_sample_csv(empty_field), ParseError);
}

TEST_CASE("parser rejects structural problems") {
  TempDir dir;
  const fs::path missing = dir.path / "missing.csv";
  REQUIRE_THROWS_AS(read_sample_csv(missing), ParseError);

  const fs::path only_grid = dir.path / "grid_only.csv";
  write_text(only_grid, "0,1,2\n");
  REQUIRE_THROWS_AS(read_sample_csv(only_grid), ParseError);

  const fs::path bad_grid = dir.path / "bad_grid.csv";
  write_text(bad_grid, "0,2,1\n1,2,3\n");
  REQUIRE_THROWS_AS(read_sample_csv(bad_grid), InvalidGridError);

  const fs::path blank = dir.path / "blank.csv";
  write_text(blank, "0,1\n\n1,2\n");
  REQUIRE_THROWS_AS(read_sample_csv(blank), ParseError);
}

TEST_CASE("format_double survives the round trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 123456789.123456789, 0.0, -0.99}) {
    REQUIRE(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("atomic write leaves no temporary behind") {
  TempDir dir;
  const fs::path file = dir.path / "out.csv";
  atomic_write(file, "a,b\n");
  REQUIRE(read_text(file) == "a,b\n");
  REQUIRE(!fs::exists(dir.path / "out.csv.tmp"));
}
