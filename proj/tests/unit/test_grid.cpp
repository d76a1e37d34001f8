#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "peakonlab/grid.hpp"
#include "peakonlab/solutions.hpp"

using namespace pklab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("pklab-grid-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("make_grid layouts") {
    const GridState open = make_grid(2.0, 17, false);
    CHECK(open.x0 == -2.0);
    CHECK(open.h == doctest::Approx(0.25));
    CHECK(open.x(16) == doctest::Approx(2.0));
    const GridState per = make_grid(2.0, 16, true);
    CHECK(per.h == doctest::Approx(0.25));
    CHECK(per.x(15) == doctest::Approx(1.75));  // right endpoint excluded
    CHECK(per.length() == doctest::Approx(4.0));
    CHECK_THROWS_AS((void)make_grid(2.0, 4, true), InvalidParamsError);
  }

  TEST_CASE("validate rejects malformed states") {
    GridState g = make_grid(1.0, 16, true);
    CHECK_NOTHROW(g.validate());
    g.h = 0.0;
    CHECK_THROWS_AS(g.validate(), InvalidParamsError);
    g.h = 0.125;
    g.samples.clear();
    CHECK_THROWS_AS(g.validate(), InvalidParamsError);
  }

  TEST_CASE("sample_field averages across crests") {
    FieldPtr f = instantiate(collage(6.0));
    const GridState g = sample_field(*f, 0.0, 2.0, 17, false);
    CHECK(g.samples[8] == doctest::Approx(-1.0));  // crest node at x = 0
    CHECK(g.samples[0] == doctest::Approx(f->value(-2.0, 0.0)));
  }

  TEST_CASE("CSV format: header, LF endings, 17 significant digits") {
    TempDir tmp;
    GridState g;
    g.x0 = -1.0;
    g.h = 0.5;
    g.samples = {1.0 / 3.0, -2.0, 0.1};
    const fs::path p = tmp.path / "out.csv";
    write_csv(p.string(), g);
    const std::string text = slurp(p);
    CHECK(text.substr(0, 8) == "x,value\n");
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.find("0.33333333333333331") != std::string::npos);
    // parse back and compare bit-exactly
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::size_t i = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      REQUIRE(comma != std::string::npos);
      CHECK(std::stod(line.substr(0, comma)) == g.x(i));
      CHECK(std::stod(line.substr(comma + 1)) == g.samples[i]);
      ++i;
    }
    CHECK(i == g.samples.size());
  }

  TEST_CASE("JSON round-trip is bit-exact") {
    GridState g = make_grid(3.0, 64, true);
    for (std::size_t i = 0; i < g.size(); ++i)
      g.samples[i] = std::sin(0.1 + 1e-7 * static_cast<double>(i * i));
    const GridState back = grid_from_json(grid_to_json(g));
    CHECK(back.x0 == g.x0);
    CHECK(back.h == g.h);
    CHECK(back.periodic == g.periodic);
    REQUIRE(back.samples.size() == g.samples.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(back.samples[i] == g.samples[i]);
  }

  TEST_CASE("JSON parse errors surface as IoError") {
    CHECK_THROWS_AS((void)grid_from_json("not json at all"), IoError);
    CHECK_THROWS_AS((void)grid_from_json("{\"x0\": 0.0}"), IoError);
  }

  TEST_CASE("atomic writes leave no temp file and replace contents whole") {
    TempDir tmp;
    const fs::path p = tmp.path / "file.txt";
    write_file_atomic(p.string(), "first\n");
    write_file_atomic(p.string(), "second\n");
    CHECK(slurp(p) == "second\n");
    std::size_t entries = 0;
    for (auto& e : fs::directory_iterator(tmp.path)) {
      (void)e;
      ++entries;
    }
    CHECK(entries == 1);
  }

  TEST_CASE("file helpers round-trip through disk") {
    TempDir tmp;
    GridState g = make_grid(1.0, 16, false);
    for (std::size_t i = 0; i < g.size(); ++i)
      g.samples[i] = g.x(i) * g.x(i);
    const fs::path p = tmp.path / "grid.json";
    write_grid_json(p.string(), g);
    const GridState back = read_grid_json(p.string());
    CHECK(back.samples == g.samples);
    CHECK_THROWS_AS((void)read_grid_json((tmp.path / "missing.json").string()),
                    IoError);
  }
}
