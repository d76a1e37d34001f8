#include "peakonlab/grid.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "peakonlab/parallel.hpp"

#include <nlohmann/json.hpp>

namespace pklab {

void GridState::validate() const {
  if (!(h > 0.0)) throw InvalidParamsError("grid spacing must be positive");
  if (samples.size() < 16) throw InvalidParamsError("grid needs at least 16 samples");
  if (!std::isfinite(x0) || !std::isfinite(h))
    throw NonFiniteError("grid geometry is not finite");
  for (double v : samples)
    if (!std::isfinite(v)) throw NonFiniteError("grid sample is not finite");
}

GridState make_grid(double L, std::size_t n, bool periodic) {
  if (!(L > 0.0) || n < 16) throw InvalidParamsError("grid needs L > 0 and n >= 16");
  GridState g;
  g.x0 = -L;
  g.periodic = periodic;
  g.h = 2.0 * L / static_cast<double>(periodic ? n : n - 1);
  g.samples.assign(n, 0.0);
  return g;
}

GridState sample_field(const AnalyticField& field, double t, double L,
                       std::size_t n, bool periodic) {
  GridState g = make_grid(L, n, periodic);
  field.check_sample_time(t);  // surface domain errors before spawning workers
  std::mutex mu;
  std::exception_ptr first_error;
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    try {
      for (std::size_t i = lo; i < hi; ++i) g.samples[i] = field.value(g.x(i), t);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  });
  if (first_error) std::rethrow_exception(first_error);
  g.validate();
  return g;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("rename to " + path + " failed: " + ec.message());
}

void write_csv(const std::string& path, const GridState& g) {
  std::ostringstream out;
  out << "x,value\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    out << format_double(g.x(i)) << ',' << format_double(g.samples[i]) << '\n';
  write_file_atomic(path, out.str());
}

std::string grid_to_json(const GridState& g) {
  nlohmann::json j{{"x0", g.x0}, {"h", g.h}, {"periodic", g.periodic},
                   {"samples", g.samples}};
  return j.dump();
}

GridState grid_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("grid JSON parse error: ") + e.what());
  }
  GridState g;
  try {
    g.x0 = j.at("x0").get<double>();
    g.h = j.at("h").get<double>();
    g.periodic = j.at("periodic").get<bool>();
    g.samples = j.at("samples").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("grid JSON is malformed: ") + e.what());
  }
  g.validate();
  return g;
}

void write_grid_json(const std::string& path, const GridState& g) {
  write_file_atomic(path, grid_to_json(g) + "\n");
}

GridState read_grid_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return grid_from_json(buf.str());
}

}  // namespace pklab
