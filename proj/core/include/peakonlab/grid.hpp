#pragma once

#include <string>
#include <vector>

#include "peakonlab/errors.hpp"
#include "peakonlab/jets.hpp"

namespace pklab {

// Uniform spatial grid with samples.  On a periodic grid the samples cover
// [x0, x0 + n h) with period n h; otherwise they cover [x0, x0 + (n-1) h].
struct GridState {
  double x0 = 0.0;
  double h = 1.0;
  bool periodic = false;
  std::vector<double> samples;

  std::size_t size() const { return samples.size(); }
  double x(std::size_t i) const { return x0 + h * static_cast<double>(i); }
  double length() const {
    return h * static_cast<double>(periodic ? size() : size() - 1);
  }

  void validate() const;
};

// Symmetric grid on [-L, L] (periodic: L excluded, n samples; otherwise
// n samples inclusive of both ends).
GridState make_grid(double L, std::size_t n, bool periodic);

// Sample a field at grid nodes; crest nodes get the side-averaged value.
GridState sample_field(const AnalyticField& field, double t, double L,
                       std::size_t n, bool periodic);

// CSV with header "x,value", 17 significant digits, LF line endings.
void write_csv(const std::string& path, const GridState& g);

// JSON round-trip of the full grid state, bit-exact on doubles.
std::string grid_to_json(const GridState& g);
GridState grid_from_json(const std::string& text);
void write_grid_json(const std::string& path, const GridState& g);
GridState read_grid_json(const std::string& path);

// Atomic file write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace pklab
