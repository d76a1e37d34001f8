#pragma once

#include <complex>
#include <vector>

#include "peakonlab/grid.hpp"

namespace pklab {

// Real-to-complex spectrum of a periodic grid (length n/2 + 1 bins,
// unnormalized FFTW convention).
std::vector<std::complex<double>> fft_forward(const GridState& g);

// Inverse of fft_forward, including the 1/n normalization.
std::vector<double> fft_inverse(std::vector<std::complex<double>> spectrum,
                                std::size_t n);

// Angular wavenumber of bin k for period length L = n h.
double fft_wavenumber(std::size_t k, std::size_t n, double h);

// Spectral d^order/dx^order on a periodic grid.
GridState spectral_derivative(const GridState& g, int order);

// 4th-order central difference derivative (periodic wrap or one-sided
// 4th-order stencils at open boundaries).
GridState central4_derivative(const GridState& g);

}  // namespace pklab
