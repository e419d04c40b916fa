#pragma once

#include <complex>
#include <vector>

#include "steklov/util.hpp"

namespace steklov {

/// Unnormalized forward DFT, FFTW sign convention: X_k = sum_j x_j e^{-2pi i jk/n}.
std::vector<Complex> fft(const std::vector<Complex>& x);

/// Inverse DFT normalized by 1/n, so ifft(fft(x)) == x.
std::vector<Complex> ifft(const std::vector<Complex>& x);

/// Fourier coefficients c_m of samples on the uniform grid y_j = 2pi j/n,
/// with u(y) ~ sum_m c_m e^{i m y}. Index m runs over [-n/2, n/2); entry k of
/// the result holds m = k - n/2.
std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples);

/// Lowest signed frequency stored in a coefficient vector of the given size.
inline int coefficient_min_frequency(std::size_t n) { return -static_cast<int>(n) / 2; }

/// Trigonometric interpolation: evaluate sum_m c_m e^{i m t} at one point.
Complex evaluate_fourier_series(const std::vector<Complex>& coeffs, double t);

/// Zero-padding upsample of periodic samples from n to factor*n points.
std::vector<Complex> fourier_upsample(const std::vector<Complex>& samples, int factor);

}  // namespace steklov
