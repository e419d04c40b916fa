#include "steklov/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace steklov {

namespace {

// FFTW plan creation is not thread-safe; execution of distinct plans is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Complex> transform(const std::vector<Complex>& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw std::invalid_argument("fft: empty input");
  std::vector<Complex> out(x.size());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(x.data())),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<Complex> fft(const std::vector<Complex>& x) { return transform(x, FFTW_FORWARD); }

std::vector<Complex> ifft(const std::vector<Complex>& x) {
  auto out = transform(x, FFTW_BACKWARD);
  const double inv = 1.0 / static_cast<double>(x.size());
  for (auto& v : out) v *= inv;
  return out;
}

std::vector<Complex> fourier_coefficients(const std::vector<Complex>& samples) {
  const int n = static_cast<int>(samples.size());
  auto spec = fft(samples);
  std::vector<Complex> coeffs(n);
  const int m0 = coefficient_min_frequency(n);
  for (int k = 0; k < n; ++k) {
    int m = m0 + k;
    int bin = m >= 0 ? m : m + n;
    coeffs[k] = spec[bin] / static_cast<double>(n);
  }
  return coeffs;
}

Complex evaluate_fourier_series(const std::vector<Complex>& coeffs, double t) {
  const int n = static_cast<int>(coeffs.size());
  const int m0 = coefficient_min_frequency(n);
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double m = m0 + k;
    acc += coeffs[k] * std::polar(1.0, m * t);
  }
  return acc;
}

std::vector<Complex> fourier_upsample(const std::vector<Complex>& samples, int factor) {
  if (factor < 1) throw std::invalid_argument("fourier_upsample: factor must be >= 1");
  if (factor == 1) return samples;
  const int n = static_cast<int>(samples.size());
  const int m = n * factor;
  auto spec = fft(samples);
  std::vector<Complex> padded(m, Complex(0.0, 0.0));
  // Nonnegative bins [0, n/2), negative bins (-n/2, 0); the shared Nyquist
  // bin n/2 is split evenly between +n/2 and -n/2.
  for (int k = 0; k < n / 2; ++k) padded[k] = spec[k];
  for (int k = n / 2 + 1; k < n; ++k) padded[m - n + k] = spec[k];
  if (n % 2 == 0) {
    padded[n / 2] = 0.5 * spec[n / 2];
    padded[m - n / 2] = 0.5 * spec[n / 2];
  }
  auto up = ifft(padded);
  for (auto& v : up) v *= static_cast<double>(factor);
  return up;
}

}  // namespace steklov
