#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace steklov {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

using Complex = std::complex<double>;

/// Wrap an angle into [0, 2pi).
inline double wrap_angle(double t) {
  double w = std::fmod(t, two_pi);
  return w < 0 ? w + two_pi : w;
}

/// Wrap a difference into (-pi, pi].
inline double wrap_difference(double d) {
  double w = std::fmod(d, two_pi);
  if (w > std::numbers::pi) w -= two_pi;
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

inline std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need n >= 2");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

/// n uniform points on [0, 2pi), endpoint excluded.
inline std::vector<double> periodic_grid(int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = two_pi * i / n;
  return v;
}

namespace threads {

/// Global worker count for batch evaluations. 0 selects hardware concurrency.
inline int& requested_count() {
  static int n = 0;
  return n;
}

inline void set_count(int n) { requested_count() = n; }

inline int effective_count() {
  int n = requested_count();
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

}  // namespace threads

/// Run fn(i) for i in [0, n). Work is split into contiguous chunks, one per
/// worker, so per-index results are written independently and the output is
/// deterministic regardless of thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = threads::effective_count();
  if (workers <= 1 || n < 32) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Format a double with 17 significant digits (round-trip safe), fixed layout
/// for the CSV outputs.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace steklov
