#include "fishfinder/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace fishfinder {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct ChirpTables {
  std::vector<std::complex<double>> chirp;      // exp(-i*pi*k^2/n), k < n
  std::vector<std::complex<double>> kernel_fft; // FFT of the padded conjugate chirp
  std::size_t m = 0;
};

// Chirp tables per input length; sessions share a length, so this map
// stays tiny.
const ChirpTables& chirp_tables_for(std::size_t n) {
  static std::map<std::size_t, ChirpTables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ChirpTables t;
  t.m = next_pow2(2 * n - 1);
  t.chirp.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the angle argument small for large n
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle = kPi * static_cast<double>(k2) / static_cast<double>(n);
    t.chirp[k] = {std::cos(angle), -std::sin(angle)};
  }
  t.kernel_fft.assign(t.m, {0.0, 0.0});
  t.kernel_fft[0] = std::conj(t.chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    t.kernel_fft[k] = std::conj(t.chirp[k]);
    t.kernel_fft[t.m - k] = std::conj(t.chirp[k]);
  }
  fft_pow2(t.kernel_fft, false);
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }

  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::complex<double>& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> dft(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  if (n == 1) return {std::complex<double>(x[0], 0.0)};

  if ((n & (n - 1)) == 0) {
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = {x[i], 0.0};
    fft_pow2(a, false);
    return a;
  }

  const ChirpTables& t = chirp_tables_for(n);
  std::vector<std::complex<double>> a(t.m, {0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * t.chirp[k];
  fft_pow2(a, false);
  for (std::size_t k = 0; k < t.m; ++k) a[k] *= t.kernel_fft[k];
  fft_pow2(a, true);

  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * t.chirp[k];
  return out;
}

std::vector<double> dft_magnitudes(std::span<const double> x) {
  const auto spectrum = dft(x);
  std::vector<double> mag(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) mag[i] = std::abs(spectrum[i]);
  return mag;
}

}  // namespace fishfinder
