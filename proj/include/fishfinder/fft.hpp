#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fishfinder {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// Full complex DFT of arbitrary length via Bluestein's chirp-z reduction
// to a power-of-two convolution. The per-length chirp tables are cached,
// so repeated transforms of one length (the common case here) cost a
// single forward/inverse FFT pair each.
std::vector<std::complex<double>> dft(std::span<const double> x);

// |X_k| for k = 0..N-1
std::vector<double> dft_magnitudes(std::span<const double> x);

}  // namespace fishfinder
