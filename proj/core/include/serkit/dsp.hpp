// Copyright 2026 The serkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SERKIT_DSP_HPP
#define SERKIT_DSP_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace ser {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n);

/// Unnormalized forward DFT X[k] = sum_t x[t] exp(-2*pi*i*k*t/n) via
/// iterative radix-2 decimation in time. n must be a power of two and
/// x is zero-padded to n. Throws std::invalid_argument otherwise.
std::vector<Complex> fft_real(const std::vector<double>& x, std::size_t n);

/// In-place complex FFT of a power-of-two-sized buffer.
void fft_inplace(std::vector<Complex>& x);

/// Inverse FFT with 1/n normalization, so ifft(fft(x)) == x.
std::vector<Complex> ifft(std::vector<Complex> x);

/// Periodic Hann window, 0.5 - 0.5*cos(2*pi*i/n). Sums to exactly 1
/// across 50%-overlapped shifts, which the overlap-add resynthesis in
/// the cleaning chain relies on.
std::vector<double> hann_window(std::size_t n);

/// Orthonormal DCT-II of x, keeping the first n_out coefficients.
std::vector<double> dct2(const std::vector<double>& x, std::size_t n_out);

/// Orthonormal DCT-III (inverse of dct2 when no coefficients were dropped).
std::vector<double> dct3(const std::vector<double>& c, std::size_t n_out);

/// HTK mel scale: 2595 * log10(1 + f/700).
double hz_to_mel(double hz);
double mel_to_hz(double mel);

}  // namespace ser

#endif  // SERKIT_DSP_HPP
