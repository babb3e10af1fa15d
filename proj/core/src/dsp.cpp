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

#include "serkit/dsp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ser {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_inplace(std::vector<Complex>& x) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fft: size " + std::to_string(n) + " is not a power of two");
  }
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const Complex wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = x[i + k];
        const Complex v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<Complex> fft_real(const std::vector<double>& x, std::size_t n) {
  if (!is_power_of_two(n)) {
    throw std::invalid_argument("fft_real: size " + std::to_string(n) + " is not a power of two");
  }
  if (x.size() > n) {
    throw std::invalid_argument("fft_real: input longer than transform size");
  }
  std::vector<Complex> buf(n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < x.size(); ++i) buf[i] = Complex(x[i], 0.0);
  fft_inplace(buf);
  return buf;
}

std::vector<Complex> ifft(std::vector<Complex> x) {
  const std::size_t n = x.size();
  for (auto& v : x) v = std::conj(v);
  fft_inplace(x);
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& v : x) v = std::conj(v) * inv;
  return x;
}

std::vector<double> hann_window(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
  }
  return w;
}

std::vector<double> dct2(const std::vector<double>& x, std::size_t n_out) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dct2: empty input");
  if (n_out > n) throw std::invalid_argument("dct2: more outputs than inputs");
  std::vector<double> c(n_out, 0.0);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double sk = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += x[t] * std::cos(kPi * static_cast<double>(k) * (2.0 * static_cast<double>(t) + 1.0) /
                             (2.0 * static_cast<double>(n)));
    }
    c[k] = acc * (k == 0 ? s0 : sk);
  }
  return c;
}

std::vector<double> dct3(const std::vector<double>& c, std::size_t n_out) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("dct3: empty input");
  if (n_out < n) throw std::invalid_argument("dct3: fewer outputs than coefficients");
  std::vector<double> x(n_out, 0.0);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n_out));
  const double sk = std::sqrt(2.0 / static_cast<double>(n_out));
  for (std::size_t t = 0; t < n_out; ++t) {
    double acc = c[0] * s0;
    for (std::size_t k = 1; k < n; ++k) {
      acc += sk * c[k] *
             std::cos(kPi * static_cast<double>(k) * (2.0 * static_cast<double>(t) + 1.0) /
                      (2.0 * static_cast<double>(n_out)));
    }
    x[t] = acc;
  }
  return x;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

}  // namespace ser
