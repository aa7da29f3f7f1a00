// Copyright 2026 The tgcap Authors
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

#ifndef TGCAP_COMMON_HPP_
#define TGCAP_COMMON_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgcap {

// Error taxonomy. The CLI maps these onto process exit codes:
// usage/config -> 1, data/format -> 2, numeric -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Incompatible tensor shapes.
struct DimensionError : Error {
  using Error::Error;
};
// A precondition of an operation was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};
// Inconsistent or missing data (datasets, vocabularies, token ids).
struct DataError : Error {
  using Error::Error;
};
// Malformed file contents (bad magic, truncation, version mismatch).
struct FormatError : Error {
  using Error::Error;
};
// Invalid configuration values.
struct ConfigError : Error {
  using Error::Error;
};
// Non-finite values where finite ones are required.
struct NumericError : Error {
  using Error::Error;
};

// splitmix64 step; used to derive independent RNG streams from one seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic pseudo-random generator. Every draw is defined in terms of
// integer arithmetic and explicit float construction, so sequences are
// identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so that small seeds do not produce correlated first draws.
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller on pinned uniforms.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  // Uniform index in [0, n). Multiply-shift; bias is < n / 2^64.
  std::size_t index(std::size_t n) {
    if (n == 0) throw ContractError("Rng::index: n must be positive");
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::size_t>(wide >> 64);
  }

  // Derive an independent generator for a named stream.
  Rng fork(std::uint64_t stream) {
    std::uint64_t s = state_ ^ (0x632be59bd9b4e019ULL * (stream + 1));
    return Rng(splitmix64(s));
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// In-place seeded Fisher-Yates; pinned so shuffles are reproducible.
template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  if (v.size() < 2) return;
  for (std::size_t i = v.size() - 1; i > 0; --i) {
    const std::size_t j = rng.index(i + 1);
    std::swap(v[i], v[j]);
  }
}

}  // namespace tgcap

#endif  // TGCAP_COMMON_HPP_
