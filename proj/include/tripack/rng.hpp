// Copyright 2026 The tripack Authors
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

#ifndef TRIPACK_RNG_HPP_
#define TRIPACK_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace tripack {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

class Seed {
 public:
  constexpr Seed() = default;
  constexpr explicit Seed(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const noexcept { return value_; }

  // Child seeds are pure functions of (parent, tag, index).
  constexpr Seed derive(std::uint64_t tag, std::uint64_t index = 0) const noexcept {
    std::uint64_t h = mix64(value_ ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ (tag * 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (index + 0x3c6ef372fe94f82bULL));
    return Seed(h);
  }

  friend constexpr bool operator==(Seed, Seed) = default;

 private:
  std::uint64_t value_ = 0;
};

// Counter-based stream: draw i is mix64 of (key, i), so every draw is a pure
// function of the key and its position.
class Stream {
 public:
  constexpr explicit Stream(Seed key) noexcept : key_(mix64(key.value())) {}

  std::uint64_t next() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1].
  double uniform_positive() noexcept {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    __uint128_t product = static_cast<__uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<__uint128_t>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Number of failures before the next success of a Bernoulli(p) sequence.
  // Requires 0 < p < 1.
  std::uint64_t geometric_skip(double log_one_minus_p) noexcept {
    const double draw = std::floor(std::log(uniform_positive()) / log_one_minus_p);
    if (!(draw < 9.0e18)) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(draw);
  }

  template <class T>
  void shuffle(std::vector<T>& items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace tripack

#endif  // TRIPACK_RNG_HPP_
