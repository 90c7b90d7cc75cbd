// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ccndtn {

// splitmix64. Fully specified output sequence, so simulation results do not
// depend on the standard library's distribution implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n). Modulo bias is irrelevant at the scales
  // used here and keeps the sequence portable.
  std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  std::array<std::uint8_t, 8> next_bytes8() {
    std::uint64_t v = next();
    std::array<std::uint8_t, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
    return out;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::uint64_t seed, const void* data, std::size_t len) {
  std::uint64_t h = 0xCBF29CE484222325ULL ^ seed;
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Synthetic content bytes: a splitmix64 stream keyed by (seed, key).
inline std::vector<std::uint8_t> deterministic_payload(std::uint64_t seed,
                                                       const std::string& key,
                                                       std::size_t size) {
  SplitMix64 rng(fnv1a64(seed, key.data(), key.size()));
  std::vector<std::uint8_t> out;
  out.reserve(size);
  while (out.size() < size) {
    std::uint64_t v = rng.next();
    for (int i = 0; i < 8 && out.size() < size; ++i) {
      out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }
  return out;
}

}  // namespace ccndtn
