// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "ecadmm/bigint.hpp"

namespace ecadmm {

namespace detail {
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic random stream. All randomness in the toolkit flows through
/// explicitly passed RngStream instances; substreams are derived by mixing a
/// tag into the parent seed, so independent components never share draws.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) : engine_(seed), seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t u64() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampled, unbiased.
  uint64_t below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RngStream::below: bound 0");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Uniform integer in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [lo, hi).
  double real(double lo, double hi) {
    const double unit = static_cast<double>(u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Uniform residue in [0, q).
  BigInt below_modulus(const Modulus& mod) {
    const size_t words = (mod.bits + 63) / 64;
    std::vector<uint64_t> buf(words);
    BigInt x;
    while (true) {
      for (auto& w : buf) w = u64();
      mpz_import(x.get_mpz_t(), words, -1, 8, 0, 0, buf.data());
      mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), mod.bits);
      if (mod.power_of_two || x < mod.q) break;
    }
    if (mod.power_of_two) mod.reduce(x);
    return x;
  }

  /// Derive an independent substream labelled by a tag.
  RngStream derive(uint64_t tag) const {
    return RngStream(detail::splitmix64(seed_ ^ detail::splitmix64(tag)));
  }

  RngStream derive(std::string_view tag) const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) h = (h ^ static_cast<uint8_t>(c)) * 0x100000001b3ULL;
    return derive(h);
  }

 private:
  std::mt19937_64 engine_;
  uint64_t seed_;
};

}  // namespace ecadmm
