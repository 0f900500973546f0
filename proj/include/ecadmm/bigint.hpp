// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecadmm {

using BigInt = mpz_class;

/// Modulus with a fast reduction path for powers of two.
struct Modulus {
  BigInt q;
  mp_bitcnt_t bits = 0;    // bit length of q
  bool power_of_two = false;

  Modulus() = default;

  explicit Modulus(BigInt modulus) : q(std::move(modulus)) {
    if (q <= 1) throw std::invalid_argument("modulus must exceed 1");
    bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    power_of_two = mpz_popcount(q.get_mpz_t()) == 1;
  }

  void reduce(BigInt& x) const {
    if (power_of_two) {
      mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits - 1);
    } else {
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    }
  }

  BigInt reduced(BigInt x) const {
    reduce(x);
    return x;
  }

  /// Centered representative in (-q/2, q/2].
  BigInt centered(const BigInt& residue) const {
    BigInt half = q >> 1;
    if (residue > half) return residue - q;
    return residue;
  }
};

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

/// Big-endian byte string, minimal length (empty for zero).
inline std::vector<uint8_t> bigint_to_bytes(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("negative value has no byte encoding");
  if (x == 0) return {};
  size_t count = 0;
  std::vector<uint8_t> out((mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, x.get_mpz_t());
  out.resize(count);
  return out;
}

inline BigInt bigint_from_bytes(const uint8_t* data, size_t len) {
  BigInt out;
  if (len > 0) mpz_import(out.get_mpz_t(), len, 1, 1, 1, 0, data);
  return out;
}

inline BigInt bigint_from_bytes(const std::vector<uint8_t>& bytes) {
  return bigint_from_bytes(bytes.data(), bytes.size());
}

}  // namespace ecadmm
