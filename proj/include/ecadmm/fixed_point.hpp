// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ecadmm/bigint.hpp"

namespace ecadmm {

/// Fixed-point codec mapping reals onto Z_q by scaling and rounding.
///
/// Every value carries a scale exponent e: the residue encodes x * S^e where
/// S = s * sigma is the combined per-multiplication scale. Fresh encodes sit
/// at e = 1. No rescaling is performed; the modulus q = q0 * S^L absorbs the
/// full scale growth, which requires q0 > S and 2*B*S^L <= q.
class FpCodec {
 public:
  FpCodec(uint64_t plain_scale, uint64_t internal_scale, uint64_t base_modulus,
          unsigned levels, double range_bound)
      : s_(plain_scale),
        sigma_(internal_scale),
        q0_(base_modulus),
        levels_(levels),
        range_bound_(range_bound) {
    if (s_ < 1 || sigma_ < 1) throw std::invalid_argument("scales must be >= 1");
    if (levels_ < 1) throw std::invalid_argument("level count must be >= 1");
    if (range_bound_ <= 0) throw std::invalid_argument("range bound must be positive");
    scale_ = BigInt(s_) * BigInt(sigma_);
    if (BigInt(q0_) <= scale_) throw std::invalid_argument("base modulus q0 must exceed S");
    if (2.0 * range_bound_ > static_cast<double>(q0_))
      throw std::invalid_argument("overflow bound violated: 2*B*S^L > q");
    mod_ = Modulus(BigInt(q0_) * bigint_pow(scale_, levels_));
    scale_d_ = scale_.get_d();
  }

  /// Paper parameter set: s = 2^12, sigma = 2^11 (S = 2^23), q0 = 2^25,
  /// L = 16, values bounded by 100.
  static FpCodec paper_preset() {
    return FpCodec(uint64_t{1} << 12, uint64_t{1} << 11, uint64_t{1} << 25, 16, 100.0);
  }

  /// Small parameters for fast tests: S = 2^10, q0 = 2^12, L = 4, B = 10.
  static FpCodec test_preset() {
    return FpCodec(uint64_t{1} << 6, uint64_t{1} << 4, uint64_t{1} << 12, 4, 10.0);
  }

  uint64_t plain_scale() const { return s_; }
  uint64_t internal_scale() const { return sigma_; }
  uint64_t base_modulus() const { return q0_; }
  unsigned levels() const { return levels_; }
  double range_bound() const { return range_bound_; }
  const BigInt& scale() const { return scale_; }
  const Modulus& modulus() const { return mod_; }
  const BigInt& q() const { return mod_.q; }

  BigInt scale_pow(unsigned exp) const { return bigint_pow(scale_, exp); }

 private:
  uint64_t s_, sigma_, q0_;
  unsigned levels_;
  double range_bound_;
  BigInt scale_;
  double scale_d_ = 0;
  Modulus mod_;
};

/// One fixed-point value: residue in [0, q) plus its scale exponent.
struct FpValue {
  BigInt residue;
  unsigned scale_exp = 1;
};

/// round(S * x) mod q at scale exponent 1. Negative values map to the
/// centered representative q - round(S * |x|).
inline FpValue encode(const FpCodec& codec, double x) {
  if (!std::isfinite(x)) throw std::domain_error("encode: non-finite value");
  if (std::abs(x) > codec.range_bound())
    throw std::domain_error("encode: |x| exceeds range bound B");
  const double scaled = static_cast<double>(codec.scale().get_d()) * x;
  if (std::abs(scaled) >= 0x1.0p62)
    throw std::domain_error("encode: scaled value exceeds integer range");
  const int64_t rounded = std::llround(scaled);
  FpValue v;
  v.residue = codec.modulus().reduced(BigInt(rounded));
  v.scale_exp = 1;
  return v;
}

/// Centered representative divided by S^scale_exp.
inline double decode(const FpCodec& codec, const FpValue& v) {
  if (v.scale_exp < 1) throw std::domain_error("decode: scale exponent must be >= 1");
  const BigInt centered = codec.modulus().centered(v.residue);
  const BigInt denom = codec.scale_pow(v.scale_exp);
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), centered.get_mpz_t(), denom.get_mpz_t());
  return quot.get_d() + rem.get_d() / denom.get_d();
}

/// Modular addition of equal-scale values.
inline FpValue fp_add(const FpCodec& codec, const FpValue& a, const FpValue& b) {
  if (a.scale_exp != b.scale_exp)
    throw std::invalid_argument("fp_add: scale exponents differ");
  FpValue out;
  out.residue = codec.modulus().reduced(a.residue + b.residue);
  out.scale_exp = a.scale_exp;
  return out;
}

/// Modular product with an encoded constant; bumps the scale exponent by one.
inline FpValue fp_mul(const FpCodec& codec, const FpValue& constant, const FpValue& x) {
  if (constant.scale_exp != 1)
    throw std::invalid_argument("fp_mul: constants must be freshly encoded");
  FpValue out;
  out.residue = codec.modulus().reduced(constant.residue * x.residue);
  out.scale_exp = x.scale_exp + 1;
  return out;
}

struct BudgetReport {
  bool ok = false;
  std::string detail;
};

/// Checks that mult_depth successive scalings fit the modulus: the depth may
/// not exceed L and 2*B*S^mult_depth must stay within q.
inline BudgetReport budget_check(const FpCodec& codec, unsigned mult_depth) {
  BudgetReport report;
  if (mult_depth > codec.levels()) {
    report.ok = false;
    report.detail = "depth " + std::to_string(mult_depth) + " exceeds level count L=" +
                    std::to_string(codec.levels());
    return report;
  }
  // q / S^depth = q0 * S^(L-depth), exact division.
  BigInt headroom = codec.q() / codec.scale_pow(mult_depth);
  if (2.0 * codec.range_bound() > headroom.get_d()) {
    report.ok = false;
    report.detail = "2*B*S^depth exceeds q";
    return report;
  }
  report.ok = true;
  report.detail = "depth " + std::to_string(mult_depth) + " within budget (L=" +
                  std::to_string(codec.levels()) + ")";
  return report;
}

}  // namespace ecadmm
