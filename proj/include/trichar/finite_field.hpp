#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "trichar/cyclotomic.hpp"
#include "trichar/errors.hpp"

namespace trichar {

/// F_q = F_p[x]/(modulus), q = p^m. Elements travel as integer codes in
/// [0, q): the code of an element with polynomial-basis coordinates
/// (c_0, ..., c_{m-1}) is sum c_i p^i. All arithmetic is table driven, so a
/// FieldSpec is immutable and cheap to share after construction.
class FieldSpec {
 public:
  /// modulus: little-endian coefficients in [0,p), length m+1, monic,
  /// irreducible over F_p (verified by exhaustive trial division).
  FieldSpec(uint32_t p, uint32_t m, std::vector<uint16_t> modulus);

  static std::shared_ptr<const FieldSpec> prime_field(uint32_t p);
  /// Prime q -> prime field; q in {4,8,9,16,25,27} -> built-in modulus whose
  /// root generates F_q^*; anything else -> capability_error.
  static std::shared_ptr<const FieldSpec> make(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  const std::vector<uint16_t>& modulus() const { return modulus_; }

  uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
  uint16_t sub(uint16_t a, uint16_t b) const { return add_[a * q_ + neg_[b]]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
  uint16_t neg(uint16_t a) const { return neg_[a]; }
  uint16_t inv(uint16_t a) const;
  uint16_t pow(uint16_t a, uint64_t e) const;

  /// Absolute trace Tr(a) = a + a^p + ... + a^{p^{m-1}}, as a residue in [0,p).
  uint16_t trace(uint16_t a) const { return trace_[a]; }

  /// A generator of F_q^* (the least one in code order).
  uint16_t primitive_element() const { return primitive_; }

  std::vector<uint16_t> to_coords(uint16_t a) const;
  uint16_t from_coords(const std::vector<uint16_t>& coords) const;

 private:
  uint32_t p_, m_, q_;
  std::vector<uint16_t> modulus_;
  std::vector<uint16_t> add_, mul_, neg_, inv_, trace_;
  uint16_t primitive_ = 0;
};

bool is_prime(uint32_t n);

/// Exponent e with epsilon(t) = zeta_n^e for the fixed nontrivial additive
/// character epsilon(t) = zeta_p^{Tr(t)}. Requires p | n.
uint32_t additive_character_exponent(const FieldSpec& F, uint16_t t, uint32_t n);

Cyclotomic additive_character(const FieldSpec& F, uint16_t t, uint32_t n);

}  // namespace trichar
