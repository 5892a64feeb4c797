#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trichar/rational.hpp"

namespace trichar {

/// Shared per-order data for Q(zeta_n): the n-th cyclotomic polynomial and the
/// reduced power basis images of zeta^k. Instances are immutable and cached
/// for the lifetime of the process, so Cyclotomic values can be shared freely
/// across threads.
class CycField {
 public:
  uint32_t order() const { return n_; }
  uint32_t degree() const { return phi_; }

  /// Coefficients of Phi_n, little endian, length degree()+1, monic.
  const std::vector<Int>& poly() const { return phi_poly_; }

  /// Coordinates of zeta^k in the power basis, k in [0, max(n, 2*degree()-1)).
  const std::vector<Int>& power(uint32_t k) const { return powers_[k]; }

  static const CycField& get(uint32_t n);

 private:
  explicit CycField(uint32_t n);
  uint32_t n_, phi_;
  std::vector<Int> phi_poly_;
  std::vector<std::vector<Int>> powers_;
};

/// n-th cyclotomic polynomial over Z (little endian), by recursive division of
/// x^n - 1 by the lower-order cyclotomic polynomials.
std::vector<Int> cyclotomic_polynomial(uint32_t n);

uint32_t euler_phi(uint32_t n);

/// Exact element of Q(zeta_n), stored canonically as phi(n) coordinates in the
/// power basis 1, zeta, ..., zeta^{phi(n)-1}. Equality is coordinate-wise.
/// Binary operations lift operands to a common order when one order divides
/// the other and refuse otherwise.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  explicit Cyclotomic(uint32_t order);
  Cyclotomic(uint32_t order, std::vector<Rational> coords);

  static Cyclotomic from_rational(const Rational& r, uint32_t order);
  /// zeta_n^k.
  static Cyclotomic zeta_power(uint32_t order, int64_t k);

  uint32_t order() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  /// All coordinates integral, i.e. the value lies in Z[zeta_n].
  bool is_integral() const;

  /// Image in Q(zeta_m); requires order() | m.
  Cyclotomic lifted(uint32_t m) const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Compact rendering, e.g. "0", "-1/2", "2+z6", "1-3*z12^5".
  std::string str() const;

 private:
  void match_order(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const;
  uint32_t n_;
  std::vector<Rational> c_;  // length phi(n_)
};

/// Sum of integer multiples of root powers: sum_k counts[k] * zeta_n^k,
/// counts indexed by exponent in [0, n). The workhorse behind induced
/// character values, which are root-of-unity tallies up to a rational factor.
Cyclotomic root_combination(uint32_t order, const std::vector<Int>& counts);

}  // namespace trichar
