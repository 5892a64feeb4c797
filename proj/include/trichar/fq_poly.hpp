#pragma once

#include <cstdint>
#include <vector>

#include "trichar/finite_field.hpp"

namespace trichar {

/// Dense polynomials over F_q, little-endian coefficient codes. Only the
/// desk-scale operations the idempotent construction needs.
namespace fqpoly {

using Poly = std::vector<uint16_t>;

Poly trim(Poly a);
size_t degree(const Poly& a);  // degree of 0 is 0 by convention here
bool is_zero(const Poly& a);
Poly add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly mul(const FieldSpec& F, const Poly& a, const Poly& b);
/// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly mod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly make_monic(const FieldSpec& F, const Poly& a);

/// Inverse of a modulo f (gcd(a, f) = 1), via the extended Euclidean scheme.
Poly inverse_mod(const FieldSpec& F, const Poly& a, const Poly& f);

/// Irreducibility by exhaustive trial division with monic divisors of degree
/// up to deg/2. Fine for desk-scale degrees.
bool is_irreducible(const FieldSpec& F, const Poly& a);

/// Factors a monic squarefree polynomial into monic irreducibles by trial
/// division with monic divisors of increasing degree. Deterministic order:
/// factors sorted by (degree, coefficient codes).
std::vector<Poly> factor_monic(const FieldSpec& F, Poly a);

}  // namespace fqpoly

}  // namespace trichar
