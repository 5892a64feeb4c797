#include "trichar/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace trichar {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr uint32_t kMaxQ = 1024;  // table-driven arithmetic only

std::vector<uint16_t> poly_mul_mod(uint32_t p, const std::vector<uint16_t>& mod,
                                   const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
  uint32_t m = static_cast<uint32_t>(mod.size()) - 1;
  std::vector<uint32_t> prod(2 * m - 1, 0);
  for (uint32_t i = 0; i < m; ++i)
    for (uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  // reduce by the monic modulus
  for (uint32_t k = 2 * m - 2; k >= m && k < prod.size(); --k) {
    uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (uint32_t i = 0; i < m; ++i) {
      uint32_t t = (c * mod[i]) % p;
      prod[k - m + i] = (prod[k - m + i] + p - t) % p;
    }
  }
  std::vector<uint16_t> out(m);
  for (uint32_t i = 0; i < m; ++i) out[i] = static_cast<uint16_t>(prod[i]);
  return out;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint16_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw validation_error("field characteristic must be prime, got " + std::to_string(p));
  if (m == 0) throw validation_error("field extension degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) q *= p;
  if (q > kMaxQ) throw capability_error("field size " + std::to_string(q) + " exceeds the supported bound");
  q_ = static_cast<uint32_t>(q);

  if (m == 1 && modulus_.empty()) modulus_ = {0, 1};  // x, a harmless placeholder
  if (modulus_.size() != m + 1 || modulus_[m] != 1)
    throw validation_error("field modulus must be monic of degree m");
  for (uint16_t c : modulus_)
    if (c >= p) throw validation_error("field modulus coefficients must lie in [0, p)");

  auto decode = [&](uint16_t code) {
    std::vector<uint16_t> v(m_);
    for (uint32_t i = 0; i < m_; ++i) {
      v[i] = code % p_;
      code = static_cast<uint16_t>(code / p_);
    }
    return v;
  };
  auto encode = [&](const std::vector<uint16_t>& v) {
    uint32_t code = 0;
    for (uint32_t i = m_; i-- > 0;) code = code * p_ + v[i];
    return static_cast<uint16_t>(code);
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (uint32_t a = 0; a < q_; ++a) {
    auto va = decode(static_cast<uint16_t>(a));
    std::vector<uint16_t> vn(m_);
    for (uint32_t i = 0; i < m_; ++i) vn[i] = static_cast<uint16_t>((p_ - va[i]) % p_);
    neg_[a] = encode(vn);
    for (uint32_t b = 0; b < q_; ++b) {
      auto vb = decode(static_cast<uint16_t>(b));
      std::vector<uint16_t> vs(m_);
      for (uint32_t i = 0; i < m_; ++i) vs[i] = static_cast<uint16_t>((va[i] + vb[i]) % p_);
      add_[a * q_ + b] = encode(vs);
      mul_[a * q_ + b] = encode(poly_mul_mod(p_, modulus_, va, vb));
    }
  }

  // Irreducibility check doubles as an inverse-table builder: every nonzero
  // element must have an inverse, which fails exactly when the modulus has a
  // proper factor acting as a zero divisor.
  for (uint32_t a = 1; a < q_; ++a) {
    for (uint32_t b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<uint16_t>(b);
        break;
      }
    }
    if (inv_[a] == 0)
      throw validation_error("field modulus is reducible: element code " + std::to_string(a) +
                             " has no inverse");
  }

  trace_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    uint16_t acc = 0;
    uint16_t cur = static_cast<uint16_t>(a);
    for (uint32_t i = 0; i < m_; ++i) {
      acc = add(acc, cur);
      cur = pow(cur, p_);
    }
    if (acc >= p_) throw consistency_error("trace value outside the prime subfield");
    trace_[a] = acc;
  }

  for (uint32_t a = 2; a < q_; ++a) {
    uint32_t ord = 1;
    uint16_t cur = static_cast<uint16_t>(a);
    while (cur != 1) {
      cur = mul(cur, static_cast<uint16_t>(a));
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = static_cast<uint16_t>(a);
      break;
    }
  }
  if (q_ == 2) primitive_ = 1;
}

uint16_t FieldSpec::inv(uint16_t a) const {
  if (a == 0) throw domain_error("inversion of zero in F_" + std::to_string(q_));
  return inv_[a];
}

uint16_t FieldSpec::pow(uint16_t a, uint64_t e) const {
  uint16_t result = 1;
  uint16_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<uint16_t> FieldSpec::to_coords(uint16_t a) const {
  std::vector<uint16_t> v(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    v[i] = a % p_;
    a = static_cast<uint16_t>(a / p_);
  }
  return v;
}

uint16_t FieldSpec::from_coords(const std::vector<uint16_t>& coords) const {
  if (coords.size() != m_) throw usage_error("coordinate count must equal the extension degree");
  uint32_t code = 0;
  for (uint32_t i = m_; i-- > 0;) {
    if (coords[i] >= p_) throw usage_error("field coordinates must lie in [0, p)");
    code = code * p_ + coords[i];
  }
  return static_cast<uint16_t>(code);
}

std::shared_ptr<const FieldSpec> FieldSpec::prime_field(uint32_t p) {
  return std::make_shared<const FieldSpec>(p, 1, std::vector<uint16_t>{});
}

std::shared_ptr<const FieldSpec> FieldSpec::make(uint32_t q) {
  static std::map<uint32_t, std::weak_ptr<const FieldSpec>> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find(q);
  if (it != cache.end())
    if (auto sp = it->second.lock()) return sp;

  std::shared_ptr<const FieldSpec> F;
  if (is_prime(q)) {
    F = prime_field(q);
  } else {
    // Built-in moduli chosen so that the class of x generates F_q^*.
    switch (q) {
      case 4:  F = std::make_shared<const FieldSpec>(2u, 2u, std::vector<uint16_t>{1, 1, 1}); break;
      case 8:  F = std::make_shared<const FieldSpec>(2u, 3u, std::vector<uint16_t>{1, 1, 0, 1}); break;
      case 9:  F = std::make_shared<const FieldSpec>(3u, 2u, std::vector<uint16_t>{2, 2, 1}); break;
      case 16: F = std::make_shared<const FieldSpec>(2u, 4u, std::vector<uint16_t>{1, 1, 0, 0, 1}); break;
      case 25: F = std::make_shared<const FieldSpec>(5u, 2u, std::vector<uint16_t>{2, 4, 1}); break;
      case 27: F = std::make_shared<const FieldSpec>(3u, 3u, std::vector<uint16_t>{1, 2, 0, 1}); break;
      default:
        throw capability_error("q = " + std::to_string(q) +
                               " is not prime and has no built-in modulus (supported: 4, 8, 9, 16, 25, 27)");
    }
  }
  cache[q] = F;
  return F;
}

uint32_t additive_character_exponent(const FieldSpec& F, uint16_t t, uint32_t n) {
  if (n % F.p() != 0) throw usage_error("ambient cyclotomic order must be divisible by p");
  return (n / F.p()) * F.trace(t) % n;
}

Cyclotomic additive_character(const FieldSpec& F, uint16_t t, uint32_t n) {
  return Cyclotomic::zeta_power(n, additive_character_exponent(F, t, n));
}

}  // namespace trichar
