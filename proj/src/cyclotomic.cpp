#include "trichar/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "trichar/errors.hpp"

namespace trichar {

uint32_t euler_phi(uint32_t n) {
  uint32_t result = n;
  uint32_t m = n;
  for (uint32_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials; remainder must vanish.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
  size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<Int> quot(dn - dd + 1);
  for (size_t k = dn - dd + 1; k-- > 0;) {
    Int c = num[k + dd] / den[dd];
    quot[k] = c;
    for (size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (const Int& c : num)
    if (c != 0) throw consistency_error("cyclotomic polynomial division left a remainder");
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(uint32_t n) {
  static std::map<uint32_t, std::vector<Int>> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<Int>&(uint32_t)> phi = [&](uint32_t m) -> const std::vector<Int>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<Int> poly(m + 1);  // x^m - 1
    poly[0] = -1;
    poly[m] = 1;
    for (uint32_t d = 1; d < m; ++d)
      if (m % d == 0) poly = exact_div(std::move(poly), phi(d));
    return cache.emplace(m, std::move(poly)).first->second;
  };
  return phi(n);
}

CycField::CycField(uint32_t n) : n_(n), phi_(euler_phi(n)) {
  if (n == 0) throw usage_error("cyclotomic order must be positive");
  phi_poly_ = cyclotomic_polynomial(n);
  uint32_t count = std::max<uint32_t>(n, 2 * phi_ - 1);
  powers_.assign(count, std::vector<Int>(phi_));
  // x^k mod Phi_n, iteratively: x^{k+1} = shift, then cancel the top term.
  std::vector<Int> cur(phi_);
  cur[0] = 1;
  for (uint32_t k = 0; k < count; ++k) {
    powers_[k] = cur;
    Int top = cur[phi_ - 1];
    for (uint32_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (uint32_t i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_[i];  // monic
  }
}

const CycField& CycField::get(uint32_t n) {
  static std::map<uint32_t, std::unique_ptr<CycField>> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto& slot = cache[n];
  if (!slot) slot.reset(new CycField(n));
  return *slot;
}

Cyclotomic::Cyclotomic(uint32_t order) : n_(order), c_(CycField::get(order).degree()) {}

Cyclotomic::Cyclotomic(uint32_t order, std::vector<Rational> coords)
    : n_(order), c_(std::move(coords)) {
  if (c_.size() != CycField::get(order).degree())
    throw usage_error("cyclotomic coordinate count must equal phi(order)");
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, uint32_t order) {
  Cyclotomic z(order);
  z.c_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::zeta_power(uint32_t order, int64_t k) {
  const CycField& f = CycField::get(order);
  int64_t kk = k % static_cast<int64_t>(order);
  if (kk < 0) kk += order;
  Cyclotomic z(order);
  const auto& row = f.power(static_cast<uint32_t>(kk));
  for (uint32_t i = 0; i < f.degree(); ++i) z.c_[i] = Rational(row[i]);
  return z;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw domain_error("cyclotomic value is not rational: " + str());
  return c_[0];
}

bool Cyclotomic::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

Cyclotomic Cyclotomic::lifted(uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw usage_error("cyclotomic lift requires the source order to divide the target");
  const CycField& f = CycField::get(m);
  Cyclotomic out(m);
  uint32_t step = m / n_;
  for (uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& row = f.power(i * step);  // i*step < m since i < phi(n)
    for (uint32_t j = 0; j < f.degree(); ++j) out.c_[j] += c_[i] * Rational(row[j]);
  }
  return out;
}

void Cyclotomic::match_order(const Cyclotomic& o, Cyclotomic& a, Cyclotomic& b) const {
  if (n_ == o.n_) {
    a = *this;
    b = o;
    return;
  }
  if (o.n_ % n_ == 0) {
    a = lifted(o.n_);
    b = o;
    return;
  }
  if (n_ % o.n_ == 0) {
    a = *this;
    b = o.lifted(n_);
    return;
  }
  throw usage_error("cyclotomic orders " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                    " are incompatible (neither divides the other)");
}

Cyclotomic Cyclotomic::conj() const {
  const CycField& f = CycField::get(n_);
  Cyclotomic out(n_);
  for (uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const auto& row = f.power(i == 0 ? 0 : n_ - i);  // zeta^i -> zeta^{n-i}
    for (uint32_t j = 0; j < f.degree(); ++j) out.c_[j] += c_[i] * Rational(row[j]);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic a, b;
  match_order(o, a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  Cyclotomic a, b;
  match_order(o, a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  Cyclotomic a, b;
  match_order(o, a, b);
  const CycField& f = CycField::get(a.n_);
  uint32_t phi = f.degree();
  std::vector<Rational> conv(2 * phi - 1);
  for (uint32_t i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (uint32_t j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic out(a.n_);
  for (uint32_t k = 0; k < conv.size(); ++k) {
    if (conv[k].is_zero()) continue;
    if (k < phi) {
      out.c_[k] += conv[k];
    } else {
      const auto& row = f.power(k);
      for (uint32_t j = 0; j < phi; ++j) out.c_[j] += conv[k] * Rational(row[j]);
    }
  }
  return *this = std::move(out);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw domain_error("cyclotomic division by zero");
  const CycField& f = CycField::get(n_);
  uint32_t phi = f.degree();
  // Solve (mult-by-this) x = 1 by Gaussian elimination over Q.
  // Column j of the multiplication matrix is this * zeta^j.
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (uint32_t j = 0; j < phi; ++j) {
    Cyclotomic col = *this * zeta_power(n_, j);
    for (uint32_t i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = Rational(1);
  for (uint32_t col = 0, row = 0; col < phi && row < phi; ++col) {
    uint32_t piv = row;
    while (piv < phi && m[piv][col].is_zero()) ++piv;
    if (piv == phi) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (uint32_t j = col; j <= phi; ++j) m[row][j] *= inv;
    for (uint32_t i = 0; i < phi; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational factor = m[i][col];
      for (uint32_t j = col; j <= phi; ++j) m[i][j] -= factor * m[row][j];
    }
    ++row;
  }
  Cyclotomic out(n_);
  for (uint32_t i = 0; i < phi; ++i) out.c_[i] = m[i][phi];
  if (!((*this * out).is_rational()) || (*this * out).rational_value() != Rational(1))
    throw consistency_error("cyclotomic inversion failed");
  return out;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  Cyclotomic a, b;
  match_order(o, a, b);
  return *this = a * b.inverse();
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (b.n_ % a.n_ == 0) return a.lifted(b.n_).c_ == b.c_;
  if (a.n_ % b.n_ == 0) return a.c_ == b.lifted(a.n_).c_;
  throw usage_error("comparing cyclotomics of incompatible orders");
}

std::string Cyclotomic::str() const {
  std::string out;
  for (uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational r = c_[i];
    bool neg = r.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (neg) r = -r;
    std::string mag = r.str();
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += "z" + std::to_string(n_);
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic root_combination(uint32_t order, const std::vector<Int>& counts) {
  const CycField& f = CycField::get(order);
  std::vector<Int> acc(f.degree());
  for (uint32_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto& row = f.power(k % order);
    for (uint32_t j = 0; j < f.degree(); ++j) acc[j] += counts[k] * row[j];
  }
  std::vector<Rational> coords(f.degree());
  for (uint32_t j = 0; j < f.degree(); ++j) coords[j] = Rational(acc[j]);
  return Cyclotomic(order, std::move(coords));
}

}  // namespace trichar
