#include "trichar/fq_poly.hpp"

#include <algorithm>

namespace trichar {
namespace fqpoly {

Poly trim(Poly a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
  return a;
}

size_t degree(const Poly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return i;
  return 0;
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint16_t c) { return c == 0; });
}

Poly add(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint16_t x = i < a.size() ? a[i] : 0;
    uint16_t y = i < b.size() ? b[i] : 0;
    out[i] = F.add(x, y);
  }
  return trim(std::move(out));
}

Poly sub(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    uint16_t x = i < a.size() ? a[i] : 0;
    uint16_t y = i < b.size() ? b[i] : 0;
    out[i] = F.sub(x, y);
  }
  return trim(std::move(out));
}

Poly mul(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {0};
  Poly out(degree(a) + degree(b) + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (is_zero(b)) throw domain_error("polynomial division by zero");
  Poly rem = trim(a);
  size_t db = degree(b);
  if (is_zero(rem) || degree(rem) < db) return {{0}, rem};
  uint16_t lead_inv = F.inv(b[db]);
  size_t da = degree(rem);
  Poly quot(da - db + 1, 0);
  for (size_t pos = da + 1; pos-- > db;) {
    uint16_t c = rem[pos];
    if (c == 0) continue;
    uint16_t f = F.mul(c, lead_inv);
    quot[pos - db] = f;
    for (size_t i = 0; i <= db; ++i)
      rem[pos - db + i] = F.sub(rem[pos - db + i], F.mul(f, b[i]));
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly mod(const FieldSpec& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly make_monic(const FieldSpec& F, const Poly& a) {
  Poly out = trim(a);
  uint16_t lead = out[degree(out)];
  if (lead == 0 || lead == 1) return out;
  uint16_t inv = F.inv(lead);
  for (auto& c : out) c = F.mul(c, inv);
  return out;
}

Poly inverse_mod(const FieldSpec& F, const Poly& a, const Poly& f) {
  // extended Euclid on (f, a mod f)
  Poly r0 = trim(f), r1 = mod(F, a, f);
  Poly t0 = {0}, t1 = {1};
  while (!is_zero(r1)) {
    auto [q, r2] = divmod(F, r0, r1);
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0 || r0[0] == 0)
    throw domain_error("polynomial is not invertible modulo f");
  uint16_t scale = F.inv(r0[0]);
  Poly out(t0.size());
  for (size_t i = 0; i < t0.size(); ++i) out[i] = F.mul(t0[i], scale);
  return mod(F, out, f);
}

namespace {

// Enumerates monic polynomials of exact degree deg in code order.
bool next_monic(const FieldSpec& F, Poly& candidate) {
  for (size_t i = 0; i + 1 < candidate.size(); ++i) {
    if (candidate[i] + 1u < F.q()) {
      ++candidate[i];
      return true;
    }
    candidate[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(const FieldSpec& F, const Poly& a) {
  size_t d = degree(a);
  if (d == 0) return false;
  if (d == 1) return true;
  for (size_t dd = 1; 2 * dd <= d; ++dd) {
    Poly cand(dd + 1, 0);
    cand[dd] = 1;
    do {
      if (is_zero(mod(F, a, cand))) return false;
    } while (next_monic(F, cand));
  }
  return true;
}

std::vector<Poly> factor_monic(const FieldSpec& F, Poly a) {
  std::vector<Poly> factors;
  a = make_monic(F, trim(std::move(a)));
  while (degree(a) > 0) {
    bool split = false;
    for (size_t dd = 1; 2 * dd <= degree(a) && !split; ++dd) {
      Poly cand(dd + 1, 0);
      cand[dd] = 1;
      do {
        auto [q, r] = divmod(F, a, cand);
        if (is_zero(r)) {
          factors.push_back(cand);
          a = std::move(q);
          split = true;
          break;
        }
      } while (next_monic(F, cand));
    }
    if (!split) {  // a itself is irreducible
      factors.push_back(a);
      break;
    }
  }
  std::sort(factors.begin(), factors.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return factors;
}

}  // namespace fqpoly
}  // namespace trichar
