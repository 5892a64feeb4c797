#include "trichar/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "trichar/fq_poly.hpp"

namespace trichar {

NilpotentAlgebra::NilpotentAlgebra(std::shared_ptr<const FieldSpec> field, uint32_t dim,
                                   std::vector<uint16_t> structure)
    : F_(std::move(field)), d_(dim), sc_(std::move(structure)) {
  if (sc_.size() != size_t(d_) * d_ * d_)
    throw usage_error("structure constant array must have dim^3 entries");
  for (uint16_t c : sc_)
    if (c >= F_->q()) throw usage_error("structure constant out of field range");
}

FqVec NilpotentAlgebra::mul(const FqVec& x, const FqVec& y) const {
  const FieldSpec& F = *F_;
  FqVec out(d_, 0);
  for (uint32_t i = 0; i < d_; ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < d_; ++j) {
      if (y[j] == 0) continue;
      uint16_t c = F.mul(x[i], y[j]);
      const uint16_t* row = &sc_[(size_t(i) * d_ + j) * d_];
      for (uint32_t k = 0; k < d_; ++k)
        if (row[k] != 0) out[k] = F.add(out[k], F.mul(c, row[k]));
    }
  }
  return out;
}

std::optional<std::array<uint32_t, 3>> NilpotentAlgebra::associativity_witness() const {
  for (uint32_t i = 0; i < d_; ++i)
    for (uint32_t j = 0; j < d_; ++j)
      for (uint32_t k = 0; k < d_; ++k) {
        FqVec ui(d_, 0), uj(d_, 0), uk(d_, 0);
        ui[i] = 1;
        uj[j] = 1;
        uk[k] = 1;
        if (mul(mul(ui, uj), uk) != mul(ui, mul(uj, uk))) return std::array<uint32_t, 3>{i, j, k};
      }
  return std::nullopt;
}

std::vector<Subspace> NilpotentAlgebra::power_chain() const {
  const FieldSpec& F = *F_;
  std::vector<Subspace> chain;
  std::vector<FqVec> full;
  for (uint32_t i = 0; i < d_; ++i) {
    FqVec v(d_, 0);
    v[i] = 1;
    full.push_back(v);
  }
  chain.emplace_back(F, d_, full);
  while (true) {
    const Subspace& prev = chain.back();
    std::vector<FqVec> products;
    for (uint32_t i = 0; i < d_; ++i)
      for (uint32_t r = 0; r < prev.dim(); ++r) {
        FqVec ui(d_, 0), row(d_);
        ui[i] = 1;
        for (uint32_t j = 0; j < d_; ++j) row[j] = prev.basis().at(r, j);
        products.push_back(mul(ui, row));
      }
    Subspace next(F, d_, products);
    if (next == chain.back()) break;
    bool zero = next.dim() == 0;
    chain.push_back(std::move(next));
    if (zero) break;
  }
  return chain;
}

std::optional<uint32_t> NilpotentAlgebra::nilpotency_index() const {
  auto chain = power_chain();
  if (chain.back().dim() != 0) return std::nullopt;
  return static_cast<uint32_t>(chain.size());
}

HAction HAction::from_generators(const FieldSpec& F, const HView& view, uint32_t dim,
                                 const std::vector<FqMat>& left_gen,
                                 const std::vector<FqMat>& right_gen) {
  if (view.size() != view.root().size())
    throw usage_error("from_generators requires the full-group view");
  const auto& gens = view.generator_positions();
  if (left_gen.size() != gens.size() || right_gen.size() != gens.size())
    throw usage_error("one action matrix per generator is required");
  const AbelianGroup& H = view.root();
  HAction act;
  uint32_t n = view.size();
  act.left.assign(n, FqMat::identity(dim));
  act.right.assign(n, FqMat::identity(dim));
  for (uint32_t i = 0; i < n; ++i) {
    auto tuple = H.tuple_of(i);  // full view: position == root index
    FqMat L = FqMat::identity(dim), R = FqMat::identity(dim);
    size_t g = 0;
    for (size_t factor = 0; factor < H.orders().size(); ++factor) {
      if (H.orders()[factor] <= 1) continue;
      for (uint32_t rep = 0; rep < tuple[factor]; ++rep) {
        L = mat_mul(F, L, left_gen[g]);
        R = mat_mul(F, R, right_gen[g]);
      }
      ++g;
    }
    act.left[i] = std::move(L);
    act.right[i] = std::move(R);
  }
  return act;
}

bool ValidationReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const ValidationItem& i) { return i.ok; });
}

void ValidationReport::add(std::string name, bool okay, std::string detail) {
  items.push_back({std::move(name), okay, std::move(detail)});
}

namespace {

uint32_t element_order(const HView& view, uint32_t pos) {
  uint32_t ord = 1;
  uint32_t cur = pos;
  while (cur != view.identity_pos()) {
    cur = view.mul(cur, pos);
    ++ord;
  }
  return ord;
}

}  // namespace

ValidationReport validate_structure(const NilpotentAlgebra& J, const HView& H, const HAction& act) {
  const FieldSpec& F = J.field();
  ValidationReport rep;
  uint32_t d = J.dim();

  rep.add("char_k_does_not_divide_H", H.size() % F.p() != 0,
          "|H| = " + std::to_string(H.size()) + ", p = " + std::to_string(F.p()));

  auto aw = J.associativity_witness();
  rep.add("associativity", !aw,
          aw ? "basis triple (" + std::to_string((*aw)[0]) + "," + std::to_string((*aw)[1]) + "," +
                   std::to_string((*aw)[2]) + ")"
             : "");

  auto nil = J.nilpotency_index();
  rep.add("nilpotency", nil.has_value(),
          nil ? "index " + std::to_string(*nil) : "power chain stabilizes above zero");

  bool hom_ok = true, inv_ok = true;
  std::string hom_detail, inv_detail;
  for (uint32_t i = 0; i < H.size() && (hom_ok || inv_ok); ++i) {
    if (!invertible(F, act.L(i)) || !invertible(F, act.R(i))) {
      inv_ok = false;
      inv_detail = "element position " + std::to_string(i);
      break;
    }
    for (uint32_t j = 0; j < H.size(); ++j) {
      uint32_t ij = H.mul(i, j);
      if (mat_mul(F, act.L(i), act.L(j)) != act.left[ij] ||
          mat_mul(F, act.R(i), act.R(j)) != act.right[ij]) {
        hom_ok = false;
        hom_detail = "positions (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
    }
  }
  rep.add("actions_invertible", inv_ok, inv_detail);
  rep.add("actions_are_homomorphisms", hom_ok, hom_detail);

  bool commute_ok = true;
  std::string commute_detail;
  for (uint32_t i = 0; i < H.size() && commute_ok; ++i)
    for (uint32_t j = 0; j < H.size(); ++j)
      if (mat_mul(F, act.L(i), act.R(j)) != mat_mul(F, act.R(j), act.L(i))) {
        commute_ok = false;
        commute_detail = "positions (" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
      }
  rep.add("left_right_actions_commute", commute_ok, commute_detail);

  bool ax_ok = true;
  std::string ax_detail;
  for (uint32_t g : H.generator_positions()) {
    for (uint32_t i = 0; i < d && ax_ok; ++i)
      for (uint32_t j = 0; j < d; ++j) {
        FqVec ui(d, 0), uj(d, 0);
        ui[i] = 1;
        uj[j] = 1;
        FqVec xy = J.mul(ui, uj);
        if (mat_apply(F, act.L(g), xy) != J.mul(mat_apply(F, act.L(g), ui), uj)) {
          ax_ok = false;
          ax_detail = "h(xy)=(hx)y fails at generator " + std::to_string(g) + ", basis (" +
                      std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
        if (mat_apply(F, act.R(g), xy) != J.mul(ui, mat_apply(F, act.R(g), uj))) {
          ax_ok = false;
          ax_detail = "(xy)h=x(yh) fails at generator " + std::to_string(g) + ", basis (" +
                      std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
        if (J.mul(ui, mat_apply(F, act.L(g), uj)) != J.mul(mat_apply(F, act.R(g), ui), uj)) {
          ax_ok = false;
          ax_detail = "x(hy)=(xh)y fails at generator " + std::to_string(g) + ", basis (" +
                      std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    if (!ax_ok) break;
    uint32_t ord = element_order(H, g);
    FqMat Lp = FqMat::identity(d), Rp = FqMat::identity(d);
    for (uint32_t k = 0; k < ord; ++k) {
      Lp = mat_mul(F, Lp, act.L(g));
      Rp = mat_mul(F, Rp, act.R(g));
    }
    if (Lp != FqMat::identity(d) || Rp != FqMat::identity(d)) {
      ax_ok = false;
      ax_detail = "generator order relation fails at generator " + std::to_string(g);
      break;
    }
  }
  rep.add("action_axioms", ax_ok, ax_detail);
  return rep;
}

KHVec kh_zero(const HView& view) { return KHVec(view.size(), 0); }

KHVec kh_one(const HView& view) {
  KHVec v(view.size(), 0);
  v[view.identity_pos()] = 1;
  return v;
}

KHVec kh_add(const FieldSpec& F, const KHVec& a, const KHVec& b) {
  KHVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
  return out;
}

KHVec kh_sub(const FieldSpec& F, const KHVec& a, const KHVec& b) {
  KHVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return out;
}

KHVec kh_scale(const FieldSpec& F, uint16_t c, const KHVec& a) {
  KHVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
  return out;
}

KHVec kh_mul(const FieldSpec& F, const HView& view, const KHVec& a, const KHVec& b) {
  KHVec out(a.size(), 0);
  for (uint32_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      uint32_t k = view.mul(i, j);
      out[k] = F.add(out[k], F.mul(a[i], b[j]));
    }
  }
  return out;
}

KHVec kh_mul_elem(const HView& view, uint32_t pos, const KHVec& a) {
  KHVec out(a.size(), 0);
  for (uint32_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) out[view.mul(pos, j)] = a[j];
  return out;
}

bool kh_is_idempotent(const FieldSpec& F, const HView& view, const KHVec& a) {
  return kh_mul(F, view, a, a) == a;
}

void IdempotentLattice::assemble(const FieldSpec& F, const HView& view,
                                 std::vector<KHVec> primitives) {
  std::sort(primitives.begin(), primitives.end());
  primitives_ = std::move(primitives);
  size_t n = primitives_.size();
  if (n > 16) throw capability_error("idempotent lattice with > 16 primitives is unsupported");

  KHVec sum = kh_zero(view);
  for (size_t i = 0; i < n; ++i) {
    if (!kh_is_idempotent(F, view, primitives_[i]))
      throw consistency_error("constructed primitive is not idempotent");
    for (size_t j = i + 1; j < n; ++j)
      if (kh_mul(F, view, primitives_[i], primitives_[j]) != kh_zero(view))
        throw consistency_error("constructed primitives are not orthogonal");
    sum = kh_add(F, sum, primitives_[i]);
  }
  if (sum != kh_one(view))
    throw consistency_error("primitive idempotents do not sum to 1");

  all_.clear();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    KHVec v = kh_zero(view);
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) v = kh_add(F, v, primitives_[i]);
    all_.push_back({mask, std::move(v)});
  }
  std::sort(all_.begin(), all_.end(), [](const Entry& a, const Entry& b) {
    int pa = __builtin_popcount(a.mask), pb = __builtin_popcount(b.mask);
    if (pa != pb) return pa < pb;
    return a.mask < b.mask;
  });
}

IdempotentLattice IdempotentLattice::for_root(const FieldSpec& F, const HView& view) {
  if (view.size() != view.root().size())
    throw usage_error("for_root requires the full-group view");
  if (view.size() % F.p() == 0)
    throw validation_error("hypothesis violated: char k divides |H|");

  const AbelianGroup& H = view.root();
  const auto& orders = H.orders();
  // primitive idempotents of k[x]/(x^d - 1) for each cyclic factor
  std::vector<std::vector<fqpoly::Poly>> factor_idems;
  for (uint32_t d : orders) {
    fqpoly::Poly xd1(d + 1, 0);
    xd1[0] = F.neg(1);
    xd1[d] = 1;
    std::vector<fqpoly::Poly> idems;
    if (d == 1) {
      idems.push_back({1});
    } else {
      auto factors = fqpoly::factor_monic(F, xd1);
      for (const auto& f : factors) {
        auto [g, rem] = fqpoly::divmod(F, xd1, f);
        if (!fqpoly::is_zero(rem)) throw consistency_error("factor does not divide x^d - 1");
        fqpoly::Poly u = fqpoly::inverse_mod(F, g, f);
        fqpoly::Poly e = fqpoly::mod(F, fqpoly::mul(F, g, u), xd1);
        e.resize(d, 0);
        idems.push_back(std::move(e));
      }
    }
    factor_idems.push_back(std::move(idems));
  }

  // tensor the per-factor idempotents across the decomposition of kH
  std::vector<KHVec> primitives;
  std::vector<size_t> choice(orders.size(), 0);
  while (true) {
    KHVec v(view.size(), 0);
    for (uint32_t h = 0; h < H.size(); ++h) {
      auto tuple = H.tuple_of(h);
      uint16_t c = 1;
      for (size_t i = 0; i < orders.size(); ++i) {
        const fqpoly::Poly& e = factor_idems[i][choice[i]];
        uint16_t coeff = tuple[i] < e.size() ? e[tuple[i]] : 0;
        c = F.mul(c, coeff);
        if (c == 0) break;
      }
      v[h] = c;
    }
    primitives.push_back(std::move(v));
    size_t i = 0;
    for (; i < orders.size(); ++i) {
      if (++choice[i] < factor_idems[i].size()) break;
      choice[i] = 0;
    }
    if (i == orders.size()) break;
  }

  IdempotentLattice lat;
  lat.assemble(F, view, std::move(primitives));
  return lat;
}

IdempotentLattice IdempotentLattice::for_subview(const FieldSpec& F,
                                                 const IdempotentLattice& parent,
                                                 const HView& parent_view,
                                                 const HView& child_view) {
  // idempotents of kH' = idempotents of kH supported on H'
  std::vector<uint32_t> supported_masks;
  std::vector<KHVec> supported_vecs;
  for (size_t i = 0; i < parent.size(); ++i) {
    const auto& entry = parent.at(i);
    bool inside = true;
    for (uint32_t ppos = 0; ppos < entry.vec.size() && inside; ++ppos)
      if (entry.vec[ppos] != 0 &&
          !child_view.contains_root(parent_view.root_index(ppos)))
        inside = false;
    if (!inside) continue;
    KHVec local(child_view.size(), 0);
    for (uint32_t ppos = 0; ppos < entry.vec.size(); ++ppos)
      if (entry.vec[ppos] != 0)
        local[child_view.position(parent_view.root_index(ppos))] = entry.vec[ppos];
    supported_masks.push_back(entry.mask);
    supported_vecs.push_back(std::move(local));
  }
  // primitives of kH' = minimal nonzero supported idempotents
  std::vector<KHVec> primitives;
  for (size_t i = 0; i < supported_masks.size(); ++i) {
    uint32_t m = supported_masks[i];
    if (m == 0) continue;
    bool minimal = true;
    for (size_t j = 0; j < supported_masks.size() && minimal; ++j) {
      uint32_t mj = supported_masks[j];
      if (mj != 0 && mj != m && (mj & ~m) == 0) minimal = false;
    }
    if (minimal) primitives.push_back(supported_vecs[i]);
  }
  IdempotentLattice lat;
  lat.assemble(F, child_view, std::move(primitives));
  if ((1u << lat.primitive_count()) != supported_masks.size())
    throw consistency_error("subgroup lattice size mismatch");
  return lat;
}

PierceData compute_pierce(const NilpotentAlgebra& J, const HView& view, const HAction& act,
                          const KHVec& e) {
  const FieldSpec& F = J.field();
  if (!kh_is_idempotent(F, view, e)) throw domain_error("pierce requires an idempotent");
  uint32_t d = J.dim();

  PierceData pd;
  pd.L = FqMat(d, d);
  pd.R = FqMat(d, d);
  for (uint32_t h = 0; h < view.size(); ++h) {
    if (e[h] == 0) continue;
    pd.L = mat_add(F, pd.L, mat_scale(F, e[h], act.L(h)));
    pd.R = mat_add(F, pd.R, mat_scale(F, e[h], act.R(h)));
  }
  pd.P = mat_mul(F, pd.L, pd.R);
  if (mat_mul(F, pd.L, pd.R) != mat_mul(F, pd.R, pd.L))
    throw consistency_error("left/right multiplications by an idempotent must commute");

  FqMat I = FqMat::identity(d);
  FqMat Lc = mat_sub(F, I, pd.L), Rc = mat_sub(F, I, pd.R);
  FqMat projs[4] = {pd.P, mat_mul(F, pd.L, Rc), mat_mul(F, Lc, pd.R), mat_mul(F, Lc, Rc)};
  uint32_t dims = 0;
  for (int c = 0; c < 4; ++c) {
    std::vector<FqVec> cols;
    FqMat t = transpose(projs[c]);
    for (uint32_t i = 0; i < d; ++i)
      cols.emplace_back(t.a.begin() + size_t(i) * d, t.a.begin() + size_t(i + 1) * d);
    pd.comp[c] = Subspace(F, d, cols);
    dims += pd.comp[c].dim();
  }
  if (dims != d) throw consistency_error("Pierce component dimensions do not sum to dim J");

  pd.He_mask.assign(view.size(), 0);
  std::set<KHVec> images;
  for (uint32_t h = 0; h < view.size(); ++h) {
    KHVec he = kh_mul_elem(view, h, e);
    if (he == kh_zero(view) && e != kh_zero(view))
      throw consistency_error("h*e vanished for invertible h");
    images.insert(he);
    if (he == e) {
      pd.He.push_back(h);
      pd.He_mask[h] = 1;
    }
  }
  pd.He_image_size = static_cast<uint32_t>(images.size());
  if (pd.He.size() * pd.He_image_size != view.size())
    throw consistency_error("|H(e)| * |H_e| must equal |H|");

  // J_e as an algebra in the coordinates of comp[0]
  uint32_t de = pd.comp[0].dim();
  pd.embed = FqMat(d, de);
  for (uint32_t j = 0; j < de; ++j)
    for (uint32_t i = 0; i < d; ++i) pd.embed.at(i, j) = pd.comp[0].basis().at(j, i);
  pd.coords = FqMat(de, d);
  for (uint32_t k = 0; k < d; ++k) {
    FqVec unit(d, 0);
    unit[k] = 1;
    FqVec proj = mat_apply(F, pd.P, unit);
    FqVec c = pd.comp[0].coords_of(F, proj);
    for (uint32_t i = 0; i < de; ++i) pd.coords.at(i, k) = c[i];
  }

  std::vector<uint16_t> sc(size_t(de) * de * de, 0);
  for (uint32_t i = 0; i < de; ++i)
    for (uint32_t j = 0; j < de; ++j) {
      FqVec bi(d), bj(d);
      for (uint32_t k = 0; k < d; ++k) {
        bi[k] = pd.comp[0].basis().at(i, k);
        bj[k] = pd.comp[0].basis().at(j, k);
      }
      FqVec prod = J.mul(bi, bj);
      if (!pd.comp[0].contains(F, prod))
        throw consistency_error("eJe is not closed under multiplication");
      FqVec c = pd.comp[0].coords_of(F, prod);
      for (uint32_t k = 0; k < de; ++k) sc[(size_t(i) * de + j) * de + k] = c[k];
    }
  pd.Je = NilpotentAlgebra(J.field_ptr(), de, std::move(sc));

  for (uint32_t h = 0; h < view.size(); ++h) {
    FqMat Lr = mat_mul(F, pd.coords, mat_mul(F, act.L(h), pd.embed));
    FqMat Rr = mat_mul(F, pd.coords, mat_mul(F, act.R(h), pd.embed));
    // actions must preserve J_e
    if (mat_mul(F, pd.embed, Lr) != mat_mul(F, mat_mul(F, pd.P, act.L(h)), pd.embed) ||
        mat_mul(F, pd.embed, Rr) != mat_mul(F, mat_mul(F, pd.P, act.R(h)), pd.embed))
      throw consistency_error("H action does not preserve a Pierce component");
    pd.JeL.push_back(std::move(Lr));
    pd.JeR.push_back(std::move(Rr));
  }
  // H(e) acts trivially on J_e
  for (uint32_t h : pd.He)
    if (pd.JeL[h] != FqMat::identity(de) || pd.JeR[h] != FqMat::identity(de))
      throw consistency_error("H(e) must act trivially on J_e");
  return pd;
}

namespace {

uint64_t galois_number(uint32_t d, uint32_t q) {
  // sum over k of the Gaussian binomial [d choose k]_q
  uint64_t total = 0;
  for (uint32_t k = 0; k <= d; ++k) {
    // [d,k]_q = prod_{i<k} (q^{d-i} - 1) / (q^{k-i} - 1)
    long double val = 1;
    for (uint32_t i = 0; i < k; ++i) {
      long double num = std::pow((long double)q, (int)(d - i)) - 1;
      long double den = std::pow((long double)q, (int)(k - i)) - 1;
      val *= num / den;
    }
    total += static_cast<uint64_t>(val + 0.5);
  }
  return total;
}

}  // namespace

InvariantSubalgebras invariant_subalgebras(const NilpotentAlgebra& J, const HView& view,
                                           const HAction& act) {
  const FieldSpec& F = J.field();
  uint32_t d = J.dim();
  if (d > 6)
    throw capability_error("invariant subalgebra enumeration is capped at dim J <= 6, got " +
                           std::to_string(d));
  if (galois_number(d, F.q()) > 500000)
    throw capability_error("subspace enumeration budget exceeded");

  InvariantSubalgebras out;
  const auto& gens = view.generator_positions();
  for (uint32_t k = 0; k < d; ++k) {
    enumerate_subspaces(F, d, k, [&](const FqMat& basis) {
      std::vector<FqVec> rows;
      for (uint32_t i = 0; i < k; ++i)
        rows.emplace_back(basis.a.begin() + size_t(i) * d, basis.a.begin() + size_t(i + 1) * d);
      Subspace w(F, d, rows);
      for (uint32_t g : gens) {
        for (const auto& r : rows) {
          if (!w.contains(F, mat_apply(F, act.L(g), r))) return;
          if (!w.contains(F, mat_apply(F, act.R(g), r))) return;
        }
      }
      for (const auto& r1 : rows)
        for (const auto& r2 : rows)
          if (!w.contains(F, J.mul(r1, r2))) return;
      out.all.push_back(std::move(w));
    });
  }
  for (size_t i = 0; i < out.all.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < out.all.size() && maximal; ++j)
      if (i != j && out.all[j].dim() > out.all[i].dim() &&
          out.all[j].contains_subspace(F, out.all[i]))
        maximal = false;
    if (maximal) out.maximal.push_back(i);
  }
  // Corollary check: a maximal invariant subalgebra contains J^2
  auto chain = J.power_chain();
  if (chain.size() >= 2) {
    const Subspace& j2 = chain[1];
    for (size_t idx : out.maximal)
      if (!out.all[idx].contains_subspace(F, j2))
        throw consistency_error("maximal invariant subalgebra does not contain J^2");
  }
  return out;
}

}  // namespace trichar
