#include "trichar/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace trichar {

namespace {
constexpr uint64_t kMaxJPoints = 1000000;
constexpr uint64_t kMaxGroupSize = 100000;
constexpr uint64_t kMaxConjTable = 1u << 24;
}  // namespace

TriangularGroup::TriangularGroup(std::shared_ptr<const FieldSpec> F, NilpotentAlgebra J, HView H,
                                 HAction act, uint32_t ambient_order)
    : F_(std::move(F)), J_(std::move(J)), H_(std::move(H)), act_(std::move(act)) {
  uint64_t jp = 1;
  qpow_.resize(J_.dim() + 1);
  for (uint32_t i = 0; i <= J_.dim(); ++i) {
    qpow_[i] = static_cast<uint32_t>(jp);
    if (i < J_.dim()) jp *= F_->q();
    if (jp > kMaxJPoints)
      throw capability_error("q^dim exceeds the enumeration bound of 10^6");
  }
  jpoints_ = static_cast<uint32_t>(jp);
  uint64_t gs = uint64_t(H_.size()) * jpoints_;
  if (gs > kMaxGroupSize) throw capability_error("|G| exceeds the supported bound of 10^5");
  gsize_ = static_cast<uint32_t>(gs);

  n_ = ambient_order ? ambient_order : std::lcm(F_->p(), H_.root().exponent());
  if (n_ % F_->p() != 0 || n_ % H_.root().exponent() != 0)
    throw usage_error("ambient cyclotomic order must be divisible by p and exp(H)");

  report_ = validate_structure(J_, H_, act_);
  if (!report_.ok()) {
    std::string msg = "triangular-type structure is invalid:";
    for (const auto& item : report_.items)
      if (!item.ok) msg += " [" + item.name + (item.detail.empty() ? "" : ": " + item.detail) + "]";
    throw validation_error(msg);
  }
}

uint32_t TriangularGroup::encode_j(const FqVec& v) const {
  uint32_t code = 0;
  for (uint32_t i = 0; i < J_.dim(); ++i) code += v[i] * qpow_[i];
  return code;
}

FqVec TriangularGroup::decode_j(uint32_t code) const {
  FqVec v(J_.dim());
  for (uint32_t i = 0; i < J_.dim(); ++i) {
    v[i] = static_cast<uint16_t>(code % F_->q());
    code /= F_->q();
  }
  return v;
}

uint32_t TriangularGroup::j_add(uint32_t a, uint32_t b) const {
  FqVec va = decode_j(a), vb = decode_j(b);
  for (uint32_t i = 0; i < J_.dim(); ++i) va[i] = F_->add(va[i], vb[i]);
  return encode_j(va);
}

uint32_t TriangularGroup::j_neg(uint32_t a) const {
  FqVec va = decode_j(a);
  for (auto& c : va) c = F_->neg(c);
  return encode_j(va);
}

uint32_t TriangularGroup::j_scale(uint16_t c, uint32_t a) const {
  FqVec va = decode_j(a);
  for (auto& x : va) x = F_->mul(c, x);
  return encode_j(va);
}

uint32_t TriangularGroup::j_mul(uint32_t a, uint32_t b) const {
  return encode_j(J_.mul(decode_j(a), decode_j(b)));
}

uint32_t TriangularGroup::n_inv(uint32_t x) const {
  // (1+x)^{-1} = 1 + sum_{k>=1} (-x)^k, a finite sum by nilpotency
  uint32_t negx = j_neg(x);
  uint32_t acc = negx, term = negx;
  while (true) {
    term = j_mul(term, negx);
    if (term == 0) break;
    acc = j_add(acc, term);
  }
  return acc;
}

uint32_t TriangularGroup::act_left(uint32_t h_pos, uint32_t x) const {
  return encode_j(mat_apply(*F_, act_.L(h_pos), decode_j(x)));
}

uint32_t TriangularGroup::act_right(uint32_t h_pos, uint32_t x) const {
  return encode_j(mat_apply(*F_, act_.R(h_pos), decode_j(x)));
}

uint16_t TriangularGroup::pair(uint32_t lam, uint32_t x) const {
  FqVec vl = decode_j(lam), vx = decode_j(x);
  uint16_t acc = 0;
  for (uint32_t i = 0; i < J_.dim(); ++i) acc = F_->add(acc, F_->mul(vl[i], vx[i]));
  return acc;
}

uint32_t TriangularGroup::mul(uint32_t g1, uint32_t g2) const {
  uint32_t h1 = hpart(g1), h2 = hpart(g2);
  uint32_t x1 = xpart(g1), x2 = xpart(g2);
  uint32_t x = j_add(j_add(act_left(h1, x2), act_right(h2, x1)), j_mul(x1, x2));
  return gcode(H_.mul(h1, h2), x);
}

uint32_t TriangularGroup::inv(uint32_t g) const {
  uint32_t h = hpart(g), x = xpart(g);
  uint32_t hi = H_.inv(h);
  uint32_t v = act_left(hi, x);
  uint32_t y = n_inv(v);
  return gcode(hi, act_right(hi, y));
}

TriangularGroup::Gt TriangularGroup::gt_mul(const Gt& x, const Gt& y) const {
  uint32_t t2i = H_.inv(y.t);
  auto conj = [&](uint32_t u) { return act_right(y.t, act_left(t2i, u)); };
  auto nmul = [&](uint32_t u, uint32_t v) { return j_add(j_add(u, v), j_mul(u, v)); };
  return {H_.mul(x.t, y.t), nmul(conj(x.a), y.a), nmul(conj(x.b), y.b)};
}

TriangularGroup::Gt TriangularGroup::gt_inv(const Gt& x) const {
  uint32_t ti = H_.inv(x.t);
  auto conj = [&](uint32_t u) { return act_right(ti, act_left(x.t, u)); };
  return {ti, conj(n_inv(x.a)), conj(n_inv(x.b))};
}

uint32_t TriangularGroup::rho(const Gt& tau, uint32_t x) const {
  uint32_t w = n_inv(tau.b);
  uint32_t s = j_add(x, j_mul(tau.a, x));        // a x
  s = j_add(s, j_mul(s, w));                     // a x b^{-1}
  return act_right(H_.inv(tau.t), act_left(tau.t, s));
}

uint32_t TriangularGroup::rho_dual(const Gt& tau, uint32_t lam) const {
  Gt ti = gt_inv(tau);
  FqVec vl = decode_j(lam);
  FqVec out(J_.dim(), 0);
  for (uint32_t k = 0; k < J_.dim(); ++k) {
    FqVec col = decode_j(rho(ti, qpow_[k]));  // image of basis vector u_k
    uint16_t acc = 0;
    for (uint32_t i = 0; i < J_.dim(); ++i) acc = F_->add(acc, F_->mul(vl[i], col[i]));
    out[k] = acc;
  }
  return encode_j(out);
}

uint32_t TriangularGroup::R_act(const Gt& tau, uint32_t g) const {
  uint32_t h = hpart(g), x = xpart(g);
  uint32_t u = tau.a, w = n_inv(tau.b);
  uint32_t y1 = j_add(j_add(x, j_add(act_right(h, u), j_neg(u))), j_mul(u, x));
  uint32_t y2 = j_add(j_add(y1, j_add(act_left(h, w), j_neg(w))), j_mul(y1, w));
  return gcode(h, act_right(H_.inv(tau.t), act_left(tau.t, y2)));
}

const std::vector<TriangularGroup::Gt>& TriangularGroup::gt_generators() {
  if (gens_built_) return gens_;
  for (uint32_t t : H_.generator_positions()) gens_.push_back({t, 0, 0});
  auto chain = J_.power_chain();
  for (const Subspace& layer : chain) {
    if (layer.dim() == 0) break;
    for (uint32_t r = 0; r < layer.dim(); ++r) {
      FqVec v(J_.dim());
      for (uint32_t j = 0; j < J_.dim(); ++j) v[j] = layer.basis().at(r, j);
      for (uint16_t c = 1; c < F_->q(); ++c) {
        uint32_t code = encode_j(v);
        code = j_scale(c, code);
        gens_.push_back({H_.identity_pos(), code, 0});
        gens_.push_back({H_.identity_pos(), 0, code});
      }
    }
  }
  gens_built_ = true;
  return gens_;
}

void TriangularGroup::set_lattice(IdempotentLattice lat) {
  if (lattice_) throw usage_error("lattice is already set");
  lattice_ = std::make_unique<IdempotentLattice>(std::move(lat));
}

void TriangularGroup::ensure_lattice() {
  if (!lattice_) {
    if (H_.size() != H_.root().size())
      throw usage_error("subgroup theories need an injected lattice");
    lattice_ = std::make_unique<IdempotentLattice>(IdempotentLattice::for_root(*F_, H_));
  }
}

const IdempotentLattice& TriangularGroup::lattice() {
  ensure_lattice();
  return *lattice_;
}

const PierceData& TriangularGroup::pierce(size_t e_index) {
  ensure_lattice();
  auto it = pierce_.find(e_index);
  if (it == pierce_.end())
    it = pierce_.emplace(e_index, compute_pierce(J_, H_, act_, lattice_->at(e_index).vec)).first;
  return it->second;
}

bool TriangularGroup::in_je(size_t e_index, uint32_t x_code) {
  const PierceData& pd = pierce(e_index);
  FqVec v = decode_j(x_code);
  return mat_apply(*F_, pd.P, v) == v;
}

bool TriangularGroup::in_jestar(size_t e_index, uint32_t lam_code) {
  const PierceData& pd = pierce(e_index);
  FqVec v = decode_j(lam_code);
  return mat_apply(*F_, transpose(pd.P), v) == v;
}

std::vector<Orbit> bfs_orbits(const std::vector<uint32_t>& points,
                              const std::vector<std::function<uint32_t(uint32_t)>>& maps) {
  std::unordered_set<uint32_t> unseen(points.begin(), points.end());
  std::vector<Orbit> out;
  for (uint32_t seed : points) {
    if (!unseen.count(seed)) continue;
    Orbit orb;
    std::vector<uint32_t> frontier{seed};
    unseen.erase(seed);
    orb.members.push_back(seed);
    while (!frontier.empty()) {
      uint32_t p = frontier.back();
      frontier.pop_back();
      for (const auto& f : maps) {
        uint32_t img = f(p);
        if (unseen.erase(img)) {
          orb.members.push_back(img);
          frontier.push_back(img);
        }
      }
    }
    std::sort(orb.members.begin(), orb.members.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.rep() < b.rep(); });
  return out;
}

std::vector<TriangularGroup::Gt> TriangularGroup::je_generators(size_t e_index) {
  const PierceData& pd = pierce(e_index);
  std::vector<Gt> gens;
  for (uint32_t t : H_.generator_positions()) gens.push_back({t, 0, 0});
  auto chain = pd.Je.power_chain();
  for (const Subspace& layer : chain) {
    if (layer.dim() == 0) break;
    for (uint32_t r = 0; r < layer.dim(); ++r) {
      FqVec local(pd.Je.dim());
      for (uint32_t j = 0; j < pd.Je.dim(); ++j) local[j] = layer.basis().at(r, j);
      FqVec ambient = mat_apply(*F_, pd.embed, local);
      for (uint16_t c = 1; c < F_->q(); ++c) {
        uint32_t code = j_scale(c, encode_j(ambient));
        gens.push_back({H_.identity_pos(), code, 0});
        gens.push_back({H_.identity_pos(), 0, code});
      }
    }
  }
  return gens;
}

const TriangularGroup::EOrbits& TriangularGroup::orbits_je(size_t e_index) {
  auto it = eorbits_.find(e_index);
  if (it != eorbits_.end()) return it->second;

  const PierceData& pd = pierce(e_index);
  std::vector<uint32_t> points;
  for (const FqVec& v : pd.comp[0].enumerate(*F_)) points.push_back(encode_j(v));
  std::sort(points.begin(), points.end());

  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (const Gt& g : je_generators(e_index))
    maps.emplace_back([this, g](uint32_t x) { return rho(g, x); });

  EOrbits eo;
  eo.orbits = bfs_orbits(points, maps);
  for (size_t i = 0; i < eo.orbits.size(); ++i)
    for (uint32_t m : eo.orbits[i].members) eo.orbit_of[m] = i;
  // regular in J_e: meets no J_f for f < e
  const IdempotentLattice& lat = lattice();
  for (size_t i = 0; i < eo.orbits.size(); ++i) {
    bool regular = true;
    for (size_t f = 0; f < lat.size() && regular; ++f) {
      if (f == e_index || !lat.leq(f, e_index)) continue;
      for (uint32_t m : eo.orbits[i].members)
        if (in_je(f, m)) {
          regular = false;
          eo.orbits[i].witness_idempotent = f;
          eo.orbits[i].witness_point = m;
          break;
        }
    }
    eo.orbits[i].regular = regular;
    if (regular) eo.regular.push_back(i);
  }
  return eorbits_.emplace(e_index, std::move(eo)).first->second;
}

const TriangularGroup::EOrbits& TriangularGroup::orbits_jestar(size_t e_index) {
  auto it = eorbits_star_.find(e_index);
  if (it != eorbits_star_.end()) return it->second;

  const PierceData& pd = pierce(e_index);
  // J_e^* inside J^*: the row space of P^T (forms factoring through P_e)
  FqMat pt = transpose(pd.P);
  std::vector<FqVec> rows;
  for (uint32_t i = 0; i < pt.rows; ++i)
    rows.emplace_back(pt.a.begin() + size_t(i) * pt.cols, pt.a.begin() + size_t(i + 1) * pt.cols);
  Subspace dual(*F_, J_.dim(), rows);
  std::vector<uint32_t> points;
  for (const FqVec& v : dual.enumerate(*F_)) points.push_back(encode_j(v));
  std::sort(points.begin(), points.end());

  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (const Gt& g : je_generators(e_index))
    maps.emplace_back([this, g](uint32_t x) { return rho_dual(g, x); });

  EOrbits eo;
  eo.orbits = bfs_orbits(points, maps);
  for (size_t i = 0; i < eo.orbits.size(); ++i)
    for (uint32_t m : eo.orbits[i].members) eo.orbit_of[m] = i;
  const IdempotentLattice& lat = lattice();
  for (size_t i = 0; i < eo.orbits.size(); ++i) {
    bool regular = true;
    for (size_t f = 0; f < lat.size() && regular; ++f) {
      if (f == e_index || !lat.leq(f, e_index)) continue;
      for (uint32_t m : eo.orbits[i].members)
        if (in_jestar(f, m)) {
          regular = false;
          eo.orbits[i].witness_idempotent = f;
          eo.orbits[i].witness_point = m;
          break;
        }
    }
    eo.orbits[i].regular = regular;
    if (regular) eo.regular.push_back(i);
  }
  return eorbits_star_.emplace(e_index, std::move(eo)).first->second;
}

namespace {

// Shared classification of global orbits: singular iff the orbit meets J_e
// (resp. J_e^*) for some e != 1; the unique idempotent with a regular
// intersection is recorded, and the single-suborbit property is asserted.
void classify_global(TriangularGroup& G, std::vector<Orbit>& orbs, bool dual) {
  const IdempotentLattice& lat = G.lattice();
  for (Orbit& orb : orbs) {
    size_t regular_count = 0;
    bool singular = false;
    for (size_t e = 0; e < lat.size(); ++e) {
      std::vector<uint32_t> inside;
      for (uint32_t m : orb.members)
        if (dual ? G.in_jestar(e, m) : G.in_je(e, m)) inside.push_back(m);
      if (inside.empty()) continue;
      const TriangularGroup::EOrbits& eo = dual ? G.orbits_jestar(e) : G.orbits_je(e);
      size_t first = eo.orbit_of.at(inside.front());
      for (uint32_t m : inside)
        if (eo.orbit_of.at(m) != first)
          throw consistency_error("orbit intersection with J_e splits into several suborbits");
      if (e != lat.one_index() && !singular) {
        singular = true;
        orb.witness_idempotent = e;
        orb.witness_point = inside.front();
      }
      if (eo.orbits[first].regular) {
        ++regular_count;
        orb.regular_idempotent = e;
      }
    }
    if (regular_count != 1)
      throw consistency_error("orbit does not have a unique idempotent with regular intersection");
    orb.regular = !singular;
  }
}

}  // namespace

const std::vector<Orbit>& TriangularGroup::orbits_j() {
  if (orbits_built_) return orbits_j_;
  std::vector<uint32_t> points(jpoints_);
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (const Gt& g : gt_generators()) maps.emplace_back([this, g](uint32_t x) { return rho(g, x); });
  orbits_j_ = bfs_orbits(points, maps);
  classify_global(*this, orbits_j_, false);
  orbits_built_ = true;
  return orbits_j_;
}

const std::vector<Orbit>& TriangularGroup::orbits_jstar() {
  if (orbits_star_built_) return orbits_jstar_;
  std::vector<uint32_t> points(jpoints_);
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (const Gt& g : gt_generators())
    maps.emplace_back([this, g](uint32_t x) { return rho_dual(g, x); });
  orbits_jstar_ = bfs_orbits(points, maps);
  classify_global(*this, orbits_jstar_, true);
  orbits_star_built_ = true;
  return orbits_jstar_;
}

const std::vector<Orbit>& TriangularGroup::superclasses() {
  if (classes_built_) return classes_;
  std::vector<uint32_t> points(gsize_);
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (const Gt& g : gt_generators())
    maps.emplace_back([this, g](uint32_t x) { return R_act(g, x); });
  classes_ = bfs_orbits(points, maps);
  class_of_.assign(gsize_, 0);
  for (size_t i = 0; i < classes_.size(); ++i)
    for (uint32_t m : classes_[i].members) class_of_[m] = static_cast<uint32_t>(i);
  // {1} must be a superclass
  if (classes_[class_of_[identity()]].size() != 1)
    throw consistency_error("the superclass of the identity is not {1}");
  classes_built_ = true;
  return classes_;
}

uint32_t TriangularGroup::class_of(uint32_t g_code) {
  superclasses();
  return class_of_[g_code];
}

const std::vector<BTriple>& TriangularGroup::b_triples() {
  if (b_triples_built_) return b_triples_;
  superclasses();
  const IdempotentLattice& lat = lattice();
  std::vector<uint8_t> hit(classes_.size(), 0);
  for (size_t e = 0; e < lat.size(); ++e) {
    const PierceData& pd = pierce(e);
    const EOrbits& eo = orbits_je(e);
    for (uint32_t h : pd.He) {
      for (size_t oi : eo.regular) {
        const Orbit& omega = eo.orbits[oi];
        uint32_t cls = class_of_[gcode(h, omega.rep())];
        for (uint32_t m : omega.members)
          if (class_of_[gcode(h, m)] != cls)
            throw consistency_error("h + omega is not contained in a single superclass");
        if (hit[cls]) throw consistency_error("two distinct triples map to one superclass");
        hit[cls] = 1;
        b_triples_.push_back({e, h, omega.members, cls});
      }
    }
  }
  if (b_triples_.size() != classes_.size())
    throw consistency_error("triple count differs from superclass count");
  b_triples_built_ = true;
  return b_triples_;
}

BTriple TriangularGroup::triple_of_superclass(size_t class_index) {
  superclasses();
  const IdempotentLattice& lat = lattice();
  const Orbit& K = classes_[class_index];
  uint32_t h = hpart(K.rep());
  for (uint32_t m : K.members)
    if (hpart(m) != h) throw consistency_error("superclass has a non-constant H part");

  std::vector<BTriple> candidates;
  for (size_t e = 0; e < lat.size(); ++e) {
    const PierceData& pd = pierce(e);
    if (!pd.He_mask[h]) continue;
    const EOrbits& eo = orbits_je(e);
    for (size_t oi : eo.regular) {
      const Orbit& omega = eo.orbits[oi];
      if (class_of_[gcode(h, omega.rep())] == class_index)
        candidates.push_back({e, h, omega.members, class_index});
    }
  }
  if (candidates.size() != 1)
    throw consistency_error("superclass matches " + std::to_string(candidates.size()) +
                            " triples instead of exactly one");
  return candidates.front();
}

size_t TriangularGroup::superclass_of_triple(size_t e_index, uint32_t h_pos, uint32_t omega_rep) {
  superclasses();
  const PierceData& pd = pierce(e_index);
  if (!pd.He_mask[h_pos]) throw usage_error("triple H part is outside H(e)");
  const EOrbits& eo = orbits_je(e_index);
  auto it = eo.orbit_of.find(omega_rep);
  if (it == eo.orbit_of.end()) throw usage_error("omega representative is outside J_e");
  const Orbit& omega = eo.orbits[it->second];
  if (!omega.regular) throw usage_error("triple orbit is not regular in J_e");
  uint32_t cls = class_of_[gcode(h_pos, omega.rep())];
  for (uint32_t m : omega.members)
    if (class_of_[gcode(h_pos, m)] != cls)
      throw consistency_error("h + omega is not contained in a single superclass");
  return cls;
}

const std::vector<std::vector<uint32_t>>& TriangularGroup::characters_of_he(size_t e_index) {
  auto it = he_chars_.find(e_index);
  if (it != he_chars_.end()) return it->second;
  const PierceData& pd = pierce(e_index);
  auto tuples = characters_of_subgroup(H_, pd.He, n_);
  std::vector<std::vector<uint32_t>> aligned;
  for (const auto& t : tuples) {
    std::vector<uint32_t> full(H_.size(), 0);
    for (size_t i = 0; i < pd.He.size(); ++i) full[pd.He[i]] = t[i];
    aligned.push_back(std::move(full));
  }
  return he_chars_.emplace(e_index, std::move(aligned)).first->second;
}

const std::vector<ATriple>& TriangularGroup::a_triples() {
  if (a_triples_built_) return a_triples_;
  const IdempotentLattice& lat = lattice();
  for (size_t e = 0; e < lat.size(); ++e) {
    const EOrbits& eo = orbits_je(e);
    const EOrbits& eos = orbits_jestar(e);
    if (eo.regular.size() != eos.regular.size())
      throw consistency_error("regular orbit counts in J_e and J_e^* differ");
    const auto& chars = characters_of_he(e);
    for (size_t th = 0; th < chars.size(); ++th)
      for (size_t oi : eos.regular)
        a_triples_.push_back({e, th, chars[th], eos.orbits[oi].members});
  }
  a_triples_built_ = true;
  return a_triples_;
}

const std::vector<uint32_t>* TriangularGroup::conjugate_row(uint32_t g) {
  if (uint64_t(gsize_) * gsize_ > kMaxConjTable) return nullptr;
  if (!conj_rows_built_) {
    conj_rows_.assign(gsize_, {});
    for (uint32_t gg = 0; gg < gsize_; ++gg) {
      conj_rows_[gg].resize(gsize_);
      for (uint32_t s = 0; s < gsize_; ++s)
        conj_rows_[gg][s] = mul(mul(inv(s), gg), s);
    }
    conj_rows_built_ = true;
  }
  return &conj_rows_[g];
}

}  // namespace trichar
