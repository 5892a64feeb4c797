#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "trichar/algebra.hpp"

namespace trichar {

/// An orbit of points (J vectors, linear forms, or group elements, all by
/// integer code). Members are sorted, the representative is the least code.
struct Orbit {
  std::vector<uint32_t> members;
  uint32_t rep() const { return members.front(); }
  uint32_t size() const { return static_cast<uint32_t>(members.size()); }

  bool regular = false;
  /// Singular case: an idempotent e != 1 whose Pierce space meets the orbit.
  size_t witness_idempotent = 0;
  uint32_t witness_point = 0;
  /// The unique idempotent whose intersection with the orbit is a regular
  /// suborbit (the top idempotent for globally regular orbits).
  size_t regular_idempotent = 0;
};

/// beta = (e, h, omega): idempotent index, H(e) member (view position), and a
/// regular orbit in J_e. Bijective with superclasses.
struct BTriple {
  size_t e_index;
  uint32_t h_pos;
  std::vector<uint32_t> omega;  // J codes, sorted
  size_t class_index;
};

/// alpha = (e, theta, omega*): idempotent index, character of H(e) (as zeta
/// exponents per view position, meaningful on H(e) only), and a regular orbit
/// in J_e^*.
struct ATriple {
  size_t e_index;
  size_t theta_index;
  std::vector<uint32_t> theta_exp;  // per view position
  std::vector<uint32_t> omega_star;  // J* codes, sorted
};

/// The finite group of triangular type G = H + J with its auxiliary group of
/// triples, orbit enumeration, superclasses, and the triple bijections.
/// Derived structures are computed on demand and cached.
class TriangularGroup {
 public:
  TriangularGroup(std::shared_ptr<const FieldSpec> F, NilpotentAlgebra J, HView H, HAction act,
                  uint32_t ambient_order = 0);

  const FieldSpec& field() const { return *F_; }
  std::shared_ptr<const FieldSpec> field_ptr() const { return F_; }
  const NilpotentAlgebra& J() const { return J_; }
  const HView& H() const { return H_; }
  const HAction& action() const { return act_; }
  uint32_t ambient_order() const { return n_; }

  uint32_t q() const { return F_->q(); }
  uint32_t dim() const { return J_.dim(); }
  uint32_t j_points() const { return jpoints_; }
  uint32_t h_size() const { return H_.size(); }
  uint32_t size() const { return gsize_; }

  const ValidationReport& validation() const { return report_; }

  // ---- J vectors and linear forms by code ----
  uint32_t encode_j(const FqVec& v) const;
  FqVec decode_j(uint32_t code) const;
  /// Code of the i-th basis vector of J.
  uint32_t j_unit(uint32_t i) const { return qpow_[i]; }
  uint32_t j_add(uint32_t a, uint32_t b) const;
  uint32_t j_neg(uint32_t a) const;
  uint32_t j_scale(uint16_t c, uint32_t a) const;
  uint32_t j_mul(uint32_t a, uint32_t b) const;
  /// J part of (1+x)^{-1}.
  uint32_t n_inv(uint32_t x) const;
  uint32_t act_left(uint32_t h_pos, uint32_t x) const;
  uint32_t act_right(uint32_t h_pos, uint32_t x) const;
  /// lam(x) as a field code.
  uint16_t pair(uint32_t lam, uint32_t x) const;

  // ---- group elements: code = h_pos * j_points() + x_code ----
  uint32_t gcode(uint32_t h_pos, uint32_t x_code) const { return h_pos * jpoints_ + x_code; }
  uint32_t hpart(uint32_t g) const { return g / jpoints_; }
  uint32_t xpart(uint32_t g) const { return g % jpoints_; }
  uint32_t identity() const { return gcode(H_.identity_pos(), 0); }
  uint32_t mul(uint32_t g1, uint32_t g2) const;
  uint32_t inv(uint32_t g) const;

  // ---- the group of triples ----
  struct Gt {
    uint32_t t;  // view position
    uint32_t a;  // J code of a - 1
    uint32_t b;  // J code of b - 1
  };
  Gt gt_identity() const { return {H_.identity_pos(), 0, 0}; }
  Gt gt_mul(const Gt& x, const Gt& y) const;
  Gt gt_inv(const Gt& x) const;
  /// rho_tau(x) = t a x b^{-1} t^{-1}.
  uint32_t rho(const Gt& tau, uint32_t x) const;
  /// rho*_tau(lam) = lam o rho_{tau^{-1}}.
  uint32_t rho_dual(const Gt& tau, uint32_t lam) const;
  /// R_tau(g) = 1 + t a (g-1) b^{-1} t^{-1}.
  uint32_t R_act(const Gt& tau, uint32_t g) const;

  /// BFS generator set: H generators plus 1 + c*v for v running over bases of
  /// the powers J^k and c over F_q^*, on each side.
  const std::vector<Gt>& gt_generators();

  // ---- lattice, Pierce ----
  /// Injects a precomputed lattice (subgroup theories receive the filtered
  /// lattice of their parent). Must precede any lattice-dependent call.
  void set_lattice(IdempotentLattice lat);
  const IdempotentLattice& lattice();
  const PierceData& pierce(size_t e_index);
  /// x in J_e, i.e. exe = x.
  bool in_je(size_t e_index, uint32_t x_code);
  /// lam in J_e^*, i.e. lam o P_e = lam.
  bool in_jestar(size_t e_index, uint32_t lam_code);

  // ---- orbits ----
  const std::vector<Orbit>& orbits_j();
  const std::vector<Orbit>& orbits_jstar();

  struct EOrbits {
    std::vector<Orbit> orbits;                      // partition of J_e (or J_e^*)
    std::unordered_map<uint32_t, size_t> orbit_of;  // point code -> orbit index
    std::vector<size_t> regular;                    // indices of regular orbits
  };
  const EOrbits& orbits_je(size_t e_index);
  const EOrbits& orbits_jestar(size_t e_index);

  // ---- superclasses and triples ----
  const std::vector<Orbit>& superclasses();
  uint32_t class_of(uint32_t g_code);

  const std::vector<BTriple>& b_triples();
  /// Forward direction of the bijection, computed from the class members
  /// (not by lookup in b_triples); throws consistency_error unless exactly
  /// one triple matches.
  BTriple triple_of_superclass(size_t class_index);
  size_t superclass_of_triple(size_t e_index, uint32_t h_pos, uint32_t omega_rep);

  const std::vector<ATriple>& a_triples();
  /// Characters of H(e), sorted; each entry holds zeta_n exponents indexed by
  /// view position (valid on H(e) positions).
  const std::vector<std::vector<uint32_t>>& characters_of_he(size_t e_index);

  /// s^{-1} g s for all s, cached when |G|^2 is small.
  const std::vector<uint32_t>* conjugate_row(uint32_t g);

 private:
  void ensure_lattice();
  std::vector<Gt> je_generators(size_t e_index);

  std::shared_ptr<const FieldSpec> F_;
  NilpotentAlgebra J_;
  HView H_;
  HAction act_;
  uint32_t n_;
  uint32_t jpoints_ = 1;
  uint32_t gsize_ = 0;
  std::vector<uint32_t> qpow_;
  ValidationReport report_;

  std::vector<Gt> gens_;
  bool gens_built_ = false;

  std::unique_ptr<IdempotentLattice> lattice_;
  std::map<size_t, PierceData> pierce_;
  std::map<size_t, EOrbits> eorbits_, eorbits_star_;
  std::vector<Orbit> orbits_j_, orbits_jstar_;
  bool orbits_built_ = false, orbits_star_built_ = false;
  std::vector<Orbit> classes_;
  std::vector<uint32_t> class_of_;
  bool classes_built_ = false;
  std::vector<BTriple> b_triples_;
  bool b_triples_built_ = false;
  std::vector<ATriple> a_triples_;
  bool a_triples_built_ = false;
  std::map<size_t, std::vector<std::vector<uint32_t>>> he_chars_;
  std::vector<std::vector<uint32_t>> conj_rows_;
  bool conj_rows_built_ = false;
};

/// Partition of `points` into orbits under the closure of the given maps.
std::vector<Orbit> bfs_orbits(const std::vector<uint32_t>& points,
                              const std::vector<std::function<uint32_t(uint32_t)>>& maps);

}  // namespace trichar
