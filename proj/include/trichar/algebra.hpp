#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trichar/abelian_group.hpp"
#include "trichar/fq_linalg.hpp"

namespace trichar {

/// Associative nilpotent algebra J over F_q, by structure constants:
/// u_i u_j = sum_k sc(i,j,k) u_k.
class NilpotentAlgebra {
 public:
  NilpotentAlgebra() = default;
  NilpotentAlgebra(std::shared_ptr<const FieldSpec> field, uint32_t dim,
                   std::vector<uint16_t> structure);

  const FieldSpec& field() const { return *F_; }
  std::shared_ptr<const FieldSpec> field_ptr() const { return F_; }
  uint32_t dim() const { return d_; }
  uint16_t sc(uint32_t i, uint32_t j, uint32_t k) const {
    return sc_[(size_t(i) * d_ + j) * d_ + k];
  }

  FqVec mul(const FqVec& x, const FqVec& y) const;

  /// Witness (i, j, k) of an associativity failure on basis triples, if any.
  std::optional<std::array<uint32_t, 3>> associativity_witness() const;

  /// Descending chain J = J^1 >= J^2 >= ...; stops at the first repeat.
  /// Nilpotent iff the chain reaches the zero subspace.
  std::vector<Subspace> power_chain() const;
  /// Least s with J^s = 0, or nullopt if the chain stabilizes above zero.
  std::optional<uint32_t> nilpotency_index() const;

 private:
  std::shared_ptr<const FieldSpec> F_;
  uint32_t d_ = 0;
  std::vector<uint16_t> sc_;
};

/// Left and right actions of the H elements of a view on J, as one matrix per
/// view element (so composite elements need no recomputation). Built either
/// from generator matrices (root groups) or by restriction (subgroups).
struct HAction {
  std::vector<FqMat> left;   // per view position
  std::vector<FqMat> right;  // per view position

  const FqMat& L(uint32_t pos) const { return left[pos]; }
  const FqMat& R(uint32_t pos) const { return right[pos]; }

  /// Expands generator matrices to all elements of a full root view; the
  /// generator order must match view.generator_positions().
  static HAction from_generators(const FieldSpec& F, const HView& view, uint32_t dim,
                                 const std::vector<FqMat>& left_gen,
                                 const std::vector<FqMat>& right_gen);
};

struct ValidationItem {
  std::string name;
  bool ok;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;
  void add(std::string name, bool ok, std::string detail = "");
};

/// Checks every axiom of a triangular-type datum and reports violations with
/// witnesses. Never throws.
ValidationReport validate_structure(const NilpotentAlgebra& J, const HView& H, const HAction& act);

/// Element of the group algebra kH' of a view: one field code per view
/// position.
using KHVec = std::vector<uint16_t>;

KHVec kh_zero(const HView& view);
KHVec kh_one(const HView& view);
KHVec kh_add(const FieldSpec& F, const KHVec& a, const KHVec& b);
KHVec kh_sub(const FieldSpec& F, const KHVec& a, const KHVec& b);
KHVec kh_scale(const FieldSpec& F, uint16_t c, const KHVec& a);
KHVec kh_mul(const FieldSpec& F, const HView& view, const KHVec& a, const KHVec& b);
/// Group element (by view position) times algebra element.
KHVec kh_mul_elem(const HView& view, uint32_t pos, const KHVec& a);
bool kh_is_idempotent(const FieldSpec& F, const HView& view, const KHVec& a);

/// The idempotents of kH': pairwise orthogonal primitives summing to 1, and
/// the full lattice of their 2^n subset sums, ordered by (popcount, mask).
/// e <= f iff ef = e iff mask(e) subset mask(f).
class IdempotentLattice {
 public:
  struct Entry {
    uint32_t mask;  // subset of primitives
    KHVec vec;
  };

  size_t primitive_count() const { return primitives_.size(); }
  const KHVec& primitive(size_t i) const { return primitives_[i]; }
  size_t size() const { return all_.size(); }
  const Entry& at(size_t i) const { return all_[i]; }
  size_t zero_index() const { return 0; }
  size_t one_index() const { return all_.size() - 1; }
  bool leq(size_t i, size_t j) const { return (all_[i].mask & ~all_[j].mask) == 0; }

  /// Primitive idempotents of the root group algebra, by factoring
  /// x^{d_i} - 1 over F_q for every cyclic factor and combining across the
  /// tensor decomposition. Requires p not dividing |H|.
  static IdempotentLattice for_root(const FieldSpec& F, const HView& view);

  /// Lattice of a subgroup view: the idempotents of the parent lattice whose
  /// support lies inside the subgroup, re-indexed locally. Every idempotent
  /// of kH' is such an idempotent of kH, so this is the whole lattice.
  static IdempotentLattice for_subview(const FieldSpec& F, const IdempotentLattice& parent,
                                       const HView& parent_view, const HView& child_view);

 private:
  void assemble(const FieldSpec& F, const HView& view, std::vector<KHVec> primitives);
  std::vector<KHVec> primitives_;
  std::vector<Entry> all_;
};

/// Pierce data of one idempotent e: the mult-by-e matrices, the four
/// components eJe, eJe', e'Je, e'Je', the subgroup H(e) = {h : he = e}, and
/// J_e = eJe as a nilpotent algebra of its own with the restricted actions.
struct PierceData {
  FqMat L, R;        // x -> e x and x -> x e on J
  FqMat P;           // x -> e x e
  Subspace comp[4];  // eJe, eJe', e'Je, e'Je'
  std::vector<uint32_t> He;          // view positions, sorted
  std::vector<uint8_t> He_mask;      // per view position
  uint32_t He_image_size = 0;        // |H_e| = |H| / |H(e)|

  // J_e in its own coordinates (basis = comp[0] rows)
  NilpotentAlgebra Je;
  FqMat embed;    // dim(J) x dim(Je): basis columns
  FqMat coords;   // dim(Je) x dim(J): x -> coordinates of e x e
  std::vector<FqMat> JeL, JeR;  // per view position, restricted actions on J_e
};

PierceData compute_pierce(const NilpotentAlgebra& J, const HView& view, const HAction& act,
                          const KHVec& e);

struct InvariantSubalgebras {
  std::vector<Subspace> all;        // proper invariant subalgebras (including zero)
  std::vector<size_t> maximal;      // indices into all
};

/// All proper H'xH'-invariant subalgebras of J by exhaustive subspace
/// enumeration, with the maximal ones flagged. Asserts J^2 <= J' for every
/// maximal one. Capability-guarded.
InvariantSubalgebras invariant_subalgebras(const NilpotentAlgebra& J, const HView& view,
                                           const HAction& act);

}  // namespace trichar
