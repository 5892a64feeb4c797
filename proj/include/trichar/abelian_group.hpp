#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "trichar/errors.hpp"

namespace trichar {

/// Finite abelian group given by cyclic-factor orders (d_1, ..., d_r).
/// Elements are exponent tuples, addressed by mixed-radix index.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<uint32_t> orders);

  const std::vector<uint32_t>& orders() const { return orders_; }
  uint32_t size() const { return size_; }
  uint32_t exponent() const { return exponent_; }
  uint32_t identity() const { return 0; }

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;

  std::vector<uint32_t> tuple_of(uint32_t index) const;
  uint32_t index_of(const std::vector<uint32_t>& tuple) const;

  /// Indices of the standard generators (one per nontrivial cyclic factor).
  std::vector<uint32_t> generators() const;

  /// The characters of the group are indexed by the same element space:
  /// chi_a(h) = zeta_n ^ char_exponent(a, h, n). Requires exponent() | n.
  uint32_t char_exponent(uint32_t a, uint32_t h, uint32_t n) const;

 private:
  std::vector<uint32_t> orders_;
  uint32_t size_;
  uint32_t exponent_;
};

/// A subgroup of a root AbelianGroup, with local indexing and a local
/// multiplication table. The whole group is the trivial view of itself, so
/// all H-side machinery runs uniformly on views.
class HView {
 public:
  static HView full(std::shared_ptr<const AbelianGroup> root);
  /// Subgroup generated by the given root indices.
  static HView subgroup(std::shared_ptr<const AbelianGroup> root,
                        const std::vector<uint32_t>& generator_indices);

  const AbelianGroup& root() const { return *root_; }
  std::shared_ptr<const AbelianGroup> root_ptr() const { return root_; }
  uint32_t size() const { return static_cast<uint32_t>(elems_.size()); }

  /// Root index of the local element at position i (sorted ascending).
  uint32_t root_index(uint32_t i) const { return elems_[i]; }
  /// Local position of a root index, or -1 if outside the subgroup.
  int32_t position(uint32_t root_index) const { return pos_[root_index]; }
  bool contains_root(uint32_t root_index) const { return pos_[root_index] >= 0; }

  uint32_t identity_pos() const { return id_pos_; }
  uint32_t mul(uint32_t i, uint32_t j) const { return mul_[size_t(i) * size() + j]; }
  uint32_t inv(uint32_t i) const { return inv_[i]; }

  /// Local positions of the generating set (may be empty for the trivial
  /// group).
  const std::vector<uint32_t>& generator_positions() const { return gen_pos_; }

  /// True if both views see the same element set of the same root.
  bool same_elements(const HView& other) const;

 private:
  HView(std::shared_ptr<const AbelianGroup> root, std::vector<uint32_t> elems,
        std::vector<uint32_t> gen_roots);
  std::shared_ptr<const AbelianGroup> root_;
  std::vector<uint32_t> elems_;     // sorted root indices
  std::vector<int32_t> pos_;        // root index -> local position
  std::vector<uint32_t> gen_pos_;   // local positions of generators
  std::vector<uint32_t> mul_, inv_;
  uint32_t id_pos_ = 0;
};

/// Closure of a set of root indices under the group operation.
std::vector<uint32_t> subgroup_closure(const AbelianGroup& g, std::vector<uint32_t> seeds);

/// Every subgroup of the root group, as sorted element-index vectors, in a
/// deterministic order (by size, then lexicographically).
std::vector<std::vector<uint32_t>> all_subgroups(const AbelianGroup& g);

/// All characters of the subgroup of `view` spanned by the given local
/// positions, each as exponent-per-member (zeta_n exponents, members in the
/// order of `members`). Computed by restricting the root group's characters
/// and deduplicating; the count always equals the subgroup order.
std::vector<std::vector<uint32_t>> characters_of_subgroup(const HView& view,
                                                          const std::vector<uint32_t>& members,
                                                          uint32_t n);

}  // namespace trichar
