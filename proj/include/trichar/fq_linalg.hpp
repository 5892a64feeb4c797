#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trichar/finite_field.hpp"

namespace trichar {

using FqVec = std::vector<uint16_t>;

/// Dense row-major matrix over F_q (codes).
struct FqMat {
  uint32_t rows = 0, cols = 0;
  std::vector<uint16_t> a;

  FqMat() = default;
  FqMat(uint32_t r, uint32_t c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

  uint16_t& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
  uint16_t at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }

  static FqMat identity(uint32_t n);
  friend bool operator==(const FqMat& x, const FqMat& y) = default;
};

FqMat mat_add(const FieldSpec& F, const FqMat& x, const FqMat& y);
FqMat mat_sub(const FieldSpec& F, const FqMat& x, const FqMat& y);
FqMat mat_mul(const FieldSpec& F, const FqMat& x, const FqMat& y);
FqMat mat_scale(const FieldSpec& F, uint16_t c, const FqMat& x);
FqMat transpose(const FqMat& x);
FqVec mat_apply(const FieldSpec& F, const FqMat& x, const FqVec& v);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<uint32_t> rref(const FieldSpec& F, FqMat& m);

/// Basis of {v : m v = 0} as canonical RREF rows.
FqMat kernel_basis(const FieldSpec& F, FqMat m);

bool invertible(const FieldSpec& F, FqMat m);
FqMat inverse_matrix(const FieldSpec& F, FqMat m);

/// A linear subspace of F_q^dim held as a canonical RREF basis, so equal
/// subspaces compare equal member-wise.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given row vectors.
  Subspace(const FieldSpec& F, uint32_t ambient_dim, const std::vector<FqVec>& vectors);

  uint32_t ambient() const { return ambient_; }
  uint32_t dim() const { return basis_.rows; }
  const FqMat& basis() const { return basis_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

  bool contains(const FieldSpec& F, const FqVec& v) const;
  bool contains_subspace(const FieldSpec& F, const Subspace& other) const;
  /// Coordinates of v in the RREF basis; requires contains(v).
  FqVec coords_of(const FieldSpec& F, const FqVec& v) const;

  /// All q^dim member vectors, in deterministic order.
  std::vector<FqVec> enumerate(const FieldSpec& F) const;

  friend bool operator==(const Subspace& x, const Subspace& y) = default;

 private:
  uint32_t ambient_ = 0;
  FqMat basis_;  // RREF rows
  std::vector<uint32_t> pivots_;
};

/// Calls visit(basis rows) for every k-dimensional subspace of F_q^dim,
/// enumerating canonical RREF bases. Exhaustive; intended for small spaces.
void enumerate_subspaces(const FieldSpec& F, uint32_t dim, uint32_t k,
                         const std::function<void(const FqMat&)>& visit);

}  // namespace trichar
