#include "trichar/fq_linalg.hpp"

#include <algorithm>

#include "trichar/errors.hpp"

namespace trichar {

FqMat FqMat::identity(uint32_t n) {
  FqMat m(n, n);
  for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMat mat_add(const FieldSpec& F, const FqMat& x, const FqMat& y) {
  FqMat out(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.add(x.a[i], y.a[i]);
  return out;
}

FqMat mat_sub(const FieldSpec& F, const FqMat& x, const FqMat& y) {
  FqMat out(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) out.a[i] = F.sub(x.a[i], y.a[i]);
  return out;
}

FqMat mat_mul(const FieldSpec& F, const FqMat& x, const FqMat& y) {
  FqMat out(x.rows, y.cols);
  for (uint32_t i = 0; i < x.rows; ++i)
    for (uint32_t k = 0; k < x.cols; ++k) {
      uint16_t v = x.at(i, k);
      if (v == 0) continue;
      for (uint32_t j = 0; j < y.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(v, y.at(k, j)));
    }
  return out;
}

FqMat mat_scale(const FieldSpec& F, uint16_t c, const FqMat& x) {
  FqMat out = x;
  for (auto& v : out.a) v = F.mul(c, v);
  return out;
}

FqMat transpose(const FqMat& x) {
  FqMat out(x.cols, x.rows);
  for (uint32_t i = 0; i < x.rows; ++i)
    for (uint32_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

FqVec mat_apply(const FieldSpec& F, const FqMat& x, const FqVec& v) {
  FqVec out(x.rows, 0);
  for (uint32_t i = 0; i < x.rows; ++i) {
    uint16_t acc = 0;
    for (uint32_t j = 0; j < x.cols; ++j) acc = F.add(acc, F.mul(x.at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

std::vector<uint32_t> rref(const FieldSpec& F, FqMat& m) {
  std::vector<uint32_t> pivots;
  uint32_t row = 0;
  for (uint32_t col = 0; col < m.cols && row < m.rows; ++col) {
    uint32_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    for (uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    uint16_t inv = F.inv(m.at(row, col));
    for (uint32_t j = 0; j < m.cols; ++j) m.at(row, j) = F.mul(inv, m.at(row, j));
    for (uint32_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      uint16_t f = m.at(i, col);
      if (f == 0) continue;
      for (uint32_t j = 0; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

FqMat kernel_basis(const FieldSpec& F, FqMat m) {
  uint32_t n = m.cols;
  std::vector<uint32_t> pivots = rref(F, m);
  std::vector<bool> is_pivot(n, false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  FqMat out(n - static_cast<uint32_t>(pivots.size()), n);
  uint32_t r = 0;
  for (uint32_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(r, free_col) = 1;
    for (uint32_t pi = 0; pi < pivots.size(); ++pi)
      out.at(r, pivots[pi]) = F.neg(m.at(pi, free_col));
    ++r;
  }
  // rows are already in RREF shape up to row order; normalize ordering
  FqMat canon = out;
  rref(F, canon);
  return canon;
}

bool invertible(const FieldSpec& F, FqMat m) {
  if (m.rows != m.cols) return false;
  return rref(F, m).size() == m.rows;
}

FqMat inverse_matrix(const FieldSpec& F, FqMat m) {
  if (m.rows != m.cols) throw usage_error("matrix inverse requires a square matrix");
  uint32_t n = m.rows;
  FqMat aug(n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(F, aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw domain_error("matrix is singular");
  FqMat out(n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

Subspace::Subspace(const FieldSpec& F, uint32_t ambient_dim, const std::vector<FqVec>& vectors)
    : ambient_(ambient_dim) {
  FqMat m(static_cast<uint32_t>(vectors.size()), ambient_dim);
  for (uint32_t i = 0; i < vectors.size(); ++i)
    for (uint32_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
  pivots_ = rref(F, m);
  basis_ = FqMat(static_cast<uint32_t>(pivots_.size()), ambient_dim);
  for (uint32_t i = 0; i < pivots_.size(); ++i)
    for (uint32_t j = 0; j < ambient_dim; ++j) basis_.at(i, j) = m.at(i, j);
}

bool Subspace::contains(const FieldSpec& F, const FqVec& v) const {
  FqVec rem = v;
  for (uint32_t i = 0; i < basis_.rows; ++i) {
    uint16_t c = rem[pivots_[i]];
    if (c == 0) continue;
    for (uint32_t j = 0; j < ambient_; ++j) rem[j] = F.sub(rem[j], F.mul(c, basis_.at(i, j)));
  }
  return std::all_of(rem.begin(), rem.end(), [](uint16_t x) { return x == 0; });
}

bool Subspace::contains_subspace(const FieldSpec& F, const Subspace& other) const {
  for (uint32_t i = 0; i < other.basis_.rows; ++i) {
    FqVec row(other.basis_.a.begin() + size_t(i) * ambient_,
              other.basis_.a.begin() + size_t(i + 1) * ambient_);
    if (!contains(F, row)) return false;
  }
  return true;
}

FqVec Subspace::coords_of(const FieldSpec& F, const FqVec& v) const {
  FqVec coords(basis_.rows, 0);
  FqVec rem = v;
  for (uint32_t i = 0; i < basis_.rows; ++i) {
    uint16_t c = rem[pivots_[i]];
    coords[i] = c;
    if (c == 0) continue;
    for (uint32_t j = 0; j < ambient_; ++j) rem[j] = F.sub(rem[j], F.mul(c, basis_.at(i, j)));
  }
  if (!std::all_of(rem.begin(), rem.end(), [](uint16_t x) { return x == 0; }))
    throw domain_error("vector lies outside the subspace");
  return coords;
}

std::vector<FqVec> Subspace::enumerate(const FieldSpec& F) const {
  std::vector<FqVec> out;
  uint64_t total = 1;
  for (uint32_t i = 0; i < dim(); ++i) total *= F.q();
  out.reserve(total);
  FqVec coeff(dim(), 0);
  for (uint64_t it = 0; it < total; ++it) {
    FqVec v(ambient_, 0);
    for (uint32_t i = 0; i < dim(); ++i) {
      if (coeff[i] == 0) continue;
      for (uint32_t j = 0; j < ambient_; ++j)
        v[j] = F.add(v[j], F.mul(coeff[i], basis_.at(i, j)));
    }
    out.push_back(std::move(v));
    for (uint32_t i = 0; i < dim(); ++i) {
      if (++coeff[i] < F.q()) break;
      coeff[i] = 0;
    }
  }
  return out;
}

void enumerate_subspaces(const FieldSpec& F, uint32_t dim, uint32_t k,
                         const std::function<void(const FqMat&)>& visit) {
  if (k > dim) return;
  if (k == 0) {
    visit(FqMat(0, dim));
    return;
  }
  // choose pivot columns p_1 < ... < p_k, then fill free entries: row i may
  // have arbitrary values in columns > p_i that are not pivots.
  std::vector<uint32_t> piv(k);
  std::function<void(uint32_t, uint32_t)> choose = [&](uint32_t idx, uint32_t start) {
    if (idx == k) {
      std::vector<std::pair<uint32_t, uint32_t>> free_cells;
      std::vector<bool> is_piv(dim, false);
      for (uint32_t c : piv) is_piv[c] = true;
      for (uint32_t i = 0; i < k; ++i)
        for (uint32_t c = piv[i] + 1; c < dim; ++c)
          if (!is_piv[c]) free_cells.emplace_back(i, c);
      FqMat m(k, dim);
      for (uint32_t i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
      uint64_t total = 1;
      for (size_t i = 0; i < free_cells.size(); ++i) total *= F.q();
      std::vector<uint16_t> fill(free_cells.size(), 0);
      for (uint64_t it = 0; it < total; ++it) {
        for (size_t i = 0; i < free_cells.size(); ++i)
          m.at(free_cells[i].first, free_cells[i].second) = fill[i];
        visit(m);
        for (size_t i = 0; i < fill.size(); ++i) {
          if (++fill[i] < F.q()) break;
          fill[i] = 0;
        }
      }
      return;
    }
    for (uint32_t c = start; c + (k - idx) <= dim; ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return;
}

}  // namespace trichar
