#include "trichar/families.hpp"

#include <map>

namespace trichar {

namespace {

struct UTBasis {
  uint32_t n;
  std::vector<std::pair<uint32_t, uint32_t>> positions;  // (row, col), row < col
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> index;

  explicit UTBasis(uint32_t nn) : n(nn) {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j) {
        index[{i, j}] = static_cast<uint32_t>(positions.size());
        positions.emplace_back(i, j);
      }
  }
  uint32_t dim() const { return static_cast<uint32_t>(positions.size()); }
};

std::vector<uint16_t> ut_structure(const UTBasis& basis) {
  uint32_t d = basis.dim();
  std::vector<uint16_t> sc(size_t(d) * d * d, 0);
  for (uint32_t a = 0; a < d; ++a)
    for (uint32_t b = 0; b < d; ++b) {
      auto [i, j] = basis.positions[a];
      auto [k, l] = basis.positions[b];
      if (j != k) continue;  // E_ij E_kl = delta_jk E_il
      sc[(size_t(a) * d + b) * d + basis.index.at({i, l})] = 1;
    }
  return sc;
}

}  // namespace

std::shared_ptr<TriangularGroup> build_ut(uint32_t n, uint32_t q) {
  if (n < 2) throw usage_error("ut family requires n >= 2");
  auto F = FieldSpec::make(q);
  UTBasis basis(n);
  NilpotentAlgebra J(F, basis.dim(), ut_structure(basis));
  auto root = std::make_shared<const AbelianGroup>(std::vector<uint32_t>{});
  HView view = HView::full(root);
  HAction act = HAction::from_generators(*F, view, basis.dim(), {}, {});
  return std::make_shared<TriangularGroup>(F, std::move(J), std::move(view), std::move(act));
}

std::shared_ptr<TriangularGroup> build_t(uint32_t n, uint32_t q) {
  if (n < 2) throw usage_error("t family requires n >= 2");
  auto F = FieldSpec::make(q);
  UTBasis basis(n);
  NilpotentAlgebra J(F, basis.dim(), ut_structure(basis));
  auto root = std::make_shared<const AbelianGroup>(std::vector<uint32_t>(n, q - 1));
  HView view = HView::full(root);
  uint16_t gamma = F->primitive_element();
  std::vector<FqMat> lg, rg;
  for (uint32_t slot = 0; slot < n; ++slot) {
    if (q - 1 <= 1) continue;  // trivial factors carry no generator
    FqMat L = FqMat::identity(basis.dim()), R = FqMat::identity(basis.dim());
    for (uint32_t b = 0; b < basis.dim(); ++b) {
      auto [i, j] = basis.positions[b];
      if (i == slot) L.at(b, b) = gamma;  // diag(.., gamma, ..) E_ij = gamma^{[i=slot]} E_ij
      if (j == slot) R.at(b, b) = gamma;
    }
    lg.push_back(std::move(L));
    rg.push_back(std::move(R));
  }
  HAction act = HAction::from_generators(*F, view, basis.dim(), lg, rg);
  return std::make_shared<TriangularGroup>(F, std::move(J), std::move(view), std::move(act));
}

std::shared_ptr<TriangularGroup> build_affine(uint32_t q) {
  auto F = FieldSpec::make(q);
  // J = span(E_12) inside 2x2 upper triangular with unit lower-right corner
  std::vector<uint16_t> sc(1, 0);  // J^2 = 0
  NilpotentAlgebra J(F, 1, std::move(sc));
  auto root = std::make_shared<const AbelianGroup>(std::vector<uint32_t>{q - 1});
  HView view = HView::full(root);
  uint16_t gamma = F->primitive_element();
  std::vector<FqMat> lg, rg;
  if (q - 1 > 1) {
    FqMat L(1, 1), R(1, 1);
    L.at(0, 0) = gamma;  // diag(a, 1) E_12 = a E_12
    R.at(0, 0) = 1;      // E_12 diag(a, 1) = E_12
    lg.push_back(std::move(L));
    rg.push_back(std::move(R));
  }
  HAction act = HAction::from_generators(*F, view, 1, lg, rg);
  return std::make_shared<TriangularGroup>(F, std::move(J), std::move(view), std::move(act));
}

std::shared_ptr<TriangularGroup> build_family(const std::string& name, uint32_t n, uint32_t q) {
  if (name == "ut") return build_ut(n, q);
  if (name == "t") return build_t(n, q);
  if (name == "affine") return build_affine(q);
  throw usage_error("unknown builtin family: " + name + " (supported: ut, t, affine)");
}

}  // namespace trichar
