#pragma once

#include <memory>
#include <string>

#include "trichar/group.hpp"

namespace trichar {

/// UT(n, q): the algebra group 1 + J for J the strictly upper triangular
/// n x n matrices; H is trivial.
std::shared_ptr<TriangularGroup> build_ut(uint32_t n, uint32_t q);

/// T(n, q): invertible upper triangular matrices, H = (F_q^*)^n diagonal
/// acting by matrix multiplication on the strictly upper triangular J.
std::shared_ptr<TriangularGroup> build_t(uint32_t n, uint32_t q);

/// The affine group {{a, b; 0, 1}} with a in F_q^*, b in F_q: H = F_q^*,
/// dim J = 1.
std::shared_ptr<TriangularGroup> build_affine(uint32_t q);

/// Dispatch by family name ("ut", "t", "affine").
std::shared_ptr<TriangularGroup> build_family(const std::string& name, uint32_t n, uint32_t q);

}  // namespace trichar
