#pragma once

#include "trichar/cyclotomic.hpp"
#include "trichar/group.hpp"

namespace trichar {

/// Right/left stabilizer data of a linear form lam in J^*.
struct Stabilizers {
  Subspace j_rt;                 // {y : lam(yJ) = 0}
  std::vector<uint32_t> h_rt;    // {h : lam(h.) = lam}, view positions
  std::vector<uint32_t> h_lt;    // {h : lam(.h) = lam}
};

Stabilizers right_stabilizers(TriangularGroup& G, uint32_t lam);

/// Both sides of the perpendicularity lemma: the annihilator of J_{lam,rt}
/// in J^* and the translate space J lam = {y lam}. They must coincide.
std::pair<Subspace, Subspace> perp_sides(TriangularGroup& G, uint32_t lam);
bool perp_check(TriangularGroup& G, uint32_t lam);

/// The subgroup G_alpha = H(e) + J_{lam,rt} together with everything needed
/// to evaluate xi_{theta,lam} on it in zeta-exponent form.
struct GAlpha {
  size_t e_index = 0;
  uint32_t lambda = 0;
  Subspace j_rt;
  std::vector<uint8_t> member_mask;  // over G codes
  uint32_t size = 0;
  std::vector<uint32_t> theta_exp;  // zeta_n exponent per view position (valid on H(e))
};

GAlpha build_g_alpha(TriangularGroup& G, const ATriple& alpha, uint32_t lambda);

/// zeta_n exponent of xi_{theta,lam}(g); domain_error if g is outside G_alpha.
uint32_t xi_exponent(TriangularGroup& G, const GAlpha& A, uint32_t g);
Cyclotomic xi_value(TriangularGroup& G, const GAlpha& A, uint32_t g);

/// Ind(xi, sub, G)(g) = |sub|^{-1} sum_s xi_dot(s^{-1} g s), evaluated at one
/// element. The supercharacter fast path tallies root-of-unity exponents.
Cyclotomic induced_value_at(TriangularGroup& G, const GAlpha& A, uint32_t g);

/// Generic induction of an arbitrary (cyclotomic-valued) function from an
/// arbitrary subgroup, per element. Test-oriented reference path.
std::vector<Cyclotomic> induce_function(TriangularGroup& G, const std::vector<uint8_t>& sub_mask,
                                        const std::function<Cyclotomic(uint32_t)>& xi);

/// Standard scalar product of two superclass functions given per class:
/// (f1, f2) = |G|^{-1} sum_g f1(g) conj(f2(g)).
Cyclotomic inner_product(TriangularGroup& G, const std::vector<Cyclotomic>& f1,
                         const std::vector<Cyclotomic>& f2);

struct SupercharacterTable {
  TriangularGroup* G = nullptr;
  std::vector<ATriple> rows;
  std::vector<uint32_t> lambda;                    // canonical representative per row
  std::vector<std::vector<Cyclotomic>> entries;    // row -> per-class values
  std::vector<Int> degrees;                        // chi(1) = |G| / |G_alpha|
  std::vector<Rational> norms;                     // (chi, chi), positive integers

  size_t row_count() const { return rows.size(); }
  size_t col_count() const { return entries.empty() ? 0 : entries[0].size(); }
};

/// Builds every supercharacter row (one per A-triple, canonical lambda, with
/// an independence check against a second representative). Asserts the table
/// is square and the degrees are exact. `jobs` parallelizes row evaluation.
SupercharacterTable enumerate_supercharacters(TriangularGroup& G, int jobs = 1);

/// The supercharacter-theory axioms and bookkeeping identities, as a report:
/// square table, exact pairwise disjointness, constancy on superclasses (all
/// elements), {1} a superclass, the regular-character identity, integral
/// values, and positive integer degrees/norms.
ValidationReport verify_table_axioms(SupercharacterTable& table);

/// The regular character as a per-class value vector: |G| at {1}, 0 elsewhere.
std::vector<Cyclotomic> regular_character(TriangularGroup& G);
std::vector<Cyclotomic> one_character(TriangularGroup& G);

}  // namespace trichar
