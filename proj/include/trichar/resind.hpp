#pragma once

#include "trichar/characters.hpp"

namespace trichar {

/// External description of a triangular-type subgroup G' = H' + J':
/// generators of H' as root exponent tuples and a spanning set of J' in the
/// coordinates of J.
struct SubgroupSpec {
  std::vector<std::vector<uint32_t>> h_generators;
  std::vector<FqVec> j_basis;
  std::string label;
};

/// A validated subgroup with its own supercharacter theory and the embedding
/// back into the parent group.
struct TriangularSubgroup {
  std::shared_ptr<TriangularGroup> theory;
  std::string label;
  std::vector<uint32_t> h_map;        // subgroup view position -> parent view position
  FqMat embed_j;                      // parent_dim x sub_dim
  std::vector<uint8_t> parent_mask;   // parent codes belonging to G'
  std::vector<int64_t> parent_to_sub; // parent code -> subgroup code (or -1)

  uint32_t embed_element(const TriangularGroup& parent, uint32_t sub_code) const;
};

/// Validates the spec (J' multiplicatively closed and H'xH'-invariant, H' a
/// subgroup of the parent's H part) and builds the recursive theory.
TriangularSubgroup build_subgroup(TriangularGroup& G, const SubgroupSpec& spec);

/// Convenience specs: G' = N (trivial H part, full J), and G' = G itself.
SubgroupSpec spec_unipotent_radical(TriangularGroup& G);
SubgroupSpec spec_whole_group(TriangularGroup& G);
/// G' = H' + J for a subgroup H' given by root indices.
SubgroupSpec spec_h_subgroup(TriangularGroup& G, const std::vector<uint32_t>& h_root_elems,
                             const std::string& label);
/// G' = H + J' for a subspace J'.
SubgroupSpec spec_j_subalgebra(TriangularGroup& G, const Subspace& jsub, const std::string& label);

/// The deduplicated catalog of test subgroups: N, H'+J for every proper
/// subgroup H' of H, and H+J' for every maximal HxH-invariant subalgebra J'.
std::vector<SubgroupSpec> standard_test_subgroups(TriangularGroup& G);

/// Pointwise restriction of a superclass function (given per parent class)
/// to the subgroup (per subgroup class); asserts constancy.
std::vector<Cyclotomic> restrict_function(TriangularGroup& G, const std::vector<Cyclotomic>& f,
                                          const TriangularSubgroup& sub);

struct Decomposition {
  std::vector<Rational> coeffs;  // one per table row
  /// residual = f - sum coeff * row; must be identically zero, and decompose
  /// throws if it is not.
};

/// Coefficients of f in the supercharacter basis: coeff = (f, chi)/(chi, chi).
/// Throws consistency_error on a nonzero residual or a non-rational
/// coefficient.
Decomposition decompose(TriangularGroup& G, const SupercharacterTable& table,
                        const std::vector<Cyclotomic>& f);

/// SInd phi(g) = |H| / (|G| |G'|) * sum_{tau in Gt} phi_dot(rho(tau)(g)),
/// computed per superclass. The literal triple sum is used when |Gt| is
/// small; the exact orbit-stabilizer refactoring of the same sum otherwise,
/// and both are cross-checked whenever the literal sum is evaluated.
std::vector<Cyclotomic> superinduce(TriangularGroup& G, const TriangularSubgroup& sub,
                                    const std::vector<Cyclotomic>& phi);

struct FrobeniusCheck {
  Cyclotomic lhs, rhs;
  bool equal;
};

/// (SInd phi, psi) vs (phi, Res psi), both sides computed independently.
FrobeniusCheck frobenius_check(TriangularGroup& G, const TriangularSubgroup& sub,
                               const std::vector<Cyclotomic>& phi,
                               const std::vector<Cyclotomic>& psi);

/// Full restriction/superinduction report for one subgroup: the integer
/// matrix m (restrictions), the rational matrix a (superinductions), the
/// reciprocity checks, and the coefficient formula
/// a[eta][alpha] = m[alpha][eta] (phi_eta, phi_eta) / (chi_alpha, chi_alpha).
struct ResIndReport {
  std::string subgroup_label;
  std::vector<std::vector<Rational>> m;  // rows_G x rows_sub, nonnegative integers
  std::vector<std::vector<Rational>> a;  // rows_sub x rows_G, nonnegative rationals
  /// (SInd phi_eta, chi_alpha) - (phi_eta, Res chi_alpha), rendered; all "0".
  std::vector<std::vector<std::string>> reciprocity_residuals;
  bool restriction_ok = true;            // integrality + nonnegativity of m
  bool reciprocity_ok = true;
  bool formula_ok = true;
  std::string detail;
};

ResIndReport resind_report(TriangularGroup& G, SupercharacterTable& gtable,
                           const TriangularSubgroup& sub, SupercharacterTable& subtable);

/// Coefficients a[alpha] of SInd phi_eta in the supercharacter basis of G.
/// Each is verified against the closed form
/// m_{alpha,eta} (phi_eta, phi_eta) / (chi_alpha, chi_alpha) with
/// m_{alpha,eta} = (Res chi_alpha, phi_eta)/(phi_eta, phi_eta), and must be a
/// nonnegative rational.
std::vector<Rational> sind_coefficients(TriangularGroup& G, SupercharacterTable& gtable,
                                        const TriangularSubgroup& sub,
                                        SupercharacterTable& subtable, size_t eta);

/// chi_i * chi_j decomposed in the supercharacter basis of G.
Decomposition product_decompose(TriangularGroup& G, const SupercharacterTable& table, size_t i,
                                size_t j);

/// G1 x G2 as a triangular-type group (H1 x H2 acting blockwise on J1 + J2).
/// Both factors must be root groups over the same field.
std::shared_ptr<TriangularGroup> direct_product(TriangularGroup& G1, TriangularGroup& G2);
/// The diagonal {(g, g)} of G x G as a subgroup spec.
SubgroupSpec diagonal_spec(TriangularGroup& G);

/// Product decomposition computed through the diagonal-subgroup construction:
/// restrict chi_i (x) chi_j from G x G to the diagonal and transport the
/// coefficients back through the isomorphism. Must agree with
/// product_decompose.
Decomposition product_via_diagonal(TriangularGroup& G, SupercharacterTable& table, size_t i,
                                   size_t j);

// ---- algebra-group specialization (trivial H), an independent code path ----

/// Superclasses as 1 + (N x N orbits in J), computed by two-sided
/// multiplication closure without the triple machinery.
std::vector<Orbit> algebra_group_superclasses(TriangularGroup& G);

/// Supercharacters Ind(xi_lambda, N_{lambda,rt}, N) for lambda over two-sided
/// orbit representatives in J^*, as per-element value vectors.
std::vector<std::vector<Cyclotomic>> algebra_group_supercharacters(TriangularGroup& G);

/// SInd phi(1+x) = (1/(|G||G'|)) sum_{a,b in N} phi_dot(1 + a x b), per class.
std::vector<Cyclotomic> algebra_group_superinduce(TriangularGroup& G,
                                                  const TriangularSubgroup& sub,
                                                  const std::vector<Cyclotomic>& phi);

}  // namespace trichar
