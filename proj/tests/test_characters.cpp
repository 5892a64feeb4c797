#include <random>
#include <set>

#include "gtest/gtest.h"
#include "trichar/characters.hpp"
#include "trichar/families.hpp"

using namespace trichar;

namespace {

Cyclotomic one(TriangularGroup& G) {
  return Cyclotomic::from_rational(Rational(1), G.ambient_order());
}

}  // namespace

TEST(Stabilizers, BruteForceScanAgreesOnUT32) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  for (uint32_t lam = 0; lam < G.j_points(); ++lam) {
    Stabilizers st = right_stabilizers(G, lam);
    // oracle: scan all y with lam(y u_j) = 0 for every j
    std::set<uint32_t> brute;
    for (uint32_t y = 0; y < G.j_points(); ++y) {
      bool inside = true;
      for (uint32_t j = 0; j < G.dim() && inside; ++j)
        if (G.pair(lam, G.j_mul(y, G.j_unit(j))) != 0) inside = false;
      if (inside) brute.insert(y);
    }
    std::set<uint32_t> from_kernel;
    for (const FqVec& v : st.j_rt.enumerate(G.field())) from_kernel.insert(G.encode_j(v));
    EXPECT_EQ(brute, from_kernel);
  }
  // lambda dual to E13 (basis order E12, E13, E23): y J lies in span(E13),
  // so J_rt = {y : the E12 component of y vanishes} = span(E13, E23)
  uint32_t lam13 = G.encode_j({0, 1, 0});
  Stabilizers st = right_stabilizers(G, lam13);
  EXPECT_EQ(st.j_rt.dim(), 2u);
  EXPECT_TRUE(st.j_rt.contains(G.field(), {0, 1, 0}));
  EXPECT_TRUE(st.j_rt.contains(G.field(), {0, 0, 1}));
  EXPECT_FALSE(st.j_rt.contains(G.field(), {1, 0, 0}));
}

TEST(Stabilizers, ZeroFormAndSquareZeroAlgebra) {
  auto Gp = build_t(2, 3);  // dim J = 1 and J^2 = 0
  TriangularGroup& G = *Gp;
  Stabilizers st0 = right_stabilizers(G, 0);
  EXPECT_EQ(st0.j_rt.dim(), G.dim());
  EXPECT_EQ(st0.h_rt.size(), G.h_size());
  EXPECT_EQ(st0.h_lt.size(), G.h_size());
  // J^2 = 0 forces J_rt = J for every form
  for (uint32_t lam = 0; lam < G.j_points(); ++lam)
    EXPECT_EQ(right_stabilizers(G, lam).j_rt.dim(), G.dim());
}

TEST(PerpLemma, HoldsExhaustivelyOnCatalogMembers) {
  for (auto Gp : {build_ut(3, 2), build_ut(4, 2), build_t(2, 3), build_t(2, 4)}) {
    TriangularGroup& G = *Gp;
    for (uint32_t lam = 0; lam < G.j_points(); ++lam) {
      auto [ann, jlam] = perp_sides(G, lam);
      EXPECT_EQ(ann, jlam);
    }
  }
  // lambda = 0: J_rt = J, so the annihilator is {0}, and J lam = {0} as well
  auto Gp = build_ut(3, 2);
  auto [ann, jlam] = perp_sides(*Gp, 0);
  EXPECT_EQ(ann.dim(), 0u);
  EXPECT_EQ(jlam.dim(), 0u);
}

TEST(GAlpha, ClosureAndSpecialCases) {
  auto Gp = build_t(2, 3);
  TriangularGroup& G = *Gp;
  const auto& alphas = G.a_triples();
  for (const ATriple& alpha : alphas) {
    GAlpha A = build_g_alpha(G, alpha, alpha.omega_star.front());
    std::vector<uint32_t> members;
    for (uint32_t g = 0; g < G.size(); ++g)
      if (A.member_mask[g]) members.push_back(g);
    EXPECT_EQ(members.size(), A.size);
    for (uint32_t g1 : members)
      for (uint32_t g2 : members) EXPECT_TRUE(A.member_mask[G.mul(g1, g2)]);
    // lambda = 0 and e = 0 give G_alpha = H + J = G
    if (alpha.e_index == G.lattice().zero_index() && A.lambda == 0) {
      EXPECT_EQ(A.size, G.size());
    }
  }
  EXPECT_THROW(build_g_alpha(G, alphas.front(), 2000000u), usage_error);
}

TEST(GAlpha, TrivialHReducesToAlgebraGroupStabilizer) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  for (const ATriple& alpha : G.a_triples()) {
    GAlpha A = build_g_alpha(G, alpha, alpha.omega_star.front());
    Stabilizers st = right_stabilizers(G, A.lambda);
    uint64_t expected = 1;
    for (uint32_t i = 0; i < st.j_rt.dim(); ++i) expected *= G.q();
    EXPECT_EQ(A.size, expected);  // G_alpha = 1 + J_rt = N_rt
  }
}

TEST(Xi, MultiplicativeOnGAlpha) {
  auto rng = std::mt19937_64(5);
  for (auto Gp : {build_t(2, 3), build_ut(3, 3), build_affine(5)}) {
    TriangularGroup& G = *Gp;
    for (const ATriple& alpha : G.a_triples()) {
      GAlpha A = build_g_alpha(G, alpha, alpha.omega_star.front());
      std::vector<uint32_t> members;
      for (uint32_t g = 0; g < G.size(); ++g)
        if (A.member_mask[g]) members.push_back(g);
      EXPECT_EQ(xi_value(G, A, G.identity()), one(G));
      for (int trial = 0; trial < 30; ++trial) {
        uint32_t g1 = members[rng() % members.size()];
        uint32_t g2 = members[rng() % members.size()];
        EXPECT_EQ(xi_value(G, A, G.mul(g1, g2)), xi_value(G, A, g1) * xi_value(G, A, g2));
      }
      for (uint32_t g = 0; g < G.size(); ++g)
        if (!A.member_mask[g]) {
          EXPECT_THROW(xi_value(G, A, g), domain_error);
          break;
        }
    }
  }
}

TEST(Induction, ClassicalIdentities) {
  auto Gp = build_t(2, 3);
  TriangularGroup& G = *Gp;
  uint32_t n = G.ambient_order();

  // induction of the trivial character from {1} is the regular character
  std::vector<uint8_t> only_identity(G.size(), 0);
  only_identity[G.identity()] = 1;
  auto values = induce_function(G, only_identity,
                                [&](uint32_t) { return one(G); });
  for (uint32_t g = 0; g < G.size(); ++g) {
    Cyclotomic expected = g == G.identity()
                              ? Cyclotomic::from_rational(Rational(Int(G.size())), n)
                              : Cyclotomic(n);
    EXPECT_EQ(values[g], expected);
  }

  // induction from the whole group returns a linear character unchanged
  const auto& alphas = G.a_triples();
  for (const ATriple& alpha : alphas) {
    GAlpha A = build_g_alpha(G, alpha, alpha.omega_star.front());
    if (A.size != G.size()) continue;
    std::vector<uint8_t> everyone(G.size(), 1);
    auto vals = induce_function(G, everyone, [&](uint32_t g) { return xi_value(G, A, g); });
    for (uint32_t g = 0; g < G.size(); ++g) EXPECT_EQ(vals[g], xi_value(G, A, g));
  }

  // degree of an induced supercharacter is the index of G_alpha
  for (const ATriple& alpha : alphas) {
    GAlpha A = build_g_alpha(G, alpha, alpha.omega_star.front());
    Cyclotomic at_one = induced_value_at(G, A, G.identity());
    EXPECT_EQ(at_one, Cyclotomic::from_rational(Rational(Int(G.size()) / Int(A.size)), n));
  }
}

TEST(InnerProduct, CoarseTheoryExampleValues) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  auto reg = regular_character(G);
  auto ones = one_character(G);
  EXPECT_EQ(inner_product(G, ones, ones), one(G));
  EXPECT_EQ(inner_product(G, reg, ones), one(G));

  // chi2 = rho - 1_G has (chi2, chi2) = |G| - 1 and the table (1, |G|-1; 1, -1)
  std::vector<Cyclotomic> chi2(reg.size(), Cyclotomic(G.ambient_order()));
  for (size_t k = 0; k < reg.size(); ++k) chi2[k] = reg[k] - ones[k];
  EXPECT_EQ(inner_product(G, chi2, chi2),
            Cyclotomic::from_rational(Rational(Int(G.size() - 1)), G.ambient_order()));
  uint32_t idc = G.class_of(G.identity());
  EXPECT_EQ(chi2[idc], Cyclotomic::from_rational(Rational(Int(G.size() - 1)), G.ambient_order()));
  for (size_t k = 0; k < chi2.size(); ++k)
    if (k != idc) {
      EXPECT_EQ(chi2[k], Cyclotomic::from_rational(Rational(-1), G.ambient_order()));
    }

  // Hermitian symmetry on a non-rational-valued pair
  auto Tp = build_t(2, 3);
  TriangularGroup& T = *Tp;
  SupercharacterTable tab = enumerate_supercharacters(T);
  for (size_t i = 0; i < tab.row_count(); ++i)
    for (size_t j = 0; j < tab.row_count(); ++j)
      EXPECT_EQ(inner_product(T, tab.entries[i], tab.entries[j]),
                inner_product(T, tab.entries[j], tab.entries[i]).conj());
}

TEST(Table, UT32DegreesAndAxioms) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  SupercharacterTable t = enumerate_supercharacters(G);
  EXPECT_EQ(t.row_count(), 5u);
  EXPECT_EQ(t.col_count(), 5u);
  std::multiset<std::string> degrees;
  for (const Int& d : t.degrees) degrees.insert(d.str());
  EXPECT_EQ(degrees, (std::multiset<std::string>{"1", "1", "1", "1", "2"}));

  ValidationReport rep = verify_table_axioms(t);
  for (const auto& item : rep.items) EXPECT_TRUE(item.ok) << item.name << ": " << item.detail;
}

TEST(Table, CatalogAxioms) {
  for (auto Gp : {build_t(2, 3), build_ut(3, 3), build_t(2, 4), build_affine(4), build_affine(5)}) {
    TriangularGroup& G = *Gp;
    SupercharacterTable t = enumerate_supercharacters(G);
    EXPECT_EQ(t.row_count(), G.superclasses().size());
    ValidationReport rep = verify_table_axioms(t);
    for (const auto& item : rep.items) EXPECT_TRUE(item.ok) << item.name << ": " << item.detail;
  }
}

TEST(Table, ParallelRowsMatchSequential) {
  auto G1 = build_t(2, 3);
  auto G2 = build_t(2, 3);
  SupercharacterTable a = enumerate_supercharacters(*G1, 1);
  SupercharacterTable b = enumerate_supercharacters(*G2, 4);
  ASSERT_EQ(a.row_count(), b.row_count());
  for (size_t i = 0; i < a.row_count(); ++i) {
    EXPECT_EQ(a.entries[i], b.entries[i]);
    EXPECT_EQ(a.degrees[i], b.degrees[i]);
  }
}

// Classical character theory of an abelian group: with dim J = 0 the
// supercharacters are exactly the |H| linear characters.
TEST(Table, ZeroDimensionalJGivesLinearCharacters) {
  auto F = FieldSpec::make(5);
  NilpotentAlgebra J(F, 0, {});
  auto root = std::make_shared<const AbelianGroup>(std::vector<uint32_t>{2, 2});
  HView view = HView::full(root);
  std::vector<FqMat> gens(2, FqMat(0, 0));  // 0x0 matrices, one per generator
  HAction act = HAction::from_generators(*F, view, 0, gens, gens);
  TriangularGroup G(F, std::move(J), std::move(view), std::move(act));
  EXPECT_EQ(G.size(), 4u);
  EXPECT_EQ(G.superclasses().size(), 4u);
  SupercharacterTable t = enumerate_supercharacters(G);
  EXPECT_EQ(t.row_count(), 4u);
  for (const Int& d : t.degrees) EXPECT_EQ(d, Int(1));
  ValidationReport rep = verify_table_axioms(t);
  for (const auto& item : rep.items) EXPECT_TRUE(item.ok) << item.name << ": " << item.detail;
}
