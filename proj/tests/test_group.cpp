#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "trichar/families.hpp"

using namespace trichar;

namespace {

// 3x3 matrix oracle for UT(3,2). The family's basis order is lexicographic
// in (row, col): x = (a, b, c) -> I + a E12 + b E13 + c E23.
using M3 = std::array<std::array<uint16_t, 3>, 3>;

M3 ut3_matrix(const FqVec& x) {
  M3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  m[0][1] = x[0];
  m[0][2] = x[1];
  m[1][2] = x[2];
  return m;
}

M3 mat3_mul(const FieldSpec& F, const M3& a, const M3& b) {
  M3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      uint16_t acc = 0;
      for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
      out[i][j] = acc;
    }
  return out;
}

std::mt19937_64 rng_fixed(uint64_t seed) { return std::mt19937_64(seed); }

TriangularGroup::Gt random_gt(TriangularGroup& G, std::mt19937_64& rng) {
  return {static_cast<uint32_t>(rng() % G.h_size()), static_cast<uint32_t>(rng() % G.j_points()),
          static_cast<uint32_t>(rng() % G.j_points())};
}

}  // namespace

TEST(GroupOps, UT32AgainstMatrixOracle) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  EXPECT_EQ(G.size(), 8u);
  EXPECT_EQ(G.dim(), 3u);
  const FieldSpec& F = G.field();
  for (uint32_t g1 = 0; g1 < G.size(); ++g1)
    for (uint32_t g2 = 0; g2 < G.size(); ++g2) {
      M3 prod = mat3_mul(F, ut3_matrix(G.decode_j(G.xpart(g1))),
                         ut3_matrix(G.decode_j(G.xpart(g2))));
      uint32_t got = G.mul(g1, g2);
      FqVec expected{prod[0][1], prod[0][2], prod[1][2]};
      EXPECT_EQ(G.decode_j(G.xpart(got)), expected);
    }
}

TEST(GroupOps, IdentityAndInverseContracts) {
  for (auto Gp : {build_ut(3, 2), build_t(2, 3), build_affine(5), build_t(2, 4)}) {
    TriangularGroup& G = *Gp;
    for (uint32_t g = 0; g < G.size(); ++g) {
      EXPECT_EQ(G.mul(G.identity(), g), g);
      EXPECT_EQ(G.mul(g, G.identity()), g);
      EXPECT_EQ(G.mul(g, G.inv(g)), G.identity());
      EXPECT_EQ(G.mul(G.inv(g), g), G.identity());
    }
  }
}

// The affine group realized as matrices [[a, b], [0, 1]]: the H part indexes
// a = gamma^k, the J part is b.
TEST(GroupOps, AffineAgainstMatrixOracle) {
  auto Gp = build_affine(3);
  TriangularGroup& G = *Gp;
  EXPECT_EQ(G.size(), 6u);
  const FieldSpec& F = G.field();
  uint16_t gamma = F.primitive_element();
  auto a_of = [&](uint32_t g) { return F.pow(gamma, G.H().root_index(G.hpart(g))); };
  auto b_of = [&](uint32_t g) { return G.decode_j(G.xpart(g))[0]; };
  auto find = [&](uint16_t a, uint16_t b) -> uint32_t {
    for (uint32_t g = 0; g < G.size(); ++g)
      if (a_of(g) == a && b_of(g) == b) return g;
    throw std::runtime_error("element not found");
  };
  for (uint32_t g1 = 0; g1 < G.size(); ++g1)
    for (uint32_t g2 = 0; g2 < G.size(); ++g2) {
      // [[a1, b1],[0,1]] [[a2, b2],[0,1]] = [[a1 a2, a1 b2 + b1],[0,1]]
      uint16_t a = F.mul(a_of(g1), a_of(g2));
      uint16_t b = F.add(F.mul(a_of(g1), b_of(g2)), b_of(g1));
      EXPECT_EQ(G.mul(g1, g2), find(a, b));
    }
  // the worked example: (a=2,b=1) * (a=2,b=2) = (a=1, b=2)
  EXPECT_EQ(G.mul(find(2, 1), find(2, 2)), find(1, 2));
}

TEST(Gtilde, ActionLaws) {
  for (auto Gp : {build_ut(3, 2), build_t(2, 3), build_affine(4)}) {
    TriangularGroup& G = *Gp;
    auto rng = rng_fixed(99);
    for (uint32_t x = 0; x < G.j_points(); ++x)
      EXPECT_EQ(G.rho(G.gt_identity(), x), x);
    for (int trial = 0; trial < 40; ++trial) {
      auto t1 = random_gt(G, rng), t2 = random_gt(G, rng);
      uint32_t x = static_cast<uint32_t>(rng() % G.j_points());
      EXPECT_EQ(G.rho(t1, 0u), 0u);
      // rho_{t1 t2} = rho_{t1} o rho_{t2}
      EXPECT_EQ(G.rho(G.gt_mul(t1, t2), x), G.rho(t1, G.rho(t2, x)));
      EXPECT_EQ(G.rho(G.gt_mul(t1, G.gt_inv(t1)), x), x);
      // dual adjointness: <rho*_t lam, x> = <lam, rho_{t^{-1}} x>
      uint32_t lam = static_cast<uint32_t>(rng() % G.j_points());
      EXPECT_EQ(G.pair(G.rho_dual(t1, lam), x), G.pair(lam, G.rho(G.gt_inv(t1), x)));
      // R action law
      uint32_t g = static_cast<uint32_t>(rng() % G.size());
      EXPECT_EQ(G.R_act(G.gt_mul(t1, t2), g), G.R_act(t1, G.R_act(t2, g)));
      EXPECT_EQ(G.R_act(G.gt_identity(), g), g);
    }
  }
}

namespace {

// Orbit partition oracle: close each point under rho over every triple of
// Gtilde, enumerating |H| * |N|^2 triples directly.
std::set<std::vector<uint32_t>> orbits_by_full_enumeration(TriangularGroup& G, bool dual) {
  std::set<std::vector<uint32_t>> out;
  std::set<uint32_t> seen;
  for (uint32_t seed = 0; seed < G.j_points(); ++seed) {
    if (seen.count(seed)) continue;
    std::set<uint32_t> orbit{seed};
    std::vector<uint32_t> frontier{seed};
    while (!frontier.empty()) {
      uint32_t x = frontier.back();
      frontier.pop_back();
      for (uint32_t t = 0; t < G.h_size(); ++t)
        for (uint32_t a = 0; a < G.j_points(); ++a)
          for (uint32_t b = 0; b < G.j_points(); ++b) {
            uint32_t img = dual ? G.rho_dual({t, a, b}, x) : G.rho({t, a, b}, x);
            if (orbit.insert(img).second) frontier.push_back(img);
          }
    }
    seen.insert(orbit.begin(), orbit.end());
    out.emplace(orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace

TEST(Orbits, GeneratorBfsMatchesFullEnumeration) {
  for (auto Gp : {build_ut(3, 2), build_t(2, 3), build_affine(4)}) {
    TriangularGroup& G = *Gp;
    for (bool dual : {false, true}) {
      std::set<std::vector<uint32_t>> expected = orbits_by_full_enumeration(G, dual);
      std::set<std::vector<uint32_t>> got;
      for (const Orbit& o : dual ? G.orbits_jstar() : G.orbits_j()) got.insert(o.members);
      EXPECT_EQ(expected, got);
    }
  }
}

TEST(Orbits, SquareZeroAlgebraWithTrivialHHasSingletonOrbits) {
  // J = F_2^2 with zero multiplication: a x b^{-1} = x, so every orbit is {x}
  auto F = FieldSpec::make(2);
  std::vector<uint16_t> sc(8, 0);
  NilpotentAlgebra J(F, 2, std::move(sc));
  auto root = std::make_shared<const AbelianGroup>(std::vector<uint32_t>{});
  HView view = HView::full(root);
  HAction act = HAction::from_generators(*F, view, 2, {}, {});
  TriangularGroup G(F, std::move(J), std::move(view), std::move(act));
  EXPECT_EQ(G.orbits_j().size(), G.j_points());
}

TEST(Orbits, UT32KnownOrbits) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  // coordinates (E12, E13, E23)
  uint32_t x13 = G.encode_j({0, 1, 0});
  uint32_t x12 = G.encode_j({1, 0, 0});
  uint32_t x12_13 = G.encode_j({1, 1, 0});

  // oracle for the orbit of x12: direct image set over all 64 pairs (a, b)
  std::set<uint32_t> image;
  for (uint32_t a = 0; a < G.j_points(); ++a)
    for (uint32_t b = 0; b < G.j_points(); ++b) image.insert(G.rho({0, a, b}, x12));
  EXPECT_EQ(image, (std::set<uint32_t>{x12, x12_13}));

  std::map<uint32_t, std::vector<uint32_t>> by_rep;
  for (const Orbit& o : G.orbits_j()) by_rep[o.rep()] = o.members;
  EXPECT_EQ(by_rep[x13], (std::vector<uint32_t>{x13}));
  EXPECT_EQ(by_rep[x12], (std::vector<uint32_t>{x12, x12_13}));
  EXPECT_EQ(G.orbits_j().size(), 5u);

  // with the trivial lattice {0, 1}: only the zero orbit meets J_0, every
  // other orbit is regular
  for (const Orbit& o : G.orbits_j()) {
    if (o.rep() == 0)
      EXPECT_FALSE(o.regular);
    else
      EXPECT_TRUE(o.regular);
  }
}

TEST(Orbits, DualityCountsAcrossCatalog) {
  for (auto Gp : {build_ut(3, 2), build_ut(3, 3), build_t(2, 3), build_t(2, 4), build_affine(5)}) {
    TriangularGroup& G = *Gp;
    auto reg = [](const std::vector<Orbit>& v) {
      size_t n = 0;
      for (const auto& o : v) n += o.regular ? 1 : 0;
      return n;
    };
    const auto& oj = G.orbits_j();
    const auto& os = G.orbits_jstar();
    EXPECT_EQ(oj.size(), os.size());
    EXPECT_EQ(reg(oj), reg(os));
  }
}

TEST(Superclasses, UT32SpecializesToTwoSidedOrbits) {
  auto Gp = build_ut(3, 2);
  TriangularGroup& G = *Gp;
  const auto& classes = G.superclasses();
  EXPECT_EQ(classes.size(), 5u);
  EXPECT_EQ(classes[G.class_of(G.identity())].size(), 1u);
  // classes are 1 + orbit
  std::set<std::vector<uint32_t>> from_orbits;
  for (const Orbit& o : G.orbits_j()) {
    std::vector<uint32_t> k;
    for (uint32_t x : o.members) k.push_back(G.gcode(0, x));
    from_orbits.insert(k);
  }
  std::set<std::vector<uint32_t>> got;
  for (const Orbit& k : classes) got.insert(k.members);
  EXPECT_EQ(from_orbits, got);
}

// T(2,3) worked out by hand: |G| = 12; superclasses are {1}, {1+x, 1+2x},
// and h + J for the three nontrivial diagonal classes h (each of size 3).
TEST(Superclasses, T23HandComputedStructure) {
  auto Gp = build_t(2, 3);
  TriangularGroup& G = *Gp;
  EXPECT_EQ(G.size(), 12u);
  EXPECT_EQ(G.h_size(), 4u);
  const auto& classes = G.superclasses();
  EXPECT_EQ(classes.size(), 5u);
  std::multiset<uint32_t> sizes;
  for (const Orbit& k : classes) sizes.insert(k.size());
  EXPECT_EQ(sizes, (std::multiset<uint32_t>{1, 2, 3, 3, 3}));

  uint64_t total = 0;
  for (const Orbit& k : classes) total += k.size();
  EXPECT_EQ(total, G.size());
}

TEST(Triples, BijectionAndRoundTrips) {
  for (auto Gp : {build_ut(3, 2), build_t(2, 3), build_t(2, 4), build_affine(4)}) {
    TriangularGroup& G = *Gp;
    const auto& triples = G.b_triples();
    const auto& classes = G.superclasses();
    EXPECT_EQ(triples.size(), classes.size());
    std::set<size_t> hit;
    for (const BTriple& t : triples) hit.insert(t.class_index);
    EXPECT_EQ(hit.size(), classes.size());

    for (size_t k = 0; k < classes.size(); ++k) {
      BTriple t = G.triple_of_superclass(k);
      EXPECT_EQ(G.superclass_of_triple(t.e_index, t.h_pos, t.omega.front()), k);
      const BTriple& enumerated = *std::find_if(
          triples.begin(), triples.end(), [&](const BTriple& b) { return b.class_index == k; });
      EXPECT_EQ(t.e_index, enumerated.e_index);
      EXPECT_EQ(t.h_pos, enumerated.h_pos);
      EXPECT_EQ(t.omega, enumerated.omega);
    }

    // A-triples count equals B-triples count (so the table will be square)
    EXPECT_EQ(G.a_triples().size(), triples.size());
  }
}

TEST(Triples, PureHSuperclassesSitAtTheZeroIdempotent) {
  auto Gp = build_t(2, 3);
  TriangularGroup& G = *Gp;
  BTriple t = G.triple_of_superclass(G.class_of(G.identity()));
  EXPECT_EQ(t.e_index, G.lattice().zero_index());
  EXPECT_EQ(t.h_pos, G.H().identity_pos());
  EXPECT_EQ(t.omega, (std::vector<uint32_t>{0}));
}

TEST(Triples, T23RegularOrbitLandsAtRankTwoIdempotent) {
  // hand analysis: the superclass {1+x, 1+2x} has its triple at the idempotent
  // e* = e_{(-1,+1)} + e_{(+1,-1)} with H(e*) = {1} and omega = {x, 2x}
  auto Gp = build_t(2, 3);
  TriangularGroup& G = *Gp;
  uint32_t x = G.encode_j({1});
  size_t cls = G.class_of(G.gcode(G.H().identity_pos(), x));
  BTriple t = G.triple_of_superclass(cls);
  const auto& lat = G.lattice();
  EXPECT_EQ(__builtin_popcount(lat.at(t.e_index).mask), 2);
  EXPECT_EQ(t.h_pos, G.H().identity_pos());
  EXPECT_EQ(t.omega.size(), 2u);
  EXPECT_EQ(G.pierce(t.e_index).He.size(), 1u);
}

TEST(Guardrails, OversizedRequestsAreRejected) {
  EXPECT_THROW(build_ut(8, 2), capability_error);  // 2^28 points in J
}
