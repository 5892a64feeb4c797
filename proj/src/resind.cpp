#include "trichar/resind.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trichar {

uint32_t TriangularSubgroup::embed_element(const TriangularGroup& parent, uint32_t sub_code) const {
  const TriangularGroup& S = *theory;
  uint32_t h = S.hpart(sub_code), x = S.xpart(sub_code);
  FqVec xv = S.decode_j(x);
  FqVec parent_x = mat_apply(parent.field(), embed_j, xv);
  return parent.gcode(h_map[h], parent.encode_j(parent_x));
}

TriangularSubgroup build_subgroup(TriangularGroup& G, const SubgroupSpec& spec) {
  const FieldSpec& F = G.field();
  uint32_t d = G.dim();

  std::vector<uint32_t> gen_roots;
  for (const auto& tuple : spec.h_generators) {
    uint32_t root = G.H().root().index_of(tuple);
    if (!G.H().contains_root(root))
      throw validation_error("subgroup H generator lies outside the parent H part");
    gen_roots.push_back(root);
  }
  HView child = HView::subgroup(G.H().root_ptr(), gen_roots);

  for (const FqVec& v : spec.j_basis)
    if (v.size() != d) throw usage_error("subalgebra basis vector has wrong length");
  Subspace jsub(F, d, spec.j_basis);
  uint32_t dsub = jsub.dim();

  // multiplicative closure, with a witness on failure
  for (uint32_t i = 0; i < dsub; ++i)
    for (uint32_t j = 0; j < dsub; ++j) {
      FqVec bi(d), bj(d);
      for (uint32_t k = 0; k < d; ++k) {
        bi[k] = jsub.basis().at(i, k);
        bj[k] = jsub.basis().at(j, k);
      }
      FqVec prod = G.J().mul(bi, bj);
      if (!jsub.contains(F, prod))
        throw validation_error("J' is not multiplicatively closed: basis pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")");
    }
  // H'xH'-invariance on generators
  for (uint32_t groot : gen_roots) {
    uint32_t ppos = static_cast<uint32_t>(G.H().position(groot));
    for (uint32_t i = 0; i < dsub; ++i) {
      FqVec bi(d);
      for (uint32_t k = 0; k < d; ++k) bi[k] = jsub.basis().at(i, k);
      if (!jsub.contains(F, mat_apply(F, G.action().L(ppos), bi)) ||
          !jsub.contains(F, mat_apply(F, G.action().R(ppos), bi)))
        throw validation_error("J' is not invariant under H'xH': generator at root index " +
                               std::to_string(groot) + ", basis vector " + std::to_string(i));
    }
  }

  // J' as an algebra of its own
  std::vector<uint16_t> sc(size_t(dsub) * dsub * dsub, 0);
  for (uint32_t i = 0; i < dsub; ++i)
    for (uint32_t j = 0; j < dsub; ++j) {
      FqVec bi(d), bj(d);
      for (uint32_t k = 0; k < d; ++k) {
        bi[k] = jsub.basis().at(i, k);
        bj[k] = jsub.basis().at(j, k);
      }
      FqVec c = jsub.coords_of(F, G.J().mul(bi, bj));
      for (uint32_t k = 0; k < dsub; ++k) sc[(size_t(i) * dsub + j) * dsub + k] = c[k];
    }
  NilpotentAlgebra Jsub(G.field_ptr(), dsub, std::move(sc));

  FqMat embed(d, dsub);
  for (uint32_t j = 0; j < dsub; ++j)
    for (uint32_t i = 0; i < d; ++i) embed.at(i, j) = jsub.basis().at(j, i);
  // restricted per-element actions
  HAction act_sub;
  std::vector<uint32_t> h_map(child.size());
  for (uint32_t i = 0; i < child.size(); ++i) {
    int32_t ppos = G.H().position(child.root_index(i));
    if (ppos < 0) throw consistency_error("subgroup element escaped the parent view");
    h_map[i] = static_cast<uint32_t>(ppos);
    FqMat Lfull = G.action().L(static_cast<uint32_t>(ppos));
    FqMat Rfull = G.action().R(static_cast<uint32_t>(ppos));
    FqMat Lr(dsub, dsub), Rr(dsub, dsub);
    for (uint32_t j = 0; j < dsub; ++j) {
      FqVec bj(d);
      for (uint32_t k = 0; k < d; ++k) bj[k] = jsub.basis().at(j, k);
      FqVec lc = jsub.coords_of(F, mat_apply(F, Lfull, bj));
      FqVec rc = jsub.coords_of(F, mat_apply(F, Rfull, bj));
      for (uint32_t k = 0; k < dsub; ++k) {
        Lr.at(k, j) = lc[k];
        Rr.at(k, j) = rc[k];
      }
    }
    act_sub.left.push_back(std::move(Lr));
    act_sub.right.push_back(std::move(Rr));
  }

  TriangularSubgroup sub;
  sub.label = spec.label;
  sub.theory = std::make_shared<TriangularGroup>(G.field_ptr(), std::move(Jsub), child,
                                                 std::move(act_sub), G.ambient_order());
  sub.theory->set_lattice(
      IdempotentLattice::for_subview(F, G.lattice(), G.H(), sub.theory->H()));
  sub.h_map = std::move(h_map);
  sub.embed_j = std::move(embed);

  sub.parent_mask.assign(G.size(), 0);
  sub.parent_to_sub.assign(G.size(), -1);
  for (uint32_t g = 0; g < sub.theory->size(); ++g) {
    uint32_t pg = sub.embed_element(G, g);
    sub.parent_mask[pg] = 1;
    sub.parent_to_sub[pg] = g;
  }
  return sub;
}

SubgroupSpec spec_unipotent_radical(TriangularGroup& G) {
  SubgroupSpec spec;
  spec.label = "N";
  for (uint32_t i = 0; i < G.dim(); ++i) {
    FqVec v(G.dim(), 0);
    v[i] = 1;
    spec.j_basis.push_back(std::move(v));
  }
  return spec;
}

SubgroupSpec spec_whole_group(TriangularGroup& G) {
  SubgroupSpec spec = spec_unipotent_radical(G);
  spec.label = "G";
  for (uint32_t g : G.H().generator_positions()) {
    uint32_t root = G.H().root_index(g);
    spec.h_generators.push_back(G.H().root().tuple_of(root));
  }
  return spec;
}

SubgroupSpec spec_h_subgroup(TriangularGroup& G, const std::vector<uint32_t>& h_root_elems,
                             const std::string& label) {
  SubgroupSpec spec = spec_unipotent_radical(G);
  spec.label = label;
  for (uint32_t root : h_root_elems)
    if (root != G.H().root().identity())
      spec.h_generators.push_back(G.H().root().tuple_of(root));
  return spec;
}

SubgroupSpec spec_j_subalgebra(TriangularGroup& G, const Subspace& jsub, const std::string& label) {
  SubgroupSpec spec;
  spec.label = label;
  for (uint32_t g : G.H().generator_positions()) {
    uint32_t root = G.H().root_index(g);
    spec.h_generators.push_back(G.H().root().tuple_of(root));
  }
  for (uint32_t r = 0; r < jsub.dim(); ++r) {
    FqVec v(G.dim());
    for (uint32_t k = 0; k < G.dim(); ++k) v[k] = jsub.basis().at(r, k);
    spec.j_basis.push_back(std::move(v));
  }
  return spec;
}

std::vector<SubgroupSpec> standard_test_subgroups(TriangularGroup& G) {
  std::vector<SubgroupSpec> specs;
  specs.push_back(spec_unipotent_radical(G));
  if (G.H().size() == G.H().root().size()) {
    auto subs = all_subgroups(G.H().root());
    int counter = 0;
    for (const auto& elems : subs) {
      if (elems.size() == G.H().root().size()) continue;  // proper only
      if (elems.size() == 1) continue;                    // trivial + J == N
      specs.push_back(spec_h_subgroup(G, elems, "H" + std::to_string(counter++) + "+J"));
    }
  }
  auto inv = invariant_subalgebras(G.J(), G.H(), G.action());
  int counter = 0;
  for (size_t idx : inv.maximal)
    specs.push_back(
        spec_j_subalgebra(G, inv.all[idx], "H+Jmax" + std::to_string(counter++)));
  return specs;
}

std::vector<Cyclotomic> restrict_function(TriangularGroup& G, const std::vector<Cyclotomic>& f,
                                          const TriangularSubgroup& sub) {
  TriangularGroup& S = *sub.theory;
  const auto& sclasses = S.superclasses();
  std::vector<Cyclotomic> out;
  out.reserve(sclasses.size());
  for (const Orbit& K : sclasses) {
    Cyclotomic val = f[G.class_of(sub.embed_element(G, K.rep()))];
    for (uint32_t m : K.members)
      if (!(f[G.class_of(sub.embed_element(G, m))] == val))
        throw consistency_error("restriction is not constant on a subgroup superclass");
    out.push_back(std::move(val));
  }
  return out;
}

Decomposition decompose(TriangularGroup& G, const SupercharacterTable& table,
                        const std::vector<Cyclotomic>& f) {
  Decomposition dec;
  const auto& classes = G.superclasses();
  std::vector<Cyclotomic> residual = f;
  for (size_t i = 0; i < table.row_count(); ++i) {
    Cyclotomic ip = inner_product(G, f, table.entries[i]);
    Cyclotomic c = ip;
    c *= Rational(1) / table.norms[i];
    if (!c.is_rational())
      throw consistency_error("decomposition coefficient is not rational: " + c.str());
    Rational coeff = c.rational_value();
    for (size_t k = 0; k < classes.size(); ++k)
      residual[k] -= table.entries[i][k] * coeff;
    dec.coeffs.push_back(std::move(coeff));
  }
  for (size_t k = 0; k < classes.size(); ++k)
    if (!residual[k].is_zero())
      throw consistency_error("function is not in the span of the supercharacters; residual at class " +
                              std::to_string(k) + " is " + residual[k].str());
  return dec;
}

namespace {

// For each superclass K of G, the tally over subgroup superclasses c of
// #{tau : rho(tau)(rep K) in class c of G'}. Exact; uses the literal triple
// sum when |Gt| is small and the orbit-stabilizer refactoring otherwise
// (cross-checked against each other whenever both are computed).
std::vector<std::vector<Int>> sind_class_counts(TriangularGroup& G, const TriangularSubgroup& sub) {
  TriangularGroup& S = *sub.theory;
  const auto& classes = G.superclasses();
  const auto& sclasses = S.superclasses();
  uint64_t gt_size = uint64_t(G.h_size()) * G.j_points() * G.j_points();

  // intersection counts |K ∩ (subgroup class c)| drive the refactored sum
  std::vector<std::vector<Int>> inter(classes.size(), std::vector<Int>(sclasses.size()));
  for (size_t k = 0; k < classes.size(); ++k)
    for (uint32_t m : classes[k].members)
      if (sub.parent_mask[m])
        inter[k][S.class_of(static_cast<uint32_t>(sub.parent_to_sub[m]))] += 1;

  std::vector<std::vector<Int>> counts(classes.size(), std::vector<Int>(sclasses.size()));
  bool literal = gt_size * classes.size() <= 20000000ull;
  for (size_t k = 0; k < classes.size(); ++k) {
    Int stab = Int(gt_size) / Int(classes[k].size());
    if (stab * Int(classes[k].size()) != Int(gt_size))
      throw consistency_error("|Gt| is not divisible by the superclass size");
    for (size_t c = 0; c < sclasses.size(); ++c) counts[k][c] = stab * inter[k][c];
    if (literal) {
      std::vector<Int> direct(sclasses.size());
      uint32_t rep = classes[k].rep();
      for (uint32_t t = 0; t < G.h_size(); ++t)
        for (uint32_t a = 0; a < G.j_points(); ++a)
          for (uint32_t b = 0; b < G.j_points(); ++b) {
            uint32_t img = G.R_act({t, a, b}, rep);
            if (sub.parent_mask[img])
              direct[S.class_of(static_cast<uint32_t>(sub.parent_to_sub[img]))] += 1;
          }
      if (direct != counts[k])
        throw consistency_error("orbit-stabilizer refactoring disagrees with the literal triple sum");
    }
  }
  return counts;
}

}  // namespace

std::vector<Cyclotomic> superinduce(TriangularGroup& G, const TriangularSubgroup& sub,
                                    const std::vector<Cyclotomic>& phi) {
  TriangularGroup& S = *sub.theory;
  const auto& classes = G.superclasses();
  const auto& sclasses = S.superclasses();
  if (phi.size() != sclasses.size())
    throw usage_error("phi must be given per subgroup superclass");
  auto counts = sind_class_counts(G, sub);
  Rational scale = Rational(Int(G.h_size()), Int(G.size()) * Int(S.size()));
  std::vector<Cyclotomic> out;
  out.reserve(classes.size());
  for (size_t k = 0; k < classes.size(); ++k) {
    Cyclotomic acc(G.ambient_order());
    for (size_t c = 0; c < sclasses.size(); ++c) {
      if (counts[k][c] == 0) continue;
      acc += phi[c] * Rational(counts[k][c]);
    }
    acc *= scale;
    out.push_back(std::move(acc));
  }
  return out;
}

FrobeniusCheck frobenius_check(TriangularGroup& G, const TriangularSubgroup& sub,
                               const std::vector<Cyclotomic>& phi,
                               const std::vector<Cyclotomic>& psi) {
  FrobeniusCheck out{Cyclotomic(G.ambient_order()), Cyclotomic(G.ambient_order()), false};
  std::vector<Cyclotomic> sind = superinduce(G, sub, phi);
  out.lhs = inner_product(G, sind, psi);
  std::vector<Cyclotomic> res = restrict_function(G, psi, sub);
  out.rhs = inner_product(*sub.theory, phi, res);
  out.equal = (out.lhs == out.rhs);
  return out;
}

ResIndReport resind_report(TriangularGroup& G, SupercharacterTable& gtable,
                           const TriangularSubgroup& sub, SupercharacterTable& subtable) {
  TriangularGroup& S = *sub.theory;
  ResIndReport rep;
  rep.subgroup_label = sub.label;
  size_t nG = gtable.row_count(), nS = subtable.row_count();

  std::vector<std::vector<Cyclotomic>> res_rows;
  rep.m.assign(nG, std::vector<Rational>(nS, Rational(0)));
  for (size_t i = 0; i < nG; ++i) {
    std::vector<Cyclotomic> res = restrict_function(G, gtable.entries[i], sub);
    Decomposition dec = decompose(S, subtable, res);
    for (size_t j = 0; j < nS; ++j) {
      const Rational& c = dec.coeffs[j];
      if (!c.is_integer() || c.sign() < 0) {
        rep.restriction_ok = false;
        if (rep.detail.empty())
          rep.detail = "m[" + std::to_string(i) + "][" + std::to_string(j) +
                       "] = " + c.str() + " is not a nonnegative integer";
      }
      rep.m[i][j] = c;
    }
    res_rows.push_back(std::move(res));
  }

  auto counts = sind_class_counts(G, sub);
  Rational scale = Rational(Int(G.h_size()), Int(G.size()) * Int(S.size()));
  rep.a.assign(nS, std::vector<Rational>(nG, Rational(0)));
  rep.reciprocity_residuals.assign(nS, std::vector<std::string>(nG, "0"));
  for (size_t j = 0; j < nS; ++j) {
    std::vector<Cyclotomic> sind;
    sind.reserve(G.superclasses().size());
    for (size_t k = 0; k < G.superclasses().size(); ++k) {
      Cyclotomic acc(G.ambient_order());
      for (size_t c = 0; c < S.superclasses().size(); ++c)
        if (counts[k][c] != 0) acc += subtable.entries[j][c] * Rational(counts[k][c]);
      acc *= scale;
      sind.push_back(std::move(acc));
    }
    Decomposition dec = decompose(G, gtable, sind);
    rep.a[j] = dec.coeffs;

    for (size_t i = 0; i < nG; ++i) {
      // reciprocity: (SInd phi_j, chi_i) = (phi_j, Res chi_i)
      Cyclotomic lhs = inner_product(G, sind, gtable.entries[i]);
      Cyclotomic rhs = inner_product(S, subtable.entries[j], res_rows[i]);
      rep.reciprocity_residuals[j][i] = (lhs - rhs).str();
      if (!(lhs == rhs)) {
        rep.reciprocity_ok = false;
        if (rep.detail.empty())
          rep.detail = "reciprocity fails at (eta=" + std::to_string(j) +
                       ", alpha=" + std::to_string(i) + "): " + lhs.str() + " vs " + rhs.str();
      }
      // a = m (phi,phi) / (chi,chi), and a >= 0
      Rational expected = rep.m[i][j] * subtable.norms[j] / gtable.norms[i];
      if (rep.a[j][i] != expected || rep.a[j][i].sign() < 0) {
        rep.formula_ok = false;
        if (rep.detail.empty())
          rep.detail = "a[" + std::to_string(j) + "][" + std::to_string(i) + "] = " +
                       rep.a[j][i].str() + " but m(phi,phi)/(chi,chi) = " + expected.str();
      }
    }
  }
  return rep;
}

std::vector<Rational> sind_coefficients(TriangularGroup& G, SupercharacterTable& gtable,
                                        const TriangularSubgroup& sub,
                                        SupercharacterTable& subtable, size_t eta) {
  TriangularGroup& S = *sub.theory;
  std::vector<Cyclotomic> sind = superinduce(G, sub, subtable.entries[eta]);
  Decomposition dec = decompose(G, gtable, sind);
  for (size_t alpha = 0; alpha < gtable.row_count(); ++alpha) {
    if (dec.coeffs[alpha].sign() < 0)
      throw consistency_error("superinduction coefficient is negative");
    Cyclotomic m_cyc = inner_product(S, restrict_function(G, gtable.entries[alpha], sub),
                                     subtable.entries[eta]);
    m_cyc *= Rational(1) / subtable.norms[eta];
    if (!m_cyc.is_rational())
      throw consistency_error("restriction multiplicity is not rational");
    Rational expected = m_cyc.rational_value() * subtable.norms[eta] / gtable.norms[alpha];
    if (dec.coeffs[alpha] != expected)
      throw consistency_error("a != m (phi,phi)/(chi,chi) at alpha " + std::to_string(alpha));
  }
  return dec.coeffs;
}

Decomposition product_decompose(TriangularGroup& G, const SupercharacterTable& table, size_t i,
                                size_t j) {
  const auto& classes = G.superclasses();
  std::vector<Cyclotomic> prod(classes.size(), Cyclotomic(G.ambient_order()));
  for (size_t k = 0; k < classes.size(); ++k)
    prod[k] = table.entries[i][k] * table.entries[j][k];
  return decompose(G, table, prod);
}

std::shared_ptr<TriangularGroup> direct_product(TriangularGroup& G1, TriangularGroup& G2) {
  if (&G1.field() != &G2.field())
    throw usage_error("direct product requires a shared field");
  if (G1.H().size() != G1.H().root().size() || G2.H().size() != G2.H().root().size())
    throw usage_error("direct product requires root-view factors");
  const FieldSpec& F = G1.field();
  uint32_t d1 = G1.dim(), d2 = G2.dim(), d = d1 + d2;

  std::vector<uint32_t> orders = G1.H().root().orders();
  for (uint32_t o : G2.H().root().orders()) orders.push_back(o);
  auto root = std::make_shared<const AbelianGroup>(orders);
  HView view = HView::full(root);

  std::vector<uint16_t> sc(size_t(d) * d * d, 0);
  auto put = [&](uint32_t i, uint32_t j, uint32_t k, uint16_t v) {
    sc[(size_t(i) * d + j) * d + k] = v;
  };
  for (uint32_t i = 0; i < d1; ++i)
    for (uint32_t j = 0; j < d1; ++j)
      for (uint32_t k = 0; k < d1; ++k) put(i, j, k, G1.J().sc(i, j, k));
  for (uint32_t i = 0; i < d2; ++i)
    for (uint32_t j = 0; j < d2; ++j)
      for (uint32_t k = 0; k < d2; ++k) put(d1 + i, d1 + j, d1 + k, G2.J().sc(i, j, k));
  NilpotentAlgebra J(G1.field_ptr(), d, std::move(sc));

  auto embed_mat = [&](const FqMat& m, bool first) {
    FqMat out = FqMat::identity(d);
    uint32_t off = first ? 0 : d1;
    uint32_t n = first ? d1 : d2;
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) out.at(off + i, off + j) = m.at(i, j);
    return out;
  };
  std::vector<FqMat> lg, rg;
  for (uint32_t g : G1.H().generator_positions()) {
    lg.push_back(embed_mat(G1.action().L(g), true));
    rg.push_back(embed_mat(G1.action().R(g), true));
  }
  for (uint32_t g : G2.H().generator_positions()) {
    lg.push_back(embed_mat(G2.action().L(g), false));
    rg.push_back(embed_mat(G2.action().R(g), false));
  }
  HAction act = HAction::from_generators(F, view, d, lg, rg);
  uint32_t n = std::lcm(G1.ambient_order(), G2.ambient_order());
  return std::make_shared<TriangularGroup>(G1.field_ptr(), std::move(J), std::move(view),
                                           std::move(act), n);
}

SubgroupSpec diagonal_spec(TriangularGroup& G) {
  SubgroupSpec spec;
  spec.label = "diagonal";
  const auto& orders = G.H().root().orders();
  for (uint32_t g : G.H().generator_positions()) {
    auto tuple = G.H().root().tuple_of(G.H().root_index(g));
    std::vector<uint32_t> twice = tuple;
    twice.insert(twice.end(), tuple.begin(), tuple.end());
    spec.h_generators.push_back(std::move(twice));
  }
  (void)orders;
  for (uint32_t k = 0; k < G.dim(); ++k) {
    FqVec v(2 * G.dim(), 0);
    v[k] = 1;
    v[G.dim() + k] = 1;
    spec.j_basis.push_back(std::move(v));
  }
  return spec;
}

Decomposition product_via_diagonal(TriangularGroup& G, SupercharacterTable& table, size_t i,
                                   size_t j) {
  auto GG = direct_product(G, G);
  TriangularGroup& P = *GG;
  uint32_t d = G.dim();

  // chi_i (x) chi_j as a class function on G x G
  auto split = [&](uint32_t pcode) {
    uint32_t ph = P.hpart(pcode), px = P.xpart(pcode);
    FqVec xv = P.decode_j(px);
    FqVec x1(xv.begin(), xv.begin() + d), x2(xv.begin() + d, xv.end());
    auto tuple = P.H().root().tuple_of(P.H().root_index(ph));
    size_t r = G.H().root().orders().size();
    std::vector<uint32_t> t1(tuple.begin(), tuple.begin() + r),
        t2(tuple.begin() + r, tuple.end());
    uint32_t h1 = static_cast<uint32_t>(G.H().position(G.H().root().index_of(t1)));
    uint32_t h2 = static_cast<uint32_t>(G.H().position(G.H().root().index_of(t2)));
    return std::pair<uint32_t, uint32_t>{G.gcode(h1, G.encode_j(x1)),
                                         G.gcode(h2, G.encode_j(x2))};
  };
  const auto& pclasses = P.superclasses();
  std::vector<Cyclotomic> tensor;
  tensor.reserve(pclasses.size());
  for (const Orbit& K : pclasses) {
    auto [g1, g2] = split(K.rep());
    Cyclotomic v =
        table.entries[i][G.class_of(g1)].lifted(P.ambient_order()) *
        table.entries[j][G.class_of(g2)].lifted(P.ambient_order());
    // tensor of superclass functions is constant on product superclasses
    for (uint32_t m : K.members) {
      auto [m1, m2] = split(m);
      Cyclotomic w = table.entries[i][G.class_of(m1)].lifted(P.ambient_order()) *
                     table.entries[j][G.class_of(m2)].lifted(P.ambient_order());
      if (!(w == v))
        throw consistency_error("tensor function is not constant on a product superclass");
    }
    tensor.push_back(std::move(v));
  }

  TriangularSubgroup diag = build_subgroup(P, diagonal_spec(G));
  TriangularGroup& D = *diag.theory;
  std::vector<Cyclotomic> res = restrict_function(P, tensor, diag);
  SupercharacterTable dtable = enumerate_supercharacters(D);
  Decomposition ddec = decompose(D, dtable, res);

  // transport the diagonal rows to G rows through the isomorphism g -> (g,g)
  const auto& gclasses = G.superclasses();
  std::vector<uint32_t> iota(gclasses.size());  // G class -> D class
  for (size_t k = 0; k < gclasses.size(); ++k) {
    uint32_t g = gclasses[k].rep();
    uint32_t h = G.hpart(g), x = G.xpart(g);
    auto tuple = G.H().root().tuple_of(G.H().root_index(h));
    std::vector<uint32_t> twice = tuple;
    twice.insert(twice.end(), tuple.begin(), tuple.end());
    FqVec xv = G.decode_j(x);
    FqVec xx(2 * d);
    for (uint32_t t = 0; t < d; ++t) xx[t] = xx[d + t] = xv[t];
    uint32_t ph = static_cast<uint32_t>(P.H().position(P.H().root().index_of(twice)));
    uint32_t pcode = P.gcode(ph, P.encode_j(xx));
    int64_t sc = diag.parent_to_sub[pcode];
    if (sc < 0) throw consistency_error("diagonal image is outside the diagonal subgroup");
    iota[k] = D.class_of(static_cast<uint32_t>(sc));
  }

  Decomposition out;
  out.coeffs.assign(table.row_count(), Rational(0));
  std::vector<uint8_t> used(dtable.row_count(), 0);
  for (size_t gi = 0; gi < table.row_count(); ++gi) {
    // the diagonal row matching chi_gi under the isomorphism
    int match = -1;
    for (size_t di = 0; di < dtable.row_count(); ++di) {
      if (used[di]) continue;
      bool same = true;
      for (size_t k = 0; k < gclasses.size() && same; ++k)
        same = (dtable.entries[di][iota[k]] == table.entries[gi][k].lifted(D.ambient_order()));
      if (same) {
        match = static_cast<int>(di);
        break;
      }
    }
    if (match < 0)
      throw consistency_error("no diagonal supercharacter matches a supercharacter of G");
    used[match] = 1;
    out.coeffs[gi] = ddec.coeffs[match];
  }
  return out;
}

std::vector<Orbit> algebra_group_superclasses(TriangularGroup& G) {
  if (G.h_size() != 1) throw usage_error("algebra-group path requires a trivial H");
  std::vector<uint32_t> points(G.j_points());
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (uint32_t u = 0; u < G.j_points(); ++u) {
    maps.emplace_back([&G, u](uint32_t x) { return G.j_add(x, G.j_mul(u, x)); });
    maps.emplace_back([&G, u](uint32_t x) { return G.j_add(x, G.j_mul(x, u)); });
  }
  std::vector<Orbit> xorbits = bfs_orbits(points, maps);
  std::vector<Orbit> out;
  for (Orbit& o : xorbits) {
    Orbit k;
    for (uint32_t x : o.members) k.members.push_back(G.gcode(0, x));
    std::sort(k.members.begin(), k.members.end());
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.rep() < b.rep(); });
  return out;
}

std::vector<std::vector<Cyclotomic>> algebra_group_supercharacters(TriangularGroup& G) {
  if (G.h_size() != 1) throw usage_error("algebra-group path requires a trivial H");
  const FieldSpec& F = G.field();
  uint32_t d = G.dim();

  std::vector<uint32_t> points(G.j_points());
  std::iota(points.begin(), points.end(), 0);
  std::vector<std::function<uint32_t(uint32_t)>> maps;
  for (uint32_t u = 0; u < G.j_points(); ++u) {
    // lam -> lam((1+u) x) and lam -> lam(x (1+u))
    maps.emplace_back([&G, u, d](uint32_t lam) {
      FqVec out(d);
      for (uint32_t k = 0; k < d; ++k)
        out[k] = G.pair(lam, G.j_add(G.j_unit(k), G.j_mul(u, G.j_unit(k))));
      return G.encode_j(out);
    });
    maps.emplace_back([&G, u, d](uint32_t lam) {
      FqVec out(d);
      for (uint32_t k = 0; k < d; ++k)
        out[k] = G.pair(lam, G.j_add(G.j_unit(k), G.j_mul(G.j_unit(k), u)));
      return G.encode_j(out);
    });
  }
  std::vector<Orbit> lam_orbits = bfs_orbits(points, maps);

  std::vector<std::vector<Cyclotomic>> chars;
  for (const Orbit& o : lam_orbits) {
    uint32_t lam = o.rep();
    // brute-force right stabilizer scan: {y : lam(y J) = 0}
    std::vector<uint8_t> mask(G.size(), 0);
    uint64_t count = 0;
    for (uint32_t y = 0; y < G.j_points(); ++y) {
      bool inside = true;
      for (uint32_t jj = 0; jj < d && inside; ++jj)
        if (G.pair(lam, G.j_mul(y, G.j_unit(jj))) != 0) inside = false;
      if (inside) {
        mask[G.gcode(0, y)] = 1;
        ++count;
      }
    }
    (void)count;
    uint32_t n = G.ambient_order();
    auto xi = [&G, lam, n](uint32_t g) {
      return additive_character(G.field(), G.pair(lam, G.xpart(g)), n);
    };
    chars.push_back(induce_function(G, mask, xi));
  }
  (void)F;
  return chars;
}

std::vector<Cyclotomic> algebra_group_superinduce(TriangularGroup& G,
                                                  const TriangularSubgroup& sub,
                                                  const std::vector<Cyclotomic>& phi) {
  if (G.h_size() != 1) throw usage_error("algebra-group path requires a trivial H");
  TriangularGroup& S = *sub.theory;
  const auto& classes = G.superclasses();
  std::vector<Cyclotomic> out;
  out.reserve(classes.size());
  Rational scale = Rational(Int(1), Int(G.size()) * Int(S.size()));
  for (const Orbit& K : classes) {
    uint32_t x = G.xpart(K.rep());
    Cyclotomic acc(G.ambient_order());
    for (uint32_t u = 0; u < G.j_points(); ++u)
      for (uint32_t v = 0; v < G.j_points(); ++v) {
        // (1+u)x(1+v) = x + ux + xv + uxv
        uint32_t y = G.j_add(G.j_add(x, G.j_mul(u, x)),
                             G.j_add(G.j_mul(x, v), G.j_mul(G.j_mul(u, x), v)));
        uint32_t pcode = G.gcode(0, y);
        if (sub.parent_mask[pcode])
          acc += phi[S.class_of(static_cast<uint32_t>(sub.parent_to_sub[pcode]))];
      }
    acc *= scale;
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace trichar
