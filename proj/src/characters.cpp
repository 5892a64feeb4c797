#include "trichar/characters.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace trichar {

Stabilizers right_stabilizers(TriangularGroup& G, uint32_t lam) {
  const FieldSpec& F = G.field();
  uint32_t d = G.dim();
  // row j of M is y -> lam(y u_j); kernel is J_{lam,rt}
  FqMat M(d, d);
  for (uint32_t j = 0; j < d; ++j)
    for (uint32_t i = 0; i < d; ++i) {
      uint32_t prod = G.j_mul(G.j_unit(i), G.j_unit(j));
      M.at(j, i) = G.pair(lam, prod);
    }
  Stabilizers st;
  FqMat ker = kernel_basis(F, M);
  std::vector<FqVec> rows;
  for (uint32_t r = 0; r < ker.rows; ++r)
    rows.emplace_back(ker.a.begin() + size_t(r) * d, ker.a.begin() + size_t(r + 1) * d);
  st.j_rt = Subspace(F, d, rows);

  FqVec vl = G.decode_j(lam);
  for (uint32_t h = 0; h < G.H().size(); ++h) {
    // lam h (x) = lam(hx): transform by L^T; h lam (x) = lam(xh): by R^T
    FqVec rt = mat_apply(F, transpose(G.action().L(h)), vl);
    FqVec lt = mat_apply(F, transpose(G.action().R(h)), vl);
    if (rt == vl) st.h_rt.push_back(h);
    if (lt == vl) st.h_lt.push_back(h);
  }
  return st;
}

std::pair<Subspace, Subspace> perp_sides(TriangularGroup& G, uint32_t lam) {
  const FieldSpec& F = G.field();
  uint32_t d = G.dim();
  Stabilizers st = right_stabilizers(G, lam);
  // annihilator of J_rt in J^*: forms vanishing on every basis vector of J_rt
  FqMat M(st.j_rt.dim(), d);
  for (uint32_t r = 0; r < st.j_rt.dim(); ++r)
    for (uint32_t j = 0; j < d; ++j) M.at(r, j) = st.j_rt.basis().at(r, j);
  FqMat ker = kernel_basis(F, M);
  std::vector<FqVec> ann_rows;
  for (uint32_t r = 0; r < ker.rows; ++r)
    ann_rows.emplace_back(ker.a.begin() + size_t(r) * d, ker.a.begin() + size_t(r + 1) * d);
  Subspace annihilator(F, d, ann_rows);

  // J lam = {y lam : y in J}, (y lam)(x) = lam(x y)
  std::vector<FqVec> translates;
  for (uint32_t i = 0; i < d; ++i) {
    FqVec w(d);
    for (uint32_t j = 0; j < d; ++j)
      w[j] = G.pair(lam, G.j_mul(G.j_unit(j), G.j_unit(i)));
    translates.push_back(std::move(w));
  }
  Subspace jlam(F, d, translates);
  return {annihilator, jlam};
}

bool perp_check(TriangularGroup& G, uint32_t lam) {
  auto [ann, jlam] = perp_sides(G, lam);
  return ann == jlam;
}

GAlpha build_g_alpha(TriangularGroup& G, const ATriple& alpha, uint32_t lambda) {
  const FieldSpec& F = G.field();
  if (std::find(alpha.omega_star.begin(), alpha.omega_star.end(), lambda) ==
      alpha.omega_star.end())
    throw usage_error("lambda does not belong to the orbit omega*");

  GAlpha A;
  A.e_index = alpha.e_index;
  A.lambda = lambda;
  A.theta_exp = alpha.theta_exp;
  A.j_rt = right_stabilizers(G, lambda).j_rt;

  const PierceData& pd = G.pierce(alpha.e_index);
  // H(e) stabilizes a regular lambda on both sides
  FqVec vl = G.decode_j(lambda);
  for (uint32_t h : pd.He) {
    if (mat_apply(F, transpose(G.action().L(h)), vl) != vl ||
        mat_apply(F, transpose(G.action().R(h)), vl) != vl)
      throw consistency_error("H(e) does not stabilize the regular form lambda");
  }

  A.member_mask.assign(G.size(), 0);
  std::vector<uint32_t> xcodes;
  for (const FqVec& v : A.j_rt.enumerate(F)) xcodes.push_back(G.encode_j(v));
  for (uint32_t h : pd.He)
    for (uint32_t x : xcodes) A.member_mask[G.gcode(h, x)] = 1;
  A.size = static_cast<uint32_t>(pd.He.size() * xcodes.size());

  // closure sanity: exhaustive when small, sampled otherwise
  std::vector<uint32_t> members;
  for (uint32_t g = 0; g < G.size(); ++g)
    if (A.member_mask[g]) members.push_back(g);
  if (uint64_t(members.size()) * members.size() <= 1u << 20) {
    for (uint32_t g1 : members)
      for (uint32_t g2 : members)
        if (!A.member_mask[G.mul(g1, g2)])
          throw consistency_error("G_alpha is not closed under multiplication");
  } else {
    std::mt19937_64 rng(12345);
    for (int k = 0; k < 512; ++k) {
      uint32_t g1 = members[rng() % members.size()];
      uint32_t g2 = members[rng() % members.size()];
      if (!A.member_mask[G.mul(g1, g2)])
        throw consistency_error("G_alpha is not closed under multiplication");
    }
  }
  return A;
}

uint32_t xi_exponent(TriangularGroup& G, const GAlpha& A, uint32_t g) {
  if (!A.member_mask[g]) throw domain_error("element is outside G_alpha");
  uint32_t n = G.ambient_order();
  uint32_t h = G.hpart(g), x = G.xpart(g);
  uint32_t eps = additive_character_exponent(G.field(), G.pair(A.lambda, x), n);
  return (A.theta_exp[h] + eps) % n;
}

Cyclotomic xi_value(TriangularGroup& G, const GAlpha& A, uint32_t g) {
  return Cyclotomic::zeta_power(G.ambient_order(), xi_exponent(G, A, g));
}

Cyclotomic induced_value_at(TriangularGroup& G, const GAlpha& A, uint32_t g) {
  uint32_t n = G.ambient_order();
  std::vector<Int> counts(n);
  const std::vector<uint32_t>* row = G.conjugate_row(g);
  for (uint32_t s = 0; s < G.size(); ++s) {
    uint32_t c = row ? (*row)[s] : G.mul(G.mul(G.inv(s), g), s);
    if (A.member_mask[c]) counts[xi_exponent(G, A, c)] += 1;
  }
  Cyclotomic val = root_combination(n, counts);
  val *= Rational(Int(1), Int(A.size));
  return val;
}

std::vector<Cyclotomic> induce_function(TriangularGroup& G, const std::vector<uint8_t>& sub_mask,
                                        const std::function<Cyclotomic(uint32_t)>& xi) {
  uint64_t sub_size = 0;
  for (uint8_t m : sub_mask) sub_size += m;
  std::vector<Cyclotomic> out(G.size(), Cyclotomic(G.ambient_order()));
  for (uint32_t g = 0; g < G.size(); ++g) {
    Cyclotomic acc(G.ambient_order());
    for (uint32_t s = 0; s < G.size(); ++s) {
      uint32_t c = G.mul(G.mul(G.inv(s), g), s);
      if (sub_mask[c]) acc += xi(c);
    }
    acc *= Rational(Int(1), Int(sub_size));
    out[g] = std::move(acc);
  }
  return out;
}

Cyclotomic inner_product(TriangularGroup& G, const std::vector<Cyclotomic>& f1,
                         const std::vector<Cyclotomic>& f2) {
  const auto& classes = G.superclasses();
  if (f1.size() != classes.size() || f2.size() != classes.size())
    throw usage_error("class function length differs from the superclass count");
  Cyclotomic acc(G.ambient_order());
  for (size_t k = 0; k < classes.size(); ++k) {
    Cyclotomic term = f1[k] * f2[k].conj();
    term *= Rational(Int(classes[k].size()), Int(1));
    acc += term;
  }
  acc *= Rational(Int(1), Int(G.size()));
  return acc;
}

namespace {

std::vector<Cyclotomic> supercharacter_row(TriangularGroup& G, const GAlpha& A) {
  const auto& classes = G.superclasses();
  std::vector<Cyclotomic> row;
  row.reserve(classes.size());
  for (const Orbit& K : classes) row.push_back(induced_value_at(G, A, K.rep()));
  return row;
}

}  // namespace

SupercharacterTable enumerate_supercharacters(TriangularGroup& G, int jobs) {
  SupercharacterTable t;
  t.G = &G;
  t.rows = G.a_triples();
  const auto& classes = G.superclasses();
  if (t.rows.size() != classes.size())
    throw consistency_error("supercharacter table is not square: " + std::to_string(t.rows.size()) +
                            " rows vs " + std::to_string(classes.size()) + " superclasses");

  // warm every cache the parallel section reads
  G.lattice();
  for (const ATriple& a : t.rows) G.pierce(a.e_index);
  G.conjugate_row(G.identity());
  uint32_t identity_class = G.class_of(G.identity());

  t.lambda.resize(t.rows.size());
  t.entries.assign(t.rows.size(), {});
  t.degrees.assign(t.rows.size(), 0);
  t.norms.assign(t.rows.size(), Rational(0));

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mx;
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= t.rows.size() || failed.load()) break;
      try {
        const ATriple& alpha = t.rows[i];
        uint32_t lam = alpha.omega_star.front();
        GAlpha A = build_g_alpha(G, alpha, lam);
        std::vector<Cyclotomic> row = supercharacter_row(G, A);
        // the induced character does not depend on the chosen representative
        if (alpha.omega_star.size() > 1) {
          GAlpha A2 = build_g_alpha(G, alpha, alpha.omega_star[1]);
          if (supercharacter_row(G, A2) != row)
            throw consistency_error("supercharacter depends on the choice of lambda in omega*");
        }
        Int degree = Int(G.size()) / Int(A.size);
        if (degree * Int(A.size) != Int(G.size()))
          throw consistency_error("|G_alpha| does not divide |G|");
        if (!(row[identity_class] == Cyclotomic::from_rational(Rational(degree), G.ambient_order())))
          throw consistency_error("chi(1) differs from |G|/|G_alpha|");
        t.lambda[i] = lam;
        t.entries[i] = std::move(row);
        t.degrees[i] = degree;
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(failure_mx);
        failed.store(true);
        if (failure.empty()) failure = ex.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw consistency_error(failure);

  for (size_t i = 0; i < t.rows.size(); ++i) {
    Cyclotomic nrm = inner_product(G, t.entries[i], t.entries[i]);
    if (!nrm.is_rational())
      throw consistency_error("(chi, chi) is not rational");
    Rational r = nrm.rational_value();
    if (!r.is_integer() || r.sign() <= 0)
      throw consistency_error("(chi, chi) is not a positive integer: " + r.str());
    t.norms[i] = r;
  }
  return t;
}

ValidationReport verify_table_axioms(SupercharacterTable& table) {
  TriangularGroup& G = *table.G;
  const auto& classes = G.superclasses();
  ValidationReport rep;

  rep.add("table_square", table.row_count() == classes.size(),
          std::to_string(table.row_count()) + " rows, " + std::to_string(classes.size()) +
              " superclasses");

  bool disjoint = true;
  std::string disjoint_detail;
  for (size_t i = 0; i < table.row_count() && disjoint; ++i)
    for (size_t j = i + 1; j < table.row_count(); ++j) {
      Cyclotomic ip = inner_product(G, table.entries[i], table.entries[j]);
      if (!ip.is_zero()) {
        disjoint = false;
        disjoint_detail = "rows " + std::to_string(i) + ", " + std::to_string(j) + ": " + ip.str();
        break;
      }
    }
  rep.add("pairwise_disjoint", disjoint, disjoint_detail);

  bool constant = true;
  std::string constant_detail;
  for (size_t i = 0; i < table.row_count() && constant; ++i) {
    GAlpha A = build_g_alpha(G, table.rows[i], table.lambda[i]);
    for (uint32_t g = 0; g < G.size(); ++g) {
      if (!(induced_value_at(G, A, g) == table.entries[i][G.class_of(g)])) {
        constant = false;
        constant_detail = "row " + std::to_string(i) + " at element " + std::to_string(g);
        break;
      }
    }
  }
  rep.add("constant_on_superclasses", constant, constant_detail);

  rep.add("identity_superclass", classes[G.class_of(G.identity())].size() == 1);

  bool integral = true;
  std::string integral_detail;
  for (size_t i = 0; i < table.row_count() && integral; ++i)
    for (size_t k = 0; k < classes.size(); ++k)
      if (!table.entries[i][k].is_integral()) {
        integral = false;
        integral_detail = "row " + std::to_string(i) + ", class " + std::to_string(k) + ": " +
                          table.entries[i][k].str();
        break;
      }
  rep.add("values_in_Z_zeta_n", integral, integral_detail);

  // sum over rows of (deg/norm) * chi equals the regular character
  std::vector<Cyclotomic> combo(classes.size(), Cyclotomic(G.ambient_order()));
  for (size_t i = 0; i < table.row_count(); ++i) {
    Rational coeff = Rational(table.degrees[i]) / table.norms[i];
    for (size_t k = 0; k < classes.size(); ++k) combo[k] += table.entries[i][k] * coeff;
  }
  std::vector<Cyclotomic> reg = regular_character(G);
  bool reg_ok = true;
  std::string reg_detail;
  for (size_t k = 0; k < classes.size(); ++k)
    if (!(combo[k] == reg[k])) {
      reg_ok = false;
      reg_detail = "class " + std::to_string(k) + ": " + combo[k].str() + " vs " + reg[k].str();
      break;
    }
  rep.add("regular_character_identity", reg_ok, reg_detail);
  return rep;
}

std::vector<Cyclotomic> regular_character(TriangularGroup& G) {
  const auto& classes = G.superclasses();
  std::vector<Cyclotomic> out(classes.size(), Cyclotomic(G.ambient_order()));
  out[G.class_of(G.identity())] =
      Cyclotomic::from_rational(Rational(Int(G.size())), G.ambient_order());
  return out;
}

std::vector<Cyclotomic> one_character(TriangularGroup& G) {
  const auto& classes = G.superclasses();
  return std::vector<Cyclotomic>(classes.size(),
                                 Cyclotomic::from_rational(Rational(1), G.ambient_order()));
}

}  // namespace trichar
