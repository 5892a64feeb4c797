// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact arithmetic everywhere) and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "trichar/session.hpp"

using namespace trichar;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
  auto start = Clock::now();
  std::string verdict;
  try {
    verdict = body();
  } catch (const std::exception& ex) {
    verdict = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream line;
  if (verdict.empty()) {
    line << "PASS " << name;
  } else {
    ++failures;
    line << "FAIL " << name << " -- " << verdict;
  }
  line.precision(2);
  line << "  [" << std::fixed << secs << "s]";
  std::cout << line.str() << std::endl;
}

struct CatalogEntry {
  std::string name;
  std::shared_ptr<TriangularGroup> group;
};

std::vector<CatalogEntry> catalog() {
  return {{"UT(3,2)", build_ut(3, 2)}, {"UT(3,3)", build_ut(3, 3)},
          {"UT(4,2)", build_ut(4, 2)}, {"T(2,3)", build_t(2, 3)},
          {"T(2,4)", build_t(2, 4)},   {"T(3,3)", build_t(3, 3)}};
}

Cyclotomic rat(TriangularGroup& G, long v) {
  return Cyclotomic::from_rational(Rational(v), G.ambient_order());
}

std::string check_axioms(TriangularGroup& G, SupercharacterTable& t) {
  if (t.row_count() != G.superclasses().size()) return "table is not square";
  ValidationReport rep = verify_table_axioms(t);
  for (const auto& item : rep.items)
    if (!item.ok) return item.name + ": " + item.detail;
  return "";
}

}  // namespace

int main() {
  // 1. coarse-theory sanity on UT(3,2)
  criterion("1 coarse theory table on UT(3,2)", [] {
    auto Gp = build_ut(3, 2);
    TriangularGroup& G = *Gp;
    if (G.size() != 8) return std::string("|G| != 8");
    auto ones = one_character(G);
    auto reg = regular_character(G);
    std::vector<Cyclotomic> chi2(reg.size(), Cyclotomic(G.ambient_order()));
    for (size_t k = 0; k < reg.size(); ++k) chi2[k] = reg[k] - ones[k];
    uint32_t k1 = G.class_of(G.identity());
    if (!(ones[k1] == rat(G, 1))) return std::string("chi1 at {1} != 1");
    if (!(chi2[k1] == rat(G, 7))) return std::string("chi2 at {1} != |G|-1");
    for (size_t k = 0; k < reg.size(); ++k) {
      if (k == k1) continue;
      if (!(ones[k] == rat(G, 1))) return std::string("chi1 off {1} != 1");
      if (!(chi2[k] == rat(G, -1))) return std::string("chi2 off {1} != -1");
    }
    if (!(inner_product(G, chi2, chi2) == rat(G, 7)))
      return std::string("(chi2, chi2) != |G|-1");
    return std::string();
  });

  // shared catalog state for criteria 2-7
  auto entries = catalog();
  std::vector<SupercharacterTable> tables;

  // 2. supercharacter axioms on every catalog member
  criterion("2 supercharacter axioms across the catalog", [&] {
    for (auto& e : entries) {
      SupercharacterTable t = enumerate_supercharacters(*e.group);
      std::string err = check_axioms(*e.group, t);
      if (!err.empty()) return e.name + ": " + err;
      tables.push_back(std::move(t));
    }
    return std::string();
  });

  // 3. orbit duality
  criterion("3 orbit duality in J and J*", [&] {
    for (auto& e : entries) {
      TriangularGroup& G = *e.group;
      auto reg = [](const std::vector<Orbit>& v) {
        size_t n = 0;
        for (const auto& o : v) n += o.regular ? 1 : 0;
        return n;
      };
      const auto& oj = G.orbits_j();
      const auto& os = G.orbits_jstar();
      if (reg(oj) != reg(os)) return e.name + ": regular orbit counts differ";
      if (oj.size() - reg(oj) != os.size() - reg(os))
        return e.name + ": singular orbit counts differ";
    }
    return std::string();
  });

  // 4. triple bijections
  criterion("4 superclass and supercharacter triple bijections", [&] {
    for (auto& e : entries) {
      TriangularGroup& G = *e.group;
      const auto& classes = G.superclasses();
      const auto& bt = G.b_triples();
      const auto& at = G.a_triples();
      if (bt.size() != classes.size() || at.size() != classes.size())
        return e.name + ": |A| or |B| differs from the superclass count";
      for (size_t k = 0; k < classes.size(); ++k) {
        BTriple t = G.triple_of_superclass(k);
        if (G.superclass_of_triple(t.e_index, t.h_pos, t.omega.front()) != k)
          return e.name + ": round trip failed at class " + std::to_string(k);
      }
    }
    return std::string();
  });

  // 5. perpendicularity lemma
  criterion("5 perpendicularity lemma J_rt^perp = J lam", [&] {
    for (auto& e : entries) {
      TriangularGroup& G = *e.group;
      bool exhaustive = (e.name == "UT(3,2)" || e.name == "UT(4,2)");
      if (exhaustive) {
        for (uint32_t lam = 0; lam < G.j_points(); ++lam)
          if (!perp_check(G, lam)) return e.name + ": fails at lambda " + std::to_string(lam);
      } else {
        std::mt19937_64 rng(4242);
        for (int k = 0; k < 100; ++k) {
          uint32_t lam = static_cast<uint32_t>(rng() % G.j_points());
          if (!perp_check(G, lam)) return e.name + ": fails at lambda " + std::to_string(lam);
        }
      }
    }
    return std::string();
  });

  // 6 and 7 share the per-subgroup reports
  std::vector<std::vector<ResIndReport>> all_reports(entries.size());
  criterion("6 restriction theorem over all test subgroups", [&] {
    for (size_t gi = 0; gi < entries.size(); ++gi) {
      TriangularGroup& G = *entries[gi].group;
      for (const SubgroupSpec& spec : standard_test_subgroups(G)) {
        TriangularSubgroup sub = build_subgroup(G, spec);
        SupercharacterTable st = enumerate_supercharacters(*sub.theory);
        ResIndReport rep = resind_report(G, tables[gi], sub, st);
        if (!rep.restriction_ok)
          return entries[gi].name + "/" + spec.label + ": " + rep.detail;
        all_reports[gi].push_back(std::move(rep));
      }
    }
    return std::string();
  });

  criterion("7 reciprocity and the superinduction coefficient formula", [&] {
    for (size_t gi = 0; gi < entries.size(); ++gi) {
      if (all_reports[gi].empty()) return std::string("no reports (criterion 6 failed earlier)");
      for (const ResIndReport& rep : all_reports[gi]) {
        if (!rep.reciprocity_ok)
          return entries[gi].name + "/" + rep.subgroup_label + ": " + rep.detail;
        if (!rep.formula_ok)
          return entries[gi].name + "/" + rep.subgroup_label + ": " + rep.detail;
      }
    }
    return std::string();
  });

  // 8. product corollary with one diagonal cross-check
  criterion("8 product decomposition with nonnegative integers", [&] {
    for (const std::string& name : {std::string("UT(3,2)"), std::string("T(2,3)")}) {
      size_t gi = 0;
      while (entries[gi].name != name) ++gi;
      TriangularGroup& G = *entries[gi].group;
      SupercharacterTable& t = tables[gi];
      for (size_t i = 0; i < t.row_count(); ++i)
        for (size_t j = i; j < t.row_count(); ++j) {
          Decomposition dec = product_decompose(G, t, i, j);
          for (const Rational& c : dec.coeffs)
            if (!c.is_integer() || c.sign() < 0)
              return name + ": coefficient " + c.str() + " at pair (" + std::to_string(i) +
                     "," + std::to_string(j) + ")";
        }
    }
    // one instance through the diagonal-subgroup construction
    size_t gi = 0;  // UT(3,2)
    TriangularGroup& G = *entries[gi].group;
    SupercharacterTable& t = tables[gi];
    size_t i = t.row_count() - 1, j = 1;
    Decomposition direct = product_decompose(G, t, i, j);
    Decomposition via = product_via_diagonal(G, t, i, j);
    if (!(direct.coeffs == via.coeffs))
      return std::string("diagonal-subgroup cross-check disagrees with the direct product");
    return std::string();
  });

  // 9. algebra-group specialization for trivial H
  criterion("9 algebra-group specialization (trivial H members)", [&] {
    for (size_t gi = 0; gi < entries.size(); ++gi) {
      TriangularGroup& G = *entries[gi].group;
      if (G.h_size() != 1) continue;
      auto ag = algebra_group_superclasses(G);
      const auto& classes = G.superclasses();
      if (ag.size() != classes.size())
        return entries[gi].name + ": superclass counts differ between code paths";
      for (size_t k = 0; k < classes.size(); ++k)
        if (ag[k].members != classes[k].members)
          return entries[gi].name + ": superclass partition differs";
      auto ag_chars = algebra_group_supercharacters(G);
      SupercharacterTable& t = tables[gi];
      if (ag_chars.size() != t.row_count())
        return entries[gi].name + ": supercharacter counts differ";
      std::vector<uint8_t> used(t.row_count(), 0);
      for (const auto& f : ag_chars) {
        int match = -1;
        for (size_t i = 0; i < t.row_count() && match < 0; ++i) {
          if (used[i]) continue;
          bool same = true;
          for (uint32_t g = 0; g < G.size() && same; ++g)
            same = (f[g] == t.entries[i][G.class_of(g)]);
          if (same) match = static_cast<int>(i);
        }
        if (match < 0)
          return entries[gi].name + ": a classically induced character matches no table row";
        used[match] = 1;
      }
    }
    return std::string();
  });

  // 10. byte determinism of check-all on T(2,3)
  criterion("10 deterministic check-all output on T(2,3)", [] {
    SessionConfig cfg = parse_config(Json::parse(
        R"({"builtin":{"family":"t","n":2,"q":3},"command":"check-all"})"));
    RunResult first = run(cfg);
    RunResult second = run(cfg);
    if (first.exit_code != 0) return std::string("check-all failed: ") + first.text;
    if (first.artifact.dump(2) != second.artifact.dump(2))
      return std::string("the two runs differ byte-wise");
    return std::string();
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
