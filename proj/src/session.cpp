#include "trichar/session.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace trichar {

namespace {

uint16_t fq_elem_from_json(const FieldSpec& F, const Json& j) {
  if (j.is_number_integer()) {
    int64_t v = j.get<int64_t>();
    if (v < 0 || v >= F.q()) throw usage_error("field element code out of range");
    return static_cast<uint16_t>(v);
  }
  if (j.is_array()) {
    std::vector<uint16_t> coords;
    for (const auto& c : j) coords.push_back(c.get<uint16_t>());
    return F.from_coords(coords);
  }
  throw usage_error("field element must be a code or a residue list");
}

Json fq_elem_to_json(const FieldSpec& F, uint16_t code) {
  Json out = Json::array();
  for (uint16_t r : F.to_coords(code)) out.push_back(r);
  return out;
}

Json fq_vec_to_json(const FieldSpec& F, const FqVec& v) {
  Json out = Json::array();
  for (uint16_t c : v) out.push_back(fq_elem_to_json(F, c));
  return out;
}

FqMat matrix_from_json(const FieldSpec& F, const Json& j) {
  if (!j.is_array() || j.empty()) throw usage_error("matrix must be a nonempty array of rows");
  uint32_t rows = static_cast<uint32_t>(j.size());
  uint32_t cols = static_cast<uint32_t>(j[0].size());
  FqMat m(rows, cols);
  for (uint32_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw usage_error("ragged matrix rows");
    for (uint32_t c = 0; c < cols; ++c) m.at(r, c) = fq_elem_from_json(F, j[r][c]);
  }
  return m;
}

}  // namespace

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const Rational& r : c.coords()) coeffs.push_back(r.str());
  return Json{{"coeffs", coeffs}, {"order", c.order()}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  uint32_t order = j.at("order").get<uint32_t>();
  std::vector<Rational> coords;
  for (const auto& s : j.at("coeffs")) coords.push_back(Rational::parse(s.get<std::string>()));
  return Cyclotomic(order, std::move(coords));
}

SessionConfig parse_config(const Json& doc) {
  SessionConfig cfg;
  if (!doc.is_object()) throw usage_error("config must be a JSON object");
  if (!doc.contains("command")) throw usage_error("config is missing required field: command");
  cfg.command = doc.at("command").get<std::string>();
  static const std::vector<std::string> known = {
      "validate", "superclasses", "table", "restrict", "superinduce", "products", "check-all"};
  if (std::find(known.begin(), known.end(), cfg.command) == known.end())
    throw usage_error("unknown command: " + cfg.command);

  if (doc.contains("builtin")) {
    const Json& b = doc.at("builtin");
    if (!b.contains("family")) throw usage_error("builtin is missing field: family");
    cfg.builtin_family = b.at("family").get<std::string>();
    cfg.family_n = b.value("n", 2u);
    cfg.family_q = b.value("q", 0u);
    if (cfg.family_q == 0) throw usage_error("builtin is missing field: q");
  } else if (doc.contains("input")) {
    cfg.input_doc = doc.at("input");
  } else {
    throw usage_error("config needs either builtin or input");
  }
  if (doc.contains("subgroup")) cfg.subgroup_doc = doc.at("subgroup");
  cfg.format = doc.value("format", std::string("json"));
  if (cfg.format != "json" && cfg.format != "text")
    throw usage_error("format must be json or text");
  cfg.output = doc.value("output", std::string(""));
  cfg.jobs = doc.value("jobs", 1);
  if (cfg.jobs < 1) throw usage_error("jobs must be positive");
  return cfg;
}

GroupParts parse_group_document(const Json& doc) {
  if (!doc.contains("field")) throw usage_error("input document is missing field: field");
  const Json& f = doc.at("field");
  uint32_t p = f.at("p").get<uint32_t>();
  uint32_t m = f.value("m", 1u);
  std::vector<uint16_t> modulus;
  if (f.contains("modulus"))
    for (const auto& c : f.at("modulus")) modulus.push_back(c.get<uint16_t>());
  auto field = std::make_shared<const FieldSpec>(p, m, std::move(modulus));

  const Json& alg = doc.at("algebra");
  uint32_t dim = alg.at("dim").get<uint32_t>();
  std::vector<uint16_t> sc(size_t(dim) * dim * dim, 0);
  for (const auto& entry : alg.at("structure")) {
    if (!entry.is_array() || entry.size() != 4)
      throw usage_error("structure entries must be [i, j, k, value]");
    uint32_t i = entry[0].get<uint32_t>(), j = entry[1].get<uint32_t>(),
             k = entry[2].get<uint32_t>();
    if (i >= dim || j >= dim || k >= dim) throw usage_error("structure index out of range");
    sc[(size_t(i) * dim + j) * dim + k] = fq_elem_from_json(*field, entry[3]);
  }
  NilpotentAlgebra J(field, dim, std::move(sc));

  std::vector<uint32_t> orders;
  if (doc.contains("group"))
    for (const auto& d : doc.at("group").at("orders")) orders.push_back(d.get<uint32_t>());
  auto root = std::make_shared<const AbelianGroup>(orders);
  HView view = HView::full(root);

  std::vector<FqMat> lg, rg;
  if (doc.contains("actions")) {
    for (const auto& mj : doc.at("actions").at("left")) lg.push_back(matrix_from_json(*field, mj));
    for (const auto& mj : doc.at("actions").at("right")) rg.push_back(matrix_from_json(*field, mj));
  }
  HAction act = HAction::from_generators(*field, view, dim, lg, rg);
  return GroupParts{field, std::move(J), root, std::move(act)};
}

std::shared_ptr<TriangularGroup> group_from_config(const SessionConfig& cfg) {
  if (cfg.builtin_family) return build_family(*cfg.builtin_family, cfg.family_n, cfg.family_q);
  GroupParts parts = parse_group_document(*cfg.input_doc);
  HView view = HView::full(parts.root);
  return std::make_shared<TriangularGroup>(parts.field, std::move(parts.J), std::move(view),
                                           std::move(parts.action));
}

SubgroupSpec parse_subgroup_document(TriangularGroup& G, const Json& doc) {
  SubgroupSpec spec;
  spec.label = doc.value("label", std::string("subgroup"));
  if (doc.contains("h_generators"))
    for (const auto& t : doc.at("h_generators")) {
      std::vector<uint32_t> tuple;
      for (const auto& e : t) tuple.push_back(e.get<uint32_t>());
      spec.h_generators.push_back(std::move(tuple));
    }
  if (doc.contains("j_basis"))
    for (const auto& vj : doc.at("j_basis")) {
      FqVec v;
      for (const auto& e : vj) v.push_back(fq_elem_from_json(G.field(), e));
      spec.j_basis.push_back(std::move(v));
    }
  return spec;
}

namespace {

Json group_descriptor(const SessionConfig& cfg, TriangularGroup* G) {
  Json d;
  if (cfg.builtin_family)
    d["builtin"] = Json{{"family", *cfg.builtin_family}, {"n", cfg.family_n}, {"q", cfg.family_q}};
  else
    d["builtin"] = nullptr;
  if (G) {
    d["dim_J"] = G->dim();
    d["order"] = G->size();
    d["order_H"] = G->h_size();
    d["q"] = G->q();
    d["ambient_cyclotomic_order"] = G->ambient_order();
  }
  return d;
}

Json element_to_json(TriangularGroup& G, uint32_t code) {
  Json out;
  out["h"] = G.H().root().tuple_of(G.H().root_index(G.hpart(code)));
  out["x"] = fq_vec_to_json(G.field(), G.decode_j(G.xpart(code)));
  return out;
}

Json superclasses_json(TriangularGroup& G) {
  Json list = Json::array();
  const auto& classes = G.superclasses();
  for (size_t k = 0; k < classes.size(); ++k) {
    BTriple t = G.triple_of_superclass(k);
    Json entry;
    entry["representative"] = element_to_json(G, classes[k].rep());
    entry["size"] = classes[k].size();
    entry["triple"] = Json{
        {"e_index", t.e_index},
        {"h", G.H().root().tuple_of(G.H().root_index(t.h_pos))},
        {"omega_representative", fq_vec_to_json(G.field(), G.decode_j(t.omega.front()))}};
    list.push_back(std::move(entry));
  }
  return list;
}

Json table_json(TriangularGroup& G, const SupercharacterTable& t) {
  Json rows = Json::array();
  for (size_t i = 0; i < t.row_count(); ++i) {
    const ATriple& a = t.rows[i];
    rows.push_back(Json{
        {"e_index", a.e_index},
        {"theta_index", a.theta_index},
        {"omega_star_representative", fq_vec_to_json(G.field(), G.decode_j(a.omega_star.front()))},
        {"lambda", fq_vec_to_json(G.field(), G.decode_j(t.lambda[i]))}});
  }
  Json entries = Json::array();
  for (size_t i = 0; i < t.row_count(); ++i) {
    Json row = Json::array();
    for (const Cyclotomic& v : t.entries[i]) row.push_back(cyclotomic_to_json(v));
    entries.push_back(std::move(row));
  }
  Json degrees = Json::array(), norms = Json::array();
  for (const Int& d : t.degrees) degrees.push_back(d.str());
  for (const Rational& r : t.norms) norms.push_back(r.str());
  return Json{{"cols", superclasses_json(G)},
              {"degrees", degrees},
              {"entries", entries},
              {"norms", norms},
              {"rows", rows}};
}

Json rational_matrix_json(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rational& c : row) r.push_back(c.str());
    out.push_back(std::move(r));
  }
  return out;
}

struct SubgroupRun {
  TriangularSubgroup sub;
  SupercharacterTable table;
};

std::vector<SubgroupRun> build_test_subgroups(TriangularGroup& G, const SessionConfig& cfg,
                                              int jobs) {
  std::vector<SubgroupSpec> specs;
  if (cfg.subgroup_doc) {
    specs.push_back(parse_subgroup_document(G, *cfg.subgroup_doc));
  } else {
    specs = standard_test_subgroups(G);
  }
  std::vector<SubgroupRun> runs;
  for (const auto& spec : specs) {
    SubgroupRun run{build_subgroup(G, spec), {}};
    run.table = enumerate_supercharacters(*run.sub.theory, jobs);
    runs.push_back(std::move(run));
  }
  return runs;
}

Json resind_json(TriangularGroup& G, SupercharacterTable& gtable, std::vector<SubgroupRun>& runs) {
  Json reports = Json::array();
  for (auto& r : runs) {
    ResIndReport rep = resind_report(G, gtable, r.sub, r.table);
    Json residuals = Json::array();
    for (const auto& row : rep.reciprocity_residuals) {
      Json r = Json::array();
      for (const std::string& v : row) r.push_back(v);
      residuals.push_back(std::move(r));
    }
    reports.push_back(Json{{"a_matrix", rational_matrix_json(rep.a)},
                           {"detail", rep.detail},
                           {"reciprocity_residuals", residuals},
                           {"formula_ok", rep.formula_ok},
                           {"m_matrix", rational_matrix_json(rep.m)},
                           {"reciprocity_ok", rep.reciprocity_ok},
                           {"restriction_ok", rep.restriction_ok},
                           {"subgroup", rep.subgroup_label},
                           {"subgroup_order", r.sub.theory->size()},
                           {"subgroup_rows", r.table.row_count()}});
  }
  return reports;
}

bool all_reports_ok(const Json& reports, std::string* why) {
  for (const auto& rep : reports) {
    if (!rep.at("restriction_ok").get<bool>() || !rep.at("reciprocity_ok").get<bool>() ||
        !rep.at("formula_ok").get<bool>()) {
      if (why) *why = rep.at("detail").get<std::string>();
      return false;
    }
  }
  return true;
}

}  // namespace

std::string render_table_text(TriangularGroup& G, const SupercharacterTable& t) {
  const auto& classes = G.superclasses();
  std::vector<std::vector<std::string>> cells(t.row_count() + 1,
                                              std::vector<std::string>(classes.size() + 1));
  cells[0][0] = "chi \\ K";
  for (size_t k = 0; k < classes.size(); ++k)
    cells[0][k + 1] = "K" + std::to_string(k) + "(" + std::to_string(classes[k].size()) + ")";
  for (size_t i = 0; i < t.row_count(); ++i) {
    cells[i + 1][0] = "chi" + std::to_string(i);
    for (size_t k = 0; k < classes.size(); ++k) cells[i + 1][k + 1] = t.entries[i][k].str();
  }
  std::vector<size_t> width(classes.size() + 1, 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

Json check_all(TriangularGroup& G, int jobs) {
  Json checks = Json::array();
  auto add = [&checks](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(Json{{"detail", detail}, {"name", name}, {"ok", ok}});
  };

  // 1. structure validation
  for (const auto& item : G.validation().items)
    add("structure/" + item.name, item.ok, item.detail);

  // 2. orbit duality by independent enumeration of J and J*
  {
    const auto& oj = G.orbits_j();
    const auto& os = G.orbits_jstar();
    auto count_regular = [](const std::vector<Orbit>& v) {
      size_t n = 0;
      for (const auto& o : v) n += o.regular ? 1 : 0;
      return n;
    };
    size_t rj = count_regular(oj), rs = count_regular(os);
    add("orbit_duality/regular", rj == rs,
        std::to_string(rj) + " regular in J, " + std::to_string(rs) + " in J*");
    add("orbit_duality/singular", oj.size() - rj == os.size() - rs,
        std::to_string(oj.size() - rj) + " singular in J, " + std::to_string(os.size() - rs) +
            " in J*");
    add("orbit_duality/total", oj.size() == os.size(),
        std::to_string(oj.size()) + " orbits in J, " + std::to_string(os.size()) + " in J*");
  }

  // 3. superclass/triple bijection with round trips
  {
    bool ok = true;
    std::string detail;
    try {
      const auto& triples = G.b_triples();
      const auto& classes = G.superclasses();
      detail = std::to_string(triples.size()) + " triples over " + std::to_string(classes.size()) +
               " superclasses";
      uint64_t covered = 0;
      for (const auto& K : classes) covered += K.size();
      if (covered != G.size()) {
        ok = false;
        detail = "superclasses do not partition G";
      }
      for (size_t k = 0; k < classes.size() && ok; ++k) {
        BTriple t = G.triple_of_superclass(k);
        if (G.superclass_of_triple(t.e_index, t.h_pos, t.omega.front()) != k) {
          ok = false;
          detail = "round trip failed at class " + std::to_string(k);
        }
      }
      // H(e) characterization at regular representatives, on both sides:
      // H(e) = two-sided stabilizer of any regular y in J_e, and of any
      // regular lambda in J_e^*
      const auto& lat = G.lattice();
      for (size_t e = 0; e < lat.size() && ok; ++e) {
        const auto& pd = G.pierce(e);
        const auto& eo = G.orbits_je(e);
        for (size_t oi : eo.regular) {
          uint32_t y = eo.orbits[oi].rep();
          std::vector<uint32_t> stab;
          for (uint32_t h = 0; h < G.h_size(); ++h)
            if (G.act_left(h, y) == y && G.act_right(h, y) == y) stab.push_back(h);
          if (stab != pd.He) {
            ok = false;
            detail = "H(e) characterization fails in J_e at idempotent " + std::to_string(e);
            break;
          }
        }
        const auto& eos = G.orbits_jestar(e);
        for (size_t oi : eos.regular) {
          FqVec lam = G.decode_j(eos.orbits[oi].rep());
          std::vector<uint32_t> stab;
          for (uint32_t h = 0; h < G.h_size(); ++h) {
            FqVec rt = mat_apply(G.field(), transpose(G.action().L(h)), lam);
            FqVec lt = mat_apply(G.field(), transpose(G.action().R(h)), lam);
            if (rt == lam && lt == lam) stab.push_back(h);
          }
          if (stab != pd.He) {
            ok = false;
            detail = "H(e) characterization fails in J_e^* at idempotent " + std::to_string(e);
            break;
          }
        }
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    add("superclass_triple_bijection", ok, detail);
  }

  // 4. supercharacter axioms
  SupercharacterTable table = enumerate_supercharacters(G, jobs);
  for (const auto& item : verify_table_axioms(table).items)
    add("supercharacters/" + item.name, item.ok, item.detail);

  // 5. perpendicularity lemma
  {
    bool ok = true;
    std::string detail;
    if (G.j_points() <= 128) {
      for (uint32_t lam = 0; lam < G.j_points() && ok; ++lam)
        if (!perp_check(G, lam)) {
          ok = false;
          detail = "fails at lambda code " + std::to_string(lam);
        }
      if (ok) detail = "exhaustive over " + std::to_string(G.j_points()) + " forms";
    } else {
      std::mt19937_64 rng(2024);
      for (int k = 0; k < 100 && ok; ++k) {
        uint32_t lam = static_cast<uint32_t>(rng() % G.j_points());
        if (!perp_check(G, lam)) {
          ok = false;
          detail = "fails at lambda code " + std::to_string(lam);
        }
      }
      if (ok) detail = "100 random forms";
    }
    add("perp_lemma", ok, detail);
  }

  // 6-8. restriction, reciprocity, the coefficient formula
  {
    SessionConfig dummy;
    std::vector<SubgroupRun> runs = build_test_subgroups(G, dummy, jobs);
    for (auto& r : runs) {
      ResIndReport rep = resind_report(G, table, r.sub, r.table);
      add("restriction_integrality/" + rep.subgroup_label, rep.restriction_ok, rep.detail);
      add("reciprocity/" + rep.subgroup_label, rep.reciprocity_ok,
          rep.reciprocity_ok ? "" : rep.detail);
      add("sind_formula/" + rep.subgroup_label, rep.formula_ok, rep.formula_ok ? "" : rep.detail);
    }
  }

  // 9. product integrality
  {
    bool ok = true;
    std::string detail;
    size_t pairs = 0;
    for (size_t i = 0; i < table.row_count() && ok; ++i)
      for (size_t j = i; j < table.row_count() && ok; ++j) {
        Decomposition dec = product_decompose(G, table, i, j);
        ++pairs;
        for (const Rational& c : dec.coeffs)
          if (!c.is_integer() || c.sign() < 0) {
            ok = false;
            detail = "chi" + std::to_string(i) + " * chi" + std::to_string(j) +
                     " has coefficient " + c.str();
            break;
          }
      }
    if (ok) detail = std::to_string(pairs) + " products decomposed";
    add("product_integrality", ok, detail);
  }

  // 10. algebra-group specialization (trivial H only)
  if (G.h_size() == 1) {
    bool ok = true;
    std::string detail;
    try {
      auto ag_classes = algebra_group_superclasses(G);
      const auto& classes = G.superclasses();
      if (ag_classes.size() != classes.size()) {
        ok = false;
        detail = "superclass counts differ";
      } else {
        for (size_t k = 0; k < classes.size() && ok; ++k)
          if (ag_classes[k].members != classes[k].members) {
            ok = false;
            detail = "superclass partition differs at index " + std::to_string(k);
          }
      }
      if (ok) {
        auto ag_chars = algebra_group_supercharacters(G);
        std::vector<uint8_t> used(table.row_count(), 0);
        for (const auto& f : ag_chars) {
          int match = -1;
          for (size_t i = 0; i < table.row_count() && match < 0; ++i) {
            if (used[i]) continue;
            bool same = true;
            for (uint32_t g = 0; g < G.size() && same; ++g)
              same = (f[g] == table.entries[i][G.class_of(g)]);
            if (same) match = static_cast<int>(i);
          }
          if (match < 0) {
            ok = false;
            detail = "an algebra-group supercharacter matches no table row";
            break;
          }
          used[match] = 1;
        }
        if (ok && ag_chars.size() != table.row_count()) {
          ok = false;
          detail = "supercharacter counts differ";
        }
      }
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    add("algebra_group_specialization", ok, detail);
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.at("ok").get<bool>();
  return Json{{"checks", checks}, {"ok", all_ok}};
}

RunResult run(const SessionConfig& cfg) {
  RunResult res;
  try {
    if (cfg.command == "validate") {
      ValidationReport rep;
      if (cfg.builtin_family) {
        auto G = build_family(*cfg.builtin_family, cfg.family_n, cfg.family_q);
        rep = G->validation();
      } else {
        GroupParts parts = parse_group_document(*cfg.input_doc);
        HView view = HView::full(parts.root);
        rep = validate_structure(parts.J, view, parts.action);
      }
      Json items = Json::array();
      for (const auto& item : rep.items)
        items.push_back(Json{{"detail", item.detail}, {"name", item.name}, {"ok", item.ok}});
      res.artifact = Json{{"checks", items}, {"ok", rep.ok()}};
      std::ostringstream os;
      for (const auto& item : rep.items)
        os << (item.ok ? "ok   " : "FAIL ") << item.name
           << (item.detail.empty() ? "" : " (" + item.detail + ")") << "\n";
      res.text = os.str();
      res.exit_code = rep.ok() ? 0 : 1;
      return res;
    }

    auto G = group_from_config(cfg);
    if (cfg.command == "superclasses") {
      res.artifact = Json{{"group", group_descriptor(cfg, G.get())},
                          {"superclasses", superclasses_json(*G)}};
      std::ostringstream os;
      for (const auto& e : res.artifact["superclasses"])
        os << "size " << e.at("size") << " rep h=" << e.at("representative").at("h").dump()
           << " x=" << e.at("representative").at("x").dump() << "\n";
      res.text = os.str();
    } else if (cfg.command == "table") {
      SupercharacterTable t = enumerate_supercharacters(*G, cfg.jobs);
      res.artifact = Json{{"group", group_descriptor(cfg, G.get())}, {"table", table_json(*G, t)}};
      res.text = render_table_text(*G, t);
    } else if (cfg.command == "restrict" || cfg.command == "superinduce") {
      SupercharacterTable t = enumerate_supercharacters(*G, cfg.jobs);
      std::vector<SubgroupRun> runs = build_test_subgroups(*G, cfg, cfg.jobs);
      Json reports = resind_json(*G, t, runs);
      res.artifact =
          Json{{"group", group_descriptor(cfg, G.get())}, {"reports", reports}};
      std::string why;
      bool ok = all_reports_ok(reports, &why);
      std::ostringstream os;
      for (const auto& rep : reports)
        os << rep.at("subgroup").get<std::string>() << ": restriction "
           << (rep.at("restriction_ok").get<bool>() ? "ok" : "FAIL") << ", reciprocity "
           << (rep.at("reciprocity_ok").get<bool>() ? "ok" : "FAIL") << ", formula "
           << (rep.at("formula_ok").get<bool>() ? "ok" : "FAIL") << "\n";
      res.text = os.str();
      res.exit_code = ok ? 0 : 2;
    } else if (cfg.command == "products") {
      SupercharacterTable t = enumerate_supercharacters(*G, cfg.jobs);
      Json prods = Json::array();
      bool ok = true;
      for (size_t i = 0; i < t.row_count(); ++i)
        for (size_t j = i; j < t.row_count(); ++j) {
          Decomposition dec = product_decompose(*G, t, i, j);
          Json coeffs = Json::array();
          for (const Rational& c : dec.coeffs) {
            coeffs.push_back(c.str());
            if (!c.is_integer() || c.sign() < 0) ok = false;
          }
          prods.push_back(Json{{"coeffs", coeffs}, {"i", i}, {"j", j}});
        }
      res.artifact = Json{{"group", group_descriptor(cfg, G.get())},
                          {"ok", ok},
                          {"products", prods}};
      res.text = ok ? "all products decompose with nonnegative integers\n"
                    : "product decomposition violates integrality\n";
      res.exit_code = ok ? 0 : 2;
    } else if (cfg.command == "check-all") {
      Json report = check_all(*G, cfg.jobs);
      res.artifact = Json{{"group", group_descriptor(cfg, G.get())},
                          {"report", report}};
      std::ostringstream os;
      for (const auto& c : report.at("checks"))
        os << (c.at("ok").get<bool>() ? "ok   " : "FAIL ") << c.at("name").get<std::string>()
           << "\n";
      bool ok = report.at("ok").get<bool>();
      os << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
      res.text = os.str();
      res.exit_code = ok ? 0 : 2;
    }
  } catch (const capability_error& ex) {
    res.exit_code = 3;
    res.text = std::string("capability: ") + ex.what() + "\n";
    res.artifact = Json{{"error", ex.what()}, {"kind", "capability"}};
  } catch (const consistency_error& ex) {
    res.exit_code = 2;
    res.text = std::string("internal consistency: ") + ex.what() + "\n";
    res.artifact = Json{{"error", ex.what()}, {"kind", "consistency"}};
  } catch (const error& ex) {
    res.exit_code = 1;
    res.text = std::string("error: ") + ex.what() + "\n";
    res.artifact = Json{{"error", ex.what()}, {"kind", "validation"}};
  }
  return res;
}

}  // namespace trichar
