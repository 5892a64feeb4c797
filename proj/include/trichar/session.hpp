#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "trichar/families.hpp"
#include "trichar/resind.hpp"

namespace trichar {

using Json = nlohmann::json;

struct SessionConfig {
  std::string command;
  std::optional<Json> input_doc;
  std::optional<std::string> builtin_family;
  uint32_t family_n = 0, family_q = 0;
  std::optional<Json> subgroup_doc;
  std::string format = "json";
  std::string output;
  int jobs = 1;
};

/// Validates and converts the JSON config document
/// {"command": ..., "builtin": {...} | "input": {...}, ...}.
SessionConfig parse_config(const Json& doc);

/// Parsed but not yet validated group data, so the validate command can
/// report on broken inputs instead of refusing to construct them.
struct GroupParts {
  std::shared_ptr<const FieldSpec> field;
  NilpotentAlgebra J;
  std::shared_ptr<const AbelianGroup> root;
  HAction action;  // per element of the full view
};

GroupParts parse_group_document(const Json& doc);
std::shared_ptr<TriangularGroup> group_from_config(const SessionConfig& cfg);
SubgroupSpec parse_subgroup_document(TriangularGroup& G, const Json& doc);

Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

struct RunResult {
  int exit_code = 0;
  std::string text;
  Json artifact;
};

/// Dispatches a command. Exit codes: 0 success, 1 validation/usage error,
/// 2 internal-consistency failure, 3 capability limit.
RunResult run(const SessionConfig& cfg);

/// The check-all suite on a built group, as an ordered, deterministic report.
Json check_all(TriangularGroup& G, int jobs);

std::string render_table_text(TriangularGroup& G, const SupercharacterTable& table);

}  // namespace trichar
