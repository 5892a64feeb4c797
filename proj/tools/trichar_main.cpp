#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "trichar/session.hpp"

namespace {

trichar::Json parse_builtin_flag(const std::string& s) {
  trichar::Json b;
  std::stringstream ss(s);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw trichar::usage_error("--builtin expects family=NAME,n=N,q=Q");
    std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "family")
      b["family"] = val;
    else if (key == "n" || key == "q")
      b[key] = static_cast<uint32_t>(std::stoul(val));
    else
      throw trichar::usage_error("unknown builtin key: " + key);
  }
  return b;
}

trichar::Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw trichar::usage_error("cannot open file: " + path);
  trichar::Json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trichar: supercharacter theories of finite groups of triangular type"};
  std::string command, input, builtin, subgroup, format = "json", output;
  int jobs = 1;
  app.add_option("command", command,
                 "one of: validate, superclasses, table, restrict, superinduce, products, check-all")
      ->required();
  app.add_option("--input", input, "JSON group description file");
  app.add_option("--builtin", builtin, "builtin family, e.g. family=ut,n=3,q=2");
  app.add_option("--subgroup", subgroup, "JSON subgroup spec file (restrict/superinduce)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output, "write the report to this path instead of stdout");
  app.add_option("--jobs", jobs, "worker threads for table rows")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    trichar::Json doc;
    doc["command"] = command;
    if (!builtin.empty()) doc["builtin"] = parse_builtin_flag(builtin);
    if (!input.empty()) doc["input"] = load_json_file(input);
    if (!subgroup.empty()) doc["subgroup"] = load_json_file(subgroup);
    doc["format"] = format;
    doc["output"] = output;
    doc["jobs"] = jobs;

    trichar::SessionConfig cfg = trichar::parse_config(doc);
    trichar::RunResult res = trichar::run(cfg);

    std::string payload =
        cfg.format == "json" ? res.artifact.dump(2) + "\n" : res.text;
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output);
      if (!out) throw trichar::usage_error("cannot write to " + cfg.output);
      out << payload;
    } else {
      std::cout << payload;
    }
    return res.exit_code;
  } catch (const trichar::capability_error& ex) {
    std::cerr << "capability: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
