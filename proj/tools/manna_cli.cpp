// Command-line front end: solve, check, search, gen, classify, fixtures.
// All I/O is JSON on files or stdin/stdout ("-" means stdin).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "manna/manna.hpp"

namespace {

using manna::json;

// Exit codes, also documented in the README.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidAllocation = 3;
constexpr int kExitBudget = 4;
constexpr int kExitViolation = 5;

struct CliError {
  int code;
  std::string message;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw CliError{kExitParse, "cannot open " + path};
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError{kExitParse, origin + ": " + e.what()};
  }
}

manna::Instance load_instance(const std::string& input, const std::string& fixture) {
  if (!fixture.empty()) {
    const manna::NamedInstance* named = manna::find_fixture(fixture);
    if (!named) throw CliError{kExitParse, "unknown fixture '" + fixture + "'"};
    return named->instance;
  }
  try {
    return manna::instance_from_json(parse_json(read_all(input), input));
  } catch (const manna::JsonFormatError& e) {
    throw CliError{kExitParse, e.what()};
  }
}

manna::Allocation load_allocation(const std::string& path) {
  try {
    return manna::allocation_from_json(parse_json(read_all(path), path));
  } catch (const manna::JsonFormatError& e) {
    throw CliError{kExitParse, e.what()};
  }
}

void emit(const json& j, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(output);
  if (!file) throw CliError{kExitParse, "cannot write " + output};
  file << j.dump(2) << "\n";
}

std::vector<manna::PropertyId> parse_properties(const std::vector<std::string>& names) {
  std::vector<manna::PropertyId> ids;
  for (const std::string& name : names) {
    auto id = manna::parse_property(name);
    if (!id) throw CliError{kExitParse, "unknown property '" + name + "'"};
    ids.push_back(*id);
  }
  return ids;
}

std::string domain_label(const manna::DomainProfile& profile) {
  std::string label;
  auto append = [&label](const std::string& part) {
    if (!label.empty()) label += ", ";
    label += part;
  };
  if (profile.is_identical) {
    append("identical");
  } else if (profile.is_absolute_identical) {
    append("absolute-identical");
  }
  if (profile.is_ternary) {
    append("ternary(alpha=" + profile.alpha->str() + ", beta=" + profile.beta->str() + ")");
  }
  if (profile.is_ternary_symmetric) append("symmetric");
  return label.empty() ? "general" : label;
}

json utilities_json(const manna::Instance& inst, const manna::Allocation& alloc) {
  json out = json::array();
  for (const manna::Rational& u : manna::allocation_utilities(inst, alloc)) {
    out.push_back(manna::rational_to_json(u));
  }
  return out;
}

int cmd_solve(const manna::Instance& inst, const std::string& algorithm, bool trace,
              const std::string& output) {
  json result{{"algorithm", algorithm}};
  if (algorithm == "mdrr") {
    manna::MdrrResult run = manna::mdrr_run(inst);
    result["bundles"] = run.allocation.bundles;
    result["utilities"] = utilities_json(inst, run.allocation);
    if (trace) result["trace"] = manna::mdrr_trace_to_json(run.trace);
  } else {
    manna::MinimaxResult run = manna::minimax_run(inst);
    result["bundles"] = run.allocation.bundles;
    result["utilities"] = utilities_json(inst, run.allocation);
    if (trace) result["trace"] = manna::minimax_log_to_json(run.log);
  }
  emit(result, output);
  return kExitOk;
}

int cmd_check(const manna::Instance& inst, const manna::Allocation& alloc,
              const std::vector<std::string>& properties, std::uint64_t budget,
              const std::string& output) {
  manna::AllocationCheck valid = manna::validate_allocation(inst, alloc);
  if (!valid.ok()) {
    json duplicated = json::array();
    for (int o : valid.duplicated) duplicated.push_back(o + 1);
    json missing = json::array();
    for (int o : valid.missing) missing.push_back(o + 1);
    emit(json{{"allocation_valid", false},
              {"violation", valid.describe()},
              {"duplicated", std::move(duplicated)},
              {"unallocated", std::move(missing)}},
         output);
    return kExitInvalidAllocation;
  }
  std::vector<manna::PropertyId> ids = parse_properties(properties);
  json reports = json::array();
  bool all_hold = true;
  for (manna::PropertyId id : ids) {
    manna::PropertyReport report = manna::run_property_check(inst, alloc, id, budget);
    all_hold = all_hold && report.holds;
    reports.push_back(manna::report_to_json(report));
  }
  emit(json{{"allocation_valid", true}, {"reports", std::move(reports)}}, output);
  return all_hold ? kExitOk : kExitViolation;
}

int cmd_search(const manna::Instance& inst, const std::vector<std::string>& require,
               const std::string& mode, std::uint64_t budget, const std::string& output) {
  manna::SearchSpec spec;
  spec.require = parse_properties(require);
  spec.budget = budget;
  spec.mode = mode == "count"  ? manna::SearchMode::Count
              : mode == "all"  ? manna::SearchMode::AllWitnesses
                               : manna::SearchMode::Exists;
  emit(manna::search_result_to_json(manna::search(inst, spec)), output);
  return kExitOk;
}

int cmd_classify(const manna::Instance& inst, const std::string& output) {
  json items = json::array();
  for (int o = 0; o < inst.items(); ++o) {
    manna::ItemClass cls = manna::classify_item(inst, o);
    items.push_back(json{{"item", o + 1}, {"label", manna::item_class_label(cls)}});
  }
  manna::DomainProfile profile = manna::detect_domain(inst);
  json domain = manna::domain_profile_to_json(profile);
  domain["label"] = domain_label(profile);
  emit(json{{"items", std::move(items)}, {"domain", std::move(domain)}}, output);
  return kExitOk;
}

int cmd_fixtures(const std::string& output) {
  json fixtures = json::array();
  for (const manna::NamedInstance& fixture : manna::builtin_fixtures()) {
    fixtures.push_back(json{{"name", fixture.name},
                            {"agents", fixture.instance.agents()},
                            {"items", fixture.instance.items()},
                            {"summary", fixture.summary}});
  }
  emit(json{{"fixtures", std::move(fixtures)}}, output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair division of mixed manna: exact checkers, two allocation "
               "algorithms, and a brute-force search oracle"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string fixture;
  std::string allocation_path;
  std::string output;
  std::string algorithm = "mdrr";
  std::string mode = "exists";
  bool trace = false;
  std::uint64_t budget = manna::kDefaultEnumerationBudget;
  std::vector<std::string> properties;
  std::vector<std::string> require;

  auto add_instance_options = [&](CLI::App* cmd) {
    CLI::Option* in = cmd->add_option("-i,--input", input, "instance JSON file ('-' for stdin)");
    CLI::Option* fix = cmd->add_option("-f,--fixture", fixture, "built-in instance name");
    in->excludes(fix);
  };

  CLI::App* solve = app.add_subcommand("solve", "run an allocation algorithm");
  add_instance_options(solve);
  solve->add_option("-a,--algorithm", algorithm, "mdrr | minimax")
      ->check(CLI::IsMember({"mdrr", "minimax"}));
  solve->add_flag("-t,--trace", trace, "include the per-pick decision log");
  solve->add_option("-o,--output", output, "write result here instead of stdout");

  CLI::App* check = app.add_subcommand("check", "check properties of an allocation");
  add_instance_options(check);
  check->add_option("--allocation", allocation_path, "allocation JSON file")->required();
  check->add_option("-p,--properties", properties,
                    "ef1 efx efx0 ef1_parts efx_parts po_exact welfare_max")
      ->required()
      ->delimiter(',');
  check->add_option("--max-space", budget, "enumeration budget for po_exact");
  check->add_option("-o,--output", output, "write result here instead of stdout");

  CLI::App* search = app.add_subcommand("search", "search the full allocation space");
  add_instance_options(search);
  search->add_option("-r,--require", require, "properties every hit must satisfy")
      ->required()
      ->delimiter(',');
  search->add_option("--mode", mode, "exists | count | all")
      ->check(CLI::IsMember({"exists", "count", "all"}));
  search->add_option("--max-space", budget, "enumeration budget");
  search->add_option("-o,--output", output, "write result here instead of stdout");

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded random instance");
  std::string domain = "general";
  manna::GeneratorConfig config;
  std::string alpha_text;
  std::string beta_text;
  gen->add_option("-d,--domain", domain, "general | absolute-identical | identical | ternary")
      ->check(CLI::IsMember({"general", "absolute-identical", "identical", "ternary"}));
  gen->add_option("-n,--n,--agents", config.agents, "agent count")->required();
  gen->add_option("-m,--m,--items", config.items, "item count")->required();
  gen->add_option("--alpha", alpha_text, "ternary negative magnitude (rational)");
  gen->add_option("--beta", beta_text, "ternary positive magnitude (rational)");
  gen->add_option("--value-range", config.value_range, "integer utility bound");
  gen->add_option("-s,--seed", config.seed, "64-bit seed");
  gen->add_option("-o,--output", output, "write result here instead of stdout");

  CLI::App* classify = app.add_subcommand("classify", "classify items and detect the domain");
  add_instance_options(classify);
  classify->add_option("-o,--output", output, "write result here instead of stdout");

  CLI::App* fixtures = app.add_subcommand("fixtures", "list the built-in instances");
  fixtures->add_option("-o,--output", output, "write result here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(load_instance(input, fixture), algorithm, trace, output);
    if (check->parsed()) {
      return cmd_check(load_instance(input, fixture), load_allocation(allocation_path), properties,
                       budget, output);
    }
    if (search->parsed()) {
      return cmd_search(load_instance(input, fixture), require, mode, budget, output);
    }
    if (gen->parsed()) {
      config.domain = *manna::parse_domain(domain);
      try {
        if (!alpha_text.empty()) config.alpha = manna::Rational::parse(alpha_text);
        if (!beta_text.empty()) config.beta = manna::Rational::parse(beta_text);
        emit(manna::instance_to_json(manna::generate_instance(config)), output);
      } catch (const std::invalid_argument& e) {
        throw CliError{kExitParse, e.what()};
      }
      return kExitOk;
    }
    if (classify->parsed()) return cmd_classify(load_instance(input, fixture), output);
    if (fixtures->parsed()) return cmd_fixtures(output);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const manna::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
