// selab: command-line front end for the workbench.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
// 3 capacity abort under --strict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "selab/catalog.hpp"
#include "selab/errors.hpp"
#include "selab/omega.hpp"
#include "selab/script.hpp"
#include "selab/suite.hpp"

using namespace selab;

namespace {

constexpr int kUsage = 2;

int write_reports(const std::vector<CheckReport>& reports, const std::string& json_path,
                  const std::string& text_path, nlohmann::json header) {
  std::size_t holds = 0, fails = 0, skipped = 0;
  std::ostringstream text;
  for (const auto& r : reports) {
    text << to_line(r) << "\n";
    holds += r.verdict == Verdict::holds;
    fails += r.verdict == Verdict::fails;
    skipped += r.verdict == Verdict::skipped_capacity;
  }
  text << reports.size() << " reports: " << holds << " holds, " << fails << " fails, " << skipped
       << " skipped\n";
  if (text_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream(text_path) << text.str();
  }
  if (!json_path.empty()) {
    header["reports"] = nlohmann::json::array();
    for (const auto& r : reports) header["reports"].push_back(to_json(r));
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "selab: cannot write " << json_path << "\n";
      return kUsage;
    }
    out << header.dump(2) << "\n";
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semi-abelian lab: cores, commutators and property checks on finite groups"};
  app.require_subcommand(1);

  std::size_t max_order = 16;
  std::uint64_t seed = kDefaultSeed;
  bool verify = false, strict = false;
  std::string suite_name = "all", json_path, text_path, manifest;

  auto* run = app.add_subcommand("run", "run a check suite over the catalog");
  run->add_option("--suite", suite_name, "all, cores, theorems or omega")->capture_default_str();
  run->add_option("--max-order", max_order, "order cap for visited groups")
      ->envname("SELAB_MAX_ORDER")
      ->capture_default_str();
  run->add_option("--seed", seed, "seed for sampled families")->capture_default_str();
  run->add_flag("--verify", verify, "also run terminality, adjunction and fibrewise scans");
  run->add_flag("--strict", strict, "abort with exit code 3 on the first capacity skip");
  run->add_option("--json", json_path, "write the JSON report here");
  run->add_option("--text", text_path, "write the text report here instead of stdout");
  run->add_option("--manifest", manifest, "load the catalog from a manifest file");

  std::string script_path;
  auto* script = app.add_subcommand("script", "run a workbench script");
  script->add_option("file", script_path, "script file")->required();
  script->add_option("--seed", seed, "seed for sampled families")->capture_default_str();
  script->add_option("--json", json_path, "write the check reports as JSON here");
  bool print_only = false;
  script->add_flag("--print", print_only, "print the canonical form and exit");

  std::string alpha_text, beta_text;
  auto* omega_cmd = app.add_subcommand("omega", "evaluate omega(alpha+beta) - omega(alpha)");
  omega_cmd->add_option("alpha", alpha_text, "descriptor, e.g. const{;1}")->required();
  omega_cmd->add_option("beta", beta_text, "descriptor, e.g. sdelta{;0}")->required();

  std::string save_path;
  std::size_t catalog_order = 24;
  auto* catalog_cmd = app.add_subcommand("catalog", "list or save the group catalog");
  catalog_cmd->add_option("--max-order", catalog_order, "largest group order")
      ->envname("SELAB_MAX_ORDER")
      ->capture_default_str();
  catalog_cmd->add_option("--manifest", manifest, "load from a manifest instead");
  catalog_cmd->add_option("--save", save_path, "write the catalog as a manifest");

  std::string group_spec;
  auto* group_cmd = app.add_subcommand("group", "describe one group and its subgroup lattice");
  group_cmd->add_option("spec", group_spec, "constructor spec, e.g. dihedral(4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) {
      auto suite = parse_suite(suite_name);
      if (!suite) {
        std::cerr << "selab: unknown suite '" << suite_name
                  << "' (expected all, cores, theorems or omega)\n";
        return kUsage;
      }
      Catalog cat = manifest.empty() ? default_catalog(24) : load_catalog(manifest);
      SuiteOptions opts{max_order, seed, verify, strict};
      SuiteResult res = run_suite(*suite, cat, opts);
      nlohmann::json header = {{"suite", std::string(to_string(*suite))},
                               {"max_order", max_order},
                               {"seed", seed},
                               {"verify", verify},
                               {"strict", strict},
                               {"aborted", res.aborted},
                               {"exit_code", res.exit_code()}};
      if (int rc = write_reports(res.reports, json_path, text_path, header)) return rc;
      if (res.aborted) std::cerr << "selab: aborted on capacity skip (--strict)\n";
      return res.exit_code();
    }
    if (*script) {
      Script s = parse_script(read_file(script_path));
      if (print_only) {
        std::cout << print_script(s);
        return 0;
      }
      ScriptOptions opts;
      opts.seed = seed;
      opts.base_dir = std::filesystem::path(script_path).parent_path();
      ScriptResult res = run_script(s, opts);
      for (const auto& line : res.lines) std::cout << line << "\n";
      if (!json_path.empty()) {
        nlohmann::json j = {{"script", script_path}, {"seed", seed}, {"reports", nlohmann::json::array()}};
        for (const auto& r : res.reports) j["reports"].push_back(to_json(r));
        std::ofstream(json_path) << j.dump(2) << "\n";
      }
      for (const auto& r : res.reports)
        if (r.verdict == Verdict::fails) return 1;
      return 0;
    }
    if (*omega_cmd) {
      auto alpha = omega::parse_descriptor(alpha_text);
      auto beta = omega::parse_descriptor(beta_text);
      auto sum = omega::seq_add(alpha, beta);
      auto diff = omega::omega_difference(alpha, beta);
      std::cout << "alpha+beta = " << omega::to_string(sum) << "\n"
                << "omega(alpha) = " << omega::to_string(omega::omega_eval(alpha)) << "\n"
                << "omega(alpha+beta) = " << omega::to_string(omega::omega_eval(sum)) << "\n"
                << "difference = " << omega::to_string(diff) << "\n";
      // Membership in N_i is monotone in i.
      std::optional<std::uint64_t> first;
      for (std::uint64_t i = 0; i <= 64 && !first; ++i)
        if (omega::member_Ni(diff, i)) first = i;
      if (first) {
        std::cout << "difference lies in N_i for every i >= " << *first << "\n";
      } else {
        std::cout << "difference lies in no N_i for i <= 64\n";
      }
      return 0;
    }
    if (*catalog_cmd) {
      Catalog cat = manifest.empty() ? default_catalog(catalog_order) : load_catalog(manifest);
      if (!save_path.empty()) {
        save_catalog(cat, save_path);
        std::cout << "saved " << cat.size() << " groups to " << save_path << "\n";
        return 0;
      }
      for (const auto& e : cat.entries()) {
        std::cout << e.group->label() << "\t" << e.group->order() << "\t" << e.spec << "\n";
      }
      return 0;
    }
    if (*group_cmd) {
      GroupPtr g = construct_catalog_group(group_spec);
      auto subs = enumerate_subgroups(g);
      std::size_t normals = 0;
      for (const auto& s : subs) normals += is_normal(s);
      auto whole = Subgroup::whole(g);
      std::cout << g->label() << ": order " << g->order() << (g->is_abelian() ? ", abelian" : "")
                << "\n"
                << subs.size() << " subgroups, " << normals << " normal\n"
                << "derived subgroup " << higgins_commutator(whole, whole).to_string() << "\n"
                << "center " << centralizer(whole).to_string() << "\n";
      for (const auto& s : subs) {
        std::cout << "  " << s.to_string() << (is_normal(s) ? " normal" : "") << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "selab: parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const ScriptError& e) {
    std::cerr << "selab: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "selab: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "selab: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "selab: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
