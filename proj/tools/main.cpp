#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdlat/oracle.hpp"
#include "cdlat/serialize.hpp"

namespace {

using namespace cdlat;

struct Budgets {
  BuildLimits build;
  EnumLimits limits;
  int threads = 0;
};

void add_budget_opts(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--max-order", b.build.max_order,
                  "largest allowed group order")
      ->envname("CDL_MAX_ORDER")
      ->capture_default_str();
  cmd->add_option("--max-cosets", b.build.tc_max_cosets,
                  "coset table budget for presentations (0 = derived)")
      ->envname("CDL_MAX_COSETS")
      ->capture_default_str();
  cmd->add_option("--max-subgroups", b.limits.max_subgroups,
                  "subgroup enumeration cap")
      ->envname("CDL_MAX_SUBGROUPS")
      ->capture_default_str();
  cmd->add_option("--max-join-steps", b.limits.max_join_steps,
                  "element steps per join closure")
      ->envname("CDL_MAX_JOIN_STEPS")
      ->capture_default_str();
  cmd->add_option("--time-limit", b.limits.time_limit_s,
                  "enumeration time limit in seconds (0 = none)")
      ->envname("CDL_TIME_LIMIT")
      ->capture_default_str();
  cmd->add_option("--threads", b.threads,
                  "worker threads (0 = OpenMP default)")
      ->envname("CDL_THREADS")
      ->capture_default_str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

GroupAnalysis analyze_with(const GroupTable& g, const Budgets& b) {
  EnumLimits lim = b.limits;
  lim.threads = b.threads;
  return analyze(g, lim);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chermak-Delgado lattice toolkit for finite groups"};
  app.require_subcommand(1);
  Budgets b;
  std::string spec_text;
  std::string dot_path, json_path;
  bool with_elements = false;

  CLI::App* cmd_build =
      app.add_subcommand("build", "realize a group spec, print basic facts");
  cmd_build->add_option("spec", spec_text, "group spec")->required();
  add_budget_opts(cmd_build, b);

  CLI::App* cmd_cd = app.add_subcommand(
      "cd", "compute the Chermak-Delgado lattice of a group spec");
  cmd_cd->add_option("spec", spec_text, "group spec")->required();
  cmd_cd->add_option("--dot", dot_path, "write Hasse diagram (Graphviz)")
      ->envname("CDL_DOT");
  cmd_cd->add_option("--json", json_path, "write full lattice document")
      ->envname("CDL_JSON");
  cmd_cd->add_flag("--elements", with_elements,
                   "include member element lists in JSON")
      ->envname("CDL_ELEMENTS");
  add_budget_opts(cmd_cd, b);

  CLI::App* cmd_mt = app.add_subcommand(
      "measure-table", "print |H|*|C_G(H)| for every subgroup");
  cmd_mt->add_option("spec", spec_text, "group spec")->required();
  add_budget_opts(cmd_mt, b);

  std::vector<std::string> suite_args;
  SuiteOptions sopts;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run oracle suites against the bundled corpus");
  cmd_verify->add_option("suite", suite_args, "suite names, or 'all'")
      ->required();
  cmd_verify
      ->add_flag("--long", sopts.corpus.include_long,
                 "include the order-3125 and order-15625 presentation "
                 "instances (the latter is an overnight-class job)")
      ->envname("CDL_LONG");
  cmd_verify
      ->add_option("--max-n", sopts.corpus.dic_max_n,
                   "dicyclic sweep bound (Dic_4n for n = 1..N)")
      ->envname("CDL_MAX_N")
      ->capture_default_str();
  cmd_verify
      ->add_option("--gdic-max", sopts.corpus.gdic_max,
                   "generalized dicyclic sweep bound on |A|")
      ->envname("CDL_GDIC_MAX")
      ->capture_default_str();
  cmd_verify
      ->add_option("--bound", sopts.cor34_bound,
                   "abelian-order bound for the witness sweep")
      ->envname("CDL_BOUND")
      ->capture_default_str();
  cmd_verify
      ->add_option("--presentations", sopts.corpus.presentations_dir,
                   "directory holding bundled .pres files")
      ->envname("CDL_PRESENTATIONS")
      ->capture_default_str();
  cmd_verify
      ->add_flag("--progress", sopts.progress,
                 "phase notes for large instances on stderr")
      ->envname("CDL_PROGRESS");
  add_budget_opts(cmd_verify, b);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(cmd_build)) {
      GroupTable g = build_group(parse_spec(spec_text), b.build);
      std::cout << group_text(g, spec_text);
      return 0;
    }
    if (app.got_subcommand(cmd_cd)) {
      GroupTable g = build_group(parse_spec(spec_text), b.build);
      GroupAnalysis an = analyze_with(g, b);
      std::cout << lattice_text(g, an);
      if (!dot_path.empty()) write_output(dot_path, lattice_dot(g, an.cd));
      if (!json_path.empty())
        write_output(json_path, lattice_json(g, an, spec_text, with_elements));
      return 0;
    }
    if (app.got_subcommand(cmd_mt)) {
      GroupTable g = build_group(parse_spec(spec_text), b.build);
      EnumLimits lim = b.limits;
      lim.threads = b.threads;
      SubgroupSet s = all_subgroups(g, lim);
      std::cout << measure_text(g, s, measure_table(g, s, b.threads));
      return 0;
    }
    if (app.got_subcommand(cmd_verify)) {
      sopts.build = b.build;
      sopts.limits = b.limits;
      sopts.threads = b.threads;
      std::size_t pass = 0, fail = 0, na = 0;
      for (const SuiteResult& res : run_suites(suite_args, sopts)) {
        for (const TheoremReport& r : res.reports)
          std::cout << report_line(r) << "\n";
        std::cout << suite_summary(res) << "\n\n";
        pass += res.count(Verdict::pass);
        fail += res.count(Verdict::fail);
        na += res.count(Verdict::not_applicable);
      }
      std::cout << "overall: " << pass << " pass, " << fail << " fail, " << na
                << " n/a\n";
      return fail == 0 ? 0 : 1;
    }
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
