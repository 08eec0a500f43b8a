#include "adderforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adderforge/analysis.hpp"
#include "adderforge/architectures.hpp"
#include "adderforge/export.hpp"
#include "adderforge/json_io.hpp"
#include "adderforge/reports.hpp"
#include "adderforge/simulate.hpp"

namespace adderforge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &pos, 0);  // base 0: decimal or 0x-prefixed hex
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-')
    throw std::invalid_argument(std::string(what) +
                                " must be a decimal or 0x-prefixed integer, "
                                "got '" + text + "'");
  return value;
}

GroupPlan parse_group_list(const std::string& text) {
  GroupPlan plan;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty())
      throw std::invalid_argument("--groups must be a comma-separated list "
                                  "of positive widths");
    plan.widths.push_back(
        static_cast<int>(parse_u64(item, "group width")));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return plan;
}

AdderSpec make_spec(const std::string& arch_text, int width, int block,
                    const std::string& groups_text) {
  AdderSpec spec;
  const std::optional<Arch> arch = parse_arch(arch_text);
  if (!arch)
    throw std::invalid_argument("unknown architecture '" + arch_text + "'");
  spec.arch = *arch;
  spec.width = width;
  spec.block_width = block;
  if (!groups_text.empty()) spec.groups = parse_group_list(groups_text);
  spec.validate();
  return spec;
}

int exhaustive_cap_from_env() {
  const char* raw = std::getenv("ADDER_FORGE_EXHAUSTIVE_CAP");
  if (!raw) return kDefaultExhaustiveCap;
  const std::uint64_t cap = parse_u64(raw, "ADDER_FORGE_EXHAUSTIVE_CAP");
  if (cap < 1 || cap > 32)
    throw std::invalid_argument(
        "ADDER_FORGE_EXHAUSTIVE_CAP must be in [1, 32]");
  return static_cast<int>(cap);
}

CostModel cost_model_from(const std::string& path) {
  if (path.empty()) return CostModel::aoi_ramkumar();
  return CostModel::load(path);
}

std::string default_module_name(const Netlist& netlist) {
  std::string name = netlist.arch.empty() ? "netlist" : netlist.arch;
  for (char& c : name)
    if (c == '-') c = '_';
  if (netlist.width > 0) name += "_" + std::to_string(netlist.width);
  return name;
}

void print_census(std::ostream& out, const GateCensus& counts) {
  bool first = true;
  for (GateKind kind : kAllGateKinds) {
    out << (first ? "" : " ") << gate_kind_name(kind) << "=" << counts[kind];
    first = false;
  }
}

int run_verify(const Netlist& netlist, bool exhaustive, bool randomized,
               std::uint64_t trials, std::uint64_t seed) {
  const int cap = exhaustive_cap_from_env();
  const Bus* a = netlist.find_input_bus("A");
  const int width = a ? static_cast<int>(a->nets.size()) : 0;

  if (!exhaustive && !randomized) {
    if (width <= cap)
      exhaustive = true;
    else
      randomized = true;
  }

  VerifyOutcome outcome;
  if (exhaustive) {
    outcome = verify_exhaustive(netlist, width, cap);
    std::cout << "exhaustive: checked " << outcome.checked << " vectors\n";
  } else {
    outcome = verify_random(netlist, width, trials, seed);
    std::cout << "randomized (seed " << seed << "): checked "
              << outcome.checked << " vectors\n";
  }

  if (outcome.passed()) {
    std::cout << "PASS: netlist matches the arithmetic oracle\n";
    return kExitOk;
  }
  std::cout << "FAIL: " << outcome.mismatches << " mismatches";
  if (outcome.mismatches > outcome.failures.size())
    std::cout << " (showing first " << outcome.failures.size() << ")";
  std::cout << "\n";
  for (const VerifyFailure& f : outcome.failures)
    std::cout << "  a=" << f.vector.a << " b=" << f.vector.b
              << " cin=" << (f.vector.cin ? 1 : 0) << "  got Sum=" << f.got.sum
              << " Cout=" << (f.got.cout ? 1 : 0)
              << "  expected Sum=" << f.expected.sum << " Cout="
              << (f.expected.cout ? 1 : 0) << "\n";
  return kExitVerifyFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Gate-level carry-select adder workbench", "adderforge"};
  app.require_subcommand(1);

  const std::vector<std::string> arch_names = {"rca", "linear-csla",
                                               "sqrt-csla", "sqrt-csla-bec"};

  // build
  auto* build = app.add_subcommand("build", "Generate an adder netlist");
  std::string build_arch, build_groups, build_out;
  int build_width = 0, build_block = 4;
  build->add_option("--arch", build_arch, "Adder architecture")
      ->required()
      ->check(CLI::IsMember(arch_names));
  build->add_option("--width", build_width, "Adder width in bits")
      ->required()
      ->check(CLI::Range(1, 4096));
  build->add_option("--block", build_block,
                    "Block width (linear-csla only, default 4)");
  build->add_option("--groups", build_groups,
                    "Comma-separated group widths (sqrt variants)");
  build->add_option("--out", build_out, "Output netlist (JSON)")->required();

  // simulate
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Evaluate one input vector");
  std::string sim_in, sim_a, sim_b;
  int sim_cin = 0;
  simulate_cmd->add_option("--in", sim_in, "Netlist file")->required();
  simulate_cmd->add_option("--a", sim_a, "Operand A (decimal or 0x hex)")
      ->required();
  simulate_cmd->add_option("--b", sim_b, "Operand B (decimal or 0x hex)")
      ->required();
  simulate_cmd->add_option("--cin", sim_cin, "Carry-in bit")
      ->check(CLI::Range(0, 1));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Area and timing report");
  std::string analyze_in, analyze_cost;
  bool analyze_per_group = false;
  analyze->add_option("--in", analyze_in, "Netlist file")->required();
  analyze->add_option("--cost-model", analyze_cost,
                      "Cost model override file (<kind> <area> <delay> lines)");
  analyze->add_flag("--per-group", analyze_per_group,
                    "Include the per-group breakdown");

  // verify
  auto* verify = app.add_subcommand("verify", "Check against the oracle");
  std::string verify_in;
  bool verify_exhaustive_flag = false;
  std::uint64_t verify_trials = 0, verify_seed = 1;
  verify->add_option("--in", verify_in, "Netlist file")->required();
  verify->add_flag("--exhaustive", verify_exhaustive_flag,
                   "Sweep every input vector");
  auto* trials_opt = verify->add_option("--random", verify_trials,
                                        "Number of random trials");
  verify->add_option("--seed", verify_seed, "Random seed (default 1)");
  trials_opt->excludes("--exhaustive");

  // compare
  auto* compare_cmd =
      app.add_subcommand("compare", "Compare two architectures");
  std::string cmp_arch_a, cmp_arch_b, cmp_groups_a, cmp_groups_b;
  std::string cmp_format = "md", cmp_cost;
  int cmp_width = 0, cmp_block_a = 4, cmp_block_b = 4;
  compare_cmd->add_option("--arch-a", cmp_arch_a, "First architecture")
      ->required()
      ->check(CLI::IsMember(arch_names));
  compare_cmd->add_option("--arch-b", cmp_arch_b, "Second architecture")
      ->required()
      ->check(CLI::IsMember(arch_names));
  compare_cmd->add_option("--width", cmp_width, "Width of both adders")
      ->required()
      ->check(CLI::Range(1, 4096));
  compare_cmd->add_option("--block-a", cmp_block_a, "Block width for A");
  compare_cmd->add_option("--block-b", cmp_block_b, "Block width for B");
  compare_cmd->add_option("--groups-a", cmp_groups_a, "Group widths for A");
  compare_cmd->add_option("--groups-b", cmp_groups_b, "Group widths for B");
  compare_cmd->add_option("--format", cmp_format, "md or csv")
      ->check(CLI::IsMember({"md", "csv"}));
  compare_cmd->add_option("--cost-model", cmp_cost, "Cost model override");

  // export
  auto* export_cmd = app.add_subcommand("export", "Emit Verilog or DOT");
  std::string export_in, export_to, export_out, export_module;
  export_cmd->add_option("--in", export_in, "Netlist file")->required();
  export_cmd->add_option("--to", export_to, "Target format")
      ->required()
      ->check(CLI::IsMember({"verilog", "dot"}));
  export_cmd->add_option("--out", export_out, "Output file")->required();
  export_cmd->add_option("--module-name", export_module,
                         "Verilog module name (default from metadata)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) {
      const AdderSpec spec =
          make_spec(build_arch, build_width, build_block, build_groups);
      const Netlist netlist = build_adder(spec);
      save_netlist(netlist, build_out);
      std::cout << "wrote " << build_out << " (" << spec.label() << ", "
                << netlist.gates.size() << " gates, " << netlist.nets.size()
                << " nets)\n";
      return kExitOk;
    }

    if (*simulate_cmd) {
      const Netlist netlist = load_netlist(sim_in);
      SimVector vector;
      vector.a = parse_u64(sim_a, "--a");
      vector.b = parse_u64(sim_b, "--b");
      vector.cin = sim_cin != 0;
      const SimResult result = simulate(netlist, vector);
      std::cout << "Sum=" << result.sum << " Cout=" << (result.cout ? 1 : 0)
                << "\n";
      return kExitOk;
    }

    if (*analyze) {
      const Netlist netlist = load_netlist(analyze_in);
      const CostModel model = cost_model_from(analyze_cost);
      const AreaReport area = area_report(netlist, model);
      const TimingReport timing = timing_report(netlist, model);

      if (!netlist.arch.empty()) std::cout << "arch: " << netlist.arch << "\n";
      if (netlist.width > 0) std::cout << "width: " << netlist.width << "\n";
      if (!netlist.groups.empty()) {
        std::cout << "groups: ";
        for (std::size_t i = 0; i < netlist.groups.size(); ++i)
          std::cout << (i ? "," : "") << netlist.groups[i];
        std::cout << "\n";
      }
      std::cout << "gates: " << area.census.total_gates() << " (";
      print_census(std::cout, area.census);
      std::cout << ")\n";
      std::cout << "nets: " << netlist.nets.size() << "\n";
      std::cout << "area: " << area.total_area << " units (cost model: "
                << model.name << ")\n";
      std::cout << "critical delay: " << timing.critical_delay << " units ("
                << timing.critical_path.size() << " gates on the path)\n";
      if (analyze_per_group)
        std::cout << "\n" << render_group_table(netlist, model).to_markdown();
      return kExitOk;
    }

    if (*verify) {
      const Netlist netlist = load_netlist(verify_in);
      const bool randomized = trials_opt->count() > 0;
      return run_verify(netlist, verify_exhaustive_flag, randomized,
                        verify_trials, verify_seed);
    }

    if (*compare_cmd) {
      const AdderSpec spec_a =
          make_spec(cmp_arch_a, cmp_width, cmp_block_a, cmp_groups_a);
      const AdderSpec spec_b =
          make_spec(cmp_arch_b, cmp_width, cmp_block_b, cmp_groups_b);
      const CostModel model = cost_model_from(cmp_cost);
      const ReportTable table = render_comparison(spec_a, spec_b, model);
      std::cout << (cmp_format == "csv" ? table.to_csv()
                                        : table.to_markdown());
      return kExitOk;
    }

    if (*export_cmd) {
      const Netlist netlist = load_netlist(export_in);
      std::string text;
      if (export_to == "verilog") {
        const std::string module_name = export_module.empty()
                                            ? default_module_name(netlist)
                                            : export_module;
        text = export_verilog(netlist, module_name);
      } else {
        text = export_dot(netlist);
      }
      std::ofstream out(export_out);
      if (!out) throw NetlistError("cannot write file: " + export_out);
      out << text;
      if (!out) throw NetlistError("write failed: " + export_out);
      std::cout << "wrote " << export_out << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NetlistError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  return kExitUsage;
}

}  // namespace adderforge
