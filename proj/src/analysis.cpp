#include "adderforge/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace adderforge {

const CostModel& CostModel::aoi_ramkumar() {
  static const CostModel model = [] {
    CostModel m;
    // Derived consistency of the default weights: a full adder
    // (2 XOR2 + 2 AND2 + 1 OR2) must cost 13, a half adder 6.
    const int fa = 2 * m.area_of(GateKind::Xor2) + 2 * m.area_of(GateKind::And2) +
                   m.area_of(GateKind::Or2);
    const int ha = m.area_of(GateKind::Xor2) + m.area_of(GateKind::And2);
    if (fa != 13 || ha != 6)
      throw std::logic_error("default cost model is inconsistent");
    return m;
  }();
  return model;
}

CostModel CostModel::parse(std::string_view text, std::string name) {
  CostModel model = aoi_ramkumar();
  model.name = std::move(name);

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind_name;
    if (!(fields >> kind_name)) continue;  // blank line

    const std::optional<GateKind> kind = parse_gate_kind(kind_name);
    if (!kind)
      throw std::invalid_argument("cost model line " + std::to_string(line_no) +
                                  ": unknown gate kind '" + kind_name + "'");
    int area = 0, delay = 0;
    if (!(fields >> area >> delay) || area < 0 || delay < 0)
      throw std::invalid_argument("cost model line " + std::to_string(line_no) +
                                  ": expected '<kind> <area> <delay>'");
    model.area[static_cast<std::size_t>(*kind)] = area;
    model.delay[static_cast<std::size_t>(*kind)] = delay;
  }
  return model;
}

CostModel CostModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open cost model file: " +
                                path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.filename().string());
}

std::size_t GateCensus::total_gates() const {
  std::size_t total = 0;
  for (std::size_t n : by_kind) total += n;
  return total;
}

long long GateCensus::weighted_area(const CostModel& model) const {
  long long total = 0;
  for (GateKind kind : kAllGateKinds)
    total += static_cast<long long>((*this)[kind]) * model.area_of(kind);
  return total;
}

GateCensus census(const Netlist& netlist) {
  GateCensus out;
  for (const Gate& gate : netlist.gates) out[gate.kind] += 1;
  return out;
}

AreaReport area_report(const Netlist& netlist, const CostModel& model,
                       bool per_group) {
  AreaReport report;
  report.census = census(netlist);
  report.total_area = report.census.weighted_area(model);
  if (!per_group) return report;

  int max_group = 0;
  for (const Gate& gate : netlist.gates) {
    if (gate.group <= 0)
      throw NetlistError("area_report: gate " + std::to_string(gate.id) +
                         " has no group annotation");
    max_group = std::max(max_group, gate.group);
  }

  report.per_group.resize(static_cast<std::size_t>(max_group));
  for (int g = 1; g <= max_group; ++g) {
    GroupAreaRow& row = report.per_group[static_cast<std::size_t>(g - 1)];
    row.group = g;
    if (static_cast<std::size_t>(max_group) == netlist.groups.size())
      row.width = netlist.groups[static_cast<std::size_t>(g - 1)];
  }
  for (const Gate& gate : netlist.gates) {
    GroupAreaRow& row = report.per_group[static_cast<std::size_t>(gate.group - 1)];
    row.census[gate.kind] += 1;
  }
  for (GroupAreaRow& row : report.per_group)
    row.area = row.census.weighted_area(model);
  return report;
}

TimingReport timing_report(const Netlist& netlist, const CostModel& model) {
  TimingReport report;
  report.arrival.assign(netlist.nets.size(), 0);

  const std::vector<GateId> order = topo_order(netlist);
  for (GateId id : order) {
    const Gate& gate = netlist.gates[id];
    int latest = 0;
    for (NetId in : gate.inputs)
      latest = std::max(latest, report.arrival[in]);
    report.arrival[gate.output] = latest + model.delay_of(gate.kind);
  }

  for (const Bus& bus : netlist.output_buses)
    for (NetId net : bus.nets)
      report.per_output.emplace_back(net, report.arrival[net]);

  NetId endpoint = 0;
  bool have_endpoint = false;
  auto consider = [&](NetId net) {
    const int t = report.arrival[net];
    if (!have_endpoint || t > report.critical_delay ||
        (t == report.critical_delay && net < endpoint)) {
      report.critical_delay = t;
      endpoint = net;
      have_endpoint = true;
    }
  };
  if (!report.per_output.empty()) {
    for (const auto& [net, t] : report.per_output) consider(net);
  } else {
    for (const Net& net : netlist.nets) consider(net.id);
  }

  // Walk the longest path back from the endpoint. At each gate, follow the
  // input whose arrival dominates; tie-break toward the smallest driver id.
  if (have_endpoint) {
    NetId at = endpoint;
    while (netlist.nets[at].source.kind == NetSource::Kind::Gate) {
      const Gate& gate = netlist.gates[netlist.nets[at].source.gate];
      report.critical_path.push_back(gate.id);
      const int want = report.arrival[at] - model.delay_of(gate.kind);
      bool found = false;
      NetId next = 0;
      GateId best_driver = 0;
      for (NetId in : gate.inputs) {
        if (report.arrival[in] != want) continue;
        const Net& net = netlist.nets[in];
        if (net.source.kind != NetSource::Kind::Gate) {
          if (!found) {
            next = in;
            found = true;
            best_driver = std::numeric_limits<GateId>::max();
          }
          continue;
        }
        if (!found || net.source.gate < best_driver) {
          next = in;
          best_driver = net.source.gate;
          found = true;
        }
      }
      if (!found || netlist.nets[next].source.kind != NetSource::Kind::Gate) {
        if (found) at = next;
        break;
      }
      at = next;
    }
    std::reverse(report.critical_path.begin(), report.critical_path.end());
  }

  int max_group = 0;
  for (const Gate& gate : netlist.gates)
    max_group = std::max(max_group, gate.group);
  if (max_group > 0) {
    report.per_group_delay.resize(static_cast<std::size_t>(max_group));
    for (int g = 1; g <= max_group; ++g)
      report.per_group_delay[static_cast<std::size_t>(g - 1)].group = g;
    for (const Gate& gate : netlist.gates) {
      if (gate.group <= 0) continue;
      GroupDelayRow& row =
          report.per_group_delay[static_cast<std::size_t>(gate.group - 1)];
      row.delay = std::max(row.delay, report.arrival[gate.output]);
    }
  }
  return report;
}

const ComparisonRow* ComparisonReport::find(std::string_view metric) const {
  for (const ComparisonRow& row : rows)
    if (row.metric == metric) return &row;
  return nullptr;
}

namespace {

std::optional<double> relative_delta(long long a, long long b) {
  if (a == 0 && b == 0) return 0.0;
  if (a == 0) return std::nullopt;
  return static_cast<double>(b - a) / static_cast<double>(a);
}

void numeric_row(std::vector<ComparisonRow>& rows, std::string metric,
                 long long a, long long b) {
  rows.push_back(ComparisonRow{std::move(metric), std::to_string(a),
                               std::to_string(b), relative_delta(a, b)});
}

}  // namespace

ComparisonReport compare(const AdderSpec& spec_a, const AdderSpec& spec_b,
                         const CostModel& model) {
  spec_a.validate();
  spec_b.validate();
  if (spec_a.width != spec_b.width)
    throw std::invalid_argument("compare: widths differ (" +
                                std::to_string(spec_a.width) + " vs " +
                                std::to_string(spec_b.width) + ")");

  const Netlist a = build_adder(spec_a);
  const Netlist b = build_adder(spec_b);
  const AreaReport area_a = area_report(a, model);
  const AreaReport area_b = area_report(b, model);
  const TimingReport timing_a = timing_report(a, model);
  const TimingReport timing_b = timing_report(b, model);

  ComparisonReport report;
  report.spec_a = spec_a;
  report.spec_b = spec_b;

  report.rows.push_back(ComparisonRow{"bits", std::to_string(spec_a.width),
                                      std::to_string(spec_b.width),
                                      std::nullopt});
  report.rows.push_back(ComparisonRow{"algorithm", std::string(arch_name(spec_a.arch)),
                                      std::string(arch_name(spec_b.arch)),
                                      std::nullopt});
  numeric_row(report.rows, "area (units)", area_a.total_area,
              area_b.total_area);
  numeric_row(report.rows, "critical delay (units)", timing_a.critical_delay,
              timing_b.critical_delay);
  numeric_row(report.rows, "adder cells (HA+FA)",
              a.blocks.half_adders + a.blocks.full_adders,
              b.blocks.half_adders + b.blocks.full_adders);
  numeric_row(report.rows, "mux gates", area_a.census[GateKind::Mux2],
              area_b.census[GateKind::Mux2]);
  numeric_row(report.rows, "bec bits", a.blocks.bec_bits, b.blocks.bec_bits);
  for (GateKind kind : kAllGateKinds)
    numeric_row(report.rows, std::string(gate_kind_name(kind)) + " gates",
                area_a.census[kind], area_b.census[kind]);
  numeric_row(report.rows, "total gates", area_a.census.total_gates(),
              area_b.census.total_gates());
  return report;
}

}  // namespace adderforge
