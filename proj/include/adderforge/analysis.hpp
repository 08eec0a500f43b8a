#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adderforge/architectures.hpp"
#include "adderforge/netlist.hpp"

namespace adderforge {

/// Per-kind area and delay weights, in abstract units. The default model
/// weighs compound gates by their AND/OR/NOT decomposition: XOR2 costs
/// 5 area / 3 delay, MUX2 costs 4 area / 3 delay, simple gates cost 1 / 1.
struct CostModel {
  std::string name = "aoi-ramkumar";
  std::array<int, kGateKindCount> area{1, 1, 1, 5, 4};   // indexed by GateKind
  std::array<int, kGateKindCount> delay{1, 1, 1, 3, 3};

  int area_of(GateKind kind) const {
    return area[static_cast<std::size_t>(kind)];
  }
  int delay_of(GateKind kind) const {
    return delay[static_cast<std::size_t>(kind)];
  }

  static const CostModel& aoi_ramkumar();

  /// Parses an override file: one `<kind> <area> <delay>` line per gate kind,
  /// '#' comments allowed. Unlisted kinds keep the default weights.
  static CostModel parse(std::string_view text, std::string name = "custom");
  static CostModel load(const std::filesystem::path& path);
};

struct GateCensus {
  std::array<std::size_t, kGateKindCount> by_kind{};

  std::size_t& operator[](GateKind kind) {
    return by_kind[static_cast<std::size_t>(kind)];
  }
  std::size_t operator[](GateKind kind) const {
    return by_kind[static_cast<std::size_t>(kind)];
  }
  std::size_t total_gates() const;
  long long weighted_area(const CostModel& model) const;

  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

GateCensus census(const Netlist& netlist);

struct GroupAreaRow {
  int group = 0;
  int width = 0;  // 0 when the netlist carries no group-width metadata
  long long area = 0;
  GateCensus census;
};

struct AreaReport {
  long long total_area = 0;
  GateCensus census;
  std::vector<GroupAreaRow> per_group;  // empty unless requested
};

/// Weighted gate counts. With `per_group` set, every gate must carry a group
/// annotation (throws NetlistError otherwise).
AreaReport area_report(const Netlist& netlist, const CostModel& model,
                       bool per_group = false);

struct GroupDelayRow {
  int group = 0;
  int delay = 0;  // latest arrival among the group's gate outputs
};

struct TimingReport {
  std::vector<int> arrival;           // indexed by net id; inputs/constants 0
  int critical_delay = 0;             // max arrival over output-bus nets
  std::vector<GateId> critical_path;  // input-to-output gate sequence
  std::vector<std::pair<NetId, int>> per_output;
  std::vector<GroupDelayRow> per_group_delay;
};

/// Longest-path arrival times via a topological sweep. Critical-path ties are
/// broken toward the smallest gate id so reports are reproducible.
TimingReport timing_report(const Netlist& netlist, const CostModel& model);

struct ComparisonRow {
  std::string metric;
  std::string value_a;
  std::string value_b;
  std::optional<double> delta;  // (B - A) / A; unset for non-numeric rows
};

struct ComparisonReport {
  AdderSpec spec_a;
  AdderSpec spec_b;
  std::vector<ComparisonRow> rows;

  const ComparisonRow* find(std::string_view metric) const;
};

/// Builds both adders and tabulates area, delay, census and cell counts
/// side by side. Specs must agree on width.
ComparisonReport compare(const AdderSpec& spec_a, const AdderSpec& spec_b,
                         const CostModel& model);

}  // namespace adderforge
