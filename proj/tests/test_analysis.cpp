#include <algorithm>

#include "adderforge/analysis.hpp"
#include "doctest.h"

using namespace adderforge;

namespace {

AdderSpec spec_of(Arch arch, int width) {
  AdderSpec spec;
  spec.arch = arch;
  spec.width = width;
  return spec;
}

int arrival_of(const Netlist& netlist, const TimingReport& timing,
               std::string_view name) {
  const std::optional<NetId> net = netlist.find_net(name);
  REQUIRE(net.has_value());
  return timing.arrival[*net];
}

long long numeric(const ComparisonReport& report, std::string_view metric,
                  bool second) {
  const ComparisonRow* row = report.find(metric);
  REQUIRE(row != nullptr);
  return std::stoll(second ? row->value_b : row->value_a);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("default cost model keeps FA at 13 and HA at 6") {
  const CostModel& model = CostModel::aoi_ramkumar();
  CHECK(model.area_of(GateKind::Xor2) == 5);
  CHECK(model.area_of(GateKind::Mux2) == 4);
  CHECK(model.delay_of(GateKind::Xor2) == 3);
  CHECK(model.delay_of(GateKind::Mux2) == 3);
  CHECK(model.delay_of(GateKind::And2) == 1);
  CHECK(2 * model.area_of(GateKind::Xor2) + 2 * model.area_of(GateKind::And2) +
            model.area_of(GateKind::Or2) ==
        13);
  CHECK(model.area_of(GateKind::Xor2) + model.area_of(GateKind::And2) == 6);
}

TEST_CASE("cost model override files are parsed and applied") {
  const CostModel model = CostModel::parse(
      "# alternative weighting\n"
      "XOR2 1 1\n"
      "MUX2 2 1\n");
  CHECK(model.area_of(GateKind::Xor2) == 1);
  CHECK(model.delay_of(GateKind::Xor2) == 1);
  CHECK(model.area_of(GateKind::Mux2) == 2);
  CHECK(model.area_of(GateKind::And2) == 1);  // untouched default

  CHECK_THROWS_AS(CostModel::parse("NAND3 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(CostModel::parse("XOR2 five 3\n"), std::invalid_argument);
}

TEST_CASE("empty netlist has zero area") {
  const Netlist netlist;
  CHECK(area_report(netlist, CostModel::aoi_ramkumar()).total_area == 0);
}

TEST_CASE("area is additive over the census") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const CostModel& model = CostModel::aoi_ramkumar();
  const AreaReport report = area_report(netlist, model, /*per_group=*/true);

  long long from_census = 0;
  for (GateKind kind : kAllGateKinds)
    from_census +=
        static_cast<long long>(report.census[kind]) * model.area_of(kind);
  CHECK(report.total_area == from_census);

  long long from_groups = 0;
  for (const GroupAreaRow& row : report.per_group) from_groups += row.area;
  CHECK(report.total_area == from_groups);
}

TEST_CASE("16-bit BEC design: per-group areas 26, 43, 66, 89, 112") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const AreaReport report =
      area_report(netlist, CostModel::aoi_ramkumar(), /*per_group=*/true);
  REQUIRE(report.per_group.size() == 5);
  const long long expected[] = {26, 43, 66, 89, 112};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(report.per_group[i].group == static_cast<int>(i) + 1);
    CHECK(report.per_group[i].area == expected[i]);
  }
  CHECK(report.total_area == 336);
}

TEST_CASE("group area linearity: 23w-3 for BEC groups, 30w-3 for dual") {
  for (int width : {8, 16, 32, 64}) {
    const Netlist bec = build_adder(spec_of(Arch::SqrtCslaBec, width));
    const AreaReport bec_report =
        area_report(bec, CostModel::aoi_ramkumar(), /*per_group=*/true);
    for (std::size_t i = 1; i < bec_report.per_group.size(); ++i)
      CHECK(bec_report.per_group[i].area ==
            23LL * bec_report.per_group[i].width - 3);

    const Netlist dual = build_adder(spec_of(Arch::SqrtCslaDual, width));
    const AreaReport dual_report =
        area_report(dual, CostModel::aoi_ramkumar(), /*per_group=*/true);
    for (std::size_t i = 1; i < dual_report.per_group.size(); ++i)
      CHECK(dual_report.per_group[i].area ==
            30LL * dual_report.per_group[i].width - 3);

    // Group 1 is a live-carry RCA: width full adders.
    CHECK(bec_report.per_group[0].area == 13LL * bec_report.per_group[0].width);
  }
}

TEST_CASE("per-group area requires complete group annotations") {
  NetlistBuilder builder;
  const NetId a = builder.add_input("a");
  const NetId b = builder.add_input("b");
  builder.add_xor(a, b);  // group 0 = unannotated
  const Netlist netlist = builder.finish();
  CHECK_THROWS_AS(
      area_report(netlist, CostModel::aoi_ramkumar(), /*per_group=*/true),
      NetlistError);
}

TEST_CASE("a single XOR2 has critical delay 3") {
  NetlistBuilder builder;
  const NetId a = builder.add_input("a");
  const NetId b = builder.add_input("b");
  builder.add_xor(a, b);
  const Netlist netlist = builder.finish();
  CHECK(timing_report(netlist, CostModel::aoi_ramkumar()).critical_delay == 3);
}

TEST_CASE("16-bit BEC design reproduces the named arrival times") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const TimingReport timing =
      timing_report(netlist, CostModel::aoi_ramkumar());
  CHECK(arrival_of(netlist, timing, "c1") == 7);   // group-1 carry out
  CHECK(arrival_of(netlist, timing, "s2") == 4);   // BEC bit 2, pre-mux
  CHECK(arrival_of(netlist, timing, "s3") == 9);   // BEC bit 3, pre-mux
  CHECK(arrival_of(netlist, timing, "c3") == 10);  // BEC carry, pre-mux
}

TEST_CASE("16-bit BEC design: per-group delays 8, 13, 16, 19, 22") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const TimingReport timing =
      timing_report(netlist, CostModel::aoi_ramkumar());
  REQUIRE(timing.per_group_delay.size() == 5);
  const int expected[] = {8, 13, 16, 19, 22};
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(timing.per_group_delay[i].delay == expected[i]);
  CHECK(timing.critical_delay == 22);

  // From group 3 on, each selected group adds exactly one MUX2 delay.
  for (std::size_t i = 2; i < 5; ++i)
    CHECK(timing.per_group_delay[i].delay -
              timing.per_group_delay[i - 1].delay ==
          CostModel::aoi_ramkumar().delay_of(GateKind::Mux2));
}

TEST_CASE("arrivals are strictly monotone along every gate") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const TimingReport timing =
      timing_report(netlist, CostModel::aoi_ramkumar());
  for (const Gate& gate : netlist.gates) {
    int latest = 0;
    for (NetId in : gate.inputs)
      latest = std::max(latest, timing.arrival[in]);
    CHECK(timing.arrival[gate.output] > latest);
  }
}

TEST_CASE("the critical path is a real input-to-output path") {
  for (Arch arch : {Arch::Rca, Arch::SqrtCslaBec}) {
    const Netlist netlist = build_adder(spec_of(arch, 16));
    const CostModel& model = CostModel::aoi_ramkumar();
    const TimingReport timing = timing_report(netlist, model);
    REQUIRE(!timing.critical_path.empty());

    // Consecutive gates are wired together and per-gate delays add up to the
    // critical delay.
    int total = 0;
    for (std::size_t i = 0; i < timing.critical_path.size(); ++i) {
      const Gate& gate = netlist.gates[timing.critical_path[i]];
      total += model.delay_of(gate.kind);
      if (i + 1 < timing.critical_path.size()) {
        const Gate& next = netlist.gates[timing.critical_path[i + 1]];
        CHECK(std::count(next.inputs.begin(), next.inputs.end(),
                         gate.output) > 0);
      }
    }
    CHECK(total == timing.critical_delay);

    // The first gate starts from arrival-0 nets; the last drives an output.
    const Gate& first = netlist.gates[timing.critical_path.front()];
    int first_latest = 0;
    for (NetId in : first.inputs)
      first_latest = std::max(first_latest, timing.arrival[in]);
    CHECK(first_latest == 0);

    const Gate& last = netlist.gates[timing.critical_path.back()];
    bool drives_output = false;
    for (const Bus& bus : netlist.output_buses)
      drives_output |= std::count(bus.nets.begin(), bus.nets.end(),
                                  last.output) > 0;
    CHECK(drives_output);
  }
}

TEST_CASE("critical-path ties resolve toward the smallest gate id") {
  NetlistBuilder builder;
  const NetId a = builder.add_input("a");
  const NetId b = builder.add_input("b");
  const NetId x0 = builder.add_xor(a, b);  // gate 0
  const NetId x1 = builder.add_xor(b, a);  // gate 1, same arrival
  const NetId y = builder.add_and(x0, x1);  // gate 2
  builder.add_output_bus("O", {y});
  const Netlist netlist = builder.finish();

  const TimingReport timing =
      timing_report(netlist, CostModel::aoi_ramkumar());
  CHECK(timing.critical_path == std::vector<GateId>{0, 2});
}

TEST_CASE("per-output arrivals cover Sum and Cout") {
  const Netlist netlist = build_adder(spec_of(Arch::SqrtCslaBec, 16));
  const TimingReport timing =
      timing_report(netlist, CostModel::aoi_ramkumar());
  CHECK(timing.per_output.size() == 17);  // Sum[16] + Cout
  int max_out = 0;
  for (const auto& [net, t] : timing.per_output) max_out = std::max(max_out, t);
  CHECK(max_out == timing.critical_delay);
}

TEST_CASE("64-bit comparison: BEC cuts area by more than 10%") {
  const ComparisonReport report =
      compare(spec_of(Arch::SqrtCslaDual, 64), spec_of(Arch::SqrtCslaBec, 64),
              CostModel::aoi_ramkumar());

  CHECK(numeric(report, "area (units)", false) == 1856);
  CHECK(numeric(report, "area (units)", true) == 1422);
  const ComparisonRow* area = report.find("area (units)");
  REQUIRE(area);
  REQUIRE(area->delta.has_value());
  CHECK(*area->delta < -0.10);
  CHECK(*area->delta == doctest::Approx((1422.0 - 1856.0) / 1856.0));

  // Adder cells: one RCA per selected group in the BEC design, two in the
  // dual design (2 cells per bit in groups 2+, plus the two group-1 FAs).
  CHECK(numeric(report, "adder cells (HA+FA)", false) == 126);
  CHECK(numeric(report, "adder cells (HA+FA)", true) == 64);

  CHECK(numeric(report, "mux gates", false) == 72);
  CHECK(numeric(report, "mux gates", true) == 72);
  CHECK(numeric(report, "bec bits", false) == 0);
  CHECK(numeric(report, "bec bits", true) == 72);
}

TEST_CASE("comparing a spec against itself yields zero deltas") {
  const ComparisonReport report =
      compare(spec_of(Arch::SqrtCslaBec, 16), spec_of(Arch::SqrtCslaBec, 16),
              CostModel::aoi_ramkumar());
  for (const ComparisonRow& row : report.rows)
    if (row.delta) CHECK(*row.delta == 0.0);
}

TEST_CASE("compare rejects mismatched widths") {
  CHECK_THROWS_AS(compare(spec_of(Arch::SqrtCslaDual, 16),
                          spec_of(Arch::SqrtCslaBec, 32),
                          CostModel::aoi_ramkumar()),
                  std::invalid_argument);
}

TEST_CASE("the area gap between dual and BEC grows with width") {
  long long previous_gap = 0;
  for (int width : {8, 16, 32, 64}) {
    const CostModel& model = CostModel::aoi_ramkumar();
    const long long dual =
        area_report(build_adder(spec_of(Arch::SqrtCslaDual, width)), model)
            .total_area;
    const long long bec =
        area_report(build_adder(spec_of(Arch::SqrtCslaBec, width)), model)
            .total_area;
    CHECK(bec < dual);
    CHECK(dual - bec > previous_gap);
    previous_gap = dual - bec;
  }
}

}  // TEST_SUITE
