#pragma once

#include <string>
#include <vector>

#include "adderforge/analysis.hpp"
#include "adderforge/architectures.hpp"

namespace adderforge {

struct ReportTable {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;  // rectangular
  std::vector<std::string> footnotes;

  std::string to_markdown() const;
  std::string to_csv() const;  // footnotes become trailing '#' comment lines
};

/// Published per-group reference figures for the 16-bit BEC design (groups
/// 2-5). Used for footnotes and discrepancy notes only, never as model
/// output.
struct ReferenceGroupFigures {
  int group;
  int area;
  int delay;
};
const std::vector<ReferenceGroupFigures>& reference_groups_16bit_bec();

/// Published 64-bit comparison (dual-RCA vs BEC): gate-count areas. The
/// companion FPGA synthesis figures (LUTs, adder macros, nanoseconds) are
/// external-toolchain outputs and appear in footnote text only.
struct ReferenceComparison64 {
  int area_dual = 1352;
  int area_bec = 1169;
};
ReferenceComparison64 reference_comparison_64bit();

/// Per-group area/delay table for one adder spec. When the spec matches the
/// published 16-bit BEC evaluation, a reference-area column and a
/// discrepancy footnote are included.
ReportTable render_group_table(const AdderSpec& spec, const CostModel& model);

/// Same table computed from an already-built netlist (group metadata must be
/// present, as produced by build_adder).
ReportTable render_group_table(const Netlist& netlist, const CostModel& model);

/// Side-by-side comparison of two specs of equal width.
ReportTable render_comparison(const AdderSpec& spec_a, const AdderSpec& spec_b,
                              const CostModel& model);
ReportTable render_comparison(const ComparisonReport& report);

}  // namespace adderforge
