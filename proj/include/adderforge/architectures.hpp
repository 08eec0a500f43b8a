#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adderforge/blocks.hpp"
#include "adderforge/netlist.hpp"

namespace adderforge {

enum class Arch { Rca, LinearCsla, SqrtCslaDual, SqrtCslaBec };

std::string_view arch_name(Arch arch);  // "rca", "linear-csla", ...
std::optional<Arch> parse_arch(std::string_view name);

/// Ordered partition of the adder bits into carry-select blocks, group 1
/// first (LSB side).
struct GroupPlan {
  std::vector<int> widths;

  int total() const;
  friend bool operator==(const GroupPlan&, const GroupPlan&) = default;
};

/// Square-root grouping policy: widths 2, 2, 3, 4, 5, ... with the final
/// group truncated so the sum equals `width`.
GroupPlan plan_groups(int width);

struct AdderSpec {
  Arch arch = Arch::SqrtCslaBec;
  int width = 0;
  int block_width = 4;              // LinearCsla only
  std::optional<GroupPlan> groups;  // SqrtCsla*; default = plan_groups(width)

  void validate() const;  // throws std::invalid_argument
  GroupPlan effective_groups() const;
  std::string label() const;  // e.g. "sqrt-csla-bec/64"
};

/// Builds the adder described by `spec` into a fresh netlist with buses
/// A[width], B[width], Cin, Sum[width], Cout and group annotations attached.
Netlist build_adder(const AdderSpec& spec);

/// Plain ripple-carry adder with a live carry-in; census {FA: width}.
BlockPorts build_rca_adder(NetlistBuilder& builder, int width);

/// Uniform-block carry-select adder: block 1 is an RCA on the live carry-in;
/// every later block holds a cin=0 and a cin=1 RCA plus a selecting mux bus.
BlockPorts build_linear_csla(NetlistBuilder& builder, int width,
                             int block_width);

/// Square-root-grouped carry-select adder with two RCAs per selected group.
BlockPorts build_sqrt_csla_dual(NetlistBuilder& builder, int width,
                                const GroupPlan& groups);

/// Square-root-grouped carry-select adder where a BEC of width (group+1)
/// replaces the cin=1 RCA of every selected group.
BlockPorts build_sqrt_csla_bec(NetlistBuilder& builder, int width,
                               const GroupPlan& groups);

}  // namespace adderforge
