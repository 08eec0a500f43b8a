#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "adderforge/netlist.hpp"

namespace adderforge {

/// Structural Verilog-2001: buses become vector ports, every gate becomes a
/// continuous assignment (MUX2 as a ternary select). Net naming is
/// deterministic: bus position first, then the net's label, then n<id>.
/// Throws NetlistError if two nets collide after name sanitization.
std::string export_verilog(const Netlist& netlist,
                           std::string_view module_name);

/// Text-level well-formedness check over emitted Verilog, independent of the
/// netlist: balanced module/endmodule, every referenced identifier declared
/// exactly once, each target assigned once, no combinational self-reference.
/// Returns a list of problems; empty means the text passes.
std::vector<std::string> lint_verilog(std::string_view text);

/// Graphviz view: one node per gate and per primary input/constant, edges
/// along nets, one cluster per annotated group.
std::string export_dot(const Netlist& netlist);

}  // namespace adderforge
