#include "adderforge/export.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace adderforge {

namespace {

const std::unordered_set<std::string>& verilog_keywords() {
  static const std::unordered_set<std::string> keywords = {
      "module", "endmodule", "input",  "output", "inout", "wire",
      "assign", "reg",       "always", "begin",  "end",   "if",
      "else",   "case",      "endcase", "for",   "while", "parameter",
      "signed", "integer",   "initial", "or",    "and",   "not",
      "xor",    "nand",      "nor",     "buf",   "function", "endfunction"};
  return keywords;
}

std::string sanitize_identifier(std::string_view raw, NetId fallback_id) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    out.push_back(ok ? c : '_');
  }
  if (out.empty()) return "n" + std::to_string(fallback_id);
  if (out[0] >= '0' && out[0] <= '9') out.insert(out.begin(), '_');
  if (verilog_keywords().count(out)) out += "_";
  return out;
}

struct NetRendering {
  std::vector<std::string> expr;        // per net: how to reference it
  std::vector<std::string> wire_names;  // internal nets needing a wire decl
};

NetRendering render_nets(const Netlist& netlist,
                         const std::vector<int>& bus_of_net,
                         const std::vector<int>& bus_index_of_net,
                         const std::vector<const Bus*>& buses,
                         const std::vector<std::string>& bus_ids) {
  NetRendering out;
  out.expr.resize(netlist.nets.size());

  std::unordered_map<std::string, NetId> taken;
  auto claim = [&](const std::string& ident, NetId net) {
    auto [it, fresh] = taken.emplace(ident, net);
    if (!fresh)
      throw NetlistError("verilog export: nets " + std::to_string(it->second) +
                         " and " + std::to_string(net) +
                         " both render as identifier '" + ident + "'");
  };
  for (std::size_t i = 0; i < bus_ids.size(); ++i) claim(bus_ids[i], 0);

  for (const Net& net : netlist.nets) {
    const int bus = bus_of_net[net.id];
    if (bus >= 0) {
      const Bus& owner = *buses[static_cast<std::size_t>(bus)];
      const std::string& base = bus_ids[static_cast<std::size_t>(bus)];
      out.expr[net.id] =
          owner.nets.size() == 1
              ? base
              : base + "[" + std::to_string(bus_index_of_net[net.id]) + "]";
      continue;
    }
    if (net.source.kind == NetSource::Kind::Constant) {
      out.expr[net.id] = net.source.bit ? "1'b1" : "1'b0";
      continue;
    }
    const std::string ident = net.name.empty()
                                  ? "n" + std::to_string(net.id)
                                  : sanitize_identifier(net.name, net.id);
    claim(ident, net.id);
    out.expr[net.id] = ident;
    out.wire_names.push_back(ident);
  }
  return out;
}

}  // namespace

std::string export_verilog(const Netlist& netlist,
                           std::string_view module_name) {
  const std::vector<Violation> violations = validate(netlist);
  if (!violations.empty())
    throw NetlistError("verilog export: netlist fails validation (" +
                       violations.front().message + ")");

  // Flatten bus membership. A net belongs to the first bus that lists it.
  std::vector<const Bus*> buses;
  std::vector<bool> bus_is_input;
  for (const Bus& bus : netlist.input_buses) {
    buses.push_back(&bus);
    bus_is_input.push_back(true);
  }
  for (const Bus& bus : netlist.output_buses) {
    buses.push_back(&bus);
    bus_is_input.push_back(false);
  }

  std::vector<int> bus_of_net(netlist.nets.size(), -1);
  std::vector<int> bus_index_of_net(netlist.nets.size(), 0);
  std::vector<std::string> bus_ids;
  {
    std::unordered_map<std::string, int> seen;
    for (std::size_t b = 0; b < buses.size(); ++b) {
      std::string ident = sanitize_identifier(buses[b]->name, 0);
      if (seen.count(ident))
        throw NetlistError("verilog export: duplicate bus identifier '" +
                           ident + "'");
      seen.emplace(ident, 1);
      bus_ids.push_back(std::move(ident));
      for (std::size_t i = 0; i < buses[b]->nets.size(); ++i) {
        const NetId net = buses[b]->nets[i];
        if (bus_of_net[net] < 0) {
          bus_of_net[net] = static_cast<int>(b);
          bus_index_of_net[net] = static_cast<int>(i);
        }
      }
    }
  }

  const NetRendering names =
      render_nets(netlist, bus_of_net, bus_index_of_net, buses, bus_ids);

  std::ostringstream v;
  const std::string module_ident = sanitize_identifier(module_name, 0);
  v << "module " << module_ident << " (\n";
  for (std::size_t b = 0; b < buses.size(); ++b) {
    v << "  " << (bus_is_input[b] ? "input " : "output");
    if (buses[b]->nets.size() > 1)
      v << " [" << buses[b]->nets.size() - 1 << ":0]";
    v << " " << bus_ids[b] << (b + 1 < buses.size() ? "," : "") << "\n";
  }
  v << ");\n\n";

  for (const std::string& wire : names.wire_names)
    v << "  wire " << wire << ";\n";
  if (!names.wire_names.empty()) v << "\n";

  for (const Gate& gate : netlist.gates) {
    const auto in = [&](std::size_t i) {
      return names.expr[gate.inputs[i]];
    };
    v << "  assign " << names.expr[gate.output] << " = ";
    switch (gate.kind) {
      case GateKind::And2:
        v << in(0) << " & " << in(1);
        break;
      case GateKind::Or2:
        v << in(0) << " | " << in(1);
        break;
      case GateKind::Not1:
        v << "~" << in(0);
        break;
      case GateKind::Xor2:
        v << in(0) << " ^ " << in(1);
        break;
      case GateKind::Mux2:
        v << in(2) << " ? " << in(1) << " : " << in(0);
        break;
    }
    v << ";\n";
  }

  // Output-bus bits fed straight from an input or constant need an explicit
  // pass-through assignment (no gate emits one for them).
  for (std::size_t b = 0; b < buses.size(); ++b) {
    if (bus_is_input[b]) continue;
    for (std::size_t i = 0; i < buses[b]->nets.size(); ++i) {
      const Net& net = netlist.nets[buses[b]->nets[i]];
      if (net.source.kind == NetSource::Kind::Gate) continue;
      std::string lhs = bus_ids[b];
      if (buses[b]->nets.size() > 1) lhs += "[" + std::to_string(i) + "]";
      std::string rhs;
      if (net.source.kind == NetSource::Kind::Constant)
        rhs = net.source.bit ? "1'b1" : "1'b0";
      else
        rhs = names.expr[net.id];
      if (rhs == lhs) continue;  // net renders as this bus bit already
      v << "  assign " << lhs << " = " << rhs << ";\n";
    }
  }

  v << "\nendmodule\n";
  return v.str();
}

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

/// Bare identifiers, skipping literal tails like the b0 of 1'b0.
std::vector<std::string> extract_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\'' ) {  // skip literal width/value like 1'b0
      ++i;
      while (i < text.size() && ident_char(text[i])) ++i;
      continue;
    }
    if (!ident_start(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && ident_char(text[j])) ++j;
    out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Full net references: an identifier plus its optional [index] selector, so
/// "Sum[3]" and "Sum[13]" compare as distinct targets.
std::vector<std::string> extract_references(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\'' ) {
      ++i;
      while (i < text.size() && ident_char(text[i])) ++i;
      continue;
    }
    if (!ident_start(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && ident_char(text[j])) ++j;
    std::string ref(text.substr(i, j - i));
    if (j < text.size() && text[j] == '[') {
      const std::size_t close = text.find(']', j);
      if (close != std::string_view::npos) {
        ref += std::string(text.substr(j, close - j + 1));
        j = close + 1;
      }
    }
    out.push_back(std::move(ref));
    i = j;
  }
  return out;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<std::string> lint_verilog(std::string_view text) {
  std::vector<std::string> problems;
  std::map<std::string, int> declared;   // identifier -> declaration count
  std::map<std::string, int> assigned;   // full LHS (with index) -> count
  int module_count = 0, endmodule_count = 0;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::vector<std::pair<int, std::string>> assigns;  // line, statement

  while (std::getline(stream, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;

    if (line.rfind("module ", 0) == 0) {
      ++module_count;
      continue;
    }
    if (line == "endmodule") {
      ++endmodule_count;
      continue;
    }
    if (line.rfind("input", 0) == 0 || line.rfind("output", 0) == 0 ||
        line.rfind("wire", 0) == 0) {
      const std::vector<std::string> ids = extract_identifiers(line);
      // first token is the keyword itself
      for (std::size_t i = 1; i < ids.size(); ++i) declared[ids[i]] += 1;
      continue;
    }
    if (line.rfind("assign ", 0) == 0) {
      assigns.emplace_back(line_no, line);
      continue;
    }
    if (line == ");" || line.back() == ',') continue;  // port list remnants
    problems.push_back("line " + std::to_string(line_no) +
                       ": unrecognized statement '" + line + "'");
  }

  if (module_count != 1)
    problems.push_back("expected exactly one module, found " +
                       std::to_string(module_count));
  if (endmodule_count != module_count)
    problems.push_back("module/endmodule mismatch");

  for (const auto& [ident, count] : declared)
    if (count > 1)
      problems.push_back("identifier '" + ident + "' declared " +
                         std::to_string(count) + " times");

  for (const auto& [line, stmt] : assigns) {
    const std::size_t eq = stmt.find('=');
    if (eq == std::string::npos || stmt.back() != ';') {
      problems.push_back("line " + std::to_string(line) +
                         ": malformed assign");
      continue;
    }
    const std::string lhs = strip(stmt.substr(7, eq - 7));
    const std::string rhs = strip(stmt.substr(eq + 1, stmt.size() - eq - 2));

    assigned[lhs] += 1;
    const std::vector<std::string> lhs_ids = extract_identifiers(lhs);
    if (lhs_ids.size() != 1) {
      problems.push_back("line " + std::to_string(line) +
                         ": assign target must be one net");
      continue;
    }
    if (!declared.count(lhs_ids[0]))
      problems.push_back("line " + std::to_string(line) + ": target '" +
                         lhs_ids[0] + "' not declared");
    for (const std::string& ident : extract_identifiers(rhs))
      if (!declared.count(ident))
        problems.push_back("line " + std::to_string(line) + ": identifier '" +
                           ident + "' not declared");
    for (const std::string& ref : extract_references(rhs))
      if (ref == lhs)
        problems.push_back("line " + std::to_string(line) + ": '" + lhs +
                           "' references itself");
  }

  for (const auto& [lhs, count] : assigned)
    if (count > 1)
      problems.push_back("target '" + lhs + "' assigned " +
                         std::to_string(count) + " times");

  return problems;
}

std::string export_dot(const Netlist& netlist) {
  std::ostringstream dot;
  dot << "digraph netlist {\n  rankdir=LR;\n";

  auto net_label = [&](const Net& net) {
    if (!net.name.empty()) return net.name;
    if (net.source.kind == NetSource::Kind::Constant)
      return std::string(net.source.bit ? "1" : "0");
    return "n" + std::to_string(net.id);
  };

  for (const Net& net : netlist.nets) {
    if (net.source.kind == NetSource::Kind::Input)
      dot << "  n" << net.id << " [shape=octagon,label=\"" << net_label(net)
          << "\"];\n";
    else if (net.source.kind == NetSource::Kind::Constant)
      dot << "  n" << net.id << " [shape=box,label=\""
          << (net.source.bit ? "1" : "0") << "\"];\n";
  }

  // Gates, clustered by group annotation.
  std::map<int, std::vector<const Gate*>> by_group;
  for (const Gate& gate : netlist.gates)
    by_group[gate.group].push_back(&gate);

  for (const auto& [group, gates] : by_group) {
    const bool cluster = group > 0;
    if (cluster)
      dot << "  subgraph cluster_group" << group << " {\n    label=\"group "
          << group << "\";\n";
    for (const Gate* gate : gates)
      dot << (cluster ? "    " : "  ") << "g" << gate->id << " [label=\""
          << gate_kind_name(gate->kind) << "\"];\n";
    if (cluster) dot << "  }\n";
  }

  auto source_node = [&](NetId id) {
    const Net& net = netlist.nets[id];
    if (net.source.kind == NetSource::Kind::Gate)
      return "g" + std::to_string(net.source.gate);
    return "n" + std::to_string(id);
  };

  for (const Gate& gate : netlist.gates)
    for (NetId in : gate.inputs) {
      dot << "  " << source_node(in) << " -> g" << gate.id;
      if (!netlist.nets[in].name.empty())
        dot << " [label=\"" << netlist.nets[in].name << "\"]";
      dot << ";\n";
    }

  for (const Bus& bus : netlist.output_buses)
    for (std::size_t i = 0; i < bus.nets.size(); ++i) {
      std::string label = bus.name;
      if (bus.nets.size() > 1) label += "[" + std::to_string(i) + "]";
      const std::string node = "o_" + bus.name + "_" + std::to_string(i);
      dot << "  " << node << " [shape=doubleoctagon,label=\"" << label
          << "\"];\n";
      dot << "  " << source_node(bus.nets[i]) << " -> " << node << ";\n";
    }

  dot << "}\n";
  return dot.str();
}

}  // namespace adderforge
