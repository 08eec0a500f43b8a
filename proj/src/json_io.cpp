#include "adderforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace adderforge {

namespace {

using nlohmann::json;

json source_to_json(const NetSource& source) {
  switch (source.kind) {
    case NetSource::Kind::Input:
      return "input";
    case NetSource::Kind::Constant:
      return source.bit ? "const1" : "const0";
    case NetSource::Kind::Gate:
      return source.gate;
  }
  return nullptr;
}

NetSource source_from_json(const json& value) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "input") return NetSource::input();
    if (s == "const0") return NetSource::constant(false);
    if (s == "const1") return NetSource::constant(true);
    throw NetlistError("unknown net source '" + s + "'");
  }
  if (value.is_number_unsigned())
    return NetSource::gate_output(value.get<GateId>());
  throw NetlistError("net source must be \"input\", \"const0\", \"const1\" "
                     "or a gate id");
}

json buses_to_json(const std::vector<Bus>& buses) {
  json out = json::array();
  for (const Bus& bus : buses)
    out.push_back(json{{"name", bus.name}, {"nets", bus.nets}});
  return out;
}

std::vector<Bus> buses_from_json(const json& value) {
  std::vector<Bus> out;
  for (const json& item : value) {
    Bus bus;
    bus.name = item.at("name").get<std::string>();
    bus.nets = item.at("nets").get<std::vector<NetId>>();
    out.push_back(std::move(bus));
  }
  return out;
}

}  // namespace

std::string serialize_json(const Netlist& netlist) {
  json doc;
  doc["format_version"] = std::string(kNetlistFormatVersion);
  if (!netlist.arch.empty()) doc["arch"] = netlist.arch;
  if (netlist.width > 0) doc["width"] = netlist.width;
  if (!netlist.groups.empty()) doc["groups"] = netlist.groups;
  if (netlist.blocks != BlockCounts{})
    doc["blocks"] = {{"half_adders", netlist.blocks.half_adders},
                     {"full_adders", netlist.blocks.full_adders},
                     {"bec_bits", netlist.blocks.bec_bits}};

  json nets = json::array();
  for (const Net& net : netlist.nets) {
    json entry{{"id", net.id}, {"source", source_to_json(net.source)}};
    if (!net.name.empty()) entry["name"] = net.name;
    nets.push_back(std::move(entry));
  }
  doc["nets"] = std::move(nets);

  json gates = json::array();
  for (const Gate& gate : netlist.gates) {
    json entry{{"id", gate.id},
               {"kind", std::string(gate_kind_name(gate.kind))},
               {"inputs", gate.inputs},
               {"output", gate.output}};
    if (gate.group > 0) entry["group"] = gate.group;
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);

  doc["input_buses"] = buses_to_json(netlist.input_buses);
  doc["output_buses"] = buses_to_json(netlist.output_buses);
  return doc.dump(2) + "\n";
}

Netlist parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw NetlistError(std::string("malformed netlist document: ") + e.what());
  }

  Netlist netlist;
  try {
    const std::string version =
        doc.at("format_version").get<std::string>();
    if (version != kNetlistFormatVersion)
      throw NetlistError("unsupported format version '" + version +
                         "', expected '" + std::string(kNetlistFormatVersion) +
                         "'");

    netlist.arch = doc.value("arch", std::string());
    netlist.width = doc.value("width", 0);
    netlist.groups = doc.value("groups", std::vector<int>());
    if (doc.contains("blocks")) {
      const json& blocks = doc.at("blocks");
      netlist.blocks.half_adders = blocks.value("half_adders", 0u);
      netlist.blocks.full_adders = blocks.value("full_adders", 0u);
      netlist.blocks.bec_bits = blocks.value("bec_bits", 0u);
    }

    for (const json& entry : doc.at("nets")) {
      Net net;
      net.id = entry.at("id").get<NetId>();
      net.name = entry.value("name", std::string());
      net.source = source_from_json(entry.at("source"));
      netlist.nets.push_back(std::move(net));
    }

    for (const json& entry : doc.at("gates")) {
      Gate gate;
      gate.id = entry.at("id").get<GateId>();
      const std::string kind_name = entry.at("kind").get<std::string>();
      const std::optional<GateKind> kind = parse_gate_kind(kind_name);
      if (!kind) throw NetlistError("unknown gate kind '" + kind_name + "'");
      gate.kind = *kind;
      gate.inputs = entry.at("inputs").get<std::vector<NetId>>();
      gate.output = entry.at("output").get<NetId>();
      gate.group = entry.value("group", 0);
      netlist.gates.push_back(std::move(gate));
    }

    netlist.input_buses = buses_from_json(doc.at("input_buses"));
    netlist.output_buses = buses_from_json(doc.at("output_buses"));
  } catch (const json::exception& e) {
    throw NetlistError(std::string("malformed netlist document: ") + e.what());
  }

  const std::vector<Violation> violations = validate(netlist);
  if (!violations.empty()) {
    std::string message = "netlist document fails validation:";
    for (const Violation& v : violations) {
      message += "\n  [";
      message += violation_kind_name(v.kind);
      message += "] " + v.message;
    }
    throw NetlistError(message);
  }
  return netlist;
}

void save_netlist(const Netlist& netlist, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw NetlistError("cannot write file: " + path.string());
  out << serialize_json(netlist);
  if (!out) throw NetlistError("write failed: " + path.string());
}

Netlist load_netlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NetlistError("cannot open file: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json(text.str());
}

}  // namespace adderforge
