#include "adderforge/netlist.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace adderforge {

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (gate_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::BadId:
      return "BadId";
    case ViolationKind::DuplicateName:
      return "DuplicateName";
    case ViolationKind::ArityMismatch:
      return "ArityMismatch";
    case ViolationKind::UnknownNet:
      return "UnknownNet";
    case ViolationKind::MultipleDrivers:
      return "MultipleDrivers";
    case ViolationKind::MissingDriver:
      return "MissingDriver";
    case ViolationKind::BadBus:
      return "BadBus";
    case ViolationKind::Cycle:
      return "Cycle";
  }
  return "?";
}

const Bus* Netlist::find_input_bus(std::string_view name) const {
  for (const Bus& bus : input_buses)
    if (bus.name == name) return &bus;
  return nullptr;
}

const Bus* Netlist::find_output_bus(std::string_view name) const {
  for (const Bus& bus : output_buses)
    if (bus.name == name) return &bus;
  return nullptr;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
  if (name.empty()) return std::nullopt;
  for (const Net& net : nets)
    if (net.name == name) return net.id;
  return std::nullopt;
}

std::size_t Netlist::primary_input_count() const {
  std::size_t count = 0;
  for (const Net& net : nets)
    if (net.source.kind == NetSource::Kind::Input) ++count;
  return count;
}

namespace {

void add_violation(std::vector<Violation>& out, ViolationKind kind,
                   std::string message) {
  out.push_back(Violation{kind, std::move(message)});
}

}  // namespace

std::vector<Violation> validate(const Netlist& netlist) {
  std::vector<Violation> out;
  const std::size_t net_count = netlist.nets.size();
  const std::size_t gate_count = netlist.gates.size();

  bool ids_ok = true;
  for (std::size_t i = 0; i < net_count; ++i) {
    if (netlist.nets[i].id != i) {
      add_violation(out, ViolationKind::BadId,
                    "net at position " + std::to_string(i) + " has id " +
                        std::to_string(netlist.nets[i].id));
      ids_ok = false;
    }
  }
  for (std::size_t i = 0; i < gate_count; ++i) {
    if (netlist.gates[i].id != i) {
      add_violation(out, ViolationKind::BadId,
                    "gate at position " + std::to_string(i) + " has id " +
                        std::to_string(netlist.gates[i].id));
      ids_ok = false;
    }
  }

  std::unordered_set<std::string> seen_names;
  for (const Net& net : netlist.nets) {
    if (net.name.empty()) continue;
    if (!seen_names.insert(net.name).second)
      add_violation(out, ViolationKind::DuplicateName,
                    "net name '" + net.name + "' used more than once");
  }

  auto net_exists = [&](NetId id) { return id < net_count; };

  bool refs_ok = true;
  for (const Gate& gate : netlist.gates) {
    const int want = gate_arity(gate.kind);
    if (static_cast<int>(gate.inputs.size()) != want)
      add_violation(out, ViolationKind::ArityMismatch,
                    "gate " + std::to_string(gate.id) + " (" +
                        std::string(gate_kind_name(gate.kind)) + ") has " +
                        std::to_string(gate.inputs.size()) + " inputs, wants " +
                        std::to_string(want));
    for (NetId in : gate.inputs) {
      if (!net_exists(in)) {
        add_violation(out, ViolationKind::UnknownNet,
                      "gate " + std::to_string(gate.id) +
                          " reads unknown net " + std::to_string(in));
        refs_ok = false;
      }
    }
    if (!net_exists(gate.output)) {
      add_violation(out, ViolationKind::UnknownNet,
                    "gate " + std::to_string(gate.id) +
                        " drives unknown net " + std::to_string(gate.output));
      refs_ok = false;
    }
  }

  // Single-driver rule: count gate drivers per net and cross-check against
  // the net's declared source.
  if (ids_ok && refs_ok) {
    std::vector<int> driver_count(net_count, 0);
    std::vector<GateId> driver(net_count, 0);
    for (const Gate& gate : netlist.gates) {
      driver_count[gate.output] += 1;
      driver[gate.output] = gate.id;
    }
    for (const Net& net : netlist.nets) {
      const int drivers = driver_count[net.id];
      const bool declared_gate = net.source.kind == NetSource::Kind::Gate;
      if (drivers > 1) {
        add_violation(out, ViolationKind::MultipleDrivers,
                      "net " + std::to_string(net.id) + " is driven by " +
                          std::to_string(drivers) + " gates");
      } else if (drivers == 1 && !declared_gate) {
        add_violation(out, ViolationKind::MultipleDrivers,
                      "net " + std::to_string(net.id) +
                          " is an input/constant but also driven by gate " +
                          std::to_string(driver[net.id]));
      } else if (drivers == 1 && declared_gate &&
                 net.source.gate != driver[net.id]) {
        add_violation(out, ViolationKind::MissingDriver,
                      "net " + std::to_string(net.id) + " declares gate " +
                          std::to_string(net.source.gate) +
                          " as source but is driven by gate " +
                          std::to_string(driver[net.id]));
      } else if (drivers == 0 && declared_gate) {
        add_violation(out, ViolationKind::MissingDriver,
                      "net " + std::to_string(net.id) +
                          " declares a gate source but no gate drives it");
      }
    }
  }

  for (const auto& buses : {netlist.input_buses, netlist.output_buses}) {
    for (const Bus& bus : buses) {
      if (bus.nets.empty())
        add_violation(out, ViolationKind::BadBus,
                      "bus '" + bus.name + "' is empty");
      for (NetId id : bus.nets)
        if (!net_exists(id))
          add_violation(out, ViolationKind::BadBus,
                        "bus '" + bus.name + "' references unknown net " +
                            std::to_string(id));
    }
  }

  if (ids_ok && refs_ok) {
    std::vector<GateId> order;
    try {
      order = topo_order(netlist);
    } catch (const NetlistError& e) {
      add_violation(out, ViolationKind::Cycle, e.what());
    }
  }

  return out;
}

std::vector<GateId> topo_order(const Netlist& netlist) {
  const std::size_t net_count = netlist.nets.size();
  const std::size_t gate_count = netlist.gates.size();

  // Map net -> driving gate, if any.
  std::vector<std::int64_t> driver(net_count, -1);
  for (const Gate& gate : netlist.gates) {
    if (gate.output >= net_count)
      throw NetlistError("topo_order: gate " + std::to_string(gate.id) +
                         " drives unknown net");
    driver[gate.output] = gate.id;
  }

  std::vector<int> pending(gate_count, 0);
  std::vector<std::vector<GateId>> consumers(gate_count);
  for (const Gate& gate : netlist.gates) {
    for (NetId in : gate.inputs) {
      if (in >= net_count)
        throw NetlistError("topo_order: gate " + std::to_string(gate.id) +
                           " reads unknown net");
      if (driver[in] >= 0) {
        pending[gate.id] += 1;
        consumers[static_cast<std::size_t>(driver[in])].push_back(gate.id);
      }
    }
  }

  std::priority_queue<GateId, std::vector<GateId>, std::greater<GateId>> ready;
  for (const Gate& gate : netlist.gates)
    if (pending[gate.id] == 0) ready.push(gate.id);

  std::vector<GateId> order;
  order.reserve(gate_count);
  while (!ready.empty()) {
    const GateId id = ready.top();
    ready.pop();
    order.push_back(id);
    for (GateId next : consumers[id])
      if (--pending[next] == 0) ready.push(next);
  }

  if (order.size() != gate_count)
    throw NetlistError("topo_order: combinational cycle detected (" +
                       std::to_string(gate_count - order.size()) +
                       " gates unordered)");
  return order;
}

Evaluator::Evaluator(const Netlist& netlist)
    : net_count_(netlist.nets.size()), order_(topo_order(netlist)) {
  ops_.reserve(order_.size());
  for (GateId id : order_) {
    const Gate& gate = netlist.gates[id];
    if (static_cast<int>(gate.inputs.size()) != gate_arity(gate.kind))
      throw NetlistError("evaluator: gate " + std::to_string(id) +
                         " has wrong arity");
    Op op{};
    op.kind = gate.kind;
    op.in0 = gate.inputs[0];
    op.in1 = gate.inputs.size() > 1 ? gate.inputs[1] : gate.inputs[0];
    op.in2 = gate.inputs.size() > 2 ? gate.inputs[2] : gate.inputs[0];
    op.out = gate.output;
    ops_.push_back(op);
  }
  for (const Net& net : netlist.nets) {
    if (net.source.kind == NetSource::Kind::Constant)
      constants_.emplace_back(net.id, net.source.bit);
    else if (net.source.kind == NetSource::Kind::Input)
      primary_inputs_.push_back(net.id);
  }
}

void Evaluator::prepare(std::vector<std::uint8_t>& values) const {
  values.assign(net_count_, 0);
  for (auto [net, bit] : constants_) values[net] = bit ? 1 : 0;
}

void Evaluator::sweep(std::vector<std::uint8_t>& values) const {
  for (const Op& op : ops_) {
    switch (op.kind) {
      case GateKind::And2:
        values[op.out] = values[op.in0] & values[op.in1];
        break;
      case GateKind::Or2:
        values[op.out] = values[op.in0] | values[op.in1];
        break;
      case GateKind::Not1:
        values[op.out] = values[op.in0] ^ 1;
        break;
      case GateKind::Xor2:
        values[op.out] = values[op.in0] ^ values[op.in1];
        break;
      case GateKind::Mux2:
        values[op.out] = values[op.in2] ? values[op.in1] : values[op.in0];
        break;
    }
  }
}

std::vector<std::uint8_t> Evaluator::evaluate(
    std::span<const std::pair<NetId, bool>> assignment) const {
  std::vector<std::uint8_t> values;
  prepare(values);

  std::vector<std::uint8_t> is_input(net_count_, 0);
  for (NetId id : primary_inputs_) is_input[id] = 1;

  std::vector<std::uint8_t> covered(net_count_, 0);
  for (auto [net, bit] : assignment) {
    if (net >= net_count_)
      throw NetlistError("evaluate: assignment names unknown net " +
                         std::to_string(net));
    if (!is_input[net])
      throw NetlistError("evaluate: net " + std::to_string(net) +
                         " is not a primary input");
    values[net] = bit ? 1 : 0;
    covered[net] = 1;
  }
  for (NetId id : primary_inputs_)
    if (!covered[id])
      throw NetlistError("evaluate: primary input " + std::to_string(id) +
                         " has no assigned value");

  sweep(values);
  return values;
}

std::vector<std::uint8_t> evaluate(
    const Netlist& netlist, std::span<const std::pair<NetId, bool>> assignment) {
  return Evaluator(netlist).evaluate(assignment);
}

NetId NetlistBuilder::add_input(std::string name) {
  if (name.empty()) throw NetlistError("add_input: name must not be empty");
  if (netlist_.find_net(name))
    throw NetlistError("add_input: duplicate name '" + name + "'");
  Net net;
  net.id = static_cast<NetId>(netlist_.nets.size());
  net.name = std::move(name);
  net.source = NetSource::input();
  netlist_.nets.push_back(std::move(net));
  return netlist_.nets.back().id;
}

NetId NetlistBuilder::add_constant(bool bit) {
  auto& slot = const_net_[bit ? 1 : 0];
  if (slot) return *slot;
  Net net;
  net.id = static_cast<NetId>(netlist_.nets.size());
  net.source = NetSource::constant(bit);
  netlist_.nets.push_back(std::move(net));
  slot = netlist_.nets.back().id;
  return *slot;
}

void NetlistBuilder::check_net(NetId net) const {
  if (net >= netlist_.nets.size())
    throw NetlistError("unknown net id " + std::to_string(net));
}

NetId NetlistBuilder::add_gate(GateKind kind, std::span<const NetId> inputs) {
  if (static_cast<int>(inputs.size()) != gate_arity(kind))
    throw NetlistError("add_gate: " + std::string(gate_kind_name(kind)) +
                       " expects " + std::to_string(gate_arity(kind)) +
                       " inputs, got " + std::to_string(inputs.size()));
  for (NetId in : inputs) check_net(in);

  Gate gate;
  gate.id = static_cast<GateId>(netlist_.gates.size());
  gate.kind = kind;
  gate.inputs.assign(inputs.begin(), inputs.end());
  gate.group = current_group_;

  Net out;
  out.id = static_cast<NetId>(netlist_.nets.size());
  out.source = NetSource::gate_output(gate.id);
  gate.output = out.id;

  netlist_.nets.push_back(std::move(out));
  netlist_.gates.push_back(std::move(gate));
  return netlist_.nets.back().id;
}

NetId NetlistBuilder::add_gate(GateKind kind,
                               std::initializer_list<NetId> inputs) {
  return add_gate(kind, std::span<const NetId>(inputs.begin(), inputs.size()));
}

void NetlistBuilder::name_net(NetId net, std::string name) {
  check_net(net);
  if (name.empty()) throw NetlistError("name_net: name must not be empty");
  if (!netlist_.nets[net].name.empty())
    throw NetlistError("name_net: net " + std::to_string(net) +
                       " is already named '" + netlist_.nets[net].name + "'");
  if (netlist_.find_net(name))
    throw NetlistError("name_net: duplicate name '" + name + "'");
  netlist_.nets[net].name = std::move(name);
}

void NetlistBuilder::begin_group(int group) {
  if (group < 0) throw NetlistError("begin_group: group must be >= 0");
  current_group_ = group;
}

void NetlistBuilder::add_input_bus(std::string name, std::vector<NetId> nets) {
  for (NetId id : nets) check_net(id);
  netlist_.input_buses.push_back(Bus{std::move(name), std::move(nets)});
}

void NetlistBuilder::add_output_bus(std::string name, std::vector<NetId> nets) {
  for (NetId id : nets) check_net(id);
  netlist_.output_buses.push_back(Bus{std::move(name), std::move(nets)});
}

void NetlistBuilder::set_arch(std::string arch, int width,
                              std::vector<int> groups) {
  netlist_.arch = std::move(arch);
  netlist_.width = width;
  netlist_.groups = std::move(groups);
}

Netlist NetlistBuilder::finish() {
  Netlist out = std::move(netlist_);
  netlist_ = Netlist{};
  const_net_[0].reset();
  const_net_[1].reset();
  current_group_ = 0;
  return out;
}

}  // namespace adderforge
