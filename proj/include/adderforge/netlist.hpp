#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace adderforge {

using NetId = std::uint32_t;
using GateId = std::uint32_t;

/// The primitive gate vocabulary. MUX2 is a first-class primitive so that
/// selector cost is accounted as one 4-unit cell instead of its AOI expansion.
enum class GateKind : std::uint8_t { And2, Or2, Not1, Xor2, Mux2 };

inline constexpr std::size_t kGateKindCount = 5;

inline constexpr std::array<GateKind, kGateKindCount> kAllGateKinds = {
    GateKind::And2, GateKind::Or2, GateKind::Not1, GateKind::Xor2,
    GateKind::Mux2};

constexpr int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::Not1:
      return 1;
    case GateKind::And2:
    case GateKind::Or2:
    case GateKind::Xor2:
      return 2;
    case GateKind::Mux2:
      return 3;
  }
  return 0;
}

constexpr std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::And2:
      return "AND2";
    case GateKind::Or2:
      return "OR2";
    case GateKind::Not1:
      return "NOT1";
    case GateKind::Xor2:
      return "XOR2";
    case GateKind::Mux2:
      return "MUX2";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name);

struct NetlistError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Where a net's value comes from. Every net has exactly one source.
struct NetSource {
  enum class Kind : std::uint8_t { Input, Constant, Gate };

  Kind kind = Kind::Input;
  bool bit = false;   // Constant only
  GateId gate = 0;    // Gate only

  static constexpr NetSource input() { return {Kind::Input, false, 0}; }
  static constexpr NetSource constant(bool value) {
    return {Kind::Constant, value, 0};
  }
  static constexpr NetSource gate_output(GateId gate) {
    return {Kind::Gate, false, gate};
  }

  friend bool operator==(const NetSource&, const NetSource&) = default;
};

struct Net {
  NetId id = 0;
  std::string name;  // optional label; unique within a netlist when set
  NetSource source;
};

/// `group` is a 1-based block annotation used by per-group reports; 0 = none.
struct Gate {
  GateId id = 0;
  GateKind kind = GateKind::And2;
  std::vector<NetId> inputs;  // order is semantic: MUX2 is (in0, in1, sel)
  NetId output = 0;
  int group = 0;
};

struct Bus {
  std::string name;
  std::vector<NetId> nets;  // index 0 is the LSB
};

/// Instance counts recorded by the block builders; census data that cannot be
/// recovered from the flat gate list once blocks are merged.
struct BlockCounts {
  std::uint32_t half_adders = 0;
  std::uint32_t full_adders = 0;
  std::uint32_t bec_bits = 0;

  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// Immutable combinational gate netlist. Ids are dense: nets[i].id == i and
/// gates[i].id == i. Construction goes through NetlistBuilder (or parse_json);
/// after that the structure is read-only and safe to share across threads.
struct Netlist {
  std::vector<Net> nets;
  std::vector<Gate> gates;
  std::vector<Bus> input_buses;
  std::vector<Bus> output_buses;

  // Generator metadata. Empty/zero for hand-built netlists.
  std::string arch;
  int width = 0;
  std::vector<int> groups;
  BlockCounts blocks;

  const Bus* find_input_bus(std::string_view name) const;
  const Bus* find_output_bus(std::string_view name) const;
  std::optional<NetId> find_net(std::string_view name) const;
  std::size_t primary_input_count() const;
};

enum class ViolationKind {
  BadId,
  DuplicateName,
  ArityMismatch,
  UnknownNet,
  MultipleDrivers,
  MissingDriver,
  BadBus,
  Cycle,
};

std::string_view violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Structural check: dense ids, unique names, gate arity, single driver per
/// net, bus well-formedness, acyclicity. Returns every violation found.
std::vector<Violation> validate(const Netlist& netlist);

/// Deterministic topological order (Kahn, smallest gate id first among ready
/// gates). Throws NetlistError on a combinational cycle or malformed ids.
std::vector<GateId> topo_order(const Netlist& netlist);

/// Levelized evaluator. Computes the topological order once; each run() is a
/// single sweep over the flattened gate list.
class Evaluator {
 public:
  explicit Evaluator(const Netlist& netlist);

  std::size_t net_count() const { return net_count_; }
  const std::vector<GateId>& order() const { return order_; }

  /// Sizes `values` and stamps constant nets. Inputs still carry value 0.
  void prepare(std::vector<std::uint8_t>& values) const;

  /// Evaluates every gate output, assuming inputs were written into `values`.
  void sweep(std::vector<std::uint8_t>& values) const;

  /// Full evaluation from an explicit assignment. The assignment must cover
  /// every primary input and may name only primary inputs.
  std::vector<std::uint8_t> evaluate(
      std::span<const std::pair<NetId, bool>> assignment) const;

 private:
  struct Op {
    GateKind kind;
    NetId in0, in1, in2;
    NetId out;
  };

  std::size_t net_count_;
  std::vector<GateId> order_;
  std::vector<Op> ops_;
  std::vector<std::pair<NetId, bool>> constants_;
  std::vector<NetId> primary_inputs_;
};

/// One-shot evaluation; returns the value of every net, indexed by net id.
std::vector<std::uint8_t> evaluate(
    const Netlist& netlist,
    std::span<const std::pair<NetId, bool>> assignment);

/// Append-only netlist construction. Gates may only reference nets that
/// already exist, so the gate graph is acyclic by construction.
class NetlistBuilder {
 public:
  NetlistBuilder() = default;

  NetId add_input(std::string name);
  NetId add_constant(bool bit);  // deduplicated: one net per constant value

  NetId add_gate(GateKind kind, std::span<const NetId> inputs);
  NetId add_gate(GateKind kind, std::initializer_list<NetId> inputs);

  NetId add_and(NetId a, NetId b) { return add_gate(GateKind::And2, {a, b}); }
  NetId add_or(NetId a, NetId b) { return add_gate(GateKind::Or2, {a, b}); }
  NetId add_xor(NetId a, NetId b) { return add_gate(GateKind::Xor2, {a, b}); }
  NetId add_not(NetId a) { return add_gate(GateKind::Not1, {a}); }
  NetId add_mux(NetId in0, NetId in1, NetId sel) {
    return add_gate(GateKind::Mux2, {in0, in1, sel});
  }

  /// Attaches a unique label to an existing unnamed net.
  void name_net(NetId net, std::string name);

  /// Gates added from here on carry this 1-based group annotation (0 clears).
  void begin_group(int group);

  void add_input_bus(std::string name, std::vector<NetId> nets);
  void add_output_bus(std::string name, std::vector<NetId> nets);

  void set_arch(std::string arch, int width, std::vector<int> groups);

  void note_half_adder() { netlist_.blocks.half_adders += 1; }
  void note_full_adder() { netlist_.blocks.full_adders += 1; }
  void note_bec(int width) {
    netlist_.blocks.bec_bits += static_cast<std::uint32_t>(width);
  }

  std::size_t net_count() const { return netlist_.nets.size(); }
  std::size_t gate_count() const { return netlist_.gates.size(); }
  const Netlist& peek() const { return netlist_; }

  /// Moves the finished netlist out; the builder resets to an empty state.
  Netlist finish();

 private:
  void check_net(NetId net) const;

  Netlist netlist_;
  std::optional<NetId> const_net_[2];
  int current_group_ = 0;
};

}  // namespace adderforge
