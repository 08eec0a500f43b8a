#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adderforge/netlist.hpp"

namespace adderforge {

/// Named port map returned by the block builders. Multi-bit ports are
/// LSB-first. Port names are normative: "a", "b", "cin", "sum", "carry",
/// "cout", "in", "out", "sel".
struct BlockPorts {
  std::map<std::string, std::vector<NetId>, std::less<>> ports;

  const std::vector<NetId>& bus(std::string_view name) const;
  NetId bit(std::string_view name) const;  // single-net ports only
};

/// Carry-in flavor for ripple-carry chains. A constant carry is fed as a
/// dedicated constant net and never simplified away, so the dual-RCA area
/// baseline keeps its full gate count.
struct CarryIn {
  static CarryIn zero() { return {false, false, 0}; }
  static CarryIn one() { return {false, true, 0}; }
  static CarryIn live(NetId net) { return {true, false, net}; }

  bool is_live;
  bool constant_one;
  NetId net;
};

/// sum = a XOR b, carry = a AND b. Exactly 2 gates.
BlockPorts build_half_adder(NetlistBuilder& builder, NetId a, NetId b);

/// sum = (a XOR b) XOR cin, cout = ((a XOR b) AND cin) OR (a AND b), with the
/// a XOR b node shared. Exactly 5 gates: 2 XOR2, 2 AND2, 1 OR2.
BlockPorts build_full_adder(NetlistBuilder& builder, NetId a, NetId b,
                            NetId cin);

/// Ripple-carry adder, LSB first. With a constant-0 carry the first stage is
/// a half adder (2 + 5(w-1) gates); with a live or constant-1 carry every
/// stage is a full adder (5w gates).
BlockPorts build_rca(NetlistBuilder& builder, std::span<const NetId> a,
                     std::span<const NetId> b, CarryIn carry_in);

/// Binary-to-excess-1 converter: out = in + 1 (mod 2^n), n >= 2.
/// out[0] = NOT in[0]; out[i] = in[i] XOR chain[i-1] with a cascaded AND
/// prefix chain[j] = chain[j-1] AND in[j], chain[0] = in[0].
/// Gate count: 1 NOT1, (n-1) XOR2, (n-2) AND2.
BlockPorts build_bec(NetlistBuilder& builder, std::span<const NetId> in);

/// Word selector: out[i] = sel ? in1[i] : in0[i]. Exactly w MUX2 gates.
BlockPorts build_mux_bus(NetlistBuilder& builder, NetId sel,
                         std::span<const NetId> in0,
                         std::span<const NetId> in1);

}  // namespace adderforge
