#include "adderforge/blocks.hpp"

#include <stdexcept>

namespace adderforge {

const std::vector<NetId>& BlockPorts::bus(std::string_view name) const {
  auto it = ports.find(name);
  if (it == ports.end())
    throw NetlistError("block has no port '" + std::string(name) + "'");
  return it->second;
}

NetId BlockPorts::bit(std::string_view name) const {
  const auto& nets = bus(name);
  if (nets.size() != 1)
    throw NetlistError("port '" + std::string(name) + "' is " +
                       std::to_string(nets.size()) + " bits wide, expected 1");
  return nets[0];
}

BlockPorts build_half_adder(NetlistBuilder& builder, NetId a, NetId b) {
  const NetId sum = builder.add_xor(a, b);
  const NetId carry = builder.add_and(a, b);
  builder.note_half_adder();
  BlockPorts ports;
  ports.ports["sum"] = {sum};
  ports.ports["carry"] = {carry};
  return ports;
}

BlockPorts build_full_adder(NetlistBuilder& builder, NetId a, NetId b,
                            NetId cin) {
  const NetId p = builder.add_xor(a, b);  // shared between sum and carry
  const NetId sum = builder.add_xor(p, cin);
  const NetId propagate = builder.add_and(p, cin);
  const NetId generate = builder.add_and(a, b);
  const NetId cout = builder.add_or(propagate, generate);
  builder.note_full_adder();
  BlockPorts ports;
  ports.ports["sum"] = {sum};
  ports.ports["cout"] = {cout};
  return ports;
}

BlockPorts build_rca(NetlistBuilder& builder, std::span<const NetId> a,
                     std::span<const NetId> b, CarryIn carry_in) {
  if (a.empty()) throw std::invalid_argument("build_rca: width must be >= 1");
  if (a.size() != b.size())
    throw std::invalid_argument("build_rca: operand buses differ in width (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");

  std::vector<NetId> sum(a.size());
  NetId carry = 0;
  std::size_t first = 0;

  if (!carry_in.is_live && !carry_in.constant_one) {
    // Constant-0 carry: the first stage degenerates to a half adder.
    BlockPorts ha = build_half_adder(builder, a[0], b[0]);
    sum[0] = ha.bit("sum");
    carry = ha.bit("carry");
    first = 1;
  } else {
    carry = carry_in.is_live ? carry_in.net : builder.add_constant(true);
  }

  for (std::size_t i = first; i < a.size(); ++i) {
    BlockPorts fa = build_full_adder(builder, a[i], b[i], carry);
    sum[i] = fa.bit("sum");
    carry = fa.bit("cout");
  }

  BlockPorts ports;
  ports.ports["sum"] = std::move(sum);
  ports.ports["cout"] = {carry};
  return ports;
}

BlockPorts build_bec(NetlistBuilder& builder, std::span<const NetId> in) {
  if (in.size() < 2)
    throw std::invalid_argument("build_bec: width must be >= 2, got " +
                                std::to_string(in.size()));

  std::vector<NetId> out(in.size());
  out[0] = builder.add_not(in[0]);
  NetId chain = in[0];  // AND prefix of in[0..i)
  for (std::size_t i = 1; i < in.size(); ++i) {
    out[i] = builder.add_xor(in[i], chain);
    if (i + 1 < in.size()) chain = builder.add_and(chain, in[i]);
  }
  builder.note_bec(static_cast<int>(in.size()));

  BlockPorts ports;
  ports.ports["out"] = std::move(out);
  return ports;
}

BlockPorts build_mux_bus(NetlistBuilder& builder, NetId sel,
                         std::span<const NetId> in0,
                         std::span<const NetId> in1) {
  if (in0.size() != in1.size())
    throw std::invalid_argument("build_mux_bus: buses differ in width (" +
                                std::to_string(in0.size()) + " vs " +
                                std::to_string(in1.size()) + ")");
  if (in0.empty())
    throw std::invalid_argument("build_mux_bus: width must be >= 1");

  std::vector<NetId> out(in0.size());
  for (std::size_t i = 0; i < in0.size(); ++i)
    out[i] = builder.add_mux(in0[i], in1[i], sel);

  BlockPorts ports;
  ports.ports["out"] = std::move(out);
  return ports;
}

}  // namespace adderforge
