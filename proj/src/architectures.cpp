#include "adderforge/architectures.hpp"

#include <numeric>
#include <stdexcept>

namespace adderforge {

std::string_view arch_name(Arch arch) {
  switch (arch) {
    case Arch::Rca:
      return "rca";
    case Arch::LinearCsla:
      return "linear-csla";
    case Arch::SqrtCslaDual:
      return "sqrt-csla";
    case Arch::SqrtCslaBec:
      return "sqrt-csla-bec";
  }
  return "?";
}

std::optional<Arch> parse_arch(std::string_view name) {
  for (Arch arch : {Arch::Rca, Arch::LinearCsla, Arch::SqrtCslaDual,
                    Arch::SqrtCslaBec})
    if (arch_name(arch) == name) return arch;
  return std::nullopt;
}

int GroupPlan::total() const {
  return std::accumulate(widths.begin(), widths.end(), 0);
}

GroupPlan plan_groups(int width) {
  if (width < 2)
    throw std::invalid_argument("plan_groups: width must be >= 2, got " +
                                std::to_string(width));
  GroupPlan plan;
  int remaining = width;
  for (int k = 0; remaining > 0; ++k) {
    const int nominal = std::max(2, k + 1);  // 2, 2, 3, 4, 5, ...
    const int g = std::min(nominal, remaining);
    plan.widths.push_back(g);
    remaining -= g;
  }
  return plan;
}

namespace {

GroupPlan uniform_groups(int width, int block_width) {
  GroupPlan plan;
  int remaining = width;
  while (remaining > 0) {
    const int g = std::min(block_width, remaining);
    plan.widths.push_back(g);
    remaining -= g;
  }
  return plan;
}

void check_plan(const GroupPlan& plan, int width, const char* who) {
  if (plan.widths.empty())
    throw std::invalid_argument(std::string(who) + ": empty group plan");
  for (int g : plan.widths)
    if (g < 1)
      throw std::invalid_argument(std::string(who) +
                                  ": group widths must be >= 1");
  if (plan.total() != width)
    throw std::invalid_argument(std::string(who) + ": group plan sums to " +
                                std::to_string(plan.total()) +
                                ", adder width is " + std::to_string(width));
}

/// Shared engine for the carry-select variants. Group 1 is an RCA on the
/// live carry-in; each later group computes a (w+1)-bit {carry,sum} word for
/// cin=0 and a speculative +1 word (second RCA or BEC), then selects with the
/// previous group's carry.
BlockPorts build_select_adder(NetlistBuilder& builder, int width,
                              const GroupPlan& plan, bool bec_leg) {
  std::vector<NetId> a(width), b(width);
  for (int i = 0; i < width; ++i)
    a[i] = builder.add_input("A" + std::to_string(i));
  for (int i = 0; i < width; ++i)
    b[i] = builder.add_input("B" + std::to_string(i));
  const NetId cin = builder.add_input("Cin");

  std::vector<NetId> sum(width);
  NetId carry = cin;

  int lo = 0;
  for (std::size_t k = 0; k < plan.widths.size(); ++k) {
    const int w = plan.widths[k];
    const int hi = lo + w - 1;
    const std::string hs = std::to_string(hi);
    builder.begin_group(static_cast<int>(k) + 1);
    const std::span<const NetId> a_k(a.data() + lo, static_cast<size_t>(w));
    const std::span<const NetId> b_k(b.data() + lo, static_cast<size_t>(w));

    if (k == 0) {
      BlockPorts rca = build_rca(builder, a_k, b_k, CarryIn::live(cin));
      for (int i = 0; i < w; ++i) {
        sum[lo + i] = rca.bus("sum")[i];
        builder.name_net(sum[lo + i], "sum" + std::to_string(lo + i));
      }
      carry = rca.bit("cout");
      builder.name_net(carry, "c" + hs);
    } else {
      BlockPorts rca0 = build_rca(builder, a_k, b_k, CarryIn::zero());
      std::vector<NetId> word0 = rca0.bus("sum");
      word0.push_back(rca0.bit("cout"));
      for (int i = 0; i < w; ++i)
        builder.name_net(word0[i], "s" + std::to_string(lo + i) + "_0");
      builder.name_net(word0[w], "c" + hs + "_0");

      // Speculative cin=1 word: either a second RCA or a BEC applied to the
      // cin=0 word (a + b + 1 never overflows w+1 bits).
      std::vector<NetId> word1;
      if (bec_leg) {
        word1 = build_bec(builder, word0).bus("out");
      } else {
        BlockPorts rca1 = build_rca(builder, a_k, b_k, CarryIn::one());
        word1 = rca1.bus("sum");
        word1.push_back(rca1.bit("cout"));
      }
      for (int i = 0; i < w; ++i)
        builder.name_net(word1[i], "s" + std::to_string(lo + i));
      builder.name_net(word1[w], "c" + hs);

      const BlockPorts mux = build_mux_bus(builder, carry, word0, word1);
      const std::vector<NetId>& selected = mux.bus("out");
      for (int i = 0; i < w; ++i) {
        sum[lo + i] = selected[i];
        builder.name_net(selected[i], "sum" + std::to_string(lo + i));
      }
      carry = selected[w];
      builder.name_net(carry, "c" + hs + "_sel");
    }
    lo += w;
  }
  builder.begin_group(0);

  BlockPorts ports;
  ports.ports["a"] = std::move(a);
  ports.ports["b"] = std::move(b);
  ports.ports["cin"] = {cin};
  ports.ports["sum"] = std::move(sum);
  ports.ports["cout"] = {carry};
  return ports;
}

}  // namespace

void AdderSpec::validate() const {
  const int min_width = arch == Arch::Rca ? 1 : 2;
  if (width < min_width)
    throw std::invalid_argument("width must be >= " +
                                std::to_string(min_width) + " for " +
                                std::string(arch_name(arch)) + ", got " +
                                std::to_string(width));
  if (arch == Arch::LinearCsla) {
    if (block_width < 1 || block_width > width)
      throw std::invalid_argument("block width must be in [1, width], got " +
                                  std::to_string(block_width));
  }
  if ((arch == Arch::SqrtCslaDual || arch == Arch::SqrtCslaBec) && groups)
    check_plan(*groups, width, "AdderSpec");
}

GroupPlan AdderSpec::effective_groups() const {
  switch (arch) {
    case Arch::Rca:
      return GroupPlan{{width}};
    case Arch::LinearCsla:
      return uniform_groups(width, block_width);
    case Arch::SqrtCslaDual:
    case Arch::SqrtCslaBec:
      return groups ? *groups : plan_groups(width);
  }
  return {};
}

std::string AdderSpec::label() const {
  std::string out(arch_name(arch));
  if (arch == Arch::LinearCsla)
    out += "(b=" + std::to_string(block_width) + ")";
  out += "/" + std::to_string(width);
  return out;
}

BlockPorts build_rca_adder(NetlistBuilder& builder, int width) {
  if (width < 1)
    throw std::invalid_argument("build_rca_adder: width must be >= 1");

  std::vector<NetId> a(width), b(width);
  for (int i = 0; i < width; ++i)
    a[i] = builder.add_input("A" + std::to_string(i));
  for (int i = 0; i < width; ++i)
    b[i] = builder.add_input("B" + std::to_string(i));
  const NetId cin = builder.add_input("Cin");

  builder.begin_group(1);
  BlockPorts rca = build_rca(builder, a, b, CarryIn::live(cin));
  builder.begin_group(0);

  std::vector<NetId> sum = rca.bus("sum");
  for (int i = 0; i < width; ++i)
    builder.name_net(sum[i], "sum" + std::to_string(i));
  const NetId cout = rca.bit("cout");
  builder.name_net(cout, "c" + std::to_string(width - 1));

  BlockPorts ports;
  ports.ports["a"] = std::move(a);
  ports.ports["b"] = std::move(b);
  ports.ports["cin"] = {cin};
  ports.ports["sum"] = std::move(sum);
  ports.ports["cout"] = {cout};
  return ports;
}

BlockPorts build_linear_csla(NetlistBuilder& builder, int width,
                             int block_width) {
  if (width < 2)
    throw std::invalid_argument("build_linear_csla: width must be >= 2");
  if (block_width < 1 || block_width > width)
    throw std::invalid_argument(
        "build_linear_csla: block width must be in [1, width]");
  return build_select_adder(builder, width, uniform_groups(width, block_width),
                            /*bec_leg=*/false);
}

BlockPorts build_sqrt_csla_dual(NetlistBuilder& builder, int width,
                                const GroupPlan& groups) {
  check_plan(groups, width, "build_sqrt_csla_dual");
  return build_select_adder(builder, width, groups, /*bec_leg=*/false);
}

BlockPorts build_sqrt_csla_bec(NetlistBuilder& builder, int width,
                               const GroupPlan& groups) {
  check_plan(groups, width, "build_sqrt_csla_bec");
  return build_select_adder(builder, width, groups, /*bec_leg=*/true);
}

Netlist build_adder(const AdderSpec& spec) {
  spec.validate();

  NetlistBuilder builder;
  BlockPorts ports;
  const GroupPlan plan = spec.effective_groups();

  switch (spec.arch) {
    case Arch::Rca:
      ports = build_rca_adder(builder, spec.width);
      break;
    case Arch::LinearCsla:
      ports = build_linear_csla(builder, spec.width, spec.block_width);
      break;
    case Arch::SqrtCslaDual:
      ports = build_sqrt_csla_dual(builder, spec.width, plan);
      break;
    case Arch::SqrtCslaBec:
      ports = build_sqrt_csla_bec(builder, spec.width, plan);
      break;
  }

  builder.add_input_bus("A", ports.bus("a"));
  builder.add_input_bus("B", ports.bus("b"));
  builder.add_input_bus("Cin", {ports.bit("cin")});
  builder.add_output_bus("Sum", ports.bus("sum"));
  builder.add_output_bus("Cout", {ports.bit("cout")});
  builder.set_arch(std::string(arch_name(spec.arch)), spec.width, plan.widths);

  Netlist netlist = builder.finish();
  const std::vector<Violation> violations = validate(netlist);
  if (!violations.empty()) {
    std::string message = "build_adder produced an invalid netlist:";
    for (const Violation& v : violations) message += " " + v.message + ";";
    throw NetlistError(message);
  }
  return netlist;
}

}  // namespace adderforge
