#include "adderforge/simulate.hpp"

#include <random>
#include <stdexcept>

namespace adderforge {

std::uint64_t width_mask(int width) {
  if (width < 1 || width > 64)
    throw std::invalid_argument("width must be in [1, 64], got " +
                                std::to_string(width));
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

SimResult oracle(int width, const SimVector& vector) {
  const std::uint64_t mask = width_mask(width);
  if (vector.a > mask || vector.b > mask)
    throw std::invalid_argument("oracle: operand exceeds " +
                                std::to_string(width) + " bits");

  SimResult result;
  if (width == 64) {
    const std::uint64_t ab = vector.a + vector.b;  // mod 2^64
    result.sum = ab + (vector.cin ? 1 : 0);
    result.cout = (ab < vector.a) || (vector.cin && ab == mask);
  } else {
    const std::uint64_t wide = vector.a + vector.b + (vector.cin ? 1 : 0);
    result.sum = wide & mask;
    result.cout = (wide >> width) != 0;
  }
  return result;
}

AdderSim::AdderSim(const Netlist& netlist) : evaluator_(netlist) {
  const Bus* a = netlist.find_input_bus("A");
  const Bus* b = netlist.find_input_bus("B");
  const Bus* cin = netlist.find_input_bus("Cin");
  const Bus* sum = netlist.find_output_bus("Sum");
  const Bus* cout = netlist.find_output_bus("Cout");
  if (!a || !b || !cin || !sum || !cout)
    throw NetlistError("adder netlist must expose buses A, B, Cin, Sum, Cout");
  if (a->nets.size() != b->nets.size() || a->nets.size() != sum->nets.size())
    throw NetlistError("adder buses A, B, Sum must share one width");
  if (cin->nets.size() != 1 || cout->nets.size() != 1)
    throw NetlistError("Cin and Cout must be single-bit buses");
  if (a->nets.empty() || a->nets.size() > 64)
    throw NetlistError("adder width must be in [1, 64] for simulation");

  width_ = static_cast<int>(a->nets.size());
  a_ = a->nets;
  b_ = b->nets;
  sum_ = sum->nets;
  cin_ = cin->nets[0];
  cout_ = cout->nets[0];
  evaluator_.prepare(values_);
}

SimResult AdderSim::run(const SimVector& vector) {
  const std::uint64_t mask = width_mask(width_);
  if (vector.a > mask || vector.b > mask)
    throw std::invalid_argument("simulate: operand exceeds " +
                                std::to_string(width_) + " bits");

  for (int i = 0; i < width_; ++i) {
    values_[a_[static_cast<std::size_t>(i)]] =
        static_cast<std::uint8_t>((vector.a >> i) & 1);
    values_[b_[static_cast<std::size_t>(i)]] =
        static_cast<std::uint8_t>((vector.b >> i) & 1);
  }
  values_[cin_] = vector.cin ? 1 : 0;
  evaluator_.sweep(values_);

  SimResult result;
  for (int i = 0; i < width_; ++i)
    if (values_[sum_[static_cast<std::size_t>(i)]])
      result.sum |= std::uint64_t{1} << i;
  result.cout = values_[cout_] != 0;
  return result;
}

SimResult simulate(const Netlist& netlist, const SimVector& vector) {
  AdderSim sim(netlist);
  return sim.run(vector);
}

std::vector<SimVector> edge_vectors(int width) {
  const std::uint64_t mask = width_mask(width);
  const std::uint64_t alt01 = 0x5555555555555555ULL & mask;
  const std::uint64_t alt10 = 0xAAAAAAAAAAAAAAAAULL & mask;

  std::vector<SimVector> out = {
      {0, 0, false},        {0, 0, true},
      {mask, mask, false},  {mask, mask, true},
      {mask, 0, false},     {mask, 0, true},
      {0, mask, true},      {alt01, alt10, false},
      {alt01, alt10, true}, {alt10, alt01, true},
      {alt01, alt01, false}, {alt10, alt10, true},
  };
  for (int i = 0; i < width; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    out.push_back({bit, mask, false});  // ripple from bit i upward
    out.push_back({mask, bit, true});
  }
  return out;
}

namespace {

void check_vector(VerifyOutcome& outcome, AdderSim& sim, int width,
                  const SimVector& vector, std::size_t failure_cap) {
  const SimResult got = sim.run(vector);
  const SimResult expected = oracle(width, vector);
  outcome.checked += 1;
  if (got == expected) return;
  outcome.mismatches += 1;
  if (outcome.failures.size() < failure_cap)
    outcome.failures.push_back(VerifyFailure{vector, got, expected});
}

}  // namespace

VerifyOutcome verify_exhaustive(const Netlist& netlist, int width, int cap,
                                std::size_t failure_cap) {
  if (width > cap)
    throw std::invalid_argument(
        "verify_exhaustive: width " + std::to_string(width) +
        " exceeds the exhaustive cap of " + std::to_string(cap));

  AdderSim sim(netlist);
  if (sim.width() != width)
    throw std::invalid_argument("verify_exhaustive: netlist width is " +
                                std::to_string(sim.width()));

  VerifyOutcome outcome;
  outcome.mode = VerifyMode::Exhaustive;
  const std::uint64_t limit = std::uint64_t{1} << width;
  for (std::uint64_t a = 0; a < limit; ++a)
    for (std::uint64_t b = 0; b < limit; ++b)
      for (int cin = 0; cin < 2; ++cin)
        check_vector(outcome, sim, width, {a, b, cin != 0}, failure_cap);
  return outcome;
}

VerifyOutcome verify_random(const Netlist& netlist, int width,
                            std::uint64_t trials, std::uint64_t seed,
                            std::size_t failure_cap) {
  AdderSim sim(netlist);
  if (sim.width() != width)
    throw std::invalid_argument("verify_random: netlist width is " +
                                std::to_string(sim.width()));

  VerifyOutcome outcome;
  outcome.mode = VerifyMode::Randomized;
  outcome.seed = seed;

  for (const SimVector& vector : edge_vectors(width))
    check_vector(outcome, sim, width, vector, failure_cap);

  // Masking mt19937_64 output keeps the stream identical across platforms;
  // uniform_int_distribution would not guarantee that.
  const std::uint64_t mask = width_mask(width);
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    SimVector vector;
    vector.a = rng() & mask;
    vector.b = rng() & mask;
    vector.cin = (rng() & 1) != 0;
    check_vector(outcome, sim, width, vector, failure_cap);
  }
  return outcome;
}

}  // namespace adderforge
