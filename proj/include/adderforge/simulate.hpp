#pragma once

#include <cstdint>
#include <vector>

#include "adderforge/netlist.hpp"

namespace adderforge {

struct SimVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool cin = false;

  friend bool operator==(const SimVector&, const SimVector&) = default;
};

struct SimResult {
  std::uint64_t sum = 0;
  bool cout = false;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// All-ones mask for `width` bits (width in [1, 64]).
std::uint64_t width_mask(int width);

/// Ground truth: sum = (a + b + cin) mod 2^width, cout = the bit above.
/// Carries are tracked explicitly so width 64 needs no wider integer type.
SimResult oracle(int width, const SimVector& vector);

/// Reusable adder harness around an Evaluator: packs operands into the
/// A/B/Cin buses, sweeps, unpacks Sum/Cout. Construct once, run many vectors.
class AdderSim {
 public:
  explicit AdderSim(const Netlist& netlist);

  int width() const { return width_; }
  SimResult run(const SimVector& vector);

 private:
  Evaluator evaluator_;
  std::vector<std::uint8_t> values_;
  std::vector<NetId> a_, b_, sum_;
  NetId cin_ = 0;
  NetId cout_ = 0;
  int width_ = 0;
};

/// One-shot simulation of an adder netlist.
SimResult simulate(const Netlist& netlist, const SimVector& vector);

struct VerifyFailure {
  SimVector vector;
  SimResult got;
  SimResult expected;
};

enum class VerifyMode { Exhaustive, Randomized };

struct VerifyOutcome {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 0;      // Randomized only
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<VerifyFailure> failures;  // capped; mismatches is the full count

  bool passed() const { return mismatches == 0; }
};

inline constexpr int kDefaultExhaustiveCap = 10;
inline constexpr std::size_t kDefaultFailureCap = 20;

/// Boundary patterns worth forcing through any carry chain before random
/// sampling: zeros, all-ones, alternating bits, and single-bit operands
/// against an all-ones word.
std::vector<SimVector> edge_vectors(int width);

/// Compares the netlist against the oracle over all 2^(2w+1) vectors.
/// Refuses widths above `cap` (the default keeps runs around 2M vectors).
VerifyOutcome verify_exhaustive(const Netlist& netlist, int width,
                                int cap = kDefaultExhaustiveCap,
                                std::size_t failure_cap = kDefaultFailureCap);

/// Edge vectors first, then `trials` vectors from a seeded mt19937_64 stream.
/// Identical seeds replay identical vector streams.
VerifyOutcome verify_random(const Netlist& netlist, int width,
                            std::uint64_t trials, std::uint64_t seed,
                            std::size_t failure_cap = kDefaultFailureCap);

}  // namespace adderforge
