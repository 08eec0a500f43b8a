#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adderforge/netlist.hpp"

namespace adderforge::testing {

inline void set_bits(std::vector<std::uint8_t>& values,
                     const std::vector<NetId>& nets, std::uint64_t value) {
  for (std::size_t i = 0; i < nets.size(); ++i)
    values[nets[i]] = static_cast<std::uint8_t>((value >> i) & 1);
}

inline std::uint64_t get_bits(const std::vector<std::uint8_t>& values,
                              const std::vector<NetId>& nets) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < nets.size(); ++i)
    if (values[nets[i]]) out |= std::uint64_t{1} << i;
  return out;
}

using Assignment = std::vector<std::pair<NetId, bool>>;

}  // namespace adderforge::testing
