#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "adderforge/netlist.hpp"

namespace adderforge {

inline constexpr std::string_view kNetlistFormatVersion = "1";

/// Netlist document, format version "1". Ids round-trip unchanged; parsing
/// runs validate() and rejects documents with structural violations.
std::string serialize_json(const Netlist& netlist);
Netlist parse_json(std::string_view text);

void save_netlist(const Netlist& netlist, const std::filesystem::path& path);
Netlist load_netlist(const std::filesystem::path& path);

}  // namespace adderforge
