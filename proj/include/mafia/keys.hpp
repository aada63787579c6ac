#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mafia/packet.hpp"

namespace mafia {

// Ordered list of field references (headers and/or metadata) that groups
// packets into flows.
struct FlowKeyDef {
  std::string name;
  std::vector<std::string> fields;  // canonical names
};

// Component values of `key` extracted from `p`; throws UnknownField.
std::vector<uint64_t> key_values(const FlowKeyDef& key, const Packet& p);

// Hash-map slot for a packet: deterministic in (component values, size, seed),
// result in [0, size).
uint32_t key_index(const FlowKeyDef& key, const Packet& p, uint32_t size, uint64_t seed);

}  // namespace mafia
