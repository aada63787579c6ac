#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "mafia/schema.hpp"

namespace mafia {

struct PacketMeta {
  uint16_t input_port = 0;
  uint16_t output_port = 0;
  uint32_t size = 0;
  uint32_t in_queue_length = 0;
  uint16_t switch_id = 0;  // stamped by the switch on entry, not by the trace
  uint64_t ts = 0;         // nanoseconds since trace epoch
};

// The unit flowing through tasks: parsed header fields plus switch metadata.
// Header names are canonical (schema-resolved); values always fit their
// declared bit width.
struct Packet {
  std::map<std::string, uint64_t> headers;
  PacketMeta meta;
  std::string stream = "pkts";

  std::optional<uint64_t> field(const std::string& canonical_name) const {
    if (canonical_name == "pkt.size") return meta.size;
    if (canonical_name == "pkt.input_port") return meta.input_port;
    if (canonical_name == "pkt.output_port") return meta.output_port;
    if (canonical_name == "pkt.in_queue_length") return meta.in_queue_length;
    if (canonical_name == "pkt.ts") return meta.ts;
    if (canonical_name == "switch.id") return meta.switch_id;
    auto it = headers.find(canonical_name);
    if (it == headers.end()) return std::nullopt;
    return it->second;
  }

  // Tag write: value wraps to the field's width.
  void set_header(const std::string& canonical_name, uint64_t value, uint8_t bits) {
    headers[canonical_name] = bits >= 64 ? value : (value & ((1ULL << bits) - 1));
  }
};

}  // namespace mafia
