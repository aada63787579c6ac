#include "mafia/schema.hpp"

#include <fstream>

#include <json.hpp>

#include "mafia/errors.hpp"

namespace mafia {

HeaderSchema HeaderSchema::default_schema() {
  HeaderSchema s;
  s.add_field("eth.src", 48);
  s.add_field("eth.dst", 48);
  s.add_field("eth.type", 16);

  s.add_field("ipv4.src", 32);
  s.add_field("ipv4.dst", 32);
  s.add_field("ipv4.proto", 8);
  s.add_field("ipv4.tos", 8);
  s.add_field("ipv4.ttl", 8);
  s.add_field("ipv4.id", 16);
  s.add_field("ipv4.len", 16);
  s.add_field("ipv4.checksum", 32);

  s.add_field("tcp.src", 16);
  s.add_field("tcp.dst", 16);
  s.add_field("tcp.seq", 32);
  s.add_field("tcp.ack", 32);
  s.add_field("tcp.flags", 8);

  s.add_field("udp.src", 16);
  s.add_field("udp.dst", 16);
  s.add_field("udp.len", 16);

  // Custom vocabulary used by the bundled measurement programs.
  s.add_field("segway_header.msg", 8);
  s.add_field("segway_header.ts", 8);
  s.add_field("segway_header.time", 64);
  s.add_field("pkt.request", 16);
  s.add_field("pkt.hh_volume", 32);

  // The listings mix ip.* and ipv4.* freely; both resolve to the same field.
  for (const char* f : {"src", "dst", "proto", "tos", "ttl", "id", "len", "checksum"}) {
    s.add_alias(std::string("ip.") + f, std::string("ipv4.") + f);
  }
  s.add_alias("ip.dest", "ipv4.dst");
  s.add_alias("ipv4.dest", "ipv4.dst");
  s.add_alias("ipv4.identification", "ipv4.id");
  s.add_alias("tcp.dest", "tcp.dst");
  s.add_alias("udp.dest", "udp.dst");
  return s;
}

void HeaderSchema::add_field(const std::string& name, uint8_t bits) {
  if (bits < 1 || bits > 64) {
    throw Error(Errc::config, "field " + name + " width must be in [1,64]");
  }
  fields_[name] = bits;
}

void HeaderSchema::add_alias(const std::string& alias, const std::string& canonical) {
  aliases_[alias] = canonical;
}

void HeaderSchema::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open schema file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::config, "schema " + path + ": " + e.what());
  }
  if (!j.is_object()) throw Error(Errc::config, "schema must be a JSON object");
  for (auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) {
      throw Error(Errc::config, "schema field " + k + " must map to a bit width");
    }
    add_field(k, static_cast<uint8_t>(v.get<uint64_t>()));
  }
}

const std::string& HeaderSchema::canonical(const std::string& name) const {
  auto it = aliases_.find(name);
  return it == aliases_.end() ? name : it->second;
}

std::optional<uint8_t> HeaderSchema::field_width(const std::string& name) const {
  auto it = fields_.find(canonical(name));
  if (it == fields_.end()) return std::nullopt;
  return it->second;
}

bool HeaderSchema::is_meta(std::string_view name) {
  return name == "pkt.size" || name == "pkt.input_port" || name == "pkt.output_port" ||
         name == "pkt.in_queue_length" || name == "pkt.ts" || name == "switch.id";
}

uint8_t HeaderSchema::meta_width(std::string_view name) {
  if (name == "pkt.size" || name == "pkt.in_queue_length") return 32;
  if (name == "pkt.ts") return 64;
  return 16;  // ports, switch.id
}

}  // namespace mafia
