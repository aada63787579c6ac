#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mafia {

// Header vocabulary: dotted field name -> bit width. Ships with a default
// Ethernet/IPv4/TCP/metadata schema and can be extended from a JSON file
// ({"field.name": bits, ...}). Aliases map the spellings that appear in
// measurement programs (ip.src, ipv4.identification, tcp.dest, ...) onto one
// canonical field each.
//
// Switch metadata is a fixed, separate namespace: pkt.size, pkt.input_port,
// pkt.output_port, pkt.in_queue_length, pkt.ts and switch.id. Any other
// dotted name (including pkt.request-style custom fields) is an ordinary
// header field.
class HeaderSchema {
 public:
  static HeaderSchema default_schema();

  void add_field(const std::string& name, uint8_t bits);
  void add_alias(const std::string& alias, const std::string& canonical);
  void load_file(const std::string& path);

  // Resolves aliases; unknown names are returned unchanged.
  const std::string& canonical(const std::string& name) const;

  // Width of a header field (after alias resolution); nullopt if undeclared.
  std::optional<uint8_t> field_width(const std::string& name) const;

  static bool is_meta(std::string_view name);
  static uint8_t meta_width(std::string_view name);

  const std::map<std::string, uint8_t>& fields() const { return fields_; }

 private:
  std::map<std::string, uint8_t> fields_;
  std::map<std::string, std::string> aliases_;
};

}  // namespace mafia
