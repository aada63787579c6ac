#include "mafia/keys.hpp"

#include "mafia/errors.hpp"
#include "mafia/hash.hpp"

namespace mafia {

std::vector<uint64_t> key_values(const FlowKeyDef& key, const Packet& p) {
  std::vector<uint64_t> vals;
  vals.reserve(key.fields.size());
  for (const auto& f : key.fields) {
    auto v = p.field(f);
    if (!v) throw Error(Errc::unknown_field, "key " + key.name + " component " + f);
    vals.push_back(*v);
  }
  return vals;
}

uint32_t key_index(const FlowKeyDef& key, const Packet& p, uint32_t size, uint64_t seed) {
  auto vals = key_values(key, p);
  return static_cast<uint32_t>(hash_values(seed, vals) % size);
}

}  // namespace mafia
