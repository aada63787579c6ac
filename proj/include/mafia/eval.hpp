#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mafia/expr.hpp"
#include "mafia/packet.hpp"
#include "mafia/rng.hpp"
#include "mafia/schema.hpp"

namespace mafia {

// Resolves state reads for expression evaluation. The store implements this;
// keyed variables are resolved through their declared key against the packet.
class StateReader {
 public:
  virtual ~StateReader() = default;
  virtual uint64_t read_state(const std::string& var, ReadOp op,
                              std::optional<uint64_t> arg, const Packet& p) = 0;
};

struct EvalCtx {
  const HeaderSchema& schema;
  const Packet& pkt;
  StateReader* state = nullptr;
  SplitMix64* rng = nullptr;
  // Bound inside `x.set(expr)`: a bare read of `x` resolves to the cell
  // being rewritten instead of going through the store.
  const std::string* self_var = nullptr;
  uint64_t self_value = 0;
};

// Pure except for `random`, which advances the seeded generator.
// Throws UnknownField, UnknownState, DivisionByZero.
uint64_t eval_expr(const Expr& e, EvalCtx& ctx);

}  // namespace mafia
