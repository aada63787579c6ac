#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace mafia {

enum class BinOp {
  add, sub, mul, div,
  band, bor, shl, shr,
  eq, ne, lt, le, gt, ge,
  land, lor,
};

const char* binop_symbol(BinOp op);
int binop_precedence(BinOp op);  // 2 (tightest, * /) .. 9 (||)

// Read-style accessors usable inside expressions. `value` is the bare read
// (counter value, timestamp, serialized membership filter, count-min min);
// `test` is the membership probe and doubles as the estimate query on
// cardinality sketches.
enum class ReadOp { value, test, min, max, sum, avg, any, all };

const char* read_op_name(ReadOp op);
std::optional<ReadOp> read_op_from(const std::string& name);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression tree over unsigned 64-bit values. Comparisons and logic yield
// 0/1; all arithmetic wraps mod 2^64; `&&`/`||` evaluate both operands.
struct Expr {
  enum class Kind { literal, field, state_read, unary_not, binary, random, max2 };

  Kind kind;
  uint64_t value = 0;     // literal
  std::string name;       // field (canonical) or state variable
  ReadOp read_op = ReadOp::value;
  ExprPtr arg;            // any(v)/all(v) argument
  BinOp op = BinOp::add;  // binary
  ExprPtr lhs, rhs;       // binary & random(lo:hi) & max2; unary_not uses lhs

  static ExprPtr lit(uint64_t v);
  static ExprPtr field(std::string canonical_name);
  static ExprPtr state(std::string var, ReadOp op = ReadOp::value, ExprPtr arg = nullptr);
  static ExprPtr bin(BinOp op, ExprPtr l, ExprPtr r);
  static ExprPtr negate(ExprPtr e);
  static ExprPtr random(ExprPtr lo, ExprPtr hi);
  static ExprPtr max2(ExprPtr a, ExprPtr b);
};

bool expr_equal(const Expr& a, const Expr& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return expr_equal(*a, *b);
}

std::string expr_to_string(const Expr& e);
inline std::string expr_to_string(const ExprPtr& e) { return expr_to_string(*e); }

// True when the expression may draw from the run RNG.
bool expr_uses_random(const Expr& e);

// Structural negation check used by the conflict pass: c1 == !c2 (or the
// comparison-flipped equivalent, e.g. `a == b` vs `a != b`).
bool complementary(const Expr& a, const Expr& b);

}  // namespace mafia
