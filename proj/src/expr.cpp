#include "mafia/expr.hpp"

namespace mafia {

const char* binop_symbol(BinOp op) {
  switch (op) {
    case BinOp::add: return "+";
    case BinOp::sub: return "-";
    case BinOp::mul: return "*";
    case BinOp::div: return "/";
    case BinOp::band: return "&";
    case BinOp::bor: return "|";
    case BinOp::shl: return "<<";
    case BinOp::shr: return ">>";
    case BinOp::eq: return "==";
    case BinOp::ne: return "!=";
    case BinOp::lt: return "<";
    case BinOp::le: return "<=";
    case BinOp::gt: return ">";
    case BinOp::ge: return ">=";
    case BinOp::land: return "&&";
    case BinOp::lor: return "||";
  }
  return "?";
}

// Unlike C, & and | bind tighter than comparisons so that
// `ipv4.tos & 0x1 == 0x1` reads as `(ipv4.tos & 0x1) == 0x1`.
int binop_precedence(BinOp op) {
  switch (op) {
    case BinOp::mul: case BinOp::div: return 2;
    case BinOp::add: case BinOp::sub: return 3;
    case BinOp::shl: case BinOp::shr: return 4;
    case BinOp::band: return 5;
    case BinOp::bor: return 6;
    case BinOp::eq: case BinOp::ne:
    case BinOp::lt: case BinOp::le:
    case BinOp::gt: case BinOp::ge: return 7;
    case BinOp::land: return 8;
    case BinOp::lor: return 9;
  }
  return 9;
}

const char* read_op_name(ReadOp op) {
  switch (op) {
    case ReadOp::value: return "value";
    case ReadOp::test: return "test";
    case ReadOp::min: return "min";
    case ReadOp::max: return "max";
    case ReadOp::sum: return "sum";
    case ReadOp::avg: return "avg";
    case ReadOp::any: return "any";
    case ReadOp::all: return "all";
  }
  return "?";
}

std::optional<ReadOp> read_op_from(const std::string& name) {
  if (name == "value" || name == "read") return ReadOp::value;
  if (name == "test") return ReadOp::test;
  if (name == "min") return ReadOp::min;
  if (name == "max") return ReadOp::max;
  if (name == "sum") return ReadOp::sum;
  if (name == "avg") return ReadOp::avg;
  if (name == "any") return ReadOp::any;
  if (name == "all") return ReadOp::all;
  return std::nullopt;
}

ExprPtr Expr::lit(uint64_t v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::literal;
  e->value = v;
  return e;
}

ExprPtr Expr::field(std::string canonical_name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::field;
  e->name = std::move(canonical_name);
  return e;
}

ExprPtr Expr::state(std::string var, ReadOp op, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::state_read;
  e->name = std::move(var);
  e->read_op = op;
  e->arg = std::move(arg);
  return e;
}

ExprPtr Expr::bin(BinOp op, ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::binary;
  e->op = op;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ExprPtr Expr::negate(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::unary_not;
  e->lhs = std::move(x);
  return e;
}

ExprPtr Expr::random(ExprPtr lo, ExprPtr hi) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::random;
  e->lhs = std::move(lo);
  e->rhs = std::move(hi);
  return e;
}

ExprPtr Expr::max2(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::max2;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::literal:
      return a.value == b.value;
    case Expr::Kind::field:
      return a.name == b.name;
    case Expr::Kind::state_read:
      return a.name == b.name && a.read_op == b.read_op && expr_equal(a.arg, b.arg);
    case Expr::Kind::unary_not:
      return expr_equal(a.lhs, b.lhs);
    case Expr::Kind::binary:
      if (a.op != b.op) return false;
      return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
    case Expr::Kind::random:
    case Expr::Kind::max2:
      return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
  }
  return false;
}

namespace {

// parent_prec: loosest precedence that may be printed without parentheses.
void print(const Expr& e, int parent_prec, bool is_rhs, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::literal:
      out += std::to_string(e.value);
      return;
    case Expr::Kind::field:
      out += e.name;
      return;
    case Expr::Kind::state_read:
      out += e.name;
      if (e.read_op != ReadOp::value) {
        out += ".";
        out += read_op_name(e.read_op);
        out += "(";
        if (e.arg) print(*e.arg, 9, false, out);
        out += ")";
      }
      return;
    case Expr::Kind::unary_not:
      out += "!";
      print(*e.lhs, 1, false, out);
      return;
    case Expr::Kind::random:
      out += "random(";
      print(*e.lhs, 9, false, out);
      out += ":";
      print(*e.rhs, 9, false, out);
      out += ")";
      return;
    case Expr::Kind::max2:
      out += "max(";
      print(*e.lhs, 9, false, out);
      out += ", ";
      print(*e.rhs, 9, false, out);
      out += ")";
      return;
    case Expr::Kind::binary: {
      int prec = binop_precedence(e.op);
      bool parens = prec > parent_prec || (prec == parent_prec && is_rhs);
      if (parens) out += "(";
      print(*e.lhs, prec, false, out);
      out += " ";
      out += binop_symbol(e.op);
      out += " ";
      print(*e.rhs, prec, true, out);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string expr_to_string(const Expr& e) {
  std::string out;
  print(e, 9, false, out);
  return out;
}

bool expr_uses_random(const Expr& e) {
  if (e.kind == Expr::Kind::random) return true;
  if (e.arg && expr_uses_random(*e.arg)) return true;
  if (e.lhs && expr_uses_random(*e.lhs)) return true;
  if (e.rhs && expr_uses_random(*e.rhs)) return true;
  return false;
}

namespace {

std::optional<BinOp> flipped(BinOp op) {
  switch (op) {
    case BinOp::eq: return BinOp::ne;
    case BinOp::ne: return BinOp::eq;
    case BinOp::lt: return BinOp::ge;
    case BinOp::ge: return BinOp::lt;
    case BinOp::gt: return BinOp::le;
    case BinOp::le: return BinOp::gt;
    default: return std::nullopt;
  }
}

bool is_negation_of(const Expr& a, const Expr& b) {
  if (a.kind == Expr::Kind::unary_not) return expr_equal(*a.lhs, b);
  if (a.kind == Expr::Kind::binary && b.kind == Expr::Kind::binary) {
    auto f = flipped(a.op);
    if (f && *f == b.op) return expr_equal(a.lhs, b.lhs) && expr_equal(a.rhs, b.rhs);
  }
  return false;
}

}  // namespace

bool complementary(const Expr& a, const Expr& b) {
  return is_negation_of(a, b) || is_negation_of(b, a);
}

}  // namespace mafia
