#include "mafia/eval.hpp"

#include "mafia/errors.hpp"

namespace mafia {

namespace {

uint64_t apply_bin(BinOp op, uint64_t a, uint64_t b) {
  switch (op) {
    case BinOp::add: return a + b;
    case BinOp::sub: return a - b;
    case BinOp::mul: return a * b;
    case BinOp::div:
      if (b == 0) throw Error(Errc::division_by_zero, "in expression");
      return a / b;
    case BinOp::band: return a & b;
    case BinOp::bor: return a | b;
    // Shift counts of 64 or more yield 0 rather than tripping UB.
    case BinOp::shl: return b >= 64 ? 0 : a << b;
    case BinOp::shr: return b >= 64 ? 0 : a >> b;
    case BinOp::eq: return a == b ? 1 : 0;
    case BinOp::ne: return a != b ? 1 : 0;
    case BinOp::lt: return a < b ? 1 : 0;
    case BinOp::le: return a <= b ? 1 : 0;
    case BinOp::gt: return a > b ? 1 : 0;
    case BinOp::ge: return a >= b ? 1 : 0;
    case BinOp::land: return (a != 0 && b != 0) ? 1 : 0;
    case BinOp::lor: return (a != 0 || b != 0) ? 1 : 0;
  }
  throw Error(Errc::runtime, "bad binary op");
}

}  // namespace

uint64_t eval_expr(const Expr& e, EvalCtx& ctx) {
  switch (e.kind) {
    case Expr::Kind::literal:
      return e.value;
    case Expr::Kind::field: {
      auto v = ctx.pkt.field(ctx.schema.canonical(e.name));
      if (!v) throw Error(Errc::unknown_field, e.name);
      return *v;
    }
    case Expr::Kind::state_read: {
      if (ctx.self_var && e.read_op == ReadOp::value && e.name == *ctx.self_var) {
        return ctx.self_value;
      }
      if (!ctx.state) throw Error(Errc::unknown_state, e.name);
      std::optional<uint64_t> arg;
      if (e.arg) arg = eval_expr(*e.arg, ctx);
      return ctx.state->read_state(e.name, e.read_op, arg, ctx.pkt);
    }
    case Expr::Kind::unary_not:
      return eval_expr(*e.lhs, ctx) == 0 ? 1 : 0;
    case Expr::Kind::binary: {
      // Both operands are always evaluated; && and || do not short-circuit.
      uint64_t a = eval_expr(*e.lhs, ctx);
      uint64_t b = eval_expr(*e.rhs, ctx);
      return apply_bin(e.op, a, b);
    }
    case Expr::Kind::random: {
      uint64_t lo = eval_expr(*e.lhs, ctx);
      uint64_t hi = eval_expr(*e.rhs, ctx);
      if (!ctx.rng) throw Error(Errc::runtime, "random() with no generator bound");
      return ctx.rng->uniform(lo, hi);
    }
    case Expr::Kind::max2: {
      uint64_t a = eval_expr(*e.lhs, ctx);
      uint64_t b = eval_expr(*e.rhs, ctx);
      return a > b ? a : b;
    }
  }
  throw Error(Errc::runtime, "bad expression node");
}

}  // namespace mafia
