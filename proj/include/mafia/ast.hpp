#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mafia/errors.hpp"
#include "mafia/expr.hpp"
#include "mafia/keys.hpp"

namespace mafia {

enum class StateKind { counter, timestamp, bloom, sketch, hashmap };
enum class BloomAlg { membership, counting };
enum class SketchAlg { count_min, pcsa, hyperloglog, store };

struct StateDecl {
  std::string name;
  StateKind kind = StateKind::counter;

  uint8_t width = 32;       // counter / counting-bloom cells / sketch cells
  std::string key;          // bloom / sketch / hashmap
  uint32_t nhash = 1;       // bloom / sketch
  uint32_t size = 1;        // bloom bits / sketch columns / hashmap slots
  BloomAlg bloom_alg = BloomAlg::membership;
  SketchAlg sketch_alg = SketchAlg::count_min;
  StateKind inner = StateKind::counter;  // hashmap payload: counter or timestamp
  uint8_t inner_width = 32;

  SourceLoc loc;
};

// One primitive invocation in a composition.
struct PrimCall {
  enum class Op { match, tag, timestamp, duplicate, collect, state_call };

  Op op = Op::match;
  ExprPtr expr;            // match condition / tag value
  std::string field;       // tag target (canonical header name)
  std::string var;         // timestamp target / state_call receiver
  std::string method;      // state_call: set, insert, init, reset, update
  ExprPtr arg;             // set(e) / init(e)
  std::string stream;      // duplicate target
  std::string endpoint;    // collect endpoint (define-resolved)
  SourceLoc loc;
};

struct CompNode {
  enum class Kind { prim, seq, par };

  Kind kind = Kind::prim;
  PrimCall prim;                   // kind == prim
  std::vector<CompNode> children;  // seq / par
};

struct TaskDef {
  std::string stream;
  CompNode root;
};

// One role's worth of a program: its own declarations, window and tasks.
// Single-switch programs have exactly one segment with an empty role name.
struct Segment {
  std::string role;
  std::vector<FlowKeyDef> keys;
  std::vector<StateDecl> decls;
  std::optional<double> window_s;
  std::vector<TaskDef> tasks;

  const FlowKeyDef* find_key(const std::string& name) const;
  const StateDecl* find_decl(const std::string& name) const;
  const TaskDef* find_task(const std::string& stream) const;
};

struct Program {
  std::vector<Segment> segments;

  const Segment* find_segment(const std::string& role) const;
};

std::string print_program(const Program& p);

bool program_equal(const Program& a, const Program& b);
bool comp_equal(const CompNode& a, const CompNode& b);

// Streams fed by duplicate() anywhere under `n`.
void collect_duplicated_streams(const CompNode& n, std::vector<std::string>& out);

}  // namespace mafia
