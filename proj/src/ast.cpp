#include "mafia/ast.hpp"

#include <sstream>

namespace mafia {

const FlowKeyDef* Segment::find_key(const std::string& name) const {
  for (const auto& k : keys)
    if (k.name == name) return &k;
  return nullptr;
}

const StateDecl* Segment::find_decl(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

const TaskDef* Segment::find_task(const std::string& stream) const {
  for (const auto& t : tasks)
    if (t.stream == stream) return &t;
  return nullptr;
}

const Segment* Program::find_segment(const std::string& role) const {
  for (const auto& s : segments)
    if (s.role == role) return &s;
  return nullptr;
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const char* bloom_alg_name(BloomAlg a) {
  return a == BloomAlg::membership ? "membership" : "counting";
}

const char* sketch_alg_name(SketchAlg a) {
  switch (a) {
    case SketchAlg::count_min: return "count-min";
    case SketchAlg::pcsa: return "pcsa";
    case SketchAlg::hyperloglog: return "hyperloglog";
    case SketchAlg::store: return "store";
  }
  return "?";
}

void print_decl(const StateDecl& d, std::string& out) {
  out += d.name;
  out += " = ";
  switch (d.kind) {
    case StateKind::counter:
      out += "Counter(width=" + std::to_string(d.width) + ")";
      break;
    case StateKind::timestamp:
      out += "Timestamp()";
      break;
    case StateKind::bloom:
      out += "BloomFilter(alg=\"";
      out += bloom_alg_name(d.bloom_alg);
      out += "\", key=" + d.key + ", nhash=" + std::to_string(d.nhash) +
             ", size=" + std::to_string(d.size);
      if (d.bloom_alg == BloomAlg::counting) out += ", width=" + std::to_string(d.width);
      out += ")";
      break;
    case StateKind::sketch:
      out += "Sketch(alg=\"";
      out += sketch_alg_name(d.sketch_alg);
      out += "\", key=" + d.key + ", nhash=" + std::to_string(d.nhash) +
             ", size=" + std::to_string(d.size);
      if (d.sketch_alg == SketchAlg::count_min || d.sketch_alg == SketchAlg::store)
        out += ", width=" + std::to_string(d.width);
      out += ")";
      break;
    case StateKind::hashmap:
      out += "HashMap(key=" + d.key + ", size=" + std::to_string(d.size) + ", type=";
      if (d.inner == StateKind::counter)
        out += "Counter(width=" + std::to_string(d.inner_width) + ")";
      else
        out += "Timestamp()";
      out += ")";
      break;
  }
  out += "\n";
}

void print_prim(const PrimCall& p, std::string& out) {
  switch (p.op) {
    case PrimCall::Op::match:
      out += "match(" + expr_to_string(p.expr) + ")";
      break;
    case PrimCall::Op::tag:
      out += "tag(" + p.field + ", " + expr_to_string(p.expr) + ")";
      break;
    case PrimCall::Op::timestamp:
      out += "timestamp(" + p.var + ")";
      break;
    case PrimCall::Op::duplicate:
      out += "duplicate(" + p.stream + ")";
      break;
    case PrimCall::Op::collect:
      out += "collect(\"" + p.endpoint + "\")";
      break;
    case PrimCall::Op::state_call:
      out += p.var + "." + p.method + "(";
      if (p.arg) out += expr_to_string(p.arg);
      out += ")";
      break;
  }
}

void print_node(const CompNode& n, std::string& out) {
  switch (n.kind) {
    case CompNode::Kind::prim:
      print_prim(n.prim, out);
      break;
    case CompNode::Kind::seq: {
      bool first = true;
      for (const auto& c : n.children) {
        if (!first) out += " >> ";
        first = false;
        if (c.kind == CompNode::Kind::prim) {
          print_node(c, out);
        } else {
          out += "(";
          print_node(c, out);
          out += ")";
        }
      }
      break;
    }
    case CompNode::Kind::par: {
      bool first = true;
      for (const auto& c : n.children) {
        if (!first) out += " + ";
        first = false;
        out += "(";
        print_node(c, out);
        out += ")";
      }
      break;
    }
  }
}

void print_segment(const Segment& s, std::string& out) {
  for (const auto& k : s.keys) {
    out += k.name + " = Key(";
    bool first = true;
    for (const auto& f : k.fields) {
      if (!first) out += ", ";
      first = false;
      out += f;
    }
    out += ")\n";
  }
  for (const auto& d : s.decls) print_decl(d, out);
  if (s.window_s) out += "window(" + format_double(*s.window_s) + ")\n";
  for (const auto& t : s.tasks) {
    out += t.stream + " >> ";
    if (t.root.kind == CompNode::Kind::par) out += "(";
    print_node(t.root, out);
    if (t.root.kind == CompNode::Kind::par) out += ")";
    out += "\n";
  }
}

}  // namespace

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& s : p.segments) {
    if (!s.role.empty()) {
      out += "@role(\"" + s.role + "\") {\n";
      print_segment(s, out);
      out += "}\n";
    } else {
      print_segment(s, out);
    }
  }
  return out;
}

namespace {

bool prim_equal(const PrimCall& a, const PrimCall& b) {
  if (a.op != b.op) return false;
  return expr_equal(a.expr, b.expr) && a.field == b.field && a.var == b.var &&
         a.method == b.method && expr_equal(a.arg, b.arg) && a.stream == b.stream &&
         a.endpoint == b.endpoint;
}

bool decl_equal(const StateDecl& a, const StateDecl& b) {
  return a.name == b.name && a.kind == b.kind && a.width == b.width && a.key == b.key &&
         a.nhash == b.nhash && a.size == b.size && a.bloom_alg == b.bloom_alg &&
         a.sketch_alg == b.sketch_alg && a.inner == b.inner && a.inner_width == b.inner_width;
}

}  // namespace

bool comp_equal(const CompNode& a, const CompNode& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == CompNode::Kind::prim) return prim_equal(a.prim, b.prim);
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!comp_equal(a.children[i], b.children[i])) return false;
  return true;
}

bool program_equal(const Program& a, const Program& b) {
  if (a.segments.size() != b.segments.size()) return false;
  for (size_t i = 0; i < a.segments.size(); ++i) {
    const auto& x = a.segments[i];
    const auto& y = b.segments[i];
    if (x.role != y.role) return false;
    if (x.keys.size() != y.keys.size() || x.decls.size() != y.decls.size() ||
        x.tasks.size() != y.tasks.size())
      return false;
    for (size_t k = 0; k < x.keys.size(); ++k)
      if (x.keys[k].name != y.keys[k].name || x.keys[k].fields != y.keys[k].fields)
        return false;
    for (size_t k = 0; k < x.decls.size(); ++k)
      if (!decl_equal(x.decls[k], y.decls[k])) return false;
    if (x.window_s.has_value() != y.window_s.has_value()) return false;
    if (x.window_s && *x.window_s != *y.window_s) return false;
    for (size_t k = 0; k < x.tasks.size(); ++k) {
      if (x.tasks[k].stream != y.tasks[k].stream) return false;
      if (!comp_equal(x.tasks[k].root, y.tasks[k].root)) return false;
    }
  }
  return true;
}

void collect_duplicated_streams(const CompNode& n, std::vector<std::string>& out) {
  if (n.kind == CompNode::Kind::prim) {
    if (n.prim.op == PrimCall::Op::duplicate) out.push_back(n.prim.stream);
    return;
  }
  for (const auto& c : n.children) collect_duplicated_streams(c, out);
}

}  // namespace mafia
