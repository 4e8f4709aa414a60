#include "vgraph/instance.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "vgraph/error.hpp"

namespace vgraph {

int Instance::edge_index(const std::string& name) const {
  const auto it = std::find(edge_names.begin(), edge_names.end(), name);
  return it == edge_names.end() ? -1 : static_cast<int>(it - edge_names.begin());
}

Instance make_instance(VoltageEmbedding ve) {
  std::vector<std::string> names;
  for (int e = 0; e < ve.base().edge_count(); ++e) names.push_back("e" + std::to_string(e));
  return Instance{std::move(ve), std::move(names), {}, {}};
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

std::optional<int> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  return value;
}

// Token stream over the group declaration, which may continue onto the
// following lines for table rows.
class TokenCursor {
 public:
  TokenCursor(const std::vector<Line>& lines, size_t line, size_t token) : lines_(lines), line_(line), token_(token) {}

  std::string next(const char* what) {
    while (line_ < lines_.size() && token_ >= lines_[line_].tokens.size()) {
      ++line_;
      token_ = 0;
    }
    if (line_ >= lines_.size()) fail(lines_.empty() ? 0 : lines_.back().number, std::string("expected ") + what);
    return lines_[line_].tokens[token_++];
  }
  int next_int(const char* what) {
    const int here = current_line();
    const std::string t = next(what);
    const auto v = to_int(t);
    if (!v) fail(here, std::string("expected ") + what + ", got '" + t + "'");
    return *v;
  }
  int current_line() const { return line_ < lines_.size() ? lines_[line_].number : 0; }
  // Index of the first line not consumed (a partially consumed line counts as consumed).
  size_t resume_line() const { return token_ == 0 ? line_ : line_ + 1; }

 private:
  const std::vector<Line>& lines_;
  size_t line_;
  size_t token_;
};

GroupPtr parse_group(TokenCursor& cur) {
  const int here = cur.current_line();
  const std::string kind = cur.next("group kind");
  if (kind == "cyclic") {
    const int n = cur.next_int("cyclic order");
    if (n < 1) fail(here, "cyclic group order must be positive");
    return make_cyclic(n);
  }
  if (kind == "product") {
    GroupPtr a = parse_group(cur);
    GroupPtr b = parse_group(cur);
    return direct_product(a, b);
  }
  if (kind == "table") {
    const int n = cur.next_int("table order");
    if (n < 1 || n > kDefaultGroupOrderCap) fail(here, "table order out of range");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (auto& row : rows)
      for (int& x : row) x = cur.next_int("table entry");
    try {
      return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows));
    } catch (const ValidationError& e) {
      fail(here, e.what());
    }
  }
  fail(here, "unknown group kind '" + kind + "'");
}

std::string strip_colon(const Line& l, size_t index) {
  if (l.tokens.size() <= index) fail(l.number, "missing name");
  std::string s = l.tokens[index];
  if (s.empty() || s.back() != ':') fail(l.number, "expected ':' after '" + s + "'");
  s.pop_back();
  return s;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream ls(raw);
      Line l{number, {}};
      for (std::string t; ls >> t;) l.tokens.push_back(t);
      if (!l.tokens.empty()) lines.push_back(std::move(l));
    }
  }

  GroupPtr group;
  int vertex_count = -1;
  struct EdgeDecl {
    int line;
    std::string name;
    int tail, head, sign;
    Element voltage;
  };
  std::vector<EdgeDecl> edges;
  std::map<std::string, int> edge_by_name;
  std::map<int, std::pair<int, std::vector<std::string>>> rotation_decls;
  std::vector<std::pair<int, std::pair<std::string, std::vector<std::string>>>> circle_decls, face_decls;

  for (size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "group") {
      if (group) fail(l.number, "duplicate group declaration");
      TokenCursor cur(lines, i, 1);
      group = parse_group(cur);
      i = cur.resume_line() - 1;
    } else if (key == "vertices") {
      if (vertex_count >= 0) fail(l.number, "duplicate vertices declaration");
      if (l.tokens.size() != 2) fail(l.number, "expected 'vertices <n>'");
      const auto n = to_int(l.tokens[1]);
      if (!n || *n < 1) fail(l.number, "vertex count must be a positive integer");
      vertex_count = *n;
    } else if (key == "edge") {
      if (!group) fail(l.number, "edge declared before the group");
      if (vertex_count < 0) fail(l.number, "edge declared before vertices");
      if (l.tokens.size() < 6 || l.tokens.size() > 7)
        fail(l.number, "expected 'edge <name> <tail> <head> sign=<+|-> voltage=<element>'");
      EdgeDecl d{l.number, l.tokens[1], 0, 0, 1, 0};
      if (edge_by_name.count(d.name)) fail(l.number, "duplicate edge name '" + d.name + "'");
      const auto t = to_int(l.tokens[2]), h = to_int(l.tokens[3]);
      if (!t || !h || *t < 0 || *h < 0 || *t >= vertex_count || *h >= vertex_count)
        fail(l.number, "edge endpoint out of range");
      d.tail = *t;
      d.head = *h;
      std::optional<Element> inverse;
      bool have_sign = false, have_voltage = false;
      for (size_t k = 4; k < l.tokens.size(); ++k) {
        const std::string& tok = l.tokens[k];
        if (tok.rfind("sign=", 0) == 0) {
          const std::string s = tok.substr(5);
          if (s != "+" && s != "-") fail(l.number, "sign must be + or -");
          d.sign = s == "+" ? 1 : -1;
          have_sign = true;
        } else if (tok.rfind("voltage=", 0) == 0) {
          const auto x = group->parse_element(tok.substr(8));
          if (!x) fail(l.number, "unknown group element '" + tok.substr(8) + "'");
          d.voltage = *x;
          have_voltage = true;
        } else if (tok.rfind("inverse=", 0) == 0) {
          const auto x = group->parse_element(tok.substr(8));
          if (!x) fail(l.number, "unknown group element '" + tok.substr(8) + "'");
          inverse = *x;
        } else {
          fail(l.number, "unexpected token '" + tok + "'");
        }
      }
      if (!have_sign || !have_voltage) fail(l.number, "edge needs sign= and voltage=");
      if (inverse && group->mul(d.voltage, *inverse) != group->identity())
        fail(l.number, "voltage of " + d.name + "- is not the inverse of the voltage of " + d.name + "+");
      edge_by_name[d.name] = static_cast<int>(edges.size());
      edges.push_back(d);
    } else if (key == "rotation") {
      const auto v = to_int(strip_colon(l, 1));
      if (!v || vertex_count < 0 || *v < 0 || *v >= vertex_count) fail(l.number, "rotation vertex out of range");
      if (rotation_decls.count(*v)) fail(l.number, "duplicate rotation for vertex " + std::to_string(*v));
      rotation_decls[*v] = {l.number, {l.tokens.begin() + 2, l.tokens.end()}};
    } else if (key == "circle" || key == "faces") {
      const std::string name = strip_colon(l, 1);
      auto& target = key == "circle" ? circle_decls : face_decls;
      target.push_back({l.number, {name, {l.tokens.begin() + 2, l.tokens.end()}}});
    } else {
      fail(l.number, "unknown declaration '" + key + "'");
    }
  }
  if (!group) throw ValidationError("missing group declaration");
  if (vertex_count < 0) throw ValidationError("missing vertices declaration");

  const int ne = static_cast<int>(edges.size());
  std::vector<EdgeEnds> ends;
  std::vector<int> signs;
  std::vector<Element> voltages;
  std::vector<std::string> names;
  for (const auto& d : edges) {
    ends.push_back({d.tail, d.head});
    signs.push_back(d.sign);
    voltages.push_back(d.voltage);
    names.push_back(d.name);
  }
  std::vector<std::vector<Dart>> rotation(vertex_count);
  std::vector<int> dart_line(2 * ne, 0);
  for (const auto& [v, decl] : rotation_decls) {
    const int line = decl.first;
    for (const std::string& tok : decl.second) {
      if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
        fail(line, "dart '" + tok + "' must end in + or -");
      const std::string name = tok.substr(0, tok.size() - 1);
      const auto it = edge_by_name.find(name);
      if (it == edge_by_name.end()) fail(line, "unknown edge '" + name + "'");
      const Dart d = tok.back() == '+' ? positive_dart(it->second) : negative_dart(it->second);
      if (dart_line[d]) fail(line, "dart '" + tok + "' already listed on line " + std::to_string(dart_line[d]));
      dart_line[d] = line;
      const int tail = tok.back() == '+' ? ends[it->second].tail : ends[it->second].head;
      if (tail != v)
        fail(line, "dart '" + tok + "' leaves vertex " + std::to_string(tail) + ", not " + std::to_string(v));
      rotation[v].push_back(d);
    }
  }
  for (Dart d = 0; d < 2 * ne; ++d)
    if (!dart_line[d])
      fail(edges[edge_of(d)].line,
           "dart '" + names[edge_of(d)] + (is_positive(d) ? "+" : "-") + "' is missing from the rotations");

  Instance inst = make_instance(
      VoltageEmbedding::from_edge_voltages(EmbeddedGraph(vertex_count, ends, signs, rotation), group, voltages));
  inst.edge_names = names;
  validate(inst.embedding);
  for (const auto& [line, decl] : circle_decls) {
    NamedCircle c{decl.first, {}};
    for (const std::string& tok : decl.second) {
      const auto it = edge_by_name.find(tok);
      if (it == edge_by_name.end()) fail(line, "unknown edge '" + tok + "'");
      c.edges.push_back(it->second);
    }
    std::sort(c.edges.begin(), c.edges.end());
    try {
      instance_circle(inst, c);
    } catch (const ValidationError& e) {
      fail(line, e.what());
    }
    inst.circles.push_back(std::move(c));
  }
  const int nf = trace_faces(inst.embedding.base()).face_count();
  for (const auto& [line, decl] : face_decls) {
    NamedFaces f{decl.first, {}};
    for (const std::string& tok : decl.second) {
      const auto x = to_int(tok);
      if (!x || *x < 0 || *x >= nf) fail(line, "face index '" + tok + "' out of range");
      f.faces.push_back(*x);
    }
    std::sort(f.faces.begin(), f.faces.end());
    f.faces.erase(std::unique(f.faces.begin(), f.faces.end()), f.faces.end());
    inst.face_chains.push_back(std::move(f));
  }
  return inst;
}

std::string print_instance(const Instance& inst) {
  const VoltageEmbedding& ve = inst.embedding;
  const EmbeddedGraph& g = ve.base();
  std::ostringstream out;
  out << "group " << ve.group().literal() << "\n";
  out << "vertices " << g.vertex_count() << "\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << "edge " << inst.edge_names[e] << " " << g.edge(e).tail << " " << g.edge(e).head
        << " sign=" << (g.sign(e) > 0 ? "+" : "-") << " voltage=" << ve.group().name(ve.voltage(positive_dart(e)))
        << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "rotation " << v << ":";
    for (Dart d : g.rotation(v)) out << " " << inst.edge_names[edge_of(d)] << (is_positive(d) ? "+" : "-");
    out << "\n";
  }
  for (const auto& c : inst.circles) {
    out << "circle " << c.name << ":";
    for (int e : c.edges) out << " " << inst.edge_names[e];
    out << "\n";
  }
  for (const auto& f : inst.face_chains) {
    out << "faces " << f.name << ":";
    for (int x : f.faces) out << " " << x;
    out << "\n";
  }
  return out.str();
}

Circle instance_circle(const Instance& inst, const NamedCircle& c) {
  const EmbeddedGraph& g = inst.embedding.base();
  if (c.edges.empty()) throw ValidationError("circle '" + c.name + "' has no edges");
  int base = g.vertex_count();
  for (int e : c.edges) base = std::min({base, g.edge(e).tail, g.edge(e).head});
  return circle_from_edges(g, c.edges, base);
}

std::vector<int> parse_edge_list(const Instance& inst, std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> out;
  for (std::string tok; in >> tok;) {
    int e = inst.edge_index(tok);
    if (e < 0) {
      const auto x = to_int(tok);
      if (!x || *x < 0 || *x >= inst.embedding.base().edge_count())
        throw ValidationError("unknown edge '" + tok + "'");
      e = *x;
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"sphere-theta",
       "group cyclic 3\n"
       "vertices 2\n"
       "edge a 0 1 sign=+ voltage=0\n"
       "edge b 0 1 sign=+ voltage=1\n"
       "edge c 0 1 sign=+ voltage=2\n"
       "rotation 0: a+ b+ c+\n"
       "rotation 1: a- c- b-\n"
       "circle ab: a b\n"},
      {"projective-loop",
       "group cyclic 2\n"
       "vertices 1\n"
       "edge a 0 0 sign=- voltage=1\n"
       "rotation 0: a+ a-\n"
       "circle a: a\n"},
      {"torus-bouquet",
       "group cyclic 4\n"
       "vertices 1\n"
       "edge a 0 0 sign=+ voltage=1\n"
       "edge b 0 0 sign=+ voltage=2\n"
       "rotation 0: a+ b+ a- b-\n"
       "circle a: a\n"},
      {"klein-bouquet",
       "group product cyclic 2 cyclic 2\n"
       "vertices 1\n"
       "edge a 0 0 sign=- voltage=1,0\n"
       "edge b 0 0 sign=- voltage=0,1\n"
       "rotation 0: a+ a- b+ b-\n"
       "circle a: a\n"},
  };
  return entries;
}

Instance catalog_instance(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return parse_instance(e.text);
  throw ValidationError("unknown catalog entry '" + name + "'");
}

}  // namespace vgraph
