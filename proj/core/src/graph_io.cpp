#include "tsde/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace tsde {

std::string render_graph(const ColouredGraph& g) {
  std::ostringstream os;
  os << "g{D=" << g.rank << ",k=" << g.k << "}[";
  for (int c = 0; c < g.rank; ++c) {
    if (c) os << '|';
    for (int i = 0; i < g.k; ++i) {
      if (i) os << ',';
      os << g.tau[c](i) + 1;
    }
  }
  os << ']';
  return os.str();
}

std::string render_graph(const DisconnectedGraph& g) {
  if (g.components.empty()) return "g{D=" + std::to_string(g.rank) + ",k=0}[]";
  std::string out;
  for (size_t i = 0; i < g.components.size(); ++i) {
    if (i) out += '+';
    out += render_graph(g.components[i]);
  }
  return out;
}

std::string class_string(const ColouredGraph& g) { return render_graph(canonical_form(g)); }

std::string class_string(const DisconnectedGraph& g) {
  return render_graph(canonical_form(g));
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long read_int() {
    size_t start = pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) throw parse_error("expected integer", pos);
    return std::stol(s.substr(start, pos - start));
  }
  void expect_literal(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0)
      throw parse_error("expected '" + lit + "'", pos);
    pos += lit.size();
  }
};

ColouredGraph parse_component(Cursor& cur) {
  cur.expect_literal("g{D=");
  const long D = cur.read_int();
  cur.expect_literal(",k=");
  const long k = cur.read_int();
  cur.expect('}');
  cur.expect('[');
  if (D < 1) throw parse_error("rank must be >= 1", cur.pos);
  std::vector<Perm> taus;
  for (long c = 0; c < D; ++c) {
    if (c && k > 0) cur.expect('|');
    if (c && k == 0) cur.accept('|');
    Perm p;
    for (long i = 0; i < k; ++i) {
      if (i) cur.expect(',');
      const size_t at = cur.pos;
      const long v = cur.read_int();
      if (v < 1 || v > k) throw parse_error("image out of range 1..k", at);
      p.img.push_back(static_cast<int>(v - 1));
    }
    if (!p.is_bijection())
      throw parse_error("colour row is not a bijection", cur.pos);
    taus.push_back(std::move(p));
  }
  cur.expect(']');
  return k == 0 ? ColouredGraph::empty(static_cast<int>(D))
                : ColouredGraph(static_cast<int>(D), std::move(taus));
}

}  // namespace

DisconnectedGraph parse_graph(const std::string& text) {
  Cursor cur{text};
  std::vector<ColouredGraph> comps;
  comps.push_back(parse_component(cur));
  while (cur.accept('+')) comps.push_back(parse_component(cur));
  if (cur.pos != text.size()) throw parse_error("trailing input", cur.pos);
  const int D = comps[0].rank;
  for (const auto& c : comps)
    if (c.rank != D) throw parse_error("components have mixed ranks", cur.pos);
  std::vector<ColouredGraph> nonempty;
  for (auto& c : comps)
    if (!c.is_empty()) nonempty.push_back(std::move(c));
  return DisconnectedGraph(D, std::move(nonempty));
}

ColouredGraph parse_connected_graph(const std::string& text) {
  DisconnectedGraph g = parse_graph(text);
  if (g.components.size() > 1) throw error("expected a single component");
  if (g.components.empty()) return ColouredGraph::empty(g.rank);
  return g.components[0];
}

}  // namespace tsde
