#include "tsde/open_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tsde/graph_io.hpp"

namespace tsde {

ModelVertexSet ModelVertexSet::melonic_quartic(int D) {
  ModelVertexSet m;
  m.rank = D;
  for (int a = 0; a < D; ++a) m.vertices.push_back(ColouredGraph::quartic_vertex(D, a));
  return m;
}

ModelVertexSet ModelVertexSet::simple_v1(int D) {
  ModelVertexSet m;
  m.rank = D;
  m.vertices.push_back(ColouredGraph::quartic_vertex(D, 0));
  return m;
}

std::vector<int> OpenGraph::white_source_labels() const {
  std::vector<int> out;
  for (int l = 0; l < legs; ++l)
    if (ext_is_white_source[l]) out.push_back(l);
  return out;
}

std::vector<int> OpenGraph::black_source_labels() const {
  std::vector<int> out;
  for (int l = 0; l < legs; ++l)
    if (!ext_is_white_source[l]) out.push_back(l);
  return out;
}

void OpenGraph::validate() const {
  if (static_cast<int>(tau.size()) != rank) throw error("OpenGraph: missing colour rows");
  for (const Perm& p : tau)
    if (p.size() != n || !p.is_bijection())
      throw error("OpenGraph: internal colours must be permutations");
  if (legs % 2 != 0) throw error("OpenGraph: odd number of external slots");
  if (static_cast<int>(ext_is_white_source.size()) != legs)
    throw error("OpenGraph: external slot types missing");
  const auto ws = white_source_labels();
  const auto bs = black_source_labels();
  if (ws.size() != bs.size())
    throw error("OpenGraph: white- and black-type sources must be equinumerous");
  if (static_cast<int>(zero_of_int_white.size()) != n ||
      zero_of_white_source.size() != ws.size())
    throw error("OpenGraph: incomplete colour-0 matching");

  // the B-side of the matching must be hit exactly once per element
  std::vector<int> hit_black(n, 0);
  std::map<int, int> hit_ext;
  auto touch = [&](const End& e) {
    if (e.kind == EndKind::IntBlack) {
      if (e.index < 0 || e.index >= n) throw error("OpenGraph: black index out of range");
      ++hit_black[e.index];
    } else if (e.kind == EndKind::Ext) {
      if (e.index < 0 || e.index >= legs || ext_is_white_source[e.index])
        throw error("OpenGraph: colour-0 edge must end on a black-type slot");
      ++hit_ext[e.index];
    } else {
      throw error("OpenGraph: colour-0 edge from white side must end on black side");
    }
  };
  for (const End& e : zero_of_int_white) touch(e);
  for (const End& e : zero_of_white_source) touch(e);
  for (int b = 0; b < n; ++b)
    if (hit_black[b] != 1) throw error("OpenGraph: internal black not matched exactly once");
  for (int l : bs)
    if (hit_ext[l] != 1) throw error("OpenGraph: external slot not matched exactly once");
}

DisconnectedGraph boundary(const OpenGraph& g) {
  g.validate();
  const auto ws = g.white_source_labels();
  const auto bs = g.black_source_labels();
  const int m = static_cast<int>(ws.size());
  if (m == 0) return DisconnectedGraph(g.rank, {});

  std::map<int, int> black_slot;  // ext label -> boundary black index
  for (int i = 0; i < m; ++i) black_slot[bs[i]] = i;

  std::vector<Perm> taus(g.rank, Perm::identity(m));
  for (int wi = 0; wi < m; ++wi) {
    for (int a = 0; a < g.rank; ++a) {
      OpenGraph::End cur = g.zero_of_white_source[wi];
      int guard = 0;
      while (cur.kind == OpenGraph::EndKind::IntBlack) {
        if (++guard > 4 * g.n + 4) throw error("boundary: 0a-path failed to terminate");
        const int w = g.tau[a].inverse()(cur.index);
        cur = g.zero_of_int_white[w];
      }
      taus[a].img[wi] = black_slot.at(cur.index);
    }
  }
  return split_components(ColouredGraph(g.rank, std::move(taus)));
}

bool is_feynman(const OpenGraph& g, const ModelVertexSet& model) {
  g.validate();
  if (g.n == 0) return true;
  const DisconnectedGraph comps = split_components(ColouredGraph(g.rank, g.tau));
  for (const ColouredGraph& comp : comps.components) {
    bool found = false;
    for (const ColouredGraph& v : model.vertices)
      if (is_isomorphic(comp, v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

namespace {

bool model_has(const ModelVertexSet& model, const ColouredGraph& v) {
  for (const ColouredGraph& w : model.vertices)
    if (is_isomorphic(v, w)) return true;
  return false;
}

// Minimal witness for one quartic vertex class: the vertex with one leg on
// each of its four vertices.
OpenGraph quartic_tree_witness(int D, int colour_a) {
  OpenGraph g;
  g.rank = D;
  g.n = 2;
  const ColouredGraph v = ColouredGraph::quartic_vertex(D, colour_a);
  g.tau = v.tau;
  g.legs = 4;
  // labels: 0,1 white sources; 2,3 black sources
  g.ext_is_white_source = {true, true, false, false};
  g.zero_of_white_source = {{OpenGraph::EndKind::IntBlack, 0}, {OpenGraph::EndKind::IntBlack, 1}};
  g.zero_of_int_white = {{OpenGraph::EndKind::Ext, 2}, {OpenGraph::EndKind::Ext, 3}};
  return g;
}

// Chain construction: V_1-caps realize [id, s, s, ..., s]; for rank 3 a
// residual colour-3 permutation is applied with in-line V_2 gadgets.
std::optional<OpenGraph> chain_witness(const ColouredGraph& B, const ModelVertexSet& model) {
  const int D = B.rank;
  const int k = B.k;
  // gauge the component so the colour-1 row is the identity
  std::vector<Perm> t(D);
  const Perm t0inv = B.tau[0].inverse();
  for (int c = 0; c < D; ++c) t[c] = compose(t0inv, B.tau[c]);

  const Perm sigma = t[1];
  std::vector<Perm> residual(D);  // u_c = sigma^-1 * t_c, wanted id for c >= 2
  for (int c = 2; c < D; ++c) residual[c] = compose(sigma.inverse(), t[c]);
  bool needs_gadgets = false;
  for (int c = 2; c < D; ++c)
    if (!residual[c].is_identity()) needs_gadgets = true;
  if (needs_gadgets && D != 3) return std::nullopt;
  if (!model_has(model, ColouredGraph::quartic_vertex(D, 0))) return std::nullopt;
  if (needs_gadgets && !model_has(model, ColouredGraph::quartic_vertex(D, 1)))
    return std::nullopt;

  OpenGraph g;
  g.rank = D;
  g.legs = 2 * k;
  g.ext_is_white_source.assign(2 * k, false);
  for (int j = 0; j < k; ++j) g.ext_is_white_source[j] = true;

  // caps: vertex j owns whites {2j, 2j+1} and blacks {2j, 2j+1};
  // V_1 structure: colour 1 straight, the rest crossed
  auto add_vertex = [&](int straight_colour) {
    const int base = g.n;
    g.n += 2;
    for (int c = 0; c < D; ++c) {
      g.tau[c].img.push_back(0);
      g.tau[c].img.push_back(0);
      if (c == straight_colour) {
        g.tau[c].img[base] = base;
        g.tau[c].img[base + 1] = base + 1;
      } else {
        g.tau[c].img[base] = base + 1;
        g.tau[c].img[base + 1] = base;
      }
    }
    return base;
  };
  g.tau.assign(D, Perm{});
  g.zero_of_int_white.clear();
  g.zero_of_white_source.clear();

  std::vector<int> cap(k);
  for (int j = 0; j < k; ++j) cap[j] = add_vertex(0);
  g.zero_of_int_white.assign(g.n, OpenGraph::End{OpenGraph::EndKind::IntBlack, -1});
  for (int j = 0; j < k; ++j) {
    // white source j -> b1 of cap j; w1 of cap j -> black source k + j
    g.zero_of_white_source.push_back({OpenGraph::EndKind::IntBlack, cap[j]});
    g.zero_of_int_white[cap[j]] = {OpenGraph::EndKind::Ext, k + j};
  }

  // current W-side tail of each link strand
  std::vector<int> tail(k);
  for (int j = 0; j < k; ++j) tail[j] = cap[j] + 1;

  if (needs_gadgets) {
    // decompose residual[2] into transpositions applied left to right
    Perm u = residual[2];
    std::vector<std::pair<int, int>> swaps;
    for (int i = 0; i < k; ++i) {
      while (u.img[i] != i) {
        const int j = u.img[i];
        swaps.push_back({i, j});
        std::swap(u.img[i], u.img[j]);
      }
    }
    for (auto [i, j] : swaps) {
      const int gd = add_vertex(1);  // V_2 gadget: colour 2 straight
      g.zero_of_int_white.resize(g.n, OpenGraph::End{OpenGraph::EndKind::IntBlack, -1});
      g.zero_of_int_white[tail[i]] = {OpenGraph::EndKind::IntBlack, gd};
      g.zero_of_int_white[tail[j]] = {OpenGraph::EndKind::IntBlack, gd + 1};
      tail[i] = gd;
      tail[j] = gd + 1;
    }
  }
  for (int j = 0; j < k; ++j)
    g.zero_of_int_white[tail[j]] = {OpenGraph::EndKind::IntBlack, cap[sigma(j)] + 1};
  return g;
}

// disjoint union with relabeled legs and vertex indices
OpenGraph merge_witnesses(int D, const std::vector<OpenGraph>& parts) {
  OpenGraph g;
  g.rank = D;
  g.tau.assign(D, Perm{});
  int leg_off_white = 0;
  // first pass: count legs so white sources come first globally
  int total_legs = 0;
  for (const auto& p : parts) total_legs += p.legs;
  g.legs = total_legs;
  g.ext_is_white_source.assign(total_legs, false);
  const int half = total_legs / 2;
  for (int l = 0; l < half; ++l) g.ext_is_white_source[l] = true;

  int leg_off_black = half;
  for (const auto& p : parts) {
    const int vert_off = g.n;
    const auto pw = p.white_source_labels();
    const auto pb = p.black_source_labels();
    std::map<int, int> leg_map;
    for (size_t i = 0; i < pw.size(); ++i) leg_map[pw[i]] = leg_off_white + static_cast<int>(i);
    for (size_t i = 0; i < pb.size(); ++i) leg_map[pb[i]] = leg_off_black + static_cast<int>(i);
    auto remap = [&](OpenGraph::End e) {
      if (e.kind == OpenGraph::EndKind::Ext) return OpenGraph::End{e.kind, leg_map.at(e.index)};
      return OpenGraph::End{e.kind, e.index + vert_off};
    };
    for (int c = 0; c < D; ++c)
      for (int i = 0; i < p.n; ++i) g.tau[c].img.push_back(p.tau[c](i) + vert_off);
    for (const auto& e : p.zero_of_int_white) g.zero_of_int_white.push_back(remap(e));
    for (const auto& e : p.zero_of_white_source) g.zero_of_white_source.push_back(remap(e));
    g.n += p.n;
    leg_off_white += static_cast<int>(pw.size());
    leg_off_black += static_cast<int>(pb.size());
  }
  return g;
}

}  // namespace

std::optional<OpenGraph> realize_boundary(const DisconnectedGraph& B,
                                          const ModelVertexSet& model) {
  std::vector<OpenGraph> parts;
  for (const ColouredGraph& comp : B.components) {
    // single-vertex witness when the component is an interaction vertex
    bool done = false;
    if (comp.k == 2) {
      for (int a = 0; a < comp.rank && !done; ++a) {
        if (is_isomorphic(comp, ColouredGraph::quartic_vertex(comp.rank, a)) &&
            model_has(model, ColouredGraph::quartic_vertex(comp.rank, a))) {
          parts.push_back(quartic_tree_witness(comp.rank, a));
          done = true;
        }
      }
    }
    if (!done) {
      auto w = chain_witness(comp, model);
      if (!w) return std::nullopt;
      parts.push_back(std::move(*w));
    }
  }
  OpenGraph g = merge_witnesses(B.rank, parts);
  g.validate();
  return g;
}

std::optional<OpenGraph> find_feynman_witness(const DisconnectedGraph& B,
                                              const std::vector<ColouredGraph>& vertices) {
  const int D = B.rank;
  const int m = B.k();
  OpenGraph g;
  g.rank = D;
  g.tau.assign(D, Perm{});
  for (const auto& v : vertices) {
    for (int c = 0; c < D; ++c)
      for (int i = 0; i < v.k; ++i) g.tau[c].img.push_back(v.tau[c](i) + g.n);
    g.n += v.k;
  }
  g.legs = 2 * m;
  g.ext_is_white_source.assign(2 * m, false);
  for (int l = 0; l < m; ++l) g.ext_is_white_source[l] = true;

  // B-side elements: internal blacks then black sources
  std::vector<OpenGraph::End> bside;
  for (int b = 0; b < g.n; ++b) bside.push_back({OpenGraph::EndKind::IntBlack, b});
  for (int l = m; l < 2 * m; ++l) bside.push_back({OpenGraph::EndKind::Ext, l});
  // W-side: white sources first, then internal whites
  std::vector<int> assign(bside.size());
  std::iota(assign.begin(), assign.end(), 0);

  do {
    g.zero_of_white_source.clear();
    g.zero_of_int_white.clear();
    for (int i = 0; i < m; ++i) g.zero_of_white_source.push_back(bside[assign[i]]);
    for (int w = 0; w < g.n; ++w) g.zero_of_int_white.push_back(bside[assign[m + w]]);
    try {
      if (is_isomorphic(boundary(g), B)) return g;
    } catch (const error&) {
    }
  } while (std::next_permutation(assign.begin(), assign.end()));
  return std::nullopt;
}

std::string render_open_graph(const OpenGraph& g) {
  std::ostringstream os;
  os << "open{D=" << g.rank << ",n=" << g.n << ",legs=" << g.legs << "}\n";
  auto end_str = [&](const OpenGraph::End& e) {
    switch (e.kind) {
      case OpenGraph::EndKind::IntWhite: return "w" + std::to_string(e.index + 1);
      case OpenGraph::EndKind::IntBlack: return "b" + std::to_string(e.index + 1);
      default: return "ext" + std::to_string(e.index + 1);
    }
  };
  for (int c = 0; c < g.rank; ++c)
    for (int i = 0; i < g.n; ++i)
      os << c + 1 << " w" << i + 1 << " b" << g.tau[c](i) + 1 << "\n";
  const auto ws = g.white_source_labels();
  for (int i = 0; i < g.n; ++i)
    os << "0 w" << i + 1 << " " << end_str(g.zero_of_int_white[i]) << "\n";
  for (size_t i = 0; i < ws.size(); ++i)
    os << "0 ext" << ws[i] + 1 << " " << end_str(g.zero_of_white_source[i]) << "\n";
  return os.str();
}

OpenGraph parse_open_graph(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw error("open graph: empty input");
  int D = 0, n = 0, legs = 0;
  if (std::sscanf(header.c_str(), "open{D=%d,n=%d,legs=%d}", &D, &n, &legs) != 3)
    throw error("open graph: bad header '" + header + "'");
  OpenGraph g;
  g.rank = D;
  g.n = n;
  g.legs = legs;
  g.tau.assign(D, Perm::identity(n));
  g.ext_is_white_source.assign(legs, false);
  g.zero_of_int_white.assign(n, OpenGraph::End{OpenGraph::EndKind::IntBlack, -1});
  std::vector<std::pair<std::string, std::string>> zero_edges;

  auto parse_end = [&](const std::string& s) -> OpenGraph::End {
    if (s.size() < 2) throw error("open graph: bad vertex id '" + s + "'");
    if (s[0] == 'w') return {OpenGraph::EndKind::IntWhite, std::stoi(s.substr(1)) - 1};
    if (s[0] == 'b') return {OpenGraph::EndKind::IntBlack, std::stoi(s.substr(1)) - 1};
    if (s.rfind("ext", 0) == 0) return {OpenGraph::EndKind::Ext, std::stoi(s.substr(3)) - 1};
    throw error("open graph: bad vertex id '" + s + "'");
  };

  std::string line;
  std::vector<std::pair<OpenGraph::End, OpenGraph::End>> zeros;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int colour;
    std::string a, b;
    if (!(ls >> colour >> a >> b)) throw error("open graph: bad edge line '" + line + "'");
    const OpenGraph::End ea = parse_end(a), eb = parse_end(b);
    if (colour == 0) {
      zeros.push_back({ea, eb});
    } else {
      if (ea.kind != OpenGraph::EndKind::IntWhite || eb.kind != OpenGraph::EndKind::IntBlack)
        throw error("open graph: coloured edges join internal whites to blacks");
      g.tau[colour - 1].img[ea.index] = eb.index;
    }
  }
  // orient 0-edges: W side is an internal white or a source that pairs into
  // the black side; source types are inferred from the orientation
  std::vector<bool> type_known(legs, false);
  std::vector<OpenGraph::End> white_source_target(legs, {OpenGraph::EndKind::IntBlack, -1});
  for (auto [ea, eb] : zeros) {
    auto classify = [&](OpenGraph::End w, OpenGraph::End b) -> bool {
      // returns true if (w, b) is a consistent (white-side, black-side) pair
      const bool w_ok = w.kind == OpenGraph::EndKind::IntWhite || w.kind == OpenGraph::EndKind::Ext;
      const bool b_ok = b.kind == OpenGraph::EndKind::IntBlack || b.kind == OpenGraph::EndKind::Ext;
      if (!w_ok || !b_ok) return false;
      if (w.kind == OpenGraph::EndKind::Ext && b.kind == OpenGraph::EndKind::Ext && w.index == b.index)
        return false;
      return !(w.kind == OpenGraph::EndKind::IntWhite && b.kind == OpenGraph::EndKind::IntWhite);
    };
    OpenGraph::End w = ea, b = eb;
    if (ea.kind == OpenGraph::EndKind::IntBlack ||
        (eb.kind == OpenGraph::EndKind::IntWhite)) {
      w = eb;
      b = ea;
    }
    if (!classify(w, b)) throw error("open graph: malformed colour-0 edge");
    if (w.kind == OpenGraph::EndKind::IntWhite) {
      g.zero_of_int_white[w.index] = b;
    } else {
      g.ext_is_white_source[w.index] = true;
      type_known[w.index] = true;
      white_source_target[w.index] = b;
    }
    if (b.kind == OpenGraph::EndKind::Ext) {
      g.ext_is_white_source[b.index] = false;
      type_known[b.index] = true;
    }
  }
  for (int l = 0; l < legs; ++l)
    if (!type_known[l]) throw error("open graph: external slot " + std::to_string(l + 1) +
                                    " has no colour-0 edge");
  for (int l = 0; l < legs; ++l)
    if (g.ext_is_white_source[l]) g.zero_of_white_source.push_back(white_source_target[l]);
  g.validate();
  return g;
}

}  // namespace tsde
