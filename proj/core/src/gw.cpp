#include "tsde/gw.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tsde {

GwGraph GwGraph::conjugate() const {
  GwGraph out = *this;
  for (int& c : out.vertex_colours) c = bar_colour(c);
  return out;
}

bool GwGraph::connected() const {
  const int n = static_cast<int>(vertex_colours.size());
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e[0])] = find(e[1]);
  for (int i = 1; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

std::array<int, 8> GwGraph::kappa() const {
  std::array<int, 8> k{};
  for (int c : vertex_colours) ++k[c];
  return k;
}

bool GwGraph::satisfies_constraints() const {
  const int n = static_cast<int>(vertex_colours.size());
  // every vertex carries exactly the three labels containing its projection
  std::vector<std::set<std::pair<int, int>>> labels(n);
  for (const auto& [u, v, a, b] : edges) {
    if (u == v) return false;
    if (a >= b) return false;
    const int pu = projection(vertex_colours[u]), pv = projection(vertex_colours[v]);
    if (pu == pv) {
      if (vertex_colours[u] != bar_colour(vertex_colours[v])) return false;
      if (a != pu && b != pu) return false;
    } else {
      if (!((a == pu && b == pv) || (a == pv && b == pu))) return false;
    }
    if (!labels[u].insert({a, b}).second) return false;
    if (!labels[v].insert({a, b}).second) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (labels[i].size() != 3) return false;
    for (const auto& [a, b] : labels[i])
      if (a != projection(vertex_colours[i]) && b != projection(vertex_colours[i])) return false;
  }
  return true;
}

std::string GwGraph::canonical_string() const {
  const int n = static_cast<int>(vertex_colours.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::string best;
  // minimize over vertex relabelings; colours travel with the vertices so
  // only colour-preserving relabelings can tie
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = vertex_colours[order[i]];
    std::vector<std::array<int, 4>> es;
    for (auto e : edges) {
      int u = pos[e[0]], v = pos[e[1]];
      if (u > v) std::swap(u, v);
      es.push_back({u, v, e[2], e[3]});
    }
    std::sort(es.begin(), es.end());
    std::ostringstream os;
    for (int c : cols) os << c << ";";
    os << "|";
    for (auto& e : es) os << e[0] << "," << e[1] << ":" << e[2] << e[3] << ";";
    std::string cand = os.str();
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

const std::array<std::pair<int, int>, 6> kLabels = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

bool may_join(int cu, int cv, int a, int b) {
  const int pu = GwGraph::projection(cu), pv = GwGraph::projection(cv);
  if (pu == pv) return cu == GwGraph::bar_colour(cv) && (a == pu || b == pu);
  return (a == pu && b == pv) || (a == pv && b == pu);
}

// all perfect matchings on `verts` where pairs satisfy may_join for (a, b)
void matchings(const std::vector<int>& verts, const std::vector<int>& colours, int a, int b,
               std::vector<std::vector<std::pair<int, int>>>& out,
               std::vector<std::pair<int, int>>& acc, std::vector<bool>& used) {
  int first = -1;
  for (size_t i = 0; i < verts.size(); ++i)
    if (!used[i]) {
      first = static_cast<int>(i);
      break;
    }
  if (first < 0) {
    out.push_back(acc);
    return;
  }
  used[first] = true;
  for (size_t j = first + 1; j < verts.size(); ++j) {
    if (used[j]) continue;
    if (!may_join(colours[verts[first]], colours[verts[j]], a, b)) continue;
    used[j] = true;
    acc.push_back({verts[first], verts[j]});
    matchings(verts, colours, a, b, out, acc, used);
    acc.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<GwGraph> enumerate_gw_boundaries(int two_k) {
  if (two_k != 2 && two_k != 4)
    throw error("enumerate_gw_boundaries: only 2- and 4-point sizes are supported");
  const int n = two_k;

  std::vector<GwGraph> out;
  std::set<std::string> seen;

  // vertex colour multisets, non-decreasing
  std::vector<int> cols(n, 0);
  auto emit_colouring = [&](const std::vector<int>& colouring) {
    // per label: all ways to match the vertices whose projection lies in it
    std::vector<std::vector<std::vector<std::pair<int, int>>>> per_label;
    for (const auto& [a, b] : kLabels) {
      std::vector<int> verts;
      for (int i = 0; i < n; ++i) {
        const int p = GwGraph::projection(colouring[i]);
        if (p == a || p == b) verts.push_back(i);
      }
      std::vector<std::vector<std::pair<int, int>>> ms;
      if (!verts.empty()) {
        std::vector<std::pair<int, int>> acc;
        std::vector<bool> used(verts.size(), false);
        matchings(verts, colouring, a, b, ms, acc, used);
        if (ms.empty()) return;  // no way to give these vertices their (a,b)-edge
      } else {
        ms.push_back({});
      }
      per_label.push_back(std::move(ms));
    }
    std::vector<size_t> idx(per_label.size(), 0);
    while (true) {
      GwGraph g;
      g.vertex_colours = colouring;
      for (size_t li = 0; li < per_label.size(); ++li)
        for (const auto& [u, v] : per_label[li][idx[li]])
          g.edges.push_back({u, v, kLabels[li].first, kLabels[li].second});
      if (g.satisfies_constraints()) {
        if (seen.insert(g.canonical_string()).second) out.push_back(g);
      }
      int p = static_cast<int>(per_label.size()) - 1;
      while (p >= 0 && ++idx[p] == per_label[p].size()) idx[p--] = 0;
      if (p < 0) break;
    }
  };

  auto rec = [&](auto&& self, int pos, int min_col) -> void {
    if (pos == n) {
      emit_colouring(cols);
      return;
    }
    for (int c = min_col; c < 8; ++c) {
      cols[pos] = c;
      self(self, pos + 1, c);
    }
  };
  rec(rec, 0, 0);

  std::sort(out.begin(), out.end(), [](const GwGraph& a, const GwGraph& b) {
    return a.canonical_string() < b.canonical_string();
  });
  return out;
}

GwFamily classify_gw(const GwGraph& g) {
  const auto k = g.kappa();
  const int n = static_cast<int>(g.vertex_colours.size());
  if (n == 2) return GwFamily::TwoPoint;
  if (n != 4) return GwFamily::Other;

  // exceptional: all four unbarred colours once, or all four barred
  if (k[0] == 1 && k[1] == 1 && k[2] == 1 && k[3] == 1) return GwFamily::Exceptional;
  if (k[4] == 1 && k[5] == 1 && k[6] == 1 && k[7] == 1) return GwFamily::Exceptional;

  for (int a = 0; a < 4; ++a) {
    if (k[a] == 2 && k[GwGraph::bar_colour(a)] == 2)
      return g.connected() ? GwFamily::Unbroken : GwFamily::Broken;
    for (int c = a + 1; c < 4; ++c) {
      if (k[a] == 1 && k[GwGraph::bar_colour(a)] == 1 && k[c] == 1 &&
          k[GwGraph::bar_colour(c)] == 1)
        return g.connected() ? GwFamily::MixedConnected : GwFamily::MixedDisconnected;
    }
  }
  return GwFamily::Other;
}

std::string gw_family_name(GwFamily f) {
  switch (f) {
    case GwFamily::TwoPoint: return "two-point";
    case GwFamily::Broken: return "broken";
    case GwFamily::Unbroken: return "unbroken";
    case GwFamily::MixedDisconnected: return "mixed-disconnected";
    case GwFamily::MixedConnected: return "mixed-connected";
    case GwFamily::Exceptional: return "exceptional";
    default: return "other";
  }
}

}  // namespace tsde
