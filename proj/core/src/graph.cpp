#include "tsde/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tsde/graph_io.hpp"

namespace tsde {

ColouredGraph::ColouredGraph(int D, std::vector<Perm> taus)
    : rank(D), tau(std::move(taus)) {
  if (rank < 1) throw error("ColouredGraph: rank must be >= 1");
  if (static_cast<int>(tau.size()) != rank)
    throw error("ColouredGraph: expected one permutation per colour");
  k = tau.empty() ? 0 : tau[0].size();
  for (const Perm& p : tau) {
    if (p.size() != k) throw error("ColouredGraph: ragged permutation sizes");
    if (!p.is_bijection()) throw error("ColouredGraph: colour row is not a bijection");
  }
}

ColouredGraph ColouredGraph::melon(int D) {
  return ColouredGraph(D, std::vector<Perm>(D, Perm::identity(1)));
}

ColouredGraph ColouredGraph::quartic_vertex(int D, int colour_a) {
  // labeled so that the black vertex 0 collects the colour-a momentum of
  // white 0 and every other colour from white 1 (the s = (x_1, y_2, y_3)
  // convention of the worked rank-3 equations)
  std::vector<Perm> taus(D, Perm::transposition(2, 0, 1));
  taus[colour_a] = Perm::identity(2);
  return ColouredGraph(D, std::move(taus));
}

ColouredGraph ColouredGraph::cyclic(int D, int k) {
  std::vector<Perm> taus(D, Perm::cycle(k));
  taus[0] = Perm::identity(k);
  return ColouredGraph(D, std::move(taus));
}

// The colour-0 row of the minimum is the identity: its candidates are
// permutations of {1..k}, minimized exactly when sigma = pi * tau[0]⁻¹.
// What remains is simultaneous conjugation of the gauge-fixed rows.
ColouredGraph canonical_form(const ColouredGraph& g) {
  if (g.k <= 1) {
    ColouredGraph r = g;
    for (Perm& p : r.tau) p = Perm::identity(g.k);
    return r;
  }
  std::vector<Perm> gauge(g.rank);
  const Perm t0inv = g.tau[0].inverse();
  for (int c = 0; c < g.rank; ++c) gauge[c] = compose(t0inv, g.tau[c]);

  std::vector<Perm> best;
  for_each_perm(g.k, [&](const Perm& pi) {
    const Perm piinv = pi.inverse();
    std::vector<Perm> cand(g.rank);
    cand[0] = Perm::identity(g.k);
    for (int c = 1; c < g.rank; ++c) cand[c] = compose(pi, compose(gauge[c], piinv));
    if (best.empty() || cand < best) best = std::move(cand);
  });
  return ColouredGraph(g.rank, std::move(best));
}

bool is_isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  if (a.rank != b.rank || a.k != b.k) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Perm> aut_group(const ColouredGraph& g) {
  std::vector<Perm> auts;
  if (g.k == 0) {
    auts.push_back(Perm::identity(0));
    return auts;
  }
  std::vector<Perm> tinv(g.rank);
  for (int c = 0; c < g.rank; ++c) tinv[c] = g.tau[c].inverse();
  for_each_perm(g.k, [&](const Perm& pi) {
    const Perm sigma = compose(g.tau[0], compose(pi, tinv[0]));
    for (int c = 1; c < g.rank; ++c)
      if (compose(g.tau[c], compose(pi, tinv[c])) != sigma) return;
    auts.push_back(pi);
  });
  return auts;
}

long long aut_order(const ColouredGraph& g) {
  return static_cast<long long>(aut_group(g).size());
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

bool is_connected(const ColouredGraph& g) {
  if (g.k <= 1) return true;
  UnionFind uf(g.k);
  for (int c = 1; c < g.rank; ++c)
    for (int i = 0; i < g.k; ++i) uf.unite(i, g.tau[c].inverse()(g.tau[0](i)));
  int root = uf.find(0);
  for (int i = 1; i < g.k; ++i)
    if (uf.find(i) != root) return false;
  return true;
}

DisconnectedGraph split_components(const ColouredGraph& g) {
  if (g.k == 0) return DisconnectedGraph(g);
  UnionFind uf(g.k);
  for (int c = 0; c < g.rank; ++c) {
    const Perm tcinv = g.tau[c].inverse();
    for (int i = 0; i < g.k; ++i) uf.unite(i, tcinv(g.tau[0](i)));
  }
  // components ordered by smallest white index, locals in increasing order
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < g.k; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> groups;
  for (auto& [root, whites] : by_root) groups.push_back(whites);
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  DisconnectedGraph out;
  out.rank = g.rank;
  out.white_order.assign(g.k, {-1, -1});
  for (int ci = 0; ci < static_cast<int>(groups.size()); ++ci) {
    const auto& whites = groups[ci];
    // blacks of this component, in increasing order
    std::vector<int> blacks;
    for (int w : whites) blacks.push_back(g.tau[0](w));
    std::sort(blacks.begin(), blacks.end());
    std::vector<int> black_local(g.k, -1);
    for (int j = 0; j < static_cast<int>(blacks.size()); ++j) black_local[blacks[j]] = j;

    const int kk = static_cast<int>(whites.size());
    std::vector<Perm> taus(g.rank, Perm::identity(kk));
    for (int c = 0; c < g.rank; ++c)
      for (int j = 0; j < kk; ++j) taus[c].img[j] = black_local[g.tau[c](whites[j])];
    out.components.emplace_back(g.rank, std::move(taus));
    for (int j = 0; j < kk; ++j) out.white_order[whites[j]] = {ci, j};
  }
  return out;
}

int jacket_count(int D) {
  int f = 1;
  for (int i = 2; i < D; ++i) f *= i;
  return D >= 3 ? f / 2 : 1;
}

Rational gurau_degree(const ColouredGraph& g) {
  if (!is_connected(g)) throw error("gurau_degree: input must be connected");
  if (g.k == 0) return Rational(0);
  // Jackets: cyclic orderings of the colours up to rotation and reflection.
  // Fix colour 0 first and kill the reflection by ordering[1] < ordering[D-1].
  std::vector<int> rest(g.rank - 1);
  std::iota(rest.begin(), rest.end(), 1);
  Rational total(0);
  do {
    if (g.rank >= 3 && rest.front() > rest.back()) continue;
    std::vector<int> order;
    order.push_back(0);
    order.insert(order.end(), rest.begin(), rest.end());
    long long faces = 0;
    for (int i = 0; i < g.rank; ++i) {
      const int a = order[i], b = order[(i + 1) % g.rank];
      faces += perm_cycle_count(compose(g.tau[b].inverse(), g.tau[a]));
    }
    // 2 - 2g = V - E + F with V = 2k, E = kD
    const long long chi = 2LL * g.k - static_cast<long long>(g.k) * g.rank + faces;
    total = total + Rational(2 - chi, 2);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return total;
}

ColouredGraph bar(const ColouredGraph& g) {
  std::vector<Perm> taus(g.rank);
  for (int c = 0; c < g.rank; ++c) taus[c] = g.tau[c].inverse();
  return ColouredGraph(g.rank, std::move(taus));
}

DisconnectedGraph sigma_swap(const ColouredGraph& g, int colour_a, int v1, int v2,
                             VertexColour side) {
  if (v1 == v2) throw error("sigma_swap: vertices must differ");
  if (v1 < 0 || v1 >= g.k || v2 < 0 || v2 >= g.k) throw error("sigma_swap: vertex out of range");
  ColouredGraph h = g;
  const Perm t = Perm::transposition(g.k, v1, v2);
  if (side == VertexColour::White)
    h.tau[colour_a] = compose(g.tau[colour_a], t);
  else
    h.tau[colour_a] = compose(t, g.tau[colour_a]);
  return split_components(h);
}

EdgeRemoval edge_remove(const ColouredGraph& g, int colour_a, int white_r) {
  if (white_r < 0 || white_r >= g.k) throw error("edge_remove: white index out of range");
  EdgeRemoval out;
  const int nu = g.tau[colour_a](white_r);
  for (int c = 0; c < g.rank; ++c)
    if (g.tau[c](white_r) == nu) out.common_colours.insert(c);

  out.kappa.assign(g.k, -1);
  out.black_map.assign(g.k, -1);
  for (int i = 0; i < g.k; ++i) {
    if (i != white_r) out.kappa[i] = i < white_r ? i : i - 1;
    if (i != nu) out.black_map[i] = i < nu ? i : i - 1;
  }
  if (g.k == 1) {
    out.graph = ColouredGraph::empty(g.rank);
    return out;
  }
  std::vector<Perm> taus(g.rank, Perm::identity(g.k - 1));
  for (int c = 0; c < g.rank; ++c) {
    for (int i = 0; i < g.k; ++i) {
      if (i == white_r) continue;
      int target = g.tau[c](i);
      // a broken edge at the removed black reconnects to where the removed
      // white's colour-c edge pointed
      if (target == nu) target = g.tau[c](white_r);
      taus[c].img[out.kappa[i]] = out.black_map[target];
    }
  }
  out.graph = ColouredGraph(g.rank, std::move(taus));
  return out;
}

MomentumMatrix momentum_map(const ColouredGraph& g, const MomentumMatrix& X) {
  if (X.rank != g.rank || X.k != g.k) throw error("momentum_map: shape mismatch");
  MomentumMatrix Y(g.rank, g.k);
  for (int c = 0; c < g.rank; ++c)
    for (int i = 0; i < g.k; ++i) Y.entries[c][g.tau[c](i)] = X.entries[c][i];
  return Y;
}

bool MomentumMatrix::in_F() const {
  for (const auto& row : entries) {
    for (size_t i = 0; i < row.size(); ++i)
      for (size_t j = i + 1; j < row.size(); ++j)
        if (row[i] == row[j]) return false;
  }
  return true;
}

// ---- DisconnectedGraph -----------------------------------------------------

DisconnectedGraph::DisconnectedGraph(ColouredGraph g) : rank(g.rank) {
  if (!g.is_empty()) {
    for (int i = 0; i < g.k; ++i) white_order.push_back({0, i});
    components.push_back(std::move(g));
  }
}

DisconnectedGraph::DisconnectedGraph(int D, std::vector<ColouredGraph> comps) : rank(D) {
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    if (comps[ci].rank != D) throw error("DisconnectedGraph: mixed ranks");
    for (int i = 0; i < comps[ci].k; ++i) white_order.push_back({ci, i});
  }
  components = std::move(comps);
}

int DisconnectedGraph::k() const { return static_cast<int>(white_order.size()); }

const ColouredGraph& DisconnectedGraph::single() const {
  if (components.size() != 1) throw error("DisconnectedGraph: not connected");
  return components[0];
}

int DisconnectedGraph::global_white(int c, int i) const {
  for (int gidx = 0; gidx < k(); ++gidx)
    if (white_order[gidx] == std::pair<int, int>(c, i)) return gidx;
  throw error("DisconnectedGraph: no such white vertex");
}

DisconnectedGraph canonical_form(const DisconnectedGraph& g) {
  std::vector<ColouredGraph> comps;
  comps.reserve(g.components.size());
  for (const auto& c : g.components)
    for (const ColouredGraph& piece : split_components(c).components)
      comps.push_back(canonical_form(piece));
  std::sort(comps.begin(), comps.end(), [](const ColouredGraph& a, const ColouredGraph& b) {
    if (a.k != b.k) return a.k < b.k;
    return render_graph(a) < render_graph(b);
  });
  return DisconnectedGraph(g.rank, std::move(comps));
}

bool is_isomorphic(const DisconnectedGraph& a, const DisconnectedGraph& b) {
  if (a.rank != b.rank || a.k() != b.k()) return false;
  return canonical_form(a).components == canonical_form(b).components;
}

long long aut_order_disconnected(const DisconnectedGraph& g) {
  std::map<std::string, std::pair<long long, long long>> types;  // key -> (mult, aut)
  for (const auto& c : g.components) {
    std::string key = render_graph(canonical_form(c));
    auto it = types.find(key);
    if (it == types.end())
      types[key] = {1, aut_order(c)};
    else
      it->second.first += 1;
  }
  long long total = 1;
  for (auto& [key, ma] : types) {
    auto [m, a] = ma;
    for (long long i = 2; i <= m; ++i) total *= i;
    for (long long i = 0; i < m; ++i) total *= a;
  }
  return total;
}

namespace {

// assemble the disjoint union as one ColouredGraph (blocks in component order)
ColouredGraph as_single_graph(const DisconnectedGraph& g) {
  const int k = g.k();
  std::vector<int> offset(g.components.size(), 0);
  for (size_t c = 1; c < g.components.size(); ++c)
    offset[c] = offset[c - 1] + g.components[c - 1].k;
  std::vector<Perm> taus(g.rank, Perm::identity(std::max(k, 0)));
  for (int c = 0; c < g.rank; ++c)
    for (size_t ci = 0; ci < g.components.size(); ++ci)
      for (int i = 0; i < g.components[ci].k; ++i)
        taus[c].img[offset[ci] + i] = offset[ci] + g.components[ci].tau[c](i);
  // reorder blocks to the graph's own global white order
  std::vector<Perm> out(g.rank, Perm::identity(k));
  std::vector<int> block_index(k);
  for (int gi = 0; gi < k; ++gi) {
    auto [ci, li] = g.white_order[gi];
    block_index[gi] = offset[ci] + li;
  }
  for (int c = 0; c < g.rank; ++c)
    for (int gi = 0; gi < k; ++gi) {
      int tb = taus[c].img[block_index[gi]];
      // locate tb back in global order (blacks share the block layout)
      int tgi = 0;
      for (; tgi < k; ++tgi)
        if (block_index[tgi] == tb) break;
      out[c].img[gi] = tgi;
    }
  return k == 0 ? ColouredGraph::empty(g.rank) : ColouredGraph(g.rank, std::move(out));
}

}  // namespace

long long aut_order_disconnected_brute(const DisconnectedGraph& g) {
  return static_cast<long long>(all_isomorphisms(g, g).size());
}

std::vector<Perm> all_isomorphisms(const ColouredGraph& from, const ColouredGraph& to) {
  std::vector<Perm> out;
  if (from.rank != to.rank || from.k != to.k) return out;
  if (from.k == 0) {
    out.push_back(Perm::identity(0));
    return out;
  }
  std::vector<Perm> tinv(from.rank);
  for (int c = 0; c < from.rank; ++c) tinv[c] = from.tau[c].inverse();
  for_each_perm(from.k, [&](const Perm& pi) {
    // the black map is forced by colour 0; it must agree for every colour
    const Perm sigma = compose(to.tau[0], compose(pi, tinv[0]));
    for (int c = 1; c < from.rank; ++c)
      if (compose(to.tau[c], compose(pi, tinv[c])) != sigma) return;
    out.push_back(pi);
  });
  return out;
}

std::vector<Perm> all_isomorphisms(const DisconnectedGraph& from, const DisconnectedGraph& to) {
  return all_isomorphisms(as_single_graph(from), as_single_graph(to));
}

}  // namespace tsde
