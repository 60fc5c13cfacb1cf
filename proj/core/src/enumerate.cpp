#include "tsde/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "tsde/graph_io.hpp"

namespace tsde {

long long enumeration_budget() {
  if (const char* env = std::getenv("TSDE_BUDGET")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

long long burnside_class_count(int D, int k) {
  // sum over conjugacy classes of S_k: class size * |centralizer|^(D-1),
  // with |centralizer| = k!/class size
  std::vector<Perm> perms;
  for_each_perm(k, [&](const Perm& p) { perms.push_back(p); });
  std::map<std::vector<int>, long long> by_type;  // sorted cycle type -> count
  for (const Perm& p : perms) {
    std::vector<bool> seen(k, false);
    std::vector<int> type;
    for (int i = 0; i < k; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p.img[j]) {
        seen[j] = true;
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    by_type[type] += 1;
  }
  long long total = 0;
  const long long kfact = factorial(k);
  for (auto& [type, count] : by_type) {
    const long long centralizer = kfact / count;
    total += count * ipow(centralizer, D - 1);
  }
  return total / kfact;
}

std::vector<GraphClass> enumerate_connected(int D, int k) {
  if (D < 2 || k < 1) throw error("enumerate_connected: need D >= 2, k >= 1");
  const long long space = ipow(factorial(k), D - 1);
  if (space > enumeration_budget())
    throw budget_error("enumerate_connected: search space " + std::to_string(space) +
                       " tuples exceeds budget " + std::to_string(enumeration_budget()) +
                       "; set TSDE_BUDGET >= " + std::to_string(space));

  std::vector<Perm> sk;
  for_each_perm(k, [&](const Perm& p) { sk.push_back(p); });

  std::map<std::string, ColouredGraph> classes;
  std::vector<int> idx(D - 1, 0);
  while (true) {
    std::vector<Perm> taus(D);
    taus[0] = Perm::identity(k);
    for (int c = 1; c < D; ++c) taus[c] = sk[idx[c - 1]];
    ColouredGraph g(D, std::move(taus));
    if (is_connected(g)) {
      ColouredGraph cf = canonical_form(g);
      std::string key = render_graph(cf);
      classes.emplace(std::move(key), std::move(cf));
    }
    int pos = D - 2;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(sk.size())) idx[pos--] = 0;
    if (pos < 0) break;
  }

  std::vector<GraphClass> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) {
    GraphClass gc;
    gc.aut_order = aut_order(g);
    gc.connected = true;
    gc.degree = gurau_degree(g);
    gc.canonical = std::move(g);
    out.push_back(std::move(gc));
  }
  return out;
}

std::vector<DisconnectedClass> enumerate_all(int D, int k) {
  // connected classes for every size up to k
  std::vector<std::vector<GraphClass>> conn(k + 1);
  for (int s = 1; s <= k; ++s) conn[s] = enumerate_connected(D, s);

  std::vector<DisconnectedClass> out;
  // multisets of connected classes with sizes summing to k, built in
  // non-decreasing (size, index) order to avoid duplicates
  std::vector<ColouredGraph> stack;
  auto emit = [&]() {
    DisconnectedGraph g(D, stack);
    DisconnectedClass dc;
    dc.aut_order = aut_order_disconnected(g);
    dc.graph = canonical_form(g);
    out.push_back(std::move(dc));
  };
  auto rec = [&](auto&& self, int remaining, int min_size, int min_index) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int s = min_size; s <= remaining; ++s) {
      const auto& pool = conn[s];
      const int start = (s == min_size) ? min_index : 0;
      for (int i = start; i < static_cast<int>(pool.size()); ++i) {
        stack.push_back(pool[i].canonical);
        self(self, remaining - s, s, i);
        stack.pop_back();
      }
    }
  };
  rec(rec, k, 1, 0);

  std::sort(out.begin(), out.end(), [](const DisconnectedClass& a, const DisconnectedClass& b) {
    return render_graph(a.graph) < render_graph(b.graph);
  });
  return out;
}

long long colour_orbit_size(const DisconnectedGraph& g) {
  std::set<std::string> orbit;
  std::vector<int> colours(g.rank);
  for (int c = 0; c < g.rank; ++c) colours[c] = c;
  std::sort(colours.begin(), colours.end());
  do {
    std::vector<ColouredGraph> comps;
    for (const auto& comp : g.components) {
      std::vector<Perm> taus(g.rank);
      for (int c = 0; c < g.rank; ++c) taus[colours[c]] = comp.tau[c];
      comps.emplace_back(g.rank, std::move(taus));
    }
    orbit.insert(class_string(DisconnectedGraph(g.rank, std::move(comps))));
  } while (std::next_permutation(colours.begin(), colours.end()));
  return static_cast<long long>(orbit.size());
}

std::vector<CensusRow> census(int D, int k_max, bool connected_only) {
  std::vector<CensusRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    if (connected_only) {
      for (const GraphClass& gc : enumerate_connected(D, k)) {
        CensusRow r;
        r.rank = D;
        r.vertices = 2 * k;
        r.class_id = render_graph(gc.canonical);
        r.connected = true;
        r.aut_order = gc.aut_order;
        r.degree = gc.degree;
        r.colour_orbit = colour_orbit_size(DisconnectedGraph(gc.canonical));
        rows.push_back(std::move(r));
      }
    } else {
      for (const DisconnectedClass& dc : enumerate_all(D, k)) {
        CensusRow r;
        r.rank = D;
        r.vertices = 2 * k;
        r.class_id = render_graph(dc.graph);
        r.connected = dc.graph.connected();
        r.aut_order = dc.aut_order;
        Rational deg(0);
        for (const auto& comp : dc.graph.components) deg = deg + gurau_degree(comp);
        r.degree = deg;
        r.colour_orbit = colour_orbit_size(dc.graph);
        rows.push_back(std::move(r));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.class_id < b.class_id;
  });
  return rows;
}

}  // namespace tsde
