#ifndef TSDE_GRAPH_HPP
#define TSDE_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsde/perm.hpp"
#include "tsde/rational.hpp"

namespace tsde {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed rank-D bipartite coloured graph on k white and k black vertices.
/// tau[c](i) is the black vertex joined to white vertex i by the colour-c
/// edge, so a graph is a D-tuple of permutations of {0..k-1}. Coloured
/// isomorphism is simultaneous relabeling tau[c] -> sigma * tau[c] * pi⁻¹.
///
/// k = 0 is the empty graph, admitted as the unit under disjoint union.
struct ColouredGraph {
  int rank = 0;  // D
  int k = 0;     // half the vertex count
  std::vector<Perm> tau;

  ColouredGraph() = default;
  ColouredGraph(int D, std::vector<Perm> taus);

  static ColouredGraph empty(int D) {
    return ColouredGraph(D, std::vector<Perm>(D, Perm::identity(0)));
  }
  static ColouredGraph melon(int D);
  /// Quartic melonic vertex of colour a: tau[a] swaps the two whites,
  /// every other colour is parallel.
  static ColouredGraph quartic_vertex(int D, int colour_a);
  /// Cyclic graph X_{2k} of the single-vertex quartic model: tau[0] = id,
  /// every other colour the k-cycle i -> i+1.
  static ColouredGraph cyclic(int D, int k);

  bool is_empty() const { return k == 0; }
  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
  friend auto operator<=>(const ColouredGraph& a, const ColouredGraph& b) {
    if (auto c = a.rank <=> b.rank; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.tau <=> b.tau;
  }
};

/// Possibly disconnected graph: ordered components plus the global white
/// ordering. white_order[global] = (component index, local white index).
struct DisconnectedGraph {
  int rank = 0;
  std::vector<ColouredGraph> components;
  std::vector<std::pair<int, int>> white_order;

  DisconnectedGraph() = default;
  explicit DisconnectedGraph(ColouredGraph g);
  DisconnectedGraph(int D, std::vector<ColouredGraph> comps);

  int k() const;
  bool connected() const { return components.size() == 1; }
  const ColouredGraph& single() const;
  /// Global white index of local white `i` in component `c`.
  int global_white(int c, int i) const;

  friend bool operator==(const DisconnectedGraph&, const DisconnectedGraph&) = default;
};

/// Isomorphism-class data for one connected graph.
struct GraphClass {
  ColouredGraph canonical;
  long long aut_order = 1;
  bool connected = true;
  Rational degree;
};

/// D x k integer matrix of external momenta; entries[c][i] is the colour-c
/// momentum of white vertex i.
struct MomentumMatrix {
  int rank = 0;
  int k = 0;
  std::vector<std::vector<long long>> entries;

  MomentumMatrix() = default;
  MomentumMatrix(int D, int kk)
      : rank(D), k(kk), entries(D, std::vector<long long>(kk, 0)) {}

  /// All entries pairwise distinct within each row.
  bool in_F() const;
  friend bool operator==(const MomentumMatrix&, const MomentumMatrix&) = default;
};

// ---- graph_core operations -------------------------------------------------

/// Lexicographically least representative over all simultaneous relabelings.
/// The colour-0 row of the result is always the identity.
ColouredGraph canonical_form(const ColouredGraph& g);

bool is_isomorphic(const ColouredGraph& a, const ColouredGraph& b);

/// All white-vertex permutations that lift to coloured automorphisms,
/// i.e. pi such that tau[c] * pi * tau[c]⁻¹ is colour-independent.
std::vector<Perm> aut_group(const ColouredGraph& g);
long long aut_order(const ColouredGraph& g);

bool is_connected(const ColouredGraph& g);

/// Splits into connected components, keeping the inherited white order.
DisconnectedGraph split_components(const ColouredGraph& g);

/// Gurau degree: sum of jacket genera. Errors on disconnected input.
Rational gurau_degree(const ColouredGraph& g);
int jacket_count(int D);

/// Exchanges the roles of white and black vertices.
ColouredGraph bar(const ColouredGraph& g);

/// Swap of the colour-a edges at two same-colour vertices.
enum class VertexColour { White, Black };
DisconnectedGraph sigma_swap(const ColouredGraph& g, int colour_a, int v1, int v2,
                             VertexColour side);

/// Result of removing the colour-a edge at white vertex r together with its
/// endpoints, regluing the broken edges colourwise.
struct EdgeRemoval {
  ColouredGraph graph;          // on k-1 whites; empty graph when k was 1
  std::set<int> common_colours; // I(e): colours sharing both endpoints
  std::vector<int> kappa;       // old white -> new white; -1 for the removed one
  std::vector<int> black_map;   // old black -> new black; -1 for the removed one
};
EdgeRemoval edge_remove(const ColouredGraph& g, int colour_a, int white_r);

MomentumMatrix momentum_map(const ColouredGraph& g, const MomentumMatrix& X);

// ---- disconnected-graph class utilities ------------------------------------

/// Canonical form of a possibly disconnected graph: components replaced by
/// their canonical forms and sorted.
DisconnectedGraph canonical_form(const DisconnectedGraph& g);

bool is_isomorphic(const DisconnectedGraph& a, const DisconnectedGraph& b);

/// Product formula over isomorphism types: prod_t m_t! * aut(t)^{m_t}.
long long aut_order_disconnected(const DisconnectedGraph& g);

/// Brute-force count of global white permutations extending to coloured
/// automorphisms of the disjoint union; cross-check for the formula above.
long long aut_order_disconnected_brute(const DisconnectedGraph& g);

/// All white-slot bijections source -> target realizing coloured
/// isomorphisms between two labeled graphs (empty if not isomorphic).
std::vector<Perm> all_isomorphisms(const DisconnectedGraph& from,
                                   const DisconnectedGraph& to);
std::vector<Perm> all_isomorphisms(const ColouredGraph& from, const ColouredGraph& to);

}  // namespace tsde

#endif
