#ifndef TSDE_ENUMERATE_HPP
#define TSDE_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tsde/graph.hpp"

namespace tsde {

struct budget_error : error {
  using error::error;
};

/// Search budget in gauge-fixed tuples; overridable via TSDE_BUDGET.
long long enumeration_budget();
constexpr long long kDefaultBudget = 10'000'000;

/// One representative per coloured-isomorphism class of connected graphs
/// with k white vertices in rank D, sorted by canonical string.
std::vector<GraphClass> enumerate_connected(int D, int k);

/// All classes with k whites, connected and not, as multisets of connected
/// classes, with their automorphism orders.
struct DisconnectedClass {
  DisconnectedGraph graph;  // canonical components, sorted
  long long aut_order = 1;
};
std::vector<DisconnectedClass> enumerate_all(int D, int k);

/// Exact class count predicted by orbit counting for tuples under
/// simultaneous conjugation: (1/k!) sum_pi |C(pi)|^(D-1).
long long burnside_class_count(int D, int k);

struct CensusRow {
  int rank = 0;
  int vertices = 0;
  std::string class_id;
  bool connected = true;
  long long aut_order = 1;
  Rational degree;
  long long colour_orbit = 1;
};

/// Census of classes with 2..2*k_max vertices; degree is only defined for
/// connected rows (disconnected rows report the per-component sum).
std::vector<CensusRow> census(int D, int k_max, bool connected_only);

/// Size of the S_D-orbit of the class under colour permutations.
long long colour_orbit_size(const DisconnectedGraph& g);

}  // namespace tsde

#endif
