#ifndef TSDE_CALCULUS_HPP
#define TSDE_CALCULUS_HPP

#include "tsde/expr.hpp"

namespace tsde {

/// Slot bijections C -> Q realizing coloured isomorphisms; the sigma of the
/// delta products in the graph derivative. Empty when the graphs are not
/// isomorphic; for Q = C this is the automorphism group on white slots.
std::vector<Perm> graph_derivative(const DisconnectedGraph& Q, const DisconnectedGraph& C);

/// (sigma* f)(x^1,...,x^k) = f(x^{sigma^-1(1)},...): ambient slot references
/// are rerouted through sigma^-1. Dummies and externals are untouched.
CorrelationFactor pullback(const Perm& sigma, const CorrelationFactor& f);
SdeTerm pullback(const Perm& sigma, const SdeTerm& t);

/// Edge removal on a possibly disconnected graph (block white order).
struct DisconnRemoval {
  DisconnectedGraph target;      // B (-) e_a^r, block order
  std::set<int> common_colours;  // I(e)
  std::vector<int> kappa;        // old global white -> new global white (-1 removed)
};
DisconnRemoval remove_edge(const DisconnectedGraph& B, int colour_a, int white_r);

/// Delta contraction of the canonical symbol G_B along e_a^r. The emitted
/// factor's arguments live over the white slots of the removed graph; the
/// inserted momentum carries the external scalar at colour a, a fresh dummy
/// for every other common colour, and slot references elsewhere.
struct DeltaResult {
  DisconnectedGraph target;  // the removed graph, inherited ordering
  std::vector<DummyVar> dummies;
  CorrelationFactor factor;
};
DeltaResult delta_contract(const DisconnectedGraph& B, int colour_a, int white_r);

/// <<G_B, B>>_{s_a}: one Delta contraction per white vertex.
std::vector<DeltaResult> pairing(const DisconnectedGraph& B, int colour_a);

/// Lexicographically least isomorphism from `g` onto the canonical
/// representative of its class; errors if none exists (cannot happen).
struct ClassAlignment {
  DisconnectedGraph rep;
  Perm iso;  // labeled slot -> rep slot
};
ClassAlignment align_to_class(const DisconnectedGraph& g);

/// Re-expresses a factor over the canonical representative of its class:
/// the recorded reorder permutation is folded into the argument list.
CorrelationFactor canonicalize_factor_graph(const CorrelationFactor& f);

}  // namespace tsde

#endif
