#ifndef TSDE_SDE_HPP
#define TSDE_SDE_HPP

#include <map>
#include <string>

#include "tsde/calculus.hpp"
#include "tsde/enumerate.hpp"
#include "tsde/expr.hpp"
#include "tsde/open_graph.hpp"

namespace tsde {

/// Model selection for the generator: the quartic melonic family (all V_a)
/// or the single-vertex model with interaction V_1 only.
struct ModelSpec {
  int rank = 3;
  enum class Family { MelonicQuartic, SimpleV1 } family = Family::MelonicQuartic;

  static ModelSpec melonic_quartic(int D) { return {D, Family::MelonicQuartic}; }
  static ModelSpec simple_v1() { return {3, Family::SimpleV1}; }

  std::string name() const {
    return family == Family::MelonicQuartic ? "melonic-quartic" : "simple-v1";
  }
  ModelVertexSet vertex_set() const {
    return family == Family::MelonicQuartic ? ModelVertexSet::melonic_quartic(rank)
                                            : ModelVertexSet::simple_v1(rank);
  }
  /// Colours whose interaction vertex exists (drives the SDE colour sum).
  std::vector<int> interaction_colours() const {
    if (family == Family::SimpleV1) return {0};
    std::vector<int> all(rank);
    for (int c = 0; c < rank; ++c) all[c] = c;
    return all;
  }
  bool in_boundary_sector(const DisconnectedGraph& g) const;
};

/// One collected contribution to the Ward-identity generating functional:
/// weight 1/|Aut(source)| times the Delta contraction along (colour, r),
/// re-expressed over the canonical representative of the target class.
struct YFragment {
  Rational coeff;
  DisconnectedGraph source;
  int removal_white = 0;
  Perm reorder;  // removed labeled graph -> target representative
  SdeTerm term;  // single factor; the WTI scalar stays Mom::External
};

struct YGroup {
  DisconnectedGraph target;  // canonical representative
  std::vector<YFragment> fragments;
};

/// Boundary-graph expansion of Y^(a) up to J-cycles of `order` sources.
std::vector<YGroup> y_term(const ModelSpec& model, int colour_a, int order);

/// Products of correlation symbols produced by a Z-derivative with respect
/// to a possibly disconnected graph whose slots are ambient slots.
std::vector<std::vector<CorrelationFactor>> expand_disconnected_derivative(
    const DisconnectedGraph& C);

/// The (2k)-point equation for a connected boundary graph, built on the
/// labeling of `B` with the distinguished black vertex `alpha`.
SdeEquation sde_equation(const ModelSpec& model, const ColouredGraph& B, int alpha);

// ---- comparison -------------------------------------------------------------

struct EquationDiff {
  bool equal = false;
  std::string report;
};

/// Multiset equality modulo dummy renaming, factor relabeling through
/// coloured isomorphisms, commutativity, and propagator-difference
/// orientation. Coefficients of identical shapes are aggregated first.
EquationDiff equation_multiset_equal(const SdeEquation& a, const SdeEquation& b);

/// Canonical key -> aggregated coefficient for the RHS terms.
std::map<std::string, Rational> term_multiset(const std::vector<SdeTerm>& terms);
std::string canonical_term_key(const SdeTerm& t, Rational* sign_adjusted_coeff);

/// Fragment multisets for y_term comparisons: the target class is folded
/// into the key, the coefficient aggregates.
std::map<std::string, Rational> fragment_multiset(const std::vector<YGroup>& groups);

// ---- rendering --------------------------------------------------------------

enum class RenderFormat { Json, Text, Latex };
std::string render(const SdeEquation& eq, RenderFormat format);
std::string render(const std::vector<YGroup>& groups, RenderFormat format);

SdeEquation parse_equation_json(const std::string& text);
std::vector<YGroup> parse_yterm_json(const std::string& text);

}  // namespace tsde

#endif
