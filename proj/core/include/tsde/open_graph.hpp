#ifndef TSDE_OPEN_GRAPH_HPP
#define TSDE_OPEN_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsde/graph.hpp"

namespace tsde {

/// Interaction vertex set of a model (pairwise non-isomorphic).
struct ModelVertexSet {
  int rank = 0;
  std::vector<ColouredGraph> vertices;

  static ModelVertexSet melonic_quartic(int D);
  /// The single-vertex model of the simple theory: { V_1 }.
  static ModelVertexSet simple_v1(int D);
};

/// Open (D+1)-coloured Feynman graph. Internal vertices are regular in
/// colours 1..D (a permutation per colour); colour 0 is a matching between
/// the white side (internal whites + white-type sources) and the black side
/// (internal blacks + black-type sources). External sources are valence-1.
struct OpenGraph {
  enum class EndKind { IntWhite, IntBlack, Ext };
  struct End {
    EndKind kind;
    int index;  // vertex index, or external label-1
    friend bool operator==(const End&, const End&) = default;
  };

  int rank = 0;
  int n = 0;               // internal white = black count
  std::vector<Perm> tau;   // colours 1..D on internal vertices
  int legs = 0;            // number of external slots (even)
  std::vector<bool> ext_is_white_source;  // per external label
  // zero matching, one entry per white-side element:
  std::vector<End> zero_of_int_white;     // size n
  std::vector<End> zero_of_white_source;  // per white-source ext, in label order

  void validate() const;
  std::vector<int> white_source_labels() const;
  std::vector<int> black_source_labels() const;
};

/// Boundary map: closed rank-D graph on the external legs, edges via
/// 0a-bicoloured paths. Source-vertex colours carry over (J-type sources
/// become the boundary whites).
DisconnectedGraph boundary(const OpenGraph& g);

/// Amputate legs, drop colour 0, and test all components against the
/// model's vertex set.
bool is_feynman(const OpenGraph& g, const ModelVertexSet& model);

/// Constructive boundary witness for quartic models: a Feynman graph G with
/// boundary(G) isomorphic to B, or nullopt when the chain construction does
/// not apply.
std::optional<OpenGraph> realize_boundary(const DisconnectedGraph& B,
                                          const ModelVertexSet& model);

/// Exhaustive search for a Feynman witness with the given interaction
/// vertices and boundary class; used to reconstruct small reference graphs.
std::optional<OpenGraph> find_feynman_witness(const DisconnectedGraph& B,
                                              const std::vector<ColouredGraph>& vertices);

/// Line-oriented file format: header `open{D=..,n=..,legs=..}` then one
/// edge per line `colour src dst` with w<i>/b<i>/ext<i> vertex ids.
std::string render_open_graph(const OpenGraph& g);
OpenGraph parse_open_graph(const std::string& text);

}  // namespace tsde

#endif
