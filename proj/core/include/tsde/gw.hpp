#ifndef TSDE_GW_HPP
#define TSDE_GW_HPP

#include <array>
#include <string>
#include <vector>

#include "tsde/graph.hpp"

namespace tsde {

/// Boundary graph of the Gurau-Witten model: octo-partite vertices (colours
/// 0..3 and their conjugates, encoded 0..7 with bar = +4 mod 8), edges
/// labeled by unordered pairs of distinct colours.
struct GwGraph {
  std::vector<int> vertex_colours;                 // values 0..7
  std::vector<std::array<int, 4>> edges;           // (u, v, a, b) with a < b

  static int bar_colour(int c) { return (c + 4) % 8; }
  static int projection(int c) { return c % 4; }

  GwGraph conjugate() const;
  bool connected() const;
  std::string canonical_string() const;
  /// Re-verifies the structural constraints on vertices and edge labels.
  bool satisfies_constraints() const;
  /// Multiset (kappa_0..kappa_3, kappa_0bar..kappa_3bar).
  std::array<int, 8> kappa() const;
};

/// All admissible boundary graphs with 2k external triangles, up to
/// colour-preserving isomorphism; 2k in {2, 4}.
std::vector<GwGraph> enumerate_gw_boundaries(int two_k);

/// Family tags used in the four-point classification.
enum class GwFamily { TwoPoint, Broken, Unbroken, MixedDisconnected, MixedConnected,
                      Exceptional, Other };
GwFamily classify_gw(const GwGraph& g);
std::string gw_family_name(GwFamily f);

}  // namespace tsde

#endif
