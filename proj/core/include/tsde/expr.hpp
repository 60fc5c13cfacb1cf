#ifndef TSDE_EXPR_HPP
#define TSDE_EXPR_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsde/graph.hpp"
#include "tsde/rational.hpp"

namespace tsde {

/// One colour-entry of a momentum vector. The row a Mom sits in fixes its
/// colour, so only the reference is stored:
///   Slot     - entry of the ambient momentum matrix (x_c^slot)
///   Dummy    - summed variable, index into the term's dummy table
///   External - the WTI scalar s_c of the row's colour
struct Mom {
  enum class Kind { Slot, Dummy, External };
  Kind kind = Kind::Slot;
  int index = 0;

  static Mom slot(int i) { return {Kind::Slot, i}; }
  static Mom dummy(int i) { return {Kind::Dummy, i}; }
  static Mom external() { return {Kind::External, 0}; }
  friend bool operator==(const Mom&, const Mom&) = default;
  friend auto operator<=>(const Mom&, const Mom&) = default;
};

/// Full momentum: one entry per colour.
using ArgVector = std::vector<Mom>;

struct DummyVar {
  int colour = 0;
  std::optional<Mom> exclude;  // summand excluded (removable singularity)
  friend bool operator==(const DummyVar&, const DummyVar&) = default;
};

/// Correlation-function symbol G_B evaluated at explicit arguments over the
/// ambient slots. The graph is stored in whatever labeling produced it;
/// comparison and rendering canonicalize.
struct CorrelationFactor {
  DisconnectedGraph graph;
  std::vector<ArgVector> args;  // one per white slot of graph
  friend bool operator==(const CorrelationFactor&, const CorrelationFactor&) = default;
};

struct PropFactor {
  enum class Kind { EinvVec, Ediff };
  Kind kind = Kind::EinvVec;
  ArgVector einv_args;  // EinvVec: 1/E at a full momentum
  int colour = 0;       // Ediff: 1/(E_u - E_v) along this colour
  Mom u, v;
  friend bool operator==(const PropFactor&, const PropFactor&) = default;
};

/// One additive term of a Schwinger-Dyson equation right-hand side.
struct SdeTerm {
  Rational coeff = Rational(1);
  int lambda_pow = 0;
  bool es_prefactor = false;  // carries 1/E_s
  std::vector<DummyVar> dummies;
  std::vector<PropFactor> props;
  std::vector<CorrelationFactor> factors;
};

/// LHS dressing (1 + c * lambda / E_s * sum_a sum_dummies G2(s_a, ...)).
struct Dressing {
  Rational lambda_coeff = Rational(2);
  std::vector<int> colours;
};

struct SdeEquation {
  int rank = 0;
  std::string model;
  DisconnectedGraph boundary;  // labeled graph the equation was built on
  int alpha = 0;               // distinguished black vertex
  std::vector<int> s_slots;    // gamma_a: ambient slot carrying s_a, per colour
  CorrelationFactor lhs;
  Dressing dressing;
  std::vector<SdeTerm> rhs;
};

}  // namespace tsde

#endif
