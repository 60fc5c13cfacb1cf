#include "tsde/calculus.hpp"

#include <algorithm>

#include "tsde/graph_io.hpp"

namespace tsde {

std::vector<Perm> graph_derivative(const DisconnectedGraph& Q, const DisconnectedGraph& C) {
  return all_isomorphisms(C, Q);
}

CorrelationFactor pullback(const Perm& sigma, const CorrelationFactor& f) {
  const Perm inv = sigma.inverse();
  CorrelationFactor out = f;
  for (ArgVector& av : out.args)
    for (Mom& m : av)
      if (m.kind == Mom::Kind::Slot) m.index = inv(m.index);
  return out;
}

SdeTerm pullback(const Perm& sigma, const SdeTerm& t) {
  const Perm inv = sigma.inverse();
  SdeTerm out = t;
  auto reroute = [&](Mom& m) {
    if (m.kind == Mom::Kind::Slot) m.index = inv(m.index);
  };
  for (CorrelationFactor& f : out.factors)
    for (ArgVector& av : f.args)
      for (Mom& m : av) reroute(m);
  for (PropFactor& p : out.props) {
    for (Mom& m : p.einv_args) reroute(m);
    reroute(p.u);
    reroute(p.v);
  }
  for (DummyVar& d : out.dummies)
    if (d.exclude) reroute(*d.exclude);
  return out;
}

namespace {

void require_block_order(const DisconnectedGraph& g) {
  int expect = 0;
  for (int ci = 0; ci < static_cast<int>(g.components.size()); ++ci)
    for (int li = 0; li < g.components[ci].k; ++li) {
      if (g.white_order[expect] != std::pair<int, int>(ci, li))
        throw error("calculus: disconnected graph must be in block white order");
      ++expect;
    }
}

}  // namespace

DisconnRemoval remove_edge(const DisconnectedGraph& B, int colour_a, int white_r) {
  require_block_order(B);
  if (white_r < 0 || white_r >= B.k()) throw error("remove_edge: white index out of range");
  const auto [ci, li] = B.white_order[white_r];
  const EdgeRemoval local = edge_remove(B.components[ci], colour_a, li);
  // an edge removal can cut its component in two
  const DisconnectedGraph pieces =
      local.graph.is_empty() ? DisconnectedGraph(B.rank, {}) : split_components(local.graph);

  DisconnRemoval out;
  out.common_colours = local.common_colours;
  out.target.rank = B.rank;
  std::vector<int> comp_index(B.components.size() + pieces.components.size(), -1);
  int piece_offset = -1;
  for (int c = 0; c < static_cast<int>(B.components.size()); ++c) {
    if (c == ci) {
      piece_offset = static_cast<int>(out.target.components.size());
      for (const auto& piece : pieces.components) out.target.components.push_back(piece);
    } else {
      comp_index[c] = static_cast<int>(out.target.components.size());
      out.target.components.push_back(B.components[c]);
    }
  }
  // the surviving whites keep their relative order (the collapse map)
  out.kappa.assign(B.k(), -1);
  int next = 0;
  for (int gl = 0; gl < B.k(); ++gl) {
    if (gl == white_r) continue;
    const auto [c, l] = B.white_order[gl];
    out.kappa[gl] = next++;
    if (c == ci) {
      const auto [pc, pl] = pieces.white_order[local.kappa[l]];
      out.target.white_order.push_back({piece_offset + pc, pl});
    } else {
      out.target.white_order.push_back({comp_index[c], l});
    }
  }
  return out;
}

DeltaResult delta_contract(const DisconnectedGraph& B, int colour_a, int white_r) {
  require_block_order(B);
  const int D = B.rank;
  const auto [ci, li] = B.white_order[white_r];
  const ColouredGraph& comp = B.components[ci];
  DisconnRemoval rem = remove_edge(B, colour_a, white_r);

  DeltaResult out;
  out.target = rem.target;

  // inserted momentum z^r
  ArgVector z(D);
  for (int c = 0; c < D; ++c) {
    if (c == colour_a) {
      z[c] = Mom::external();
    } else if (rem.common_colours.count(c)) {
      const int id = static_cast<int>(out.dummies.size());
      out.dummies.push_back(DummyVar{c, std::nullopt});
      z[c] = Mom::dummy(id);
    } else {
      // the white vertex whose colour-c edge ended at the removed black
      const int xi_local = comp.tau[c].inverse()(comp.tau[colour_a](li));
      const int xi_global = B.global_white(ci, xi_local);
      z[c] = Mom::slot(rem.kappa[xi_global]);
    }
  }

  // G_B evaluated at (y^1,...,y^{r-1}, z, y^r,...,y^{k-1})
  out.factor.graph = B;
  out.factor.args.resize(B.k());
  for (int i = 0; i < B.k(); ++i) {
    if (i == white_r) {
      out.factor.args[i] = z;
    } else {
      ArgVector av(D);
      for (int c = 0; c < D; ++c) av[c] = Mom::slot(rem.kappa[i]);
      out.factor.args[i] = av;
    }
  }
  return out;
}

std::vector<DeltaResult> pairing(const DisconnectedGraph& B, int colour_a) {
  std::vector<DeltaResult> out;
  for (int r = 0; r < B.k(); ++r) out.push_back(delta_contract(B, colour_a, r));
  return out;
}

ClassAlignment align_to_class(const DisconnectedGraph& g) {
  ClassAlignment out;
  out.rep = canonical_form(g);
  std::vector<Perm> isos = all_isomorphisms(g, out.rep);
  if (isos.empty()) throw error("align_to_class: no isomorphism onto canonical form");
  out.iso = *std::min_element(isos.begin(), isos.end());
  return out;
}

CorrelationFactor canonicalize_factor_graph(const CorrelationFactor& f) {
  ClassAlignment al = align_to_class(f.graph);
  CorrelationFactor out;
  out.graph = al.rep;
  out.args.resize(f.args.size());
  for (int i = 0; i < static_cast<int>(f.args.size()); ++i) out.args[al.iso(i)] = f.args[i];
  return out;
}

}  // namespace tsde
