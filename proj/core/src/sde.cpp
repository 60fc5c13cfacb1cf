#include "tsde/sde.hpp"

#include <algorithm>

#include "tsde/graph_io.hpp"

namespace tsde {

bool ModelSpec::in_boundary_sector(const DisconnectedGraph& g) const {
  if (g.rank != rank) return false;
  if (family == Family::MelonicQuartic) return true;
  for (const ColouredGraph& comp : g.components)
    if (!is_isomorphic(comp, ColouredGraph::cyclic(rank, comp.k))) return false;
  return true;
}

namespace {

int max_yterm_order(const ModelSpec& model) {
  // the single-vertex sector grows only like the number of partitions, so
  // it supports much higher orders than the full quartic family
  if (model.family == ModelSpec::Family::SimpleV1) return 20;
  switch (model.rank) {
    case 3: return 6;
    case 4: return 4;
    default: return model.rank >= 5 ? 2 : 8;
  }
}

// boundary-sector classes with k white vertices
std::vector<DisconnectedClass> sector_classes(const ModelSpec& model, int k) {
  if (model.family == ModelSpec::Family::MelonicQuartic)
    return enumerate_all(model.rank, k);
  // multisets of cyclic components with sizes summing to k
  std::vector<DisconnectedClass> out;
  std::vector<ColouredGraph> stack;
  auto rec = [&](auto&& self, int remaining, int min_size) -> void {
    if (remaining == 0) {
      DisconnectedGraph g(model.rank, stack);
      DisconnectedClass dc;
      dc.aut_order = aut_order_disconnected(g);
      dc.graph = canonical_form(g);
      out.push_back(std::move(dc));
      return;
    }
    for (int s = min_size; s <= remaining; ++s) {
      stack.push_back(ColouredGraph::cyclic(model.rank, s));
      self(self, remaining - s, s);
      stack.pop_back();
    }
  };
  rec(rec, k, 1);
  std::sort(out.begin(), out.end(), [](const DisconnectedClass& a, const DisconnectedClass& b) {
    return render_graph(a.graph) < render_graph(b.graph);
  });
  return out;
}

void reroute_slots(SdeTerm& t, const std::vector<int>& map) {
  auto fix = [&](Mom& m) {
    if (m.kind == Mom::Kind::Slot) m.index = map[m.index];
  };
  for (CorrelationFactor& f : t.factors)
    for (ArgVector& av : f.args)
      for (Mom& m : av) fix(m);
  for (PropFactor& p : t.props) {
    for (Mom& m : p.einv_args) fix(m);
    fix(p.u);
    fix(p.v);
  }
  for (DummyVar& d : t.dummies)
    if (d.exclude) fix(*d.exclude);
}

/// Replace the ambient entry (slot, colour row) by `to` in the correlation
/// factors. Propagator prefactors are evaluated at the original X and are
/// left untouched.
void substitute_entry(SdeTerm& t, int slot, int colour, const Mom& to) {
  auto fix = [&](Mom& m, int row) {
    if (row == colour && m.kind == Mom::Kind::Slot && m.index == slot) m = to;
  };
  for (CorrelationFactor& f : t.factors)
    for (ArgVector& av : f.args)
      for (int c = 0; c < static_cast<int>(av.size()); ++c) fix(av[c], c);
}

/// External scalar s_a -> ambient slot reference.
void substitute_external(SdeTerm& t, const std::vector<int>& s_slots) {
  auto fix = [&](Mom& m, int row) {
    if (m.kind == Mom::Kind::External) m = Mom::slot(s_slots[row]);
  };
  for (CorrelationFactor& f : t.factors)
    for (ArgVector& av : f.args)
      for (int c = 0; c < static_cast<int>(av.size()); ++c) fix(av[c], c);
  for (PropFactor& p : t.props) {
    for (int c = 0; c < static_cast<int>(p.einv_args.size()); ++c) fix(p.einv_args[c], c);
    fix(p.u, p.colour);
    fix(p.v, p.colour);
  }
}

}  // namespace

std::vector<YGroup> y_term(const ModelSpec& model, int colour_a, int order) {
  if (order < 0 || order % 2 != 0) throw error("y_term: order must be even and >= 0");
  if (order > max_yterm_order(model))
    throw budget_error("y_term: order " + std::to_string(order) + " exceeds the rank-" +
                       std::to_string(model.rank) + " budget of " +
                       std::to_string(max_yterm_order(model)));

  std::map<std::string, YGroup> groups;
  for (int source_k = 1; source_k <= order / 2 + 1; ++source_k) {
    for (const DisconnectedClass& cls : sector_classes(model, source_k)) {
      if (!model.in_boundary_sector(cls.graph)) continue;
      const Rational weight(1, cls.aut_order);
      for (int r = 0; r < source_k; ++r) {
        DeltaResult dr = delta_contract(cls.graph, colour_a, r);
        ClassAlignment al = align_to_class(dr.target);
        // fold the reorder permutation into the ambient references
        std::vector<int> slot_map(dr.target.k());
        for (int i = 0; i < dr.target.k(); ++i) slot_map[i] = al.iso(i);

        YFragment frag;
        frag.coeff = weight;
        frag.source = cls.graph;
        frag.removal_white = r;
        frag.reorder = al.iso;
        frag.term.coeff = weight;
        frag.term.dummies = dr.dummies;
        frag.term.factors = {dr.factor};
        reroute_slots(frag.term, slot_map);

        const std::string key = render_graph(al.rep);
        auto it = groups.find(key);
        if (it == groups.end()) {
          YGroup g;
          g.target = al.rep;
          it = groups.emplace(key, std::move(g)).first;
        }
        it->second.fragments.push_back(std::move(frag));
      }
    }
  }
  std::vector<YGroup> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), [](const YGroup& a, const YGroup& b) {
    if (a.target.k() != b.target.k()) return a.target.k() < b.target.k();
    return render_graph(a.target) < render_graph(b.target);
  });
  return out;
}

std::vector<std::vector<CorrelationFactor>> expand_disconnected_derivative(
    const DisconnectedGraph& C) {
  const int ncomp = static_cast<int>(C.components.size());
  if (ncomp == 0) return {};
  if (ncomp > 2)
    throw error("expand_disconnected_derivative: more than two components unsupported");

  auto component_factor = [&](int ci) {
    const ColouredGraph& comp = C.components[ci];
    CorrelationFactor f;
    f.graph = DisconnectedGraph(comp);
    f.args.resize(comp.k);
    for (int li = 0; li < comp.k; ++li)
      f.args[li] = ArgVector(C.rank, Mom::slot(C.global_white(ci, li)));
    return canonicalize_factor_graph(f);
  };

  if (ncomp == 1) return {{component_factor(0)}};

  // product of the two connected functions, plus the disconnected-boundary one
  std::vector<std::vector<CorrelationFactor>> out;
  out.push_back({component_factor(0), component_factor(1)});

  CorrelationFactor whole;
  whole.graph = DisconnectedGraph(C.rank, {C.components[0], C.components[1]});
  whole.args.resize(C.k());
  int block = 0;
  for (int ci = 0; ci < 2; ++ci)
    for (int li = 0; li < C.components[ci].k; ++li)
      whole.args[block++] = ArgVector(C.rank, Mom::slot(C.global_white(ci, li)));
  out.push_back({canonicalize_factor_graph(whole)});
  return out;
}

SdeEquation sde_equation(const ModelSpec& model, const ColouredGraph& B, int alpha) {
  if (!is_connected(B)) throw error("sde_equation: boundary graph must be connected");
  if (!model.in_boundary_sector(DisconnectedGraph(B)))
    throw error("sde_equation: graph outside the model's boundary sector");
  if (alpha < 0 || alpha >= B.k) throw error("sde_equation: alpha out of range");
  const int D = model.rank;
  const int k = B.k;

  SdeEquation eq;
  eq.rank = D;
  eq.model = model.name();
  eq.boundary = DisconnectedGraph(B);
  eq.alpha = alpha;
  eq.s_slots.resize(D);
  for (int a = 0; a < D; ++a) eq.s_slots[a] = B.tau[a].inverse()(alpha);

  eq.lhs.graph = DisconnectedGraph(B);
  eq.lhs.args.resize(k);
  for (int i = 0; i < k; ++i) eq.lhs.args[i] = ArgVector(D, Mom::slot(i));
  eq.lhs = canonicalize_factor_graph(eq.lhs);
  eq.dressing.lambda_coeff = Rational(2);
  eq.dressing.colours = model.interaction_colours();

  if (k == 1) {
    SdeTerm bare;
    bare.coeff = Rational(1);
    bare.lambda_pow = 0;
    bare.es_prefactor = true;
    eq.rhs.push_back(std::move(bare));
  }

  const ClassAlignment alB = align_to_class(DisconnectedGraph(B));
  const Perm nu_inv = alB.iso.inverse();  // rep slot -> B slot
  std::vector<int> rep_to_B(k);
  for (int j = 0; j < k; ++j) rep_to_B[j] = nu_inv(j);
  const std::vector<Perm> auts = aut_group(B);
  const std::string B_class = render_graph(alB.rep);

  for (int a : model.interaction_colours()) {
    // (iii) f-terms from the Ward identity, summed over Aut_c(B)
    const auto groups = y_term(model, a, 2 * k);
    for (const YGroup& g : groups) {
      if (render_graph(g.target) != B_class) continue;
      for (const YFragment& frag : g.fragments) {
        for (const Perm& sigma : auts) {
          SdeTerm t = frag.term;
          reroute_slots(t, rep_to_B);
          t = pullback(sigma, t);
          substitute_external(t, eq.s_slots);
          t.coeff = frag.coeff * Rational(-2);
          t.lambda_pow = 1;
          t.es_prefactor = true;
          eq.rhs.push_back(std::move(t));
        }
      }
    }

    // (iv) swap terms: one pair per black vertex rho != alpha
    for (int rho = 0; rho < k; ++rho) {
      if (rho == alpha) continue;
      const DisconnectedGraph C = sigma_swap(B, a, alpha, rho, VertexColour::Black);
      const Mom y_rho = Mom::slot(B.tau[a].inverse()(rho));
      const Mom s_a = Mom::slot(eq.s_slots[a]);
      for (const auto& product : expand_disconnected_derivative(C)) {
        SdeTerm t;
        t.coeff = Rational(-2);
        t.lambda_pow = 1;
        t.es_prefactor = true;
        t.props.push_back(PropFactor{PropFactor::Kind::Ediff, {}, a, y_rho, s_a});
        t.factors = product;
        SdeTerm t2 = t;
        t2.coeff = Rational(2);
        substitute_entry(t2, eq.s_slots[a], a, y_rho);
        eq.rhs.push_back(std::move(t));
        eq.rhs.push_back(std::move(t2));
      }
    }

    // (v) propagator-difference terms; the b_a = s_a summand is removable
    {
      CorrelationFactor gb = eq.lhs;
      SdeTerm t;
      t.coeff = Rational(2);
      t.lambda_pow = 1;
      t.es_prefactor = true;
      t.dummies.push_back(DummyVar{a, Mom::slot(eq.s_slots[a])});
      t.props.push_back(
          PropFactor{PropFactor::Kind::Ediff, {}, a, Mom::slot(eq.s_slots[a]), Mom::dummy(0)});
      t.factors = {gb};
      SdeTerm t2 = t;
      t2.coeff = Rational(-2);
      substitute_entry(t2, eq.s_slots[a], a, Mom::dummy(0));
      eq.rhs.push_back(std::move(t));
      eq.rhs.push_back(std::move(t2));
    }
  }
  return eq;
}

}  // namespace tsde
