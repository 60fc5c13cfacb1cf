#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tsde/graph_io.hpp"
#include "tsde/sde.hpp"

using namespace tsde;

namespace {

const ColouredGraph k33 = parse_connected_graph("g{D=3,k=3}[1,2,3|3,1,2|2,3,1]");

int count_ediff_pairs(const SdeEquation& eq) {
  // swap families: terms with an Ediff between two slot references
  std::set<std::string> dens;
  for (const SdeTerm& t : eq.rhs)
    for (const PropFactor& p : t.props)
      if (p.kind == PropFactor::Kind::Ediff && p.u.kind == Mom::Kind::Slot &&
          p.v.kind == Mom::Kind::Slot)
        dens.insert(std::to_string(p.colour) + ":" + std::to_string(p.u.index) + "," +
                    std::to_string(p.v.index));
  return static_cast<int>(dens.size());
}

int count_difference_sums(const SdeEquation& eq) {
  std::set<int> colours;
  for (const SdeTerm& t : eq.rhs)
    if (!t.dummies.empty() && t.dummies[0].exclude) colours.insert(t.dummies[0].colour);
  return static_cast<int>(colours.size());
}

SdeTerm perturb(const SdeTerm& t) {
  SdeTerm out = t;
  out.coeff = out.coeff + Rational(1);
  return out;
}

}  // namespace

TEST_CASE("term counts for rank-3 equations") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& cls : enumerate_connected(3, k)) {
      for (int alpha = 0; alpha < k; ++alpha) {
        const SdeEquation eq = sde_equation(model, cls.canonical, alpha);
        CHECK(count_ediff_pairs(eq) == (k - 1) * 3);
        CHECK(count_difference_sums(eq) == 3);
        bool has_bare = false;
        for (const SdeTerm& t : eq.rhs)
          has_bare = has_bare || (t.lambda_pow == 0 && t.factors.empty());
        CHECK(has_bare == (k == 1));
      }
    }
  }
}

TEST_CASE("two-point equation terms") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const SdeEquation eq = sde_equation(model, ColouredGraph::melon(3), 0);
  // bare propagator term present exactly once
  int bare = 0;
  for (const SdeTerm& t : eq.rhs)
    if (t.lambda_pow == 0) ++bare;
  CHECK(bare == 1);
  // f-terms reference the 4-point functions: two-melon class and all V_i
  std::set<std::string> classes;
  for (const SdeTerm& t : eq.rhs)
    for (const CorrelationFactor& f : t.factors) classes.insert(render_graph(f.graph));
  CHECK(classes.count(class_string(DisconnectedGraph(
      3, {ColouredGraph::melon(3), ColouredGraph::melon(3)}))));
  for (int a = 0; a < 3; ++a)
    CHECK(classes.count(class_string(DisconnectedGraph(ColouredGraph::quartic_vertex(3, a)))));
}

TEST_CASE("expand_disconnected_derivative cases") {
  // connected: a single symbol
  CHECK(expand_disconnected_derivative(DisconnectedGraph(k33)).size() == 1);
  // two components: product plus the disconnected-boundary symbol
  const DisconnectedGraph two(3, {ColouredGraph::melon(3), ColouredGraph::melon(3)});
  const auto products = expand_disconnected_derivative(two);
  REQUIRE(products.size() == 2);
  CHECK(products[0].size() == 2);
  CHECK(products[1].size() == 1);
  CHECK(products[1][0].graph.components.size() == 2);
  // more than two components is outside the quartic swap pattern
  const DisconnectedGraph three(
      3, {ColouredGraph::melon(3), ColouredGraph::melon(3), ColouredGraph::melon(3)});
  CHECK_THROWS_AS(expand_disconnected_derivative(three), error);
}

TEST_CASE("the swap of the quartic 4-point equation splits into melons") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const SdeEquation eq = sde_equation(model, ColouredGraph::quartic_vertex(3, 0), 0);
  // the colour-1 swap must contribute a two-factor product term
  bool product_found = false, disc_found = false;
  for (const SdeTerm& t : eq.rhs) {
    if (t.factors.size() == 2) product_found = true;
    for (const CorrelationFactor& f : t.factors)
      if (f.graph.components.size() == 2 && f.graph.k() == 2) disc_found = true;
  }
  CHECK(product_found);
  CHECK(disc_found);
}

TEST_CASE("equation comparison flags perturbed coefficients") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const SdeEquation eq = sde_equation(model, ColouredGraph::quartic_vertex(3, 0), 0);
  CHECK(equation_multiset_equal(eq, eq).equal);

  SdeEquation tweaked = eq;
  tweaked.rhs[0] = perturb(tweaked.rhs[0]);
  const EquationDiff diff = equation_multiset_equal(eq, tweaked);
  CHECK_FALSE(diff.equal);
  CHECK(diff.report.find("coefficient") != std::string::npos);
}

TEST_CASE("json rendering round-trips through the parser") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  for (const auto& B : {ColouredGraph::melon(3), ColouredGraph::quartic_vertex(3, 1), k33}) {
    const SdeEquation eq = sde_equation(model, B, 0);
    const std::string json = render(eq, RenderFormat::Json);
    const SdeEquation back = parse_equation_json(json);
    CHECK(equation_multiset_equal(eq, back).equal);
    CHECK(render(back, RenderFormat::Json) == json);
  }
}

TEST_CASE("text and latex renderings are deterministic") {
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const SdeEquation eq = sde_equation(model, ColouredGraph::quartic_vertex(3, 0), 0);
  CHECK(render(eq, RenderFormat::Text) == render(eq, RenderFormat::Text));
  CHECK(render(eq, RenderFormat::Latex).find("\\lambda") != std::string::npos);
}

TEST_CASE("colour covariance of the generated equations") {
  // relabel colours 2 <-> 3 of the boundary graph; the generated equation
  // must be the colour-swapped image of the original
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const ColouredGraph v2 = ColouredGraph::quartic_vertex(3, 1);
  const ColouredGraph v3 = ColouredGraph::quartic_vertex(3, 2);
  const SdeEquation eq2 = sde_equation(model, v2, 0);
  const SdeEquation eq3 = sde_equation(model, v3, 0);

  auto swap_colours = [](SdeEquation eq, int c1, int c2) {
    auto fix_factor = [&](CorrelationFactor& f) {
      for (auto& comp : f.graph.components) std::swap(comp.tau[c1], comp.tau[c2]);
      for (auto& av : f.args) std::swap(av[c1], av[c2]);
    };
    fix_factor(eq.lhs);
    for (auto& comp : eq.boundary.components) std::swap(comp.tau[c1], comp.tau[c2]);
    std::swap(eq.s_slots[c1], eq.s_slots[c2]);
    for (auto& t : eq.rhs) {
      for (auto& f : t.factors) fix_factor(f);
      for (auto& p : t.props) {
        if (p.kind == PropFactor::Kind::EinvVec) std::swap(p.einv_args[c1], p.einv_args[c2]);
        if (p.colour == c1)
          p.colour = c2;
        else if (p.colour == c2)
          p.colour = c1;
      }
      for (auto& d : t.dummies) {
        if (d.colour == c1)
          d.colour = c2;
        else if (d.colour == c2)
          d.colour = c1;
      }
    }
    return eq;
  };
  const EquationDiff diff = equation_multiset_equal(swap_colours(eq2, 1, 2), eq3);
  CHECK_MESSAGE(diff.equal, diff.report);
}

TEST_CASE("simple model equations collapse the colour sum") {
  const ModelSpec simple = ModelSpec::simple_v1();
  const SdeEquation eq = sde_equation(simple, ColouredGraph::cyclic(3, 2), 0);
  CHECK(eq.dressing.colours == std::vector<int>{0});
  CHECK(count_difference_sums(eq) == 1);
  CHECK(count_ediff_pairs(eq) == 1);
  // boundary sector guard
  CHECK_THROWS_AS(sde_equation(simple, k33, 0), error);
  // every factor's class stays inside the Theta family
  for (const SdeTerm& t : eq.rhs)
    for (const CorrelationFactor& f : t.factors)
      for (const auto& comp : f.graph.components)
        CHECK(is_isomorphic(comp, ColouredGraph::cyclic(3, comp.k)));
}

TEST_CASE("alpha choice only relabels the simple-model equation") {
  const ModelSpec simple = ModelSpec::simple_v1();
  const ColouredGraph x6 = ColouredGraph::cyclic(3, 3);
  const SdeEquation eq0 = sde_equation(simple, x6, 0);
  const SdeEquation eq1 = sde_equation(simple, x6, 1);
  // rotating the ambient slots by the cyclic symmetry maps one onto the other
  const Perm rot = Perm::cycle(3);  // white i -> i+1, lifts to black i -> i+1
  SdeEquation rotated = eq0;
  for (auto& t : rotated.rhs) t = pullback(rot.inverse(), t);
  {
    auto fix = [&](Mom& m) {
      if (m.kind == Mom::Kind::Slot) m.index = rot(m.index);
    };
    for (auto& av : rotated.lhs.args)
      for (auto& m : av) fix(m);
  }
  const EquationDiff diff = equation_multiset_equal(rotated, eq1);
  CHECK_MESSAGE(diff.equal, diff.report);
}

TEST_CASE("y_term budget guard") {
  CHECK_THROWS_AS(y_term(ModelSpec::melonic_quartic(3), 0, 8), budget_error);
  CHECK_THROWS_AS(y_term(ModelSpec::melonic_quartic(4), 0, 6), budget_error);
  CHECK_THROWS_AS(y_term(ModelSpec::melonic_quartic(5), 0, 4), budget_error);
}

TEST_CASE("y_term rank 3 order 0: the tadpole sum") {
  const auto groups = y_term(ModelSpec::melonic_quartic(3), 0, 0);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].target.k() == 0);
  REQUIRE(groups[0].fragments.size() == 1);
  const YFragment& f = groups[0].fragments[0];
  CHECK(f.coeff == Rational(1));
  CHECK(f.term.dummies.size() == 2);
  CHECK(render_graph(f.source) == "g{D=3,k=1}[1|1|1]");
}

TEST_CASE("y_term rank 4 order 2 matches the melon-target structure") {
  // coefficient of the melon J-cycle: two-melon class, the four vertices,
  // and the three necklaces, each with both removals and weight 1/2
  const auto groups = y_term(ModelSpec::melonic_quartic(4), 0, 2);
  const DisconnectedGraph melon4(ColouredGraph::melon(4));
  bool found = false;
  for (const auto& g : groups) {
    if (render_graph(g.target) != class_string(melon4)) continue;
    found = true;
    std::map<std::string, int> per_source;
    for (const auto& frag : g.fragments) {
      CHECK(frag.coeff == Rational(1, 2));
      ++per_source[render_graph(frag.source)];
    }
    CHECK(per_source.size() == 8);  // |m|m| + 4 V_i + 3 necklaces
    for (const auto& [src, n] : per_source) CHECK(n == 2);
  }
  CHECK(found);
}

TEST_CASE("fragment multisets are stable under relabeling the target") {
  const auto a = y_term(ModelSpec::melonic_quartic(3), 0, 2);
  const auto b = y_term(ModelSpec::melonic_quartic(3), 0, 2);
  CHECK(fragment_multiset(a) == fragment_multiset(b));
}

TEST_CASE("both members of every swap difference are emitted") {
  // regression guard for the historically missed second member: each swap
  // denominator must come with the term evaluated at the substituted
  // argument, with the opposite sign
  const ModelSpec model = ModelSpec::melonic_quartic(3);
  const ColouredGraph k33g = parse_connected_graph("g{D=3,k=3}[1,2,3|3,1,2|2,3,1]");
  const SdeEquation eq = sde_equation(model, k33g, 0);
  std::map<std::string, std::vector<Rational>> by_denominator;
  for (const SdeTerm& t : eq.rhs)
    for (const PropFactor& p : t.props)
      if (p.kind == PropFactor::Kind::Ediff && p.u.kind == Mom::Kind::Slot &&
          p.v.kind == Mom::Kind::Slot)
        by_denominator[std::to_string(p.colour) + ":" + std::to_string(p.u.index) + "," +
                       std::to_string(p.v.index)]
            .push_back(t.coeff);
  CHECK(by_denominator.size() == 6);
  for (const auto& [den, coeffs] : by_denominator) {
    Rational sum(0);
    for (const Rational& c : coeffs) sum = sum + c;
    CHECK(coeffs.size() == 2);  // the pair at X and at the substituted argument
    CHECK(sum == Rational(0));
  }
}

TEST_CASE("the single-vertex sector supports high orders") {
  // partitions grow slowly, so the tower is available well past the
  // quartic-family cutoff
  const ModelSpec simple = ModelSpec::simple_v1();
  const auto groups = y_term(simple, 0, 10);
  bool found = false;
  for (const YGroup& grp : groups)
    if (grp.target.connected() && grp.target.k() == 5) {
      found = true;
      // sources: the mixed melon class once, the next cycle with all removals
      CHECK(grp.fragments.size() == 1 + 6);
      for (const YFragment& f : grp.fragments)
        CHECK((f.coeff == Rational(1, 5) || f.coeff == Rational(1, 6)));
    }
  CHECK(found);
  const SdeEquation eq = sde_equation(simple, ColouredGraph::cyclic(3, 5), 2);
  CHECK(eq.boundary.k() == 5);
  CHECK_THROWS_AS(y_term(ModelSpec::melonic_quartic(3), 0, 8), budget_error);
}
