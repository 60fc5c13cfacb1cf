// Acceptance suite: one line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "tsde/enumerate.hpp"
#include "tsde/graph_io.hpp"
#include "tsde/gw.hpp"
#include "tsde/open_graph.hpp"
#include "tsde/sde.hpp"
#include "tsde/solver.hpp"

using namespace tsde;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const ColouredGraph k33 = parse_connected_graph("g{D=3,k=3}[1,2,3|3,1,2|2,3,1]");

void criterion_1_census() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const long long expect[] = {1, 15, 235, 14120};
  std::string detail;
  for (int k = 1; k <= 4; ++k) {
    const long long got = static_cast<long long>(enumerate_connected(5, k).size());
    if (got != expect[k - 1]) {
      ok = false;
      detail += "k=" + std::to_string(k) + ": " + std::to_string(got) + " ";
    }
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  report(1, "rank-5 connected census 1, 15, 235, 14120",
         ok, detail + "runtime " + std::to_string(dt) + " s");
}

void criterion_2_burnside() {
  bool ok = true;
  std::string detail;
  for (int D = 2; D <= 5; ++D)
    for (int k = 1; k <= 4; ++k) {
      const long long got = static_cast<long long>(enumerate_all(D, k).size());
      const long long want = burnside_class_count(D, k);
      if (got != want) {
        ok = false;
        detail += "(D=" + std::to_string(D) + ",k=" + std::to_string(k) + ") ";
      }
    }
  report(2, "orbit-count identity for all D <= 5, k <= 4", ok, detail);
}

void criterion_3_automorphisms() {
  bool ok = aut_order(ColouredGraph::melon(3)) == 1;
  for (int a = 0; a < 3; ++a) ok = ok && aut_order(ColouredGraph::quartic_vertex(3, a)) == 2;
  ok = ok && aut_order(k33) == 3;
  // the three cyclic six-vertex classes
  for (int special = 0; special < 3; ++special) {
    std::vector<Perm> taus(3, Perm::cycle(3));
    taus[special] = Perm::identity(3);
    ok = ok && aut_order(ColouredGraph(3, taus)) == 3;
  }
  for (int a = 0; a < 3; ++a)
    ok = ok && aut_order(sigma_swap(k33, a, 0, 1, VertexColour::Black).single()) == 1;
  for (int k = 1; k <= 6; ++k) ok = ok && aut_order(ColouredGraph::cyclic(3, k)) == k;
  // disconnected product formula against brute force, up to 8 vertices
  for (int k = 1; k <= 4; ++k)
    for (const auto& cls : enumerate_all(3, k))
      ok = ok && cls.aut_order == aut_order_disconnected_brute(cls.graph);
  report(3, "automorphism orders and the disconnected product formula", ok);
}

void criterion_4_degree() {
  bool ok = gurau_degree(ColouredGraph::melon(3)) == Rational(0);
  ok = ok && gurau_degree(k33) == Rational(1);
  for (const auto& cls : enumerate_connected(3, 2)) ok = ok && cls.degree == Rational(0);
  ok = ok && jacket_count(3) == 1 && jacket_count(4) == 3 && jacket_count(5) == 12;
  report(4, "degree oracles and jacket counts", ok);
}

void criterion_5_boundary() {
  bool ok = true;
  std::string detail;
  const ModelVertexSet quartic = ModelVertexSet::melonic_quartic(3);
  // stored six-leg witness
  const OpenGraph stored =
      parse_open_graph(read_file(std::string(TSDE_FIXTURE_DIR) + "/open/k33_feynman.open"));
  ok = ok && is_isomorphic(boundary(stored), DisconnectedGraph(k33));
  ok = ok && is_feynman(stored, quartic);
  // the cone of K33 bounds K33 but is not a Feynman graph
  OpenGraph coned;
  coned.rank = 3;
  coned.n = 3;
  coned.tau = k33.tau;
  coned.legs = 6;
  coned.ext_is_white_source = {true, true, true, false, false, false};
  for (int i = 0; i < 3; ++i) {
    coned.zero_of_white_source.push_back({OpenGraph::EndKind::IntBlack, i});
    coned.zero_of_int_white.push_back({OpenGraph::EndKind::Ext, 3 + i});
  }
  ok = ok && is_isomorphic(boundary(coned), DisconnectedGraph(k33));
  ok = ok && !is_feynman(coned, quartic);
  // a two-vertex vacuum graph is Feynman
  {
    OpenGraph vac;
    vac.rank = 3;
    vac.n = 4;
    vac.tau.assign(3, Perm::identity(4));
    const ColouredGraph v1 = ColouredGraph::quartic_vertex(3, 0);
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < 2; ++i) {
        vac.tau[c].img[i] = v1.tau[c](i);
        vac.tau[c].img[2 + i] = 2 + v1.tau[c](i);
      }
    vac.legs = 0;
    vac.zero_of_int_white = {{OpenGraph::EndKind::IntBlack, 2},
                             {OpenGraph::EndKind::IntBlack, 3},
                             {OpenGraph::EndKind::IntBlack, 0},
                             {OpenGraph::EndKind::IntBlack, 1}};
    ok = ok && is_feynman(vac, quartic) && boundary(vac).k() == 0;
  }
  // constructive surjectivity at small sizes
  for (int k = 1; k <= 2; ++k)
    for (const auto& cls : enumerate_connected(3, k)) {
      const DisconnectedGraph B(cls.canonical);
      const auto witness = realize_boundary(B, quartic);
      if (!witness || !is_feynman(*witness, quartic) || !is_isomorphic(boundary(*witness), B)) {
        ok = false;
        detail += render_graph(B) + " ";
      }
    }
  report(5, "boundary map, Feynman membership, and constructive boundary witnesses", ok,
         detail);
}

void criterion_6_golden() {
  namespace fs = std::filesystem;
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(std::string(TSDE_FIXTURE_DIR) + "/paper")) {
    if (entry.path().extension() != ".json") continue;
    const auto j = nlohmann::json::parse(read_file(entry.path().string()));
    const std::string kind = j.value("kind", "equation");
    bool this_ok = false;
    if (kind == "equation") {
      const SdeEquation fix = parse_equation_json(j.at("equation").dump());
      const ModelSpec model = fix.model == "simple-v1"
                                  ? ModelSpec::simple_v1()
                                  : ModelSpec::melonic_quartic(fix.rank);
      const SdeEquation gen = sde_equation(model, fix.boundary.single(), fix.alpha);
      this_ok = equation_multiset_equal(gen, fix).equal;
    } else if (kind == "yterm") {
      const auto fix = parse_yterm_json(j.at("payload").dump());
      const auto gen = y_term(ModelSpec::melonic_quartic(j.at("rank").get<int>()),
                              j.at("colour").get<int>() - 1, j.at("order").get<int>());
      this_ok = fragment_multiset(gen) == fragment_multiset(fix);
    }
    ++checked;
    if (!this_ok) {
      ok = false;
      detail += entry.path().filename().string() + " ";
    }
  }
  ok = ok && checked == 14;
  report(6, "golden equations and the order-6 Ward expansion", ok,
         detail + std::to_string(checked) + " fixtures");
}

void criterion_7_solver() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  // free theory solved exactly
  {
    ModelParams p;
    p.lambda = 0.0;
    p.cutoff = 2;
    auto [gfree, lg] = solve_melonic_2pt(p);
    ok = ok && lg.iterations == 1;
    for (int x1 = -2; x1 <= 2 && ok; ++x1)
      for (int x2 = -2; x2 <= 2 && ok; ++x2)
        for (int x3 = -2; x3 <= 2 && ok; ++x3)
          ok = gfree.at({{{x1, x2, x3}}}) == 1.0 / (1.0 + x1 * x1 + x2 * x2 + x3 * x3);
    if (!ok) detail += "free-theory ";
  }
  // first order in the coupling against an independent expansion
  {
    ModelParams p;
    p.lambda = 1e-6;
    p.cutoff = 2;
    LatticeField g0 = LatticeField::zeros(1, 2);
    auto kin = [&](const std::array<int, 3>& x) {
      return 1.0 + x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    };
    for (int x1 = -2; x1 <= 2; ++x1)
      for (int x2 = -2; x2 <= 2; ++x2)
        for (int x3 = -2; x3 <= 2; ++x3) g0.set({{{x1, x2, x3}}}, 1.0 / kin({{x1, x2, x3}}));
    const LatticeField stepped = melonic_2pt_step(p, g0);
    double worst = 0.0;
    for (int x1 = -2; x1 <= 2; ++x1)
      for (int x2 = -2; x2 <= 2; ++x2)
        for (int x3 = -2; x3 <= 2; ++x3) {
          const std::array<int, 3> x{{x1, x2, x3}};
          const double E = kin(x);
          double S = 0.0, diff = 0.0;
          for (int q = -2; q <= 2; ++q)
            for (int r = -2; r <= 2; ++r) S += 1.0 / kin({{x1, q, r}});
          for (int q = -2; q <= 2; ++q) {
            if (q * q == x1 * x1) continue;
            diff +=
                (1.0 / E - 1.0 / kin({{q, x2, x3}})) / (double(x1) * x1 - double(q) * q);
          }
          const double expect = 1.0 / E + p.lambda * (2.0 / E) * (diff - S / E);
          worst = std::max(worst, std::abs(stepped.at({x}) - expect));
        }
    if (worst >= 1e-8) {
      ok = false;
      detail += "first-order " + std::to_string(worst) + " ";
    }
  }
  // reference run at cutoff 3
  {
    ModelParams p;
    p.lambda = 0.01;
    p.cutoff = 3;
    p.tol = 1e-10;
    auto [gref, lg] = solve_melonic_2pt(p);
    ok = ok && lg.converged && lg.iterations < 10000 && lg.residuals.back() <= 1e-10;
    // exact lattice symmetries
    for (int x1 = -3; x1 <= 3 && ok; ++x1)
      for (int x2 = -3; x2 <= 3 && ok; ++x2)
        for (int x3 = -3; x3 <= 3 && ok; ++x3) {
          const double v = gref.at({{{x1, x2, x3}}});
          ok = gref.at({{{-x1, x2, x3}}}) == v && gref.at({{{x1, -x2, x3}}}) == v &&
               gref.at({{{x1, x2, -x3}}}) == v && gref.at({{{x1, x3, x2}}}) == v;
        }
    if (!ok) detail += "reference-run ";
  }
  // order-4 tower at cutoff 2: exact cyclic invariance
  {
    ModelParams p;
    p.lambda = 0.01;
    p.cutoff = 2;
    p.tol = 1e-11;
    const auto tower = solve_melonic_tower(p, 2);
    bool sym = true;
    for (int a1 = -2; a1 <= 2 && sym; ++a1)
      for (int a2 = -2; a2 <= 2 && sym; ++a2)
        for (int a3 = -2; a3 <= 2 && sym; ++a3)
          for (int b1 = -2; b1 <= 2 && sym; ++b1)
            for (int b2 = -2; b2 <= 2 && sym; ++b2)
              for (int b3 = -2; b3 <= 2 && sym; ++b3) {
                const std::vector<std::array<int, 3>> X{{{a1, a2, a3}}, {{b1, b2, b3}}};
                if (!tower_domain(X)) continue;
                const std::vector<std::array<int, 3>> R{{{b1, b2, b3}}, {{a1, a2, a3}}};
                sym = tower[1].at(X) == tower[1].at(R);
              }
    if (!sym) {
      ok = false;
      detail += "tower-symmetry ";
    }
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  report(7, "solver properties", ok, detail + "runtime " + std::to_string(dt) + " s");
}

void criterion_8_gw() {
  bool ok = enumerate_gw_boundaries(2).size() == 4;
  std::map<GwFamily, int> counts;
  for (const auto& g : enumerate_gw_boundaries(4)) ++counts[classify_gw(g)];
  ok = ok && counts[GwFamily::Broken] > 0 && counts[GwFamily::Unbroken] > 0 &&
       (counts[GwFamily::MixedDisconnected] > 0 || counts[GwFamily::MixedConnected] > 0) &&
       counts[GwFamily::Exceptional] == 2;
  report(8, "holographic-model boundary classification", ok);
}

}  // namespace

int main() {
  criterion_1_census();
  criterion_2_burnside();
  criterion_3_automorphisms();
  criterion_4_degree();
  criterion_5_boundary();
  criterion_6_golden();
  criterion_7_solver();
  criterion_8_gw();
  if (failures) std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
