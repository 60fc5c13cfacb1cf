#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "tsde/graph.hpp"
#include "tsde/graph_io.hpp"

using namespace tsde;

namespace {

ColouredGraph g(const std::string& s) { return parse_connected_graph(s); }

// paper labeling of K_c(3,3): black 1 collects (x1, y2, z3)
const ColouredGraph k33 = g("g{D=3,k=3}[1,2,3|3,1,2|2,3,1]");

// brute-force isomorphism oracle: try every (sigma, pi) pair
bool brute_isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  if (a.rank != b.rank || a.k != b.k) return false;
  bool found = false;
  for_each_perm(a.k, [&](const Perm& sigma) {
    for_each_perm(a.k, [&](const Perm& pi) {
      const Perm piinv = pi.inverse();
      bool all = true;
      for (int c = 0; c < a.rank && all; ++c)
        all = compose(sigma, compose(a.tau[c], piinv)) == b.tau[c];
      if (all) found = true;
    });
  });
  return found;
}

// brute-force automorphism count straight from the edge-preservation
// definition, independent of the lifting formula
long long brute_aut_order(const ColouredGraph& gr) {
  long long count = 0;
  for_each_perm(gr.k, [&](const Perm& pi) {
    for_each_perm(gr.k, [&](const Perm& sigma) {
      for (int c = 0; c < gr.rank; ++c)
        for (int i = 0; i < gr.k; ++i)
          if (sigma(gr.tau[c](i)) != gr.tau[c](pi(i))) return;
      ++count;
    });
  });
  return count;
}

ColouredGraph random_graph(int D, int k, std::mt19937& rng) {
  std::vector<Perm> taus;
  for (int c = 0; c < D; ++c) {
    Perm p = Perm::identity(k);
    std::shuffle(p.img.begin(), p.img.end(), rng);
    taus.push_back(p);
  }
  return ColouredGraph(D, taus);
}

}  // namespace

TEST_CASE("canonical form of the melon is itself") {
  const ColouredGraph m = ColouredGraph::melon(3);
  CHECK(canonical_form(m) == m);
  CHECK(render_graph(m) == "g{D=3,k=1}[1|1|1]");
}

TEST_CASE("canonical form is idempotent and isomorphism-invariant") {
  std::mt19937 rng(7);
  for (int k = 2; k <= 3; ++k) {
    for (int trial = 0; trial < 8; ++trial) {
      const ColouredGraph base = random_graph(3, k, rng);
      const ColouredGraph cf = canonical_form(base);
      CHECK(canonical_form(cf) == cf);
      // exhaustively over all relabelings for small k
      for_each_perm(k, [&](const Perm& sigma) {
        for_each_perm(k, [&](const Perm& pi) {
          std::vector<Perm> taus;
          for (int c = 0; c < 3; ++c)
            taus.push_back(compose(sigma, compose(base.tau[c], pi.inverse())));
          CHECK(canonical_form(ColouredGraph(3, taus)) == cf);
        });
      });
    }
  }
  // randomized at k = 4
  for (int trial = 0; trial < 30; ++trial) {
    const ColouredGraph base = random_graph(3, 4, rng);
    Perm sigma = Perm::identity(4), pi = Perm::identity(4);
    std::shuffle(sigma.img.begin(), sigma.img.end(), rng);
    std::shuffle(pi.img.begin(), pi.img.end(), rng);
    std::vector<Perm> taus;
    for (int c = 0; c < 3; ++c) taus.push_back(compose(sigma, compose(base.tau[c], pi.inverse())));
    CHECK(canonical_form(ColouredGraph(3, taus)) == canonical_form(base));
  }
}

TEST_CASE("V_1 and V_2 are distinct classes (brute-force oracle)") {
  const ColouredGraph v1 = ColouredGraph::quartic_vertex(3, 0);
  const ColouredGraph v2 = ColouredGraph::quartic_vertex(3, 1);
  CHECK_FALSE(brute_isomorphic(v1, v2));
  CHECK_FALSE(is_isomorphic(v1, v2));
  CHECK(is_isomorphic(v1, v1));
  // isomorphism agrees with the brute-force oracle on random pairs
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const ColouredGraph a = random_graph(3, 3, rng), b = random_graph(3, 3, rng);
    CHECK(is_isomorphic(a, b) == brute_isomorphic(a, b));
  }
}

TEST_CASE("is_isomorphic rejects different k") {
  CHECK_FALSE(is_isomorphic(ColouredGraph::quartic_vertex(3, 0), ColouredGraph::melon(3)));
}

TEST_CASE("automorphism groups: melon, V_c, K33, X_2k") {
  CHECK(aut_order(ColouredGraph::melon(3)) == 1);
  for (int a = 0; a < 3; ++a) CHECK(aut_order(ColouredGraph::quartic_vertex(3, a)) == 2);
  CHECK(aut_order(k33) == 3);
  for (int k = 1; k <= 5; ++k) CHECK(aut_order(ColouredGraph::cyclic(3, k)) == k);

  // closure under composition and identity membership
  const auto auts = aut_group(k33);
  CHECK(auts.size() == 3);
  CHECK(auts[0].is_identity());
  for (const Perm& p : auts)
    for (const Perm& q : auts) {
      bool member = false;
      for (const Perm& r : auts) member = member || r == compose(p, q);
      CHECK(member);
    }
}

TEST_CASE("aut_group agrees with the edge-preservation brute force") {
  std::mt19937 rng(23);
  for (int k = 2; k <= 4; ++k)
    for (int t = 0; t < 10; ++t) {
      const ColouredGraph gr = random_graph(3, k, rng);
      CHECK(aut_order(gr) == brute_aut_order(gr));
    }
}

TEST_CASE("disconnected automorphism product formula") {
  const ColouredGraph m = ColouredGraph::melon(3);
  const ColouredGraph v1 = ColouredGraph::quartic_vertex(3, 0);
  CHECK(aut_order_disconnected(DisconnectedGraph(3, {m, m})) == 2);
  CHECK(aut_order_disconnected(DisconnectedGraph(3, {m, v1})) == 2);
  CHECK(aut_order_disconnected(DisconnectedGraph(3, {v1, v1})) == 8);
  CHECK(aut_order_disconnected_brute(DisconnectedGraph(3, {v1, v1})) == 8);
  CHECK(aut_order_disconnected(DisconnectedGraph(3, {m, m, m})) == 6);
}

TEST_CASE("gurau degree: sphere and torus oracles") {
  CHECK(gurau_degree(ColouredGraph::melon(3)) == Rational(0));
  CHECK(gurau_degree(k33) == Rational(1));
  for (int a = 0; a < 3; ++a)
    CHECK(gurau_degree(ColouredGraph::quartic_vertex(3, a)) == Rational(0));
  CHECK(gurau_degree(ColouredGraph::melon(4)) == Rational(0));
  CHECK(gurau_degree(ColouredGraph::melon(5)) == Rational(0));
  CHECK(jacket_count(3) == 1);
  CHECK(jacket_count(4) == 3);
  CHECK(jacket_count(5) == 12);
  CHECK_THROWS_AS(gurau_degree(ColouredGraph(3, {Perm::identity(2), Perm::identity(2),
                                                 Perm::identity(2)})),
                  error);
}

TEST_CASE("degree is invariant under bar") {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    ColouredGraph gr = random_graph(3, 3, rng);
    if (!is_connected(gr)) continue;
    CHECK(gurau_degree(bar(gr)) == gurau_degree(gr));
  }
}

TEST_CASE("bar is an involution; melon and X_6 are self-conjugate") {
  const ColouredGraph m = ColouredGraph::melon(3);
  CHECK(bar(m) == m);
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const ColouredGraph gr = random_graph(3, 3, rng);
    CHECK(bar(bar(gr)) == gr);
  }
  const ColouredGraph x6 = ColouredGraph::cyclic(3, 3);
  CHECK(brute_isomorphic(bar(x6), x6));
  CHECK(is_isomorphic(bar(x6), x6));
}

TEST_CASE("sigma swap: K33 -> E_a -> melon + V_c") {
  // swapping the colour-a edges at two black vertices of K33 gives E_a
  const DisconnectedGraph ea = sigma_swap(k33, 0, 0, 1, VertexColour::Black);
  REQUIRE(ea.connected());
  CHECK(aut_order(ea.single()) == 1);

  // swapping a b-coloured pair of black vertices of E_a splits off a melon
  // next to a quartic vertex
  bool found = false;
  for (int v1 = 0; v1 < 3 && !found; ++v1)
    for (int v2 = v1 + 1; v2 < 3 && !found; ++v2) {
      const DisconnectedGraph split = sigma_swap(ea.single(), 1, v1, v2, VertexColour::Black);
      if (split.components.size() != 2) continue;
      const bool melon_plus_v =
          (is_isomorphic(split.components[0], ColouredGraph::melon(3)) &&
           is_isomorphic(split.components[1], ColouredGraph::quartic_vertex(3, 2))) ||
          (is_isomorphic(split.components[1], ColouredGraph::melon(3)) &&
           is_isomorphic(split.components[0], ColouredGraph::quartic_vertex(3, 2)));
      found = melon_plus_v;
    }
  CHECK(found);
}

TEST_CASE("sigma swap on the cyclic family splits it in two") {
  // varsigma_1(X_2k; 1, rho) = X_{2 rho - 2} (+) X_{2k - 2 rho + 2}
  for (int k = 3; k <= 5; ++k) {
    const ColouredGraph x = ColouredGraph::cyclic(3, k);
    for (int rho = 1; rho < k; ++rho) {
      const DisconnectedGraph parts = sigma_swap(x, 0, 0, rho, VertexColour::Black);
      REQUIRE(parts.components.size() == 2);
      std::multiset<int> sizes{parts.components[0].k, parts.components[1].k};
      CHECK(sizes == std::multiset<int>{rho, k - rho});
      for (const auto& comp : parts.components)
        CHECK(is_isomorphic(comp, ColouredGraph::cyclic(3, comp.k)));
    }
  }
}

TEST_CASE("sigma swap is an involution up to reassembly") {
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    const ColouredGraph gr = random_graph(3, 3, rng);
    ColouredGraph re = gr;
    re.tau[1] = compose(gr.tau[1], Perm::transposition(3, 0, 2));
    ColouredGraph glued = re;
    glued.tau[1] = compose(re.tau[1], Perm::transposition(3, 0, 2));
    CHECK(glued == gr);
  }
}

TEST_CASE("sigma swap input validation") {
  CHECK_THROWS_AS(sigma_swap(k33, 0, 1, 1, VertexColour::White), error);
  CHECK_THROWS_AS(sigma_swap(k33, 0, 0, 5, VertexColour::Black), error);
}

TEST_CASE("edge removal on the worked rank-4 example") {
  // F'_c with colour order (a,b,c,d) = (1,2,3,4); the colour-3 edge at the
  // second white shares its endpoints with the colour-1 edge
  const ColouredGraph fpc = g("g{D=4,k=3}[1,2,3|2,3,1|3,2,1|3,1,2]");
  const EdgeRemoval r1 = edge_remove(fpc, 0, 0);
  const EdgeRemoval r2 = edge_remove(fpc, 0, 1);
  const EdgeRemoval r3 = edge_remove(fpc, 0, 2);

  CHECK(r1.common_colours == std::set<int>{0});
  CHECK(r2.common_colours == std::set<int>{0, 2});
  CHECK(r3.common_colours == std::set<int>{0});

  CHECK(is_isomorphic(r1.graph, r3.graph));
  CHECK_FALSE(is_isomorphic(r1.graph, r2.graph));
  CHECK(is_isomorphic(r2.graph, ColouredGraph::quartic_vertex(4, 0)));
  // the N-shaped graph: a necklace with automorphism group of order 2,
  // distinct from every quartic vertex
  CHECK(aut_order(r1.graph) == 2);
  for (int a = 0; a < 4; ++a)
    CHECK_FALSE(is_isomorphic(r1.graph, ColouredGraph::quartic_vertex(4, a)));
}

TEST_CASE("edge removal: X_4 loses a slot and the kappa map collapses") {
  const ColouredGraph x4 = ColouredGraph::cyclic(3, 2);
  const EdgeRemoval rem = edge_remove(x4, 0, 0);
  CHECK(is_isomorphic(rem.graph, ColouredGraph::melon(3)));
  CHECK(rem.common_colours == std::set<int>{0});
  CHECK(rem.kappa == std::vector<int>{-1, 0});

  const EdgeRemoval gone = edge_remove(ColouredGraph::melon(3), 0, 0);
  CHECK(gone.graph.is_empty());
  CHECK(gone.common_colours == std::set<int>{0, 1, 2});
}

TEST_CASE("kappa is a bijection onto the smaller index set") {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    const ColouredGraph gr = random_graph(3, 4, rng);
    for (int r = 0; r < 4; ++r) {
      const EdgeRemoval rem = edge_remove(gr, 1, r);
      std::set<int> image;
      for (int i = 0; i < 4; ++i) {
        if (i == r) {
          CHECK(rem.kappa[i] == -1);
        } else {
          CHECK(rem.kappa[i] == (i < r ? i : i - 1));
          image.insert(rem.kappa[i]);
        }
      }
      CHECK(image == std::set<int>{0, 1, 2});
    }
  }
}

TEST_CASE("momentum map reproduces the worked s-vectors") {
  const ColouredGraph m = ColouredGraph::melon(3);
  MomentumMatrix X(3, 1);
  X.entries = {{5}, {7}, {9}};
  CHECK(momentum_map(m, X) == X);

  // V_1 with X = (x, y): first black carries (x1, y2, y3)
  const ColouredGraph v1 = ColouredGraph::quartic_vertex(3, 0);
  MomentumMatrix Xv(3, 2);
  Xv.entries = {{11, 21}, {12, 22}, {13, 23}};
  const MomentumMatrix Yv = momentum_map(v1, Xv);
  CHECK(Yv.entries[0][0] == 11);
  CHECK(Yv.entries[1][0] == 22);
  CHECK(Yv.entries[2][0] == 23);
  CHECK(Yv.entries[0][1] == 21);
  CHECK(Yv.entries[1][1] == 12);
  CHECK(Yv.entries[2][1] == 13);

  // K33 with X = (x, y, z): first black carries (x1, y2, z3)
  MomentumMatrix Xk(3, 3);
  Xk.entries = {{11, 21, 31}, {12, 22, 32}, {13, 23, 33}};
  const MomentumMatrix Yk = momentum_map(k33, Xk);
  CHECK(Yk.entries[0][0] == 11);
  CHECK(Yk.entries[1][0] == 22);
  CHECK(Yk.entries[2][0] == 33);
}

TEST_CASE("momentum map preserves F membership in both directions") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> val(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const ColouredGraph gr = random_graph(3, 3, rng);
    MomentumMatrix X(3, 3);
    for (auto& row : X.entries)
      for (auto& e : row) e = val(rng);
    CHECK(momentum_map(gr, X).in_F() == X.in_F());
  }
}

TEST_CASE("a first-vertex removal can be colour-independent up to reordering") {
  // the 8-vertex class whose removal at the first white gives the same
  // trivial-automorphism 6-vertex class for every colour; the surviving
  // vertices come back in a reordered labeling
  const ColouredGraph s8 = g("g{D=3,k=4}[1,2,3,4|1,2,4,3|2,3,1,4]");
  const ColouredGraph first = edge_remove(s8, 0, 0).graph;
  CHECK(aut_order(first) == 1);
  CHECK(is_connected(first));
  for (int colour = 1; colour < 3; ++colour)
    CHECK(is_isomorphic(edge_remove(s8, colour, 0).graph, first));
  // and the removals are honest E-type graphs, not cyclic ones
  for (int k = 1; k <= 3; ++k)
    CHECK_FALSE(is_isomorphic(first, ColouredGraph::cyclic(3, 3)));
}
