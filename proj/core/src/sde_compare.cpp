#include <algorithm>
#include <map>
#include <sstream>

#include "tsde/graph_io.hpp"
#include "tsde/sde.hpp"

namespace tsde {

namespace {

struct IsoCache {
  std::map<std::string, std::pair<DisconnectedGraph, std::vector<Perm>>> by_graph;

  const std::pair<DisconnectedGraph, std::vector<Perm>>& get(const DisconnectedGraph& g) {
    const std::string key = render_graph(g);
    auto it = by_graph.find(key);
    if (it == by_graph.end()) {
      DisconnectedGraph rep = canonical_form(g);
      std::vector<Perm> isos = all_isomorphisms(g, rep);
      std::sort(isos.begin(), isos.end());
      it = by_graph.emplace(key, std::make_pair(std::move(rep), std::move(isos))).first;
    }
    return it->second;
  }
};

std::string mom_serial(const Mom& m, const std::vector<int>& dummy_reid) {
  switch (m.kind) {
    case Mom::Kind::Slot: return "x" + std::to_string(m.index + 1);
    case Mom::Kind::Dummy: return "q" + std::to_string(dummy_reid[m.index]);
    default: return "s";
  }
}

std::string vec_serial(const ArgVector& v, const std::vector<int>& dummy_reid) {
  std::string s = "(";
  for (size_t c = 0; c < v.size(); ++c) {
    if (c) s += ",";
    s += mom_serial(v[c], dummy_reid);
  }
  return s + ")";
}

std::string factor_serial(const CorrelationFactor& f, const std::vector<int>& dummy_reid,
                          IsoCache& cache) {
  const auto& [rep, isos] = cache.get(f.graph);
  std::string best;
  for (const Perm& mu : isos) {
    std::vector<std::string> slots(f.args.size());
    for (size_t i = 0; i < f.args.size(); ++i) slots[mu(static_cast<int>(i))] =
        vec_serial(f.args[i], dummy_reid);
    std::string cand = "G{" + render_graph(rep) + "}";
    for (const auto& s : slots) cand += s;
    if (best.empty() || cand < best) best = std::move(cand);
  }
  if (best.empty()) best = "G{" + render_graph(rep) + "}()";
  return best;
}

// enumerate re-labelings of same-colour dummy groups
void dummy_assignments(const std::vector<DummyVar>& dummies,
                       std::vector<std::vector<int>>& out) {
  std::map<int, std::vector<int>> by_colour;
  for (int i = 0; i < static_cast<int>(dummies.size()); ++i)
    by_colour[dummies[i].colour].push_back(i);
  std::vector<std::vector<std::vector<int>>> group_perms;
  for (auto& [colour, ids] : by_colour) {
    std::vector<std::vector<int>> perms;
    std::vector<int> order = ids;
    std::sort(order.begin(), order.end());
    do {
      perms.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    group_perms.push_back(std::move(perms));
  }
  std::vector<int> idx(group_perms.size(), 0);
  while (true) {
    std::vector<int> reid(dummies.size(), 0);
    int counter = 1;
    int gi = 0;
    for (auto& [colour, ids] : by_colour) {
      const auto& arrangement = group_perms[gi][idx[gi]];
      for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos)
        reid[arrangement[pos]] = counter + pos;
      counter += static_cast<int>(ids.size());
      ++gi;
    }
    out.push_back(std::move(reid));
    int p = static_cast<int>(group_perms.size()) - 1;
    while (p >= 0 && ++idx[p] == static_cast<int>(group_perms[p].size())) idx[p--] = 0;
    if (p < 0) break;
  }
}

}  // namespace

std::string canonical_term_key(const SdeTerm& t, Rational* sign_adjusted_coeff) {
  static thread_local IsoCache cache;
  std::vector<std::vector<int>> assignments;
  dummy_assignments(t.dummies, assignments);
  if (assignments.empty()) assignments.push_back({});

  std::string best;
  int best_sign = 1;
  bool ambiguous_sign = false;
  for (const auto& reid : assignments) {
    int sign = 1;
    std::ostringstream os;
    os << "L" << t.lambda_pow << (t.es_prefactor ? ":Es" : ":--");

    std::vector<std::string> props;
    for (const PropFactor& p : t.props) {
      if (p.kind == PropFactor::Kind::EinvVec) {
        props.push_back("Einv" + vec_serial(p.einv_args, reid));
      } else {
        std::string us = mom_serial(p.u, reid), vs = mom_serial(p.v, reid);
        if (vs < us) {
          std::swap(us, vs);
          sign = -sign;
        }
        props.push_back("Ediff" + std::to_string(p.colour + 1) + "(" + us + "," + vs + ")");
      }
    }
    std::sort(props.begin(), props.end());
    for (const auto& s : props) os << "|" << s;

    std::vector<std::string> factors;
    for (const CorrelationFactor& f : t.factors) factors.push_back(factor_serial(f, reid, cache));
    std::sort(factors.begin(), factors.end());
    for (const auto& s : factors) os << "|" << s;

    std::vector<std::string> dums;
    for (size_t i = 0; i < t.dummies.size(); ++i) {
      std::string d = "q" + std::to_string(reid[i]) + ":c" +
                      std::to_string(t.dummies[i].colour + 1);
      if (t.dummies[i].exclude) d += "!=" + mom_serial(*t.dummies[i].exclude, reid);
      dums.push_back(std::move(d));
    }
    std::sort(dums.begin(), dums.end());
    for (const auto& s : dums) os << "|" << s;

    std::string cand = os.str();
    if (best.empty() || cand < best) {
      best = std::move(cand);
      best_sign = sign;
      ambiguous_sign = false;
    } else if (cand == best && sign != best_sign) {
      ambiguous_sign = true;
    }
  }
  if (sign_adjusted_coeff) {
    *sign_adjusted_coeff =
        ambiguous_sign ? Rational(0) : t.coeff * Rational(best_sign);
  }
  return best;
}

std::map<std::string, Rational> term_multiset(const std::vector<SdeTerm>& terms) {
  std::map<std::string, Rational> out;
  for (const SdeTerm& t : terms) {
    Rational c;
    const std::string key = canonical_term_key(t, &c);
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) it->second = it->second + c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::string, Rational> fragment_multiset(const std::vector<YGroup>& groups) {
  // a fragment pairs with the J-cycle of its target, which is invariant
  // under Aut_c(target); quotient the ambient slots accordingly
  std::map<std::string, Rational> out;
  for (const YGroup& g : groups) {
    const std::string target = render_graph(g.target);
    const std::vector<Perm> auts = all_isomorphisms(g.target, g.target);
    for (const YFragment& frag : g.fragments) {
      std::string best;
      Rational best_coeff;
      for (const Perm& sigma : auts) {
        Rational c;
        const SdeTerm t = pullback(sigma, frag.term);
        std::string key = canonical_term_key(t, &c);
        if (best.empty() || key < best) {
          best = std::move(key);
          best_coeff = c;
        }
      }
      if (auts.empty()) best = canonical_term_key(frag.term, &best_coeff);
      const std::string key = "J{" + target + "}::" + best;
      auto [it, fresh] = out.emplace(key, best_coeff);
      if (!fresh) it->second = it->second + best_coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

void diff_maps(const std::map<std::string, Rational>& a,
               const std::map<std::string, Rational>& b, std::ostringstream& report,
               bool& equal) {
  for (const auto& [key, ca] : a) {
    auto it = b.find(key);
    if (it == b.end()) {
      equal = false;
      report << "  only in first (" << ca.str() << "): " << key << "\n";
    } else if (!(it->second == ca)) {
      equal = false;
      report << "  coefficient " << ca.str() << " vs " << it->second.str() << ": " << key
             << "\n";
    }
  }
  for (const auto& [key, cb] : b) {
    if (!a.count(key)) {
      equal = false;
      report << "  only in second (" << cb.str() << "): " << key << "\n";
    }
  }
}

}  // namespace

EquationDiff equation_multiset_equal(const SdeEquation& a, const SdeEquation& b) {
  EquationDiff out;
  out.equal = true;
  std::ostringstream report;

  if (a.rank != b.rank) {
    out.equal = false;
    report << "  rank " << a.rank << " vs " << b.rank << "\n";
  }
  SdeTerm la, lb;
  la.factors = {a.lhs};
  lb.factors = {b.lhs};
  if (canonical_term_key(la, nullptr) != canonical_term_key(lb, nullptr)) {
    out.equal = false;
    report << "  lhs symbols differ\n";
  }
  auto cols = [](const Dressing& d) {
    std::vector<int> c = d.colours;
    std::sort(c.begin(), c.end());
    return c;
  };
  if (!(a.dressing.lambda_coeff == b.dressing.lambda_coeff) ||
      cols(a.dressing) != cols(b.dressing)) {
    out.equal = false;
    report << "  dressing differs\n";
  }
  diff_maps(term_multiset(a.rhs), term_multiset(b.rhs), report, out.equal);
  out.report = report.str();
  return out;
}

}  // namespace tsde
