#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "tsde/graph_io.hpp"
#include "tsde/sde.hpp"

namespace tsde {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::string> dummy_names(const std::vector<DummyVar>& dummies) {
  std::map<int, int> counter;
  std::vector<std::string> names;
  for (const DummyVar& d : dummies) {
    names.push_back("q" + std::to_string(d.colour + 1) + "_" +
                    std::to_string(++counter[d.colour]));
  }
  return names;
}

std::string expr_string(const Mom& m, int colour, const std::vector<std::string>& names) {
  switch (m.kind) {
    case Mom::Kind::Slot:
      return "x" + std::to_string(m.index + 1) + "_" + std::to_string(colour + 1);
    case Mom::Kind::Dummy:
      return names[m.index];
    default:
      return "s" + std::to_string(colour + 1);
  }
}

Mom parse_expr(const std::string& s, int colour, const std::vector<DummyVar>& dummies,
               const std::vector<std::string>& names) {
  if (s.empty()) throw error("equation json: empty momentum expression");
  if (s[0] == 'x') {
    const auto us = s.find('_');
    if (us == std::string::npos) throw error("equation json: bad slot expr '" + s + "'");
    const int slot = std::stoi(s.substr(1, us - 1)) - 1;
    const int col = std::stoi(s.substr(us + 1)) - 1;
    if (col != colour)
      throw error("equation json: expr '" + s + "' used in colour row " +
                  std::to_string(colour + 1));
    return Mom::slot(slot);
  }
  if (s[0] == 's') {
    const int col = std::stoi(s.substr(1)) - 1;
    if (col != colour)
      throw error("equation json: external '" + s + "' in colour row " +
                  std::to_string(colour + 1));
    return Mom::external();
  }
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) {
      if (dummies[i].colour != colour)
        throw error("equation json: dummy '" + s + "' used in wrong colour row");
      return Mom::dummy(static_cast<int>(i));
    }
  throw error("equation json: unknown momentum expression '" + s + "'");
}

ordered_json factor_to_json(const CorrelationFactor& f, int rank,
                            const std::vector<std::string>& names) {
  ordered_json out;
  out["graph"] = render_graph(f.graph);
  std::vector<int> perm;
  ordered_json subs = ordered_json::array();
  for (size_t j = 0; j < f.args.size(); ++j) {
    // majority ambient slot of this argument, 0 when none
    std::map<int, int> votes;
    for (const Mom& m : f.args[j])
      if (m.kind == Mom::Kind::Slot) ++votes[m.index];
    int best = -1, best_count = 0;
    for (auto [slot, count] : votes)
      if (count > best_count) {
        best = slot;
        best_count = count;
      }
    perm.push_back(best + 1);
    for (int c = 0; c < rank; ++c) {
      const Mom& m = f.args[j][c];
      if (best >= 0 && m == Mom::slot(best)) continue;
      ordered_json sub;
      sub["slot"] = j + 1;
      sub["colour"] = c + 1;
      sub["expr"] = expr_string(m, c, names);
      subs.push_back(std::move(sub));
    }
  }
  out["perm"] = perm;
  out["subs"] = std::move(subs);
  return out;
}

CorrelationFactor factor_from_json(const json& j, int rank,
                                   const std::vector<DummyVar>& dummies,
                                   const std::vector<std::string>& names) {
  CorrelationFactor f;
  f.graph = parse_graph(j.at("graph").get<std::string>());
  const auto perm = j.at("perm").get<std::vector<int>>();
  f.args.resize(perm.size());
  for (size_t s = 0; s < perm.size(); ++s) {
    if (perm[s] == 0)
      f.args[s].assign(rank, Mom{Mom::Kind::Slot, -1});  // must be overridden by subs
    else
      f.args[s].assign(rank, Mom::slot(perm[s] - 1));
  }
  if (j.contains("subs")) {
    for (const auto& sub : j.at("subs")) {
      const int slot = sub.at("slot").get<int>() - 1;
      const int colour = sub.at("colour").get<int>() - 1;
      f.args.at(slot).at(colour) =
          parse_expr(sub.at("expr").get<std::string>(), colour, dummies, names);
    }
  }
  for (const auto& av : f.args)
    for (const Mom& m : av)
      if (m.kind == Mom::Kind::Slot && m.index < 0)
        throw error("equation json: inserted slot not fully specified");
  if (static_cast<int>(f.args.size()) != f.graph.k())
    throw error("equation json: factor arity mismatch");
  return f;
}

ordered_json term_to_json(const SdeTerm& t, int rank) {
  const auto names = dummy_names(t.dummies);
  ordered_json out;
  out["coeff"] = {{"num", t.coeff.num}, {"den", t.coeff.den}};
  out["lambda_pow"] = t.lambda_pow;
  out["es_prefactor"] = t.es_prefactor;
  ordered_json dums = ordered_json::array();
  for (size_t i = 0; i < t.dummies.size(); ++i) {
    ordered_json d;
    d["name"] = names[i];
    d["colour"] = t.dummies[i].colour + 1;
    if (t.dummies[i].exclude)
      d["exclude"] = expr_string(*t.dummies[i].exclude, t.dummies[i].colour, names);
    dums.push_back(std::move(d));
  }
  out["dummies"] = std::move(dums);
  ordered_json props = ordered_json::array();
  for (const PropFactor& p : t.props) {
    ordered_json pj;
    if (p.kind == PropFactor::Kind::EinvVec) {
      pj["kind"] = "Einv";
      ordered_json args = ordered_json::array();
      for (int c = 0; c < rank; ++c) args.push_back(expr_string(p.einv_args[c], c, names));
      pj["args"] = std::move(args);
    } else {
      pj["kind"] = "Ediff";
      pj["colour"] = p.colour + 1;
      pj["u"] = expr_string(p.u, p.colour, names);
      pj["v"] = expr_string(p.v, p.colour, names);
    }
    props.push_back(std::move(pj));
  }
  out["props"] = std::move(props);
  ordered_json factors = ordered_json::array();
  for (const CorrelationFactor& f : t.factors) factors.push_back(factor_to_json(f, rank, names));
  out["factors"] = std::move(factors);
  return out;
}

SdeTerm term_from_json(const json& j, int rank) {
  SdeTerm t;
  t.coeff = Rational(j.at("coeff").at("num").get<long long>(),
                     j.at("coeff").at("den").get<long long>());
  t.lambda_pow = j.value("lambda_pow", 0);
  t.es_prefactor = j.value("es_prefactor", false);
  std::vector<std::string> names;
  if (j.contains("dummies")) {
    for (const auto& d : j.at("dummies")) {
      DummyVar dv;
      dv.colour = d.at("colour").get<int>() - 1;
      names.push_back(d.at("name").get<std::string>());
      t.dummies.push_back(dv);
    }
    // excludes may reference other dummies, resolve after names are known
    int i = 0;
    for (const auto& d : j.at("dummies")) {
      if (d.contains("exclude"))
        t.dummies[i].exclude = parse_expr(d.at("exclude").get<std::string>(),
                                          t.dummies[i].colour, t.dummies, names);
      ++i;
    }
  }
  if (j.contains("props")) {
    for (const auto& pj : j.at("props")) {
      PropFactor p;
      if (pj.at("kind").get<std::string>() == "Einv") {
        p.kind = PropFactor::Kind::EinvVec;
        const auto args = pj.at("args").get<std::vector<std::string>>();
        if (static_cast<int>(args.size()) != rank)
          throw error("equation json: Einv arity mismatch");
        for (int c = 0; c < rank; ++c)
          p.einv_args.push_back(parse_expr(args[c], c, t.dummies, names));
      } else {
        p.kind = PropFactor::Kind::Ediff;
        p.colour = pj.at("colour").get<int>() - 1;
        p.u = parse_expr(pj.at("u").get<std::string>(), p.colour, t.dummies, names);
        p.v = parse_expr(pj.at("v").get<std::string>(), p.colour, t.dummies, names);
      }
      t.props.push_back(std::move(p));
    }
  }
  if (j.contains("factors"))
    for (const auto& fj : j.at("factors"))
      t.factors.push_back(factor_from_json(fj, rank, t.dummies, names));
  return t;
}

ordered_json equation_to_json(const SdeEquation& eq) {
  ordered_json out;
  ordered_json meta;
  meta["rank"] = eq.rank;
  meta["model"] = eq.model;
  meta["boundary"] = render_graph(eq.boundary);
  meta["alpha"] = eq.alpha + 1;
  meta["k"] = eq.boundary.k();
  std::vector<int> s1;
  for (int s : eq.s_slots) s1.push_back(s + 1);
  meta["s_slots"] = s1;
  out["meta"] = std::move(meta);
  out["lhs"] = factor_to_json(eq.lhs, eq.rank, {});
  ordered_json dress;
  dress["lambda"] = {{"num", eq.dressing.lambda_coeff.num},
                     {"den", eq.dressing.lambda_coeff.den}};
  std::vector<int> cols;
  for (int c : eq.dressing.colours) cols.push_back(c + 1);
  dress["colours"] = cols;
  out["dressing"] = std::move(dress);

  // deterministic order: sort by canonical key
  std::vector<std::pair<std::string, const SdeTerm*>> order;
  for (const SdeTerm& t : eq.rhs) order.push_back({canonical_term_key(t, nullptr), &t});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  ordered_json terms = ordered_json::array();
  for (const auto& [key, t] : order) terms.push_back(term_to_json(*t, eq.rank));
  out["terms"] = std::move(terms);
  return out;
}

std::string term_text(const SdeTerm& t, int rank) {
  const auto names = dummy_names(t.dummies);
  std::ostringstream os;
  os << (t.coeff.num < 0 ? "- " : "+ ");
  Rational c = t.coeff.num < 0 ? -t.coeff : t.coeff;
  os << c.str();
  if (t.lambda_pow == 1) os << "*lam";
  if (t.lambda_pow > 1) os << "*lam^" << t.lambda_pow;
  if (t.es_prefactor) os << "/E_s";
  if (!t.dummies.empty()) {
    os << " Sum_{";
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) os << ",";
      os << names[i];
      if (t.dummies[i].exclude)
        os << "!=" << expr_string(*t.dummies[i].exclude, t.dummies[i].colour, names);
    }
    os << "}";
  }
  for (const PropFactor& p : t.props) {
    if (p.kind == PropFactor::Kind::EinvVec) {
      os << " 1/E(";
      for (int cix = 0; cix < rank; ++cix)
        os << (cix ? "," : "") << expr_string(p.einv_args[cix], cix, names);
      os << ")";
    } else {
      os << " 1/dE" << p.colour + 1 << "(" << expr_string(p.u, p.colour, names) << ","
         << expr_string(p.v, p.colour, names) << ")";
    }
  }
  for (const CorrelationFactor& f : t.factors) {
    os << " G{" << render_graph(f.graph) << "}";
    for (const ArgVector& av : f.args) {
      os << "(";
      for (int cix = 0; cix < rank; ++cix)
        os << (cix ? "," : "") << expr_string(av[cix], cix, names);
      os << ")";
    }
  }
  return os.str();
}

std::string term_latex(const SdeTerm& t, int rank) {
  const auto names = dummy_names(t.dummies);
  auto ex = [&](const Mom& m, int c) {
    switch (m.kind) {
      case Mom::Kind::Slot:
        return "x_{" + std::to_string(c + 1) + "}^{" + std::to_string(m.index + 1) + "}";
      case Mom::Kind::Dummy: {
        std::string n = names[m.index];
        return "q_{" + n.substr(1) + "}";
      }
      default:
        return "s_{" + std::to_string(c + 1) + "}";
    }
  };
  std::ostringstream os;
  os << (t.coeff.num < 0 ? "-" : "+");
  Rational c = t.coeff.num < 0 ? -t.coeff : t.coeff;
  if (c.den != 1)
    os << "\\tfrac{" << c.num << "}{" << c.den << "}";
  else if (c.num != 1)
    os << c.num;
  if (t.lambda_pow >= 1) os << "\\lambda" << (t.lambda_pow > 1 ? "^" + std::to_string(t.lambda_pow) : "");
  if (t.es_prefactor) os << " E_{\\mathbf{s}}^{-1}";
  if (!t.dummies.empty()) {
    os << " \\sum_{";
    for (size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << "q_{" << names[i].substr(1) << "}";
    os << "}";
  }
  for (const PropFactor& p : t.props) {
    if (p.kind == PropFactor::Kind::EinvVec) {
      os << " E^{-1}(";
      for (int cix = 0; cix < rank; ++cix) os << (cix ? "," : "") << ex(p.einv_args[cix], cix);
      os << ")";
    } else {
      os << " \\frac{1}{E(" << ex(p.u, p.colour) << "," << ex(p.v, p.colour) << ")}";
    }
  }
  for (const CorrelationFactor& f : t.factors) {
    os << " G^{(" << 2 * f.graph.k() << ")}_{" << render_graph(f.graph) << "}\\big(";
    for (size_t s = 0; s < f.args.size(); ++s) {
      if (s) os << ";";
      for (int cix = 0; cix < rank; ++cix) os << (cix ? "," : "") << ex(f.args[s][cix], cix);
    }
    os << "\\big)";
  }
  return os.str();
}

}  // namespace

std::string render(const SdeEquation& eq, RenderFormat format) {
  if (format == RenderFormat::Json) return equation_to_json(eq).dump(2) + "\n";

  std::vector<std::pair<std::string, const SdeTerm*>> order;
  for (const SdeTerm& t : eq.rhs) order.push_back({canonical_term_key(t, nullptr), &t});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::ostringstream os;
  if (format == RenderFormat::Text) {
    os << "# " << eq.model << " rank " << eq.rank << ", boundary " << render_graph(eq.boundary)
       << ", alpha " << eq.alpha + 1 << "\n";
    os << "LHS: (1 + " << eq.dressing.lambda_coeff.str() << "*lam/E_s * Sum_{a in {";
    for (size_t i = 0; i < eq.dressing.colours.size(); ++i)
      os << (i ? "," : "") << eq.dressing.colours[i] + 1;
    os << "}} Sum_q G2(s_a,q_hat)) * G{" << render_graph(eq.lhs.graph) << "}(X)\n";
    os << "RHS:\n";
    for (const auto& [key, t] : order) os << "  " << term_text(*t, eq.rank) << "\n";
  } else {
    os << "\\bigg(1+\\frac{" << eq.dressing.lambda_coeff.str()
       << "\\lambda}{E_{\\mathbf s}}\\sum_a\\sum_{\\mathbf q_{\\hat a}}"
       << "G^{(2)}(s_a,\\mathbf q_{\\hat a})\\bigg) G_{" << render_graph(eq.lhs.graph)
       << "}(\\mathbf X) =\\\\\n";
    for (const auto& [key, t] : order) os << term_latex(*t, eq.rank) << "\\\\\n";
  }
  return os.str();
}

std::string render(const std::vector<YGroup>& groups, RenderFormat format) {
  if (format == RenderFormat::Json) {
    ordered_json out;
    ordered_json gj = ordered_json::array();
    for (const YGroup& g : groups) {
      ordered_json one;
      one["target"] = render_graph(g.target);
      ordered_json frags = ordered_json::array();
      for (const YFragment& f : g.fragments) {
        ordered_json fj;
        fj["coeff"] = {{"num", f.coeff.num}, {"den", f.coeff.den}};
        fj["source"] = render_graph(f.source);
        fj["removal"] = f.removal_white + 1;
        std::vector<int> re;
        for (int v : f.reorder.img) re.push_back(v + 1);
        fj["reorder"] = re;
        const int rank = f.source.rank;
        fj["term"] = term_to_json(f.term, rank);
        frags.push_back(std::move(fj));
      }
      one["fragments"] = std::move(frags);
      gj.push_back(std::move(one));
    }
    out["groups"] = std::move(gj);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const YGroup& g : groups) {
    os << "J{" << render_graph(g.target) << "}:\n";
    for (const YFragment& f : g.fragments) {
      const int rank = f.source.rank;
      os << "  " << term_text(f.term, rank) << "   [source " << render_graph(f.source)
         << ", r=" << f.removal_white + 1 << "]\n";
    }
  }
  return os.str();
}

SdeEquation parse_equation_json(const std::string& text) {
  const json j = json::parse(text);
  SdeEquation eq;
  eq.rank = j.at("meta").at("rank").get<int>();
  eq.model = j.at("meta").value("model", "");
  eq.boundary = parse_graph(j.at("meta").at("boundary").get<std::string>());
  eq.alpha = j.at("meta").value("alpha", 1) - 1;
  if (j.at("meta").contains("s_slots")) {
    for (int s : j.at("meta").at("s_slots").get<std::vector<int>>())
      eq.s_slots.push_back(s - 1);
  }
  eq.lhs = factor_from_json(j.at("lhs"), eq.rank, {}, {});
  eq.dressing.lambda_coeff = Rational(j.at("dressing").at("lambda").at("num").get<long long>(),
                                      j.at("dressing").at("lambda").at("den").get<long long>());
  for (int c : j.at("dressing").at("colours").get<std::vector<int>>())
    eq.dressing.colours.push_back(c - 1);
  for (const auto& tj : j.at("terms")) eq.rhs.push_back(term_from_json(tj, eq.rank));
  return eq;
}

std::vector<YGroup> parse_yterm_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<YGroup> out;
  for (const auto& gj : j.at("groups")) {
    YGroup g;
    g.target = parse_graph(gj.at("target").get<std::string>());
    for (const auto& fj : gj.at("fragments")) {
      YFragment f;
      f.coeff = Rational(fj.at("coeff").at("num").get<long long>(),
                         fj.at("coeff").at("den").get<long long>());
      f.source = parse_graph(fj.at("source").get<std::string>());
      f.removal_white = fj.value("removal", 1) - 1;
      if (fj.contains("reorder")) {
        for (int v : fj.at("reorder").get<std::vector<int>>()) f.reorder.img.push_back(v - 1);
      }
      f.term = term_from_json(fj.at("term"), f.source.rank);
      g.fragments.push_back(std::move(f));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tsde
