// Command-line surface of the coloured-graph and Schwinger-Dyson toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tsde/enumerate.hpp"
#include "tsde/graph_io.hpp"
#include "tsde/gw.hpp"
#include "tsde/open_graph.hpp"
#include "tsde/sde.hpp"
#include "tsde/solver.hpp"

using namespace tsde;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw error("cannot write " + out);
  f << text;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "rank,vertices,class,connected,aut_order,degree,colour_orbit\n";
  for (const auto& r : rows)
    os << r.rank << "," << r.vertices << "," << r.class_id << ","
       << (r.connected ? "true" : "false") << "," << r.aut_order << "," << r.degree.str()
       << "," << r.colour_orbit << "\n";
  return os.str();
}

std::string census_json(const std::vector<CensusRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j;
    j["rank"] = r.rank;
    j["vertices"] = r.vertices;
    j["class"] = r.class_id;
    j["connected"] = r.connected;
    j["aut_order"] = r.aut_order;
    j["degree"] = r.degree.str();
    j["colour_orbit"] = r.colour_orbit;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

ModelSpec model_by_name(const std::string& name, int rank) {
  if (name == "melonic-quartic") return ModelSpec::melonic_quartic(rank);
  if (name == "simple-v1") {
    if (rank != 3) throw error("the simple-v1 model is rank 3");
    return ModelSpec::simple_v1();
  }
  throw error("unknown model '" + name + "'");
}

std::string solver_json(const ModelParams& p, const std::vector<LatticeField>& tower,
                        const std::vector<ConvergenceLog>& logs) {
  ordered_json out;
  out["params"] = {{"m2", p.mass_sq},     {"lambda", p.lambda},
                   {"cutoff", p.cutoff},  {"tol", p.tol},
                   {"max_iter", p.max_iter}, {"damping", p.damping},
                   {"symmetry_reduced", p.symmetry_reduced}};
  ordered_json orders = ordered_json::array();
  const int N = p.cutoff;
  for (size_t ki = 0; ki < tower.size(); ++ki) {
    const int k = static_cast<int>(ki) + 1;
    const LatticeField& f = tower[ki];
    ordered_json table = ordered_json::object();
    std::vector<std::array<int, 3>> X(k, {{-N, -N, -N}});
    const long long side = 2 * N + 1;
    long long total = 1;
    for (int i = 0; i < 3 * k; ++i) total *= side;
    for (long long flat = 0; flat < total; ++flat) {
      long long rem = flat;
      for (int i = 3 * k - 1; i >= 0; --i) {
        X[i / 3][i % 3] = static_cast<int>(rem % side) - N;
        rem /= side;
      }
      if (!f.has(X)) continue;
      std::ostringstream key;
      for (int i = 0; i < k; ++i)
        key << (i ? ";" : "") << X[i][0] << "," << X[i][1] << "," << X[i][2];
      table[key.str()] = f.at(X);
    }
    ordered_json one;
    one["order"] = 2 * k;
    one["iterations"] = logs[ki].iterations;
    one["residual"] = logs[ki].residuals.empty() ? 0.0 : logs[ki].residuals.back();
    one["values"] = std::move(table);
    orders.push_back(std::move(one));
  }
  out["orders"] = std::move(orders);
  return out.dump(2) + "\n";
}

int verify_golden(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    std::cerr << "fixture directory " << dir << " not found\n";
    return 1;
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  int bad = 0;
  for (const std::string& path : files) {
    const auto j = nlohmann::json::parse(read_file(path));
    const std::string kind = j.value("kind", "equation");
    bool ok = false;
    std::string detail;
    if (kind == "equation") {
      const SdeEquation fix = parse_equation_json(j.at("equation").dump());
      const ModelSpec model = model_by_name(fix.model, fix.rank);
      const SdeEquation gen = sde_equation(model, fix.boundary.single(), fix.alpha);
      const EquationDiff diff = equation_multiset_equal(gen, fix);
      ok = diff.equal;
      detail = diff.report;
    } else if (kind == "yterm") {
      const auto fix = parse_yterm_json(j.at("payload").dump());
      const ModelSpec model = ModelSpec::melonic_quartic(j.at("rank").get<int>());
      const auto gen = y_term(model, j.at("colour").get<int>() - 1, j.at("order").get<int>());
      ok = fragment_multiset(gen) == fragment_multiset(fix);
      if (!ok) detail = "  fragment multisets differ\n";
    } else if (kind == "solver-regression") {
      ModelParams p;
      p.mass_sq = j.at("params").at("m2").get<double>();
      p.lambda = j.at("params").at("lambda").get<double>();
      p.cutoff = j.at("params").at("cutoff").get<int>();
      p.tol = j.at("params").at("tol").get<double>();
      const int kmax = j.value("kmax", 1);
      std::vector<ConvergenceLog> logs;
      const auto tower = solve_melonic_tower(p, kmax, &logs);
      ok = true;
      for (const auto& [key, val] : j.at("values").items()) {
        std::vector<std::array<int, 3>> X;
        std::stringstream ks(key);
        std::string part;
        while (std::getline(ks, part, ';')) {
          std::array<int, 3> x{};
          sscanf(part.c_str(), "%d,%d,%d", &x[0], &x[1], &x[2]);
          X.push_back(x);
        }
        const double got = tower.at(X.size() - 1).at(X);
        if (std::abs(got - val.get<double>()) > 1e-9) {
          ok = false;
          detail += "  " + key + ": " + std::to_string(got) + " vs stored " +
                    std::to_string(val.get<double>()) + "\n";
        }
      }
      if (j.contains("truncation_residual")) {
        FieldSet fs2;
        fs2.connected[1] = tower[0];
        fs2.connected[2] = LatticeField::zeros(2, p.cutoff);
        fs2.disconnected[{1, 1}] = LatticeField::zeros(2, p.cutoff);
        double worst = 0.0;
        for (int x1 = -p.cutoff; x1 <= p.cutoff; ++x1)
          for (int x2 = -p.cutoff; x2 <= p.cutoff; ++x2)
            for (int x3 = -p.cutoff; x3 <= p.cutoff; ++x3) {
              const std::vector<std::array<int, 3>> X{{{x1, x2, x3}}};
              const double lhs = lhs_dressing(p, fs2, X) * tower[0].at(X);
              worst = std::max(worst, std::abs(lhs - evaluate_exact_rhs(p, fs2, X)));
            }
        const double stored = j.at("truncation_residual").get<double>();
        if (std::abs(worst - stored) > 1e-9) {
          ok = false;
          detail += "  truncation residual " + std::to_string(worst) + " vs stored " +
                    std::to_string(stored) + "\n";
        }
      }
    } else {
      detail = "  unknown fixture kind '" + kind + "'\n";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << path << "\n";
    if (!ok) {
      std::cout << detail;
      ++bad;
    }
  }
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coloured-graph censuses and Schwinger-Dyson equations for tensor models"};
  app.require_subcommand(1);

  // census
  auto* census_cmd = app.add_subcommand("census", "enumerate graph classes");
  int rank = 3, max_vertices = 4;
  bool connected_only = false;
  std::string format = "json", out_path;
  census_cmd->add_option("--rank", rank, "tensor rank D")->required();
  census_cmd->add_option("--max-vertices", max_vertices, "largest vertex count 2k")->required();
  census_cmd->add_flag("--connected", connected_only, "connected classes only");
  census_cmd->add_option("--format", format, "json or csv");
  census_cmd->add_option("--out", out_path, "output file (default stdout)");

  // aut / degree
  auto* aut_cmd = app.add_subcommand("aut", "coloured automorphism group order");
  std::string graph_text;
  aut_cmd->add_option("graph", graph_text, "graph string")->required();
  auto* degree_cmd = app.add_subcommand("degree", "degree of a connected graph");
  std::string degree_text;
  degree_cmd->add_option("graph", degree_text, "graph string")->required();

  // boundary
  auto* boundary_cmd = app.add_subcommand("boundary", "boundary graph of an open graph");
  std::string in_path, bformat = "graph-string";
  boundary_cmd->add_option("--in", in_path, "open graph file")->required();
  boundary_cmd->add_option("--format", bformat, "graph-string");

  // sde
  auto* sde_cmd = app.add_subcommand("sde", "generate one Schwinger-Dyson equation");
  int sde_rank = 3, alpha = 1;
  std::string sde_model = "melonic-quartic", sde_graph, sde_format = "json", sde_out;
  sde_cmd->add_option("--rank", sde_rank, "tensor rank D")->required();
  sde_cmd->add_option("--model", sde_model, "melonic-quartic or simple-v1");
  sde_cmd->add_option("--graph", sde_graph, "connected boundary graph string")->required();
  sde_cmd->add_option("--alpha", alpha, "distinguished black vertex (1-based)");
  sde_cmd->add_option("--format", sde_format, "json, text or latex");
  sde_cmd->add_option("--out", sde_out, "output file");

  // yterm
  auto* yterm_cmd = app.add_subcommand("yterm", "Ward generating functional expansion");
  int y_rank = 3, y_order = 6, y_colour = 1;
  std::string y_model = "melonic-quartic", y_format = "json", y_out;
  yterm_cmd->add_option("--rank", y_rank, "tensor rank D")->required();
  yterm_cmd->add_option("--order", y_order, "source order cutoff")->required();
  yterm_cmd->add_option("--colour", y_colour, "colour of the Ward identity (1-based)");
  yterm_cmd->add_option("--model", y_model, "melonic-quartic or simple-v1");
  yterm_cmd->add_option("--format", y_format, "json or text");
  yterm_cmd->add_option("--out", y_out, "output file");

  // solve-simple
  auto* solve_cmd = app.add_subcommand("solve-simple", "fixed point of the single-vertex model");
  ModelParams params;
  int kmax = 1;
  std::string solve_out;
  solve_cmd->add_option("--m2", params.mass_sq, "squared mass");
  solve_cmd->add_option("--lambda", params.lambda, "coupling");
  solve_cmd->add_option("--cutoff", params.cutoff, "momentum box half-width N");
  solve_cmd->add_option("--tol", params.tol, "fixed-point tolerance");
  solve_cmd->add_option("--max-iter", params.max_iter, "iteration cap");
  solve_cmd->add_option("--damping", params.damping, "Picard damping in (0,1]");
  solve_cmd->add_option("--kmax", kmax, "highest correlation order 2k");
  solve_cmd->add_option("--out", solve_out, "output JSON file");

  // gw-census
  auto* gw_cmd = app.add_subcommand("gw-census", "holographic-model boundary classes");
  int points = 2;
  std::string gw_format = "json", gw_out;
  gw_cmd->add_option("--points", points, "2 or 4")->required();
  gw_cmd->add_option("--format", gw_format, "json");
  gw_cmd->add_option("--out", gw_out, "output file");

  // verify-golden
  auto* verify_cmd = app.add_subcommand("verify-golden", "compare fixtures to fresh output");
  std::string fixtures_dir = "fixtures";
  verify_cmd->add_option("--fixtures", fixtures_dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census_cmd->parsed()) {
      if (max_vertices % 2 != 0) throw error("--max-vertices must be even");
      const auto rows = census(rank, max_vertices / 2, connected_only);
      write_output(out_path, format == "csv" ? census_csv(rows) : census_json(rows));
    } else if (aut_cmd->parsed()) {
      const DisconnectedGraph gph = parse_graph(graph_text);
      std::cout << aut_order_disconnected(gph) << "\n";
    } else if (degree_cmd->parsed()) {
      std::cout << gurau_degree(parse_connected_graph(degree_text)).str() << "\n";
    } else if (boundary_cmd->parsed()) {
      const OpenGraph gph = parse_open_graph(read_file(in_path));
      std::cout << render_graph(canonical_form(boundary(gph))) << "\n";
    } else if (sde_cmd->parsed()) {
      const ModelSpec model = model_by_name(sde_model, sde_rank);
      const SdeEquation eq =
          sde_equation(model, parse_connected_graph(sde_graph), alpha - 1);
      RenderFormat fmt = sde_format == "latex"  ? RenderFormat::Latex
                         : sde_format == "text" ? RenderFormat::Text
                                                : RenderFormat::Json;
      write_output(sde_out, render(eq, fmt));
    } else if (yterm_cmd->parsed()) {
      const ModelSpec model = model_by_name(y_model, y_rank);
      const auto groups = y_term(model, y_colour - 1, y_order);
      write_output(y_out, render(groups, y_format == "text" ? RenderFormat::Text
                                                            : RenderFormat::Json));
    } else if (solve_cmd->parsed()) {
      std::vector<ConvergenceLog> logs;
      const auto tower = solve_melonic_tower(params, kmax, &logs);
      write_output(solve_out, solver_json(params, tower, logs));
    } else if (gw_cmd->parsed()) {
      const auto classes = enumerate_gw_boundaries(points);
      ordered_json out = ordered_json::array();
      for (const auto& gph : classes) {
        ordered_json j;
        j["family"] = gw_family_name(classify_gw(gph));
        j["connected"] = gph.connected();
        ordered_json verts = ordered_json::array();
        const char* names[] = {"0", "1", "2", "3", "0bar", "1bar", "2bar", "3bar"};
        for (int c : gph.vertex_colours) verts.push_back(names[c]);
        j["vertices"] = std::move(verts);
        ordered_json edges = ordered_json::array();
        for (const auto& e : gph.edges)
          edges.push_back({{"u", e[0] + 1}, {"v", e[1] + 1},
                           {"label", std::to_string(e[2]) + std::to_string(e[3])}});
        j["edges"] = std::move(edges);
        out.push_back(std::move(j));
      }
      write_output(gw_out, out.dump(2) + "\n");
    } else if (verify_cmd->parsed()) {
      return verify_golden(fixtures_dir);
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
