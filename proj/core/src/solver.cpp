#include "tsde/solver.hpp"

#include <algorithm>
#include <cmath>

namespace tsde {

LatticeField LatticeField::zeros(int k, int N) {
  LatticeField f;
  f.order_k = k;
  f.cutoff = N;
  long long size = 1;
  for (int i = 0; i < 3 * k; ++i) size *= 2 * N + 1;
  f.values.assign(size, 0.0);
  f.valid.assign(size, 1);
  return f;
}

long long LatticeField::index(const std::vector<std::array<int, 3>>& tuple) const {
  if (static_cast<int>(tuple.size()) != order_k) throw error("LatticeField: arity mismatch");
  long long idx = 0;
  for (const auto& x : tuple)
    for (int c = 0; c < 3; ++c) {
      if (x[c] < -cutoff || x[c] > cutoff) throw error("LatticeField: momentum outside box");
      idx = idx * side() + (x[c] + cutoff);
    }
  return idx;
}

double LatticeField::at(const std::vector<std::array<int, 3>>& tuple) const {
  const long long i = index(tuple);
  if (!valid[i]) throw error("LatticeField: value requested outside solved domain");
  return values[i];
}

bool LatticeField::has(const std::vector<std::array<int, 3>>& tuple) const {
  return valid[index(tuple)] != 0;
}

void LatticeField::set(const std::vector<std::array<int, 3>>& tuple, double v) {
  const long long i = index(tuple);
  values[i] = v;
  valid[i] = 1;
}

namespace {

double kinetic(const ModelParams& p, const std::array<int, 3>& x) {
  return p.mass_sq + double(x[0]) * x[0] + double(x[1]) * x[1] + double(x[2]) * x[2];
}

// ---- reduced representation of the 2-point function ------------------------
//
// The closed melonic equation couples x2, x3 only through x2^2 + x3^2, and
// x1 through x1^2, so the fixed point lives on (|x1|, x2^2 + x3^2).
struct Reduced2pt {
  int N;
  std::vector<int> s_values;            // distinct x2^2+x3^2 on the box
  std::vector<int> s_index;             // s -> position
  std::vector<long long> s_mult;        // lattice multiplicity of each s
  std::vector<std::vector<double>> g;   // [a][si]

  explicit Reduced2pt(int cutoff) : N(cutoff) {
    const int smax = 2 * N * N;
    s_index.assign(smax + 1, -1);
    std::vector<long long> mult(smax + 1, 0);
    for (int q = -N; q <= N; ++q)
      for (int r = -N; r <= N; ++r) ++mult[q * q + r * r];
    for (int s = 0; s <= smax; ++s)
      if (mult[s] > 0) {
        s_index[s] = static_cast<int>(s_values.size());
        s_values.push_back(s);
        s_mult.push_back(mult[s]);
      }
    g.assign(N + 1, std::vector<double>(s_values.size(), 0.0));
  }

  double at(int a, int s) const { return g[a][s_index[s]]; }
};

double reduced_S(const Reduced2pt& r, int a) {
  // sum over the box of G(a, q, p)
  double total = 0.0;
  for (size_t si = 0; si < r.s_values.size(); ++si)
    total += double(r.s_mult[si]) * r.g[a][si];
  return total;
}

// Picard map of the closed melonic 2-point equation on the reduced table.
std::vector<std::vector<double>> reduced_phi(const ModelParams& p, const Reduced2pt& r) {
  const int N = r.N;
  std::vector<double> S(N + 1);
  for (int a = 0; a <= N; ++a) S[a] = reduced_S(r, a);
  std::vector<std::vector<double>> out(N + 1, std::vector<double>(r.s_values.size(), 0.0));
  for (int a = 0; a <= N; ++a) {
    for (size_t si = 0; si < r.s_values.size(); ++si) {
      const double Es = p.mass_sq + double(a) * a + r.s_values[si];
      double diff = 0.0;
      for (int b = 0; b <= N; ++b) {
        if (b == a) continue;  // q = +-x1 is the removable summand
        const double w = (b == 0) ? 1.0 : 2.0;
        diff += w * (r.g[a][si] - r.g[b][si]) / (double(a) * a - double(b) * b);
      }
      out[a][si] = (1.0 + 2.0 * p.lambda * diff) / (Es + 2.0 * p.lambda * S[a]);
    }
  }
  return out;
}

LatticeField materialize(const Reduced2pt& r, bool reduced_flag) {
  LatticeField f = LatticeField::zeros(1, r.N);
  f.symmetry_reduced = reduced_flag;
  for (int x1 = -r.N; x1 <= r.N; ++x1)
    for (int x2 = -r.N; x2 <= r.N; ++x2)
      for (int x3 = -r.N; x3 <= r.N; ++x3)
        f.set({{{x1, x2, x3}}}, r.at(std::abs(x1), x2 * x2 + x3 * x3));
  return f;
}

}  // namespace

std::pair<LatticeField, ConvergenceLog> solve_melonic_2pt(const ModelParams& p) {
  Reduced2pt r(p.cutoff);
  // start from the free propagator
  for (int a = 0; a <= p.cutoff; ++a)
    for (size_t si = 0; si < r.s_values.size(); ++si)
      r.g[a][si] = 1.0 / (p.mass_sq + double(a) * a + r.s_values[si]);

  ConvergenceLog log;
  for (int it = 0; it < p.max_iter; ++it) {
    const auto phi = reduced_phi(p, r);
    double defect = 0.0;
    for (int a = 0; a <= p.cutoff; ++a)
      for (size_t si = 0; si < r.s_values.size(); ++si)
        defect = std::max(defect, std::abs(phi[a][si] - r.g[a][si]));
    log.residuals.push_back(defect);
    ++log.iterations;
    if (!std::isfinite(defect)) break;
    if (defect < p.tol) {
      log.converged = true;
      break;
    }
    for (int a = 0; a <= p.cutoff; ++a)
      for (size_t si = 0; si < r.s_values.size(); ++si)
        r.g[a][si] = (1.0 - p.damping) * r.g[a][si] + p.damping * phi[a][si];
  }
  if (!log.converged)
    throw error("solve_melonic_2pt: no convergence after " + std::to_string(log.iterations) +
                " iterations, residual " +
                std::to_string(log.residuals.empty() ? 0.0 : log.residuals.back()));
  return {materialize(r, p.symmetry_reduced), log};
}

LatticeField melonic_2pt_step(const ModelParams& p, const LatticeField& g2) {
  // full-grid Picard application, written against the lattice directly as
  // an independent path from the reduced iteration
  const int N = p.cutoff;
  LatticeField out = LatticeField::zeros(1, N);
  std::vector<double> S(2 * N + 1, 0.0);
  for (int x1 = -N; x1 <= N; ++x1) {
    double s = 0.0;
    for (int q = -N; q <= N; ++q)
      for (int r = -N; r <= N; ++r) s += g2.at({{{x1, q, r}}});
    S[x1 + N] = s;
  }
  for (int x1 = -N; x1 <= N; ++x1)
    for (int x2 = -N; x2 <= N; ++x2)
      for (int x3 = -N; x3 <= N; ++x3) {
        const std::array<int, 3> x{{x1, x2, x3}};
        double diff = 0.0;
        for (int q = -N; q <= N; ++q) {
          if (q * q == x1 * x1) continue;
          diff += (g2.at({x}) - g2.at({{{q, x2, x3}}})) / (double(x1) * x1 - double(q) * q);
        }
        out.set({x}, (1.0 + 2.0 * p.lambda * diff) / (kinetic(p, x) + 2.0 * p.lambda * S[x1 + N]));
      }
  return out;
}

double melonic_2pt_residual(const ModelParams& p, const LatticeField& g2) {
  const LatticeField phi = melonic_2pt_step(p, g2);
  double defect = 0.0;
  for (size_t i = 0; i < g2.values.size(); ++i)
    defect = std::max(defect, std::abs(phi.values[i] - g2.values[i]));
  return defect;
}

bool tower_domain(const std::vector<std::array<int, 3>>& X) {
  const int k = static_cast<int>(X.size());
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (X[i][c] == X[j][c]) return false;
        if (c == 0 && X[i][0] * X[i][0] == X[j][0] * X[j][0]) return false;
      }
  return true;
}

namespace {

// iterate over all k-tuples of box momenta
template <typename Fn>
void for_each_tuple(int k, int N, Fn&& fn) {
  std::vector<std::array<int, 3>> X(k, {{-N, -N, -N}});
  const int side = 2 * N + 1;
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < 3 * k; ++i) t *= side;
    return t;
  }();
  for (long long flat = 0; flat < total; ++flat) {
    long long rem = flat;
    for (int i = 3 * k - 1; i >= 0; --i) {
      X[i / 3][i % 3] = static_cast<int>(rem % side) - N;
      rem /= side;
    }
    fn(X);
  }
}

double S_of(const LatticeField& g2, int x1, int N) {
  double s = 0.0;
  for (int q = -N; q <= N; ++q)
    for (int r = -N; r <= N; ++r) s += g2.at({{{x1, q, r}}});
  return s;
}

// melonic tower RHS for order k >= 2 at tuple X given lower orders and the
// current order-k iterate
double tower_rhs(const ModelParams& p, const std::vector<LatticeField>& G,
                 const LatticeField& gk, const std::vector<std::array<int, 3>>& X) {
  const int k = static_cast<int>(X.size());
  const int N = p.cutoff;
  const std::array<int, 3> s{{X[0][0], X[k - 1][1], X[k - 1][2]}};
  const double Es = kinetic(p, s);

  double rho_part = 0.0;
  for (int rho = 1; rho < k; ++rho) {
    const double den = double(X[rho][0]) * X[rho][0] - double(X[0][0]) * X[0][0];
    std::vector<std::array<int, 3>> front(X.begin(), X.begin() + rho);
    std::vector<std::array<int, 3>> front_sub = front;
    front_sub[0][0] = X[rho][0];
    std::vector<std::array<int, 3>> back(X.begin() + rho, X.end());
    const LatticeField& gfront = G[rho - 1];
    const LatticeField& gback = G[k - rho - 1];
    rho_part += (gfront.at(front) - gfront.at(front_sub)) / den * gback.at(back);
  }

  double q_part = 0.0;
  for (int q = -N; q <= N; ++q) {
    if (q * q == X[0][0] * X[0][0]) continue;  // removable
    std::vector<std::array<int, 3>> sub = X;
    sub[0][0] = q;
    if (!gk.has(sub)) continue;  // outside the solved domain
    q_part += (gk.at(X) - gk.at(sub)) / (double(X[0][0]) * X[0][0] - double(q) * q);
  }
  return (-2.0 * p.lambda / Es) * (rho_part - q_part);
}

}  // namespace

std::vector<LatticeField> solve_melonic_tower(const ModelParams& p, int k_max,
                                              std::vector<ConvergenceLog>* logs) {
  auto [g2, log2] = solve_melonic_2pt(p);
  std::vector<LatticeField> G;
  G.push_back(g2);
  if (logs) logs->push_back(log2);

  const int N = p.cutoff;
  for (int k = 2; k <= k_max; ++k) {
    LatticeField gk = LatticeField::zeros(k, N);
    std::fill(gk.valid.begin(), gk.valid.end(), 0);
    std::vector<long long> domain;
    for_each_tuple(k, N, [&](const std::vector<std::array<int, 3>>& X) {
      if (tower_domain(X)) {
        gk.set(X, 0.0);
        domain.push_back(gk.index(X));
      }
    });

    // The k truncated equations (one per distinguished slot) agree only up
    // to truncation order; the cyclic average is solved instead, which makes
    // the solution exactly Z_k-invariant. Orbits are processed from their
    // lexicographically least member so the reduction order is fixed.
    ConvergenceLog log;
    for (int it = 0; it < p.max_iter; ++it) {
      LatticeField next = gk;
      double defect = 0.0;
      for_each_tuple(k, N, [&](const std::vector<std::array<int, 3>>& X) {
        if (!tower_domain(X)) return;
        std::vector<std::vector<std::array<int, 3>>> orbit;
        for (int l = 0; l < k; ++l) {
          std::vector<std::array<int, 3>> rot(X.begin() + l, X.end());
          rot.insert(rot.end(), X.begin(), X.begin() + l);
          orbit.push_back(std::move(rot));
        }
        for (const auto& member : orbit)
          if (member < X) return;  // handled from the orbit representative
        double phi = 0.0;
        for (const auto& member : orbit) {
          const std::array<int, 3> s{{member[0][0], member[k - 1][1], member[k - 1][2]}};
          const double dress = 1.0 + 2.0 * p.lambda / kinetic(p, s) * S_of(G[0], member[0][0], N);
          phi += tower_rhs(p, G, gk, member) / dress;
        }
        phi /= k;
        defect = std::max(defect, std::abs(phi - gk.at(X)));
        const double updated = (1.0 - p.damping) * gk.at(X) + p.damping * phi;
        for (const auto& member : orbit) next.set(member, updated);
      });
      log.residuals.push_back(defect);
      ++log.iterations;
      if (defect < p.tol) {
        log.converged = true;
        break;
      }
      gk = std::move(next);
    }
    if (!log.converged)
      throw error("solve_melonic_tower: order " + std::to_string(2 * k) +
                  " did not converge, residual " +
                  std::to_string(log.residuals.empty() ? 0.0 : log.residuals.back()));
    if (logs) logs->push_back(log);
    G.push_back(std::move(gk));
  }
  return G;
}

const LatticeField& FieldSet::conn(int k) const {
  auto it = connected.find(k);
  if (it == connected.end())
    throw error("FieldSet: missing connected field of order " + std::to_string(2 * k));
  return it->second;
}

double FieldSet::disc(int i, int j, const std::vector<std::array<int, 3>>& tuple) const {
  auto it = disconnected.find({std::min(i, j), std::max(i, j)});
  if (it == disconnected.end())
    throw error("FieldSet: missing disconnected field |X_" + std::to_string(2 * i) + "|X_" +
                std::to_string(2 * j) + "|");
  if (i <= j) return it->second.at(tuple);
  // swap the two component blocks
  std::vector<std::array<int, 3>> sw(tuple.begin() + i, tuple.end());
  sw.insert(sw.end(), tuple.begin(), tuple.begin() + i);
  return it->second.at(sw);
}

double lhs_dressing(const ModelParams& p, const FieldSet& fields,
                    const std::vector<std::array<int, 3>>& X) {
  const int k = static_cast<int>(X.size());
  const std::array<int, 3> s =
      k == 1 ? X[0] : std::array<int, 3>{{X[0][0], X[k - 1][1], X[k - 1][2]}};
  return 1.0 + 2.0 * p.lambda / kinetic(p, s) * S_of(fields.conn(1), X[0][0], p.cutoff);
}

double evaluate_exact_rhs(const ModelParams& p, const FieldSet& fields,
                          const std::vector<std::array<int, 3>>& X) {
  const int k = static_cast<int>(X.size());
  const int N = p.cutoff;
  const std::array<int, 3> s =
      k == 1 ? X[0] : std::array<int, 3>{{X[0][0], X[k - 1][1], X[k - 1][2]}};
  const double Es = kinetic(p, s);
  const LatticeField& gk = fields.conn(k);

  // Ward-term block: sum over the cyclic pullbacks of the order-(2k+2)
  // coefficient function
  double f_part = 0.0;
  for (int l = 0; l < k; ++l) {
    auto rot = [&](int i) { return X[(i + l) % k]; };
    // melon (x) X_2k contribution, weight 1/|Aut| = 1/(1 for k=1; k otherwise)
    const double wmm = (k == 1) ? 0.5 : 1.0 / k;
    double mm = 0.0;
    for (int q = -N; q <= N; ++q)
      for (int r = -N; r <= N; ++r) {
        std::vector<std::array<int, 3>> tup;
        tup.push_back({{s[0], q, r}});
        for (int i = 0; i < k; ++i) tup.push_back(rot(i));
        mm += fields.disc(1, k, tup);
        if (k == 1) {
          // both removals of the two-melon source
          std::vector<std::array<int, 3>> tup2{rot(0), {{s[0], q, r}}};
          mm += fields.disc(1, k, tup2);
        }
      }
    f_part += wmm * mm;

    // X_{2k+2} contributions: insert z^r = (s_1, x_2^{r-1}, x_3^{r-1})
    const LatticeField& gk1 = fields.conn(k + 1);
    for (int r = 0; r <= k; ++r) {
      std::vector<std::array<int, 3>> tup;
      for (int i = 0; i < r; ++i) tup.push_back(rot(i));
      const auto prev = rot((r - 1 + k) % k);
      tup.push_back({{s[0], prev[1], prev[2]}});
      for (int i = r; i < k; ++i) tup.push_back(rot(i));
      f_part += 1.0 / (k + 1) * gk1.at(tup);
    }
  }

  // swap block (rho sum), empty for k = 1
  double swap_part = 0.0;
  for (int rho = 1; rho < k; ++rho) {
    const double den = double(X[rho][0]) * X[rho][0] - double(X[0][0]) * X[0][0];
    std::vector<std::array<int, 3>> front(X.begin(), X.begin() + rho);
    std::vector<std::array<int, 3>> back(X.begin() + rho, X.end());
    std::vector<std::array<int, 3>> front_sub = front;
    front_sub[0][0] = X[rho][0];
    const LatticeField& gf = fields.conn(rho);
    const LatticeField& gb = fields.conn(k - rho);
    swap_part +=
        (gf.at(front) - gf.at(front_sub)) / den * gb.at(back);
    std::vector<std::array<int, 3>> whole = X;
    std::vector<std::array<int, 3>> whole_sub = whole;
    whole_sub[0][0] = X[rho][0];
    swap_part += (fields.disc(rho, k - rho, whole) - fields.disc(rho, k - rho, whole_sub)) / den;
  }

  // propagator-difference block
  double q_part = 0.0;
  for (int q = -N; q <= N; ++q) {
    if (q * q == X[0][0] * X[0][0]) continue;
    std::vector<std::array<int, 3>> sub = X;
    sub[0][0] = q;
    if (!gk.has(sub)) continue;
    q_part += (gk.at(X) - gk.at(sub)) / (double(X[0][0]) * X[0][0] - double(q) * q);
  }

  const double delta = (k == 1) ? 1.0 / Es : 0.0;
  return delta + (-2.0 * p.lambda / Es) * (f_part + swap_part - q_part);
}

}  // namespace tsde
