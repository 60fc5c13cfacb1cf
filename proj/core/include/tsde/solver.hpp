#ifndef TSDE_SOLVER_HPP
#define TSDE_SOLVER_HPP

#include <array>
#include <map>
#include <vector>

#include "tsde/graph.hpp"

namespace tsde {

struct ModelParams {
  double mass_sq = 1.0;
  double lambda = 0.0;
  int cutoff = 2;  // momenta in [-N, N]^3
  double tol = 1e-10;
  int max_iter = 10000;
  double damping = 0.5;
  bool symmetry_reduced = true;  // store the 2-point function on (x1^2, x2^2+x3^2)
};

/// Real field on k-tuples of box momenta. Slot-major dense layout; entries
/// outside the solved domain are flagged invalid.
struct LatticeField {
  int order_k = 1;
  int cutoff = 0;
  bool symmetry_reduced = false;
  std::vector<double> values;
  std::vector<unsigned char> valid;

  static LatticeField zeros(int k, int N);
  int side() const { return 2 * cutoff + 1; }
  long long index(const std::vector<std::array<int, 3>>& tuple) const;
  double at(const std::vector<std::array<int, 3>>& tuple) const;
  bool has(const std::vector<std::array<int, 3>>& tuple) const;
  void set(const std::vector<std::array<int, 3>>& tuple, double v);
};

struct ConvergenceLog {
  bool converged = false;
  int iterations = 0;
  std::vector<double> residuals;  // fixed-point defect per sweep, max norm
};

/// Damped Picard iteration for the closed melonic 2-point equation,
/// starting from the free propagator.
std::pair<LatticeField, ConvergenceLog> solve_melonic_2pt(const ModelParams& p);

/// Recursive melonic tower: G^(2k) for k = 2..k_max from the lower orders.
/// index 0 of the result is the 2-point function.
std::vector<LatticeField> solve_melonic_tower(const ModelParams& p, int k_max,
                                              std::vector<ConvergenceLog>* logs = nullptr);

/// Supplied correlation data for the exact right-hand sides. Disconnected
/// fields are keyed by the component orders (i <= j) of |X_2i|X_2j|.
struct FieldSet {
  std::map<int, LatticeField> connected;
  std::map<std::pair<int, int>, LatticeField> disconnected;

  const LatticeField& conn(int k) const;
  double disc(int i, int j, const std::vector<std::array<int, 3>>& tuple) const;
};

/// Untruncated RHS of the 2k-point equation at tuple X, including the
/// Ward-term contributions and disconnected-boundary pieces; needs orders
/// up to 2k+2 (zero fields are fine).
double evaluate_exact_rhs(const ModelParams& p, const FieldSet& fields,
                          const std::vector<std::array<int, 3>>& X);

/// LHS dressing factor at X for the same equation.
double lhs_dressing(const ModelParams& p, const FieldSet& fields,
                    const std::vector<std::array<int, 3>>& X);

/// Fixed-point defect of the melonic 2-point equation, independent of the
/// iteration loop.
double melonic_2pt_residual(const ModelParams& p, const LatticeField& g2);

/// One undamped Picard application on the melonic 2-point equation.
LatticeField melonic_2pt_step(const ModelParams& p, const LatticeField& g2);

/// Tuples solvable for the order-k tower equation: rows pairwise distinct,
/// colour-1 entries with pairwise distinct absolute values.
bool tower_domain(const std::vector<std::array<int, 3>>& X);

}  // namespace tsde

#endif
