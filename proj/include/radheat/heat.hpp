// heat.hpp — Dirichlet heat semigroups of the radial reduction and of
// materialized balls. The exhaustion limit of the semigroup mass at the root
// is the probabilistic side of the conservation dichotomy.
#pragma once

#include "radheat/ball.hpp"
#include "radheat/family.hpp"

#include <string>
#include <vector>

namespace radheat {

// Generator of the radial chain truncated at `radius` (absorbing): row r of
// L carries diagonal k+(r)+k-(r), coupling -k+(r) to r+1 and -k-(r) to r-1;
// the missing outward coupling of row radius-1 is the Dirichlet deficit.
// Lateral edges cancel on radial functions and never enter.
struct RadialOperator {
  long radius = 0;
  Eigen::VectorXd diagonal;  // size radius
  Eigen::VectorXd outward;   // size radius-1, coupling r -> r+1
  Eigen::VectorXd inward;    // size radius-1, coupling r+1 -> r
  double max_diagonal = 0.0;
};
RadialOperator build_radial_operator(const RadialProfile& p, long radius);

// Absorbing chain in assembled form: a tridiagonal core plus optional pendant
// states (decorated trees; one lumped end state per interior parent radius).
// Row r of the generator:
//   (Lu)(r) = diag(r) u(r) - up(r) u(r+1) - lo(r) u(r-1) - pend(r) u(end(r))
// and each pendant row couples back to its parent with unit rate.
struct ChainOperator {
  long rows = 0;
  Eigen::VectorXd diag, up, lo, pend;
  std::vector<long> pend_state;  // state index for row r, or -1
  long dim = 0;
  double max_diag = 0.0;

  void apply(const double* v, double* out) const;  // out = L v
  // x := (I + c L)^{-1} x  (pendants eliminated, Thomas sweep on the core)
  void shifted_solve(double c, std::vector<double>& x) const;
};

ChainOperator radial_chain(const RadialProfile& p, long radius);
ChainOperator decorated_chain(const SequenceSpec& k, const SequenceSpec& k_tilde, long radius);
ChainOperator weighted_chain(const SequenceSpec& a, long radius);
ChainOperator chain_for(const GraphFamily& g, long radius);

enum class Solver { Auto, Uniformization, TrBdf2 };
Solver parse_solver(const std::string& name);
const char* solver_name(Solver s);

struct SemigroupOptions {
  double poisson_tail = 1e-12;  // neglected Poisson mass per advance
  double step_tol = 1e-9;       // accuracy target of the stiff integrator
  long max_steps = 2'000'000;
};

struct AdvanceStats {
  std::string solver;
  long work = 0;  // jump applications / accepted steps
};

// u := exp(-dt L) u by uniformization: L = lam (I - P) with lam = max_diag,
// the Poisson weights taken over a two-sided window around the mode with
// neglected mass <= poisson_tail. Positivity-preserving by construction.
void advance_uniformization(const ChainOperator& op, std::vector<double>& u, double dt,
                            const SemigroupOptions& opt, AdvanceStats* stats = nullptr);

// u := exp(-dt L) u by adaptive TR-BDF2 (L-stable) with Richardson step
// doubling; suited to the stiff large-radius truncations where lam dt is
// astronomical. Throws SolverBudgetExceeded past max_steps.
void advance_trbdf2(const ChainOperator& op, std::vector<double>& u, double dt,
                    const SemigroupOptions& opt, AdvanceStats* stats = nullptr);

// M_R(t) = u(t, 0) with u(0,.) = 1 on the truncated chain, marched over the
// (strictly increasing) time grid. Values are clamped to the mathematical
// range [0, 1].
std::vector<double> mass_at_radius(const GraphFamily& g, long radius,
                                   const std::vector<double>& times, Solver solver,
                                   const SemigroupOptions& opt = {}, AdvanceStats* stats = nullptr);

struct MassCurve {
  std::vector<double> times;
  struct Row {
    long radius = 0;
    std::vector<double> mass;  // per time
    std::string solver;
    long work = 0;
  };
  std::vector<Row> rows;
  std::vector<double> limit_estimate;  // last row
  std::vector<double> last_gap;        // per time, |last - previous|
  bool converged = false;
  long final_radius = 0;
  double doubling_tol = 1e-6;
};

struct MassOptions {
  std::vector<double> times{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  long r_start = 16;
  long r_max = 1 << 20;
  double doubling_tol = 1e-6;
  Solver solver = Solver::Auto;
  SemigroupOptions semigroup{};
};

// Exhaustion limit: double the truncation radius until the mass curve moves
// by at most doubling_tol at every grid time, or r_max is reached. Radial
// monotonicity in R is asserted (up to solver tolerance).
MassCurve dirichlet_mass(const GraphFamily& g, const MassOptions& opt);

// Dense Dirichlet generator of a materialized ball (interior rows only) and
// the heat kernel row p_t(root, .) via the spectral decomposition.
Eigen::MatrixXd ball_dirichlet_generator(const FiniteBall& ball);
Eigen::VectorXd ball_heat_kernel_row(const FiniteBall& ball, double t);

// Lateral-edge irrelevance, checked on explicit balls: the kernel row of the
// bare tree and of the tree with complete spheres agree vertex by vertex, and
// both are constant on spheres.
struct ComparisonReport {
  long radius = 0;
  double t = 0.0;
  long interior_vertices = 0;
  double tree_sphere_spread = 0.0;
  double graph_sphere_spread = 0.0;
  double cross_difference = 0.0;
};
ComparisonReport comparison_test(const SequenceSpec& k, long radius, double t,
                                 long vertex_cap = 4000);

// Partial sums of the two volume-to-boundary series
//   Σ_{r<=n} V(r)/S(r+1)   and   Σ_{r<=n} V(r)/(k+(r)S(r)),  n = 0..radius,
// evaluated through scale-invariant ratio recurrences.
struct VolumeSeries {
  std::vector<double> vs_next_sphere;
  std::vector<double> vs_outflow;
};
VolumeSeries volume_ratio_series(const RadialProfile& p, long radius);

// Decorated-tree accounting S~(r) = S(r) + k~(r-1)S(r-1): partial sums of
// Σ V~(r)/S~(r+1).
std::vector<double> decorated_volume_series(const SequenceSpec& k, const SequenceSpec& k_tilde,
                                            long radius);

}  // namespace radheat
