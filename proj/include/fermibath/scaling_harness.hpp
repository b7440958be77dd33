#ifndef FERMIBATH_SCALING_HARNESS_HPP
#define FERMIBATH_SCALING_HARNESS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fermibath/echo_engine.hpp"
#include "fermibath/ising_env.hpp"
#include "fermibath/nonmarkov_measures.hpp"
#include "fermibath/time_grid.hpp"

namespace fermibath {

// Revivals at criticality sit near t = L/2, so t_end = 0.75 L brackets the
// first one; the point density keeps dt below a quarter of the fastest mode
// period for any lambda_eff <= 2.
struct GridPolicy {
  double t_end_per_site = 0.75;
  std::size_t min_points = 4096;
  std::size_t points_per_site = 8;

  TimeGrid make(int lattice_size) const;
};

struct SweepRow {
  int lattice_size = 0;
  double lambda = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  double tm_star = 0.0;
  double tf_star = 0.0;
  double l_dec = 0.0;  // NaN when no revival exists
  double l_rev = 0.0;  // NaN when no revival exists
  double tau = 0.0;    // NaN when no revival exists
  std::size_t skipped = 0;
};

// One eta evaluation per lattice size, each on its policy grid. Results are
// ordered by the input list regardless of scheduling.
std::vector<SweepRow> sweep_eta(std::span<const int> sizes, double lambda, double delta,
                                const GridPolicy& policy = {}, int workers = 1,
                                double tol_sing = kDefaultTolSing);

// Per-lambda eta rows at fixed L (lambda values are the bare field; the
// effective field is lambda + delta).
std::vector<SweepRow> lambda_scan_eta(std::span<const double> lambdas, int lattice_size,
                                      double delta, const GridPolicy& policy = {}, int workers = 1,
                                      double tol_sing = kDefaultTolSing);

struct WitnessRow {
  double lambda = 0.0;
  double lambda_eff = 0.0;
  double witness_n = 0.0;
  double window_t_end = 0.0;
};

// Witness scan over bare lambda values in a pre-revival window. When no
// window is supplied, each row uses witness_window(L, delta).
std::vector<WitnessRow> lambda_scan_witness(std::span<const double> lambdas, int lattice_size,
                                            double delta, std::optional<double> window_t_end = {},
                                            std::size_t n_points = 4096, int workers = 1);

// Default pre-revival window: half the first revival time of the critical
// trace (lambda = 1 - delta) at the same lattice size.
double witness_window(int lattice_size, double delta, const GridPolicy& policy = {},
                      int workers = 1);

struct ScalingFit {
  std::vector<double> sizes;
  std::vector<double> log_neg_eta;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of ln(-eta) on L. Requires >= 3 points, all eta < 0.
ScalingFit fit_log_eta(std::span<const std::pair<double, double>> size_eta_points);

// Earliest grid time where the small lattice's echo deviates from the larger
// one's, after rescaling the larger echo by the size ratio (shape comparison;
// the raw curves differ in amplitude by construction). The threshold is
// eps_gamma times the small lattice's echo range. nullopt when never exceeded.
std::optional<double> chaos_onset(const DecoherenceTrace& trace_small, int size_small,
                                  const DecoherenceTrace& trace_large, int size_large,
                                  double eps_gamma = 0.01);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_fit_csv(std::ostream& out, const ScalingFit& fit);
void write_witness_csv(std::ostream& out, std::span<const WitnessRow> rows);

}  // namespace fermibath

#endif  // FERMIBATH_SCALING_HARNESS_HPP
