#ifndef FERMIBATH_NONMARKOV_MEASURES_HPP
#define FERMIBATH_NONMARKOV_MEASURES_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "fermibath/channel_maps.hpp"
#include "fermibath/echo_engine.hpp"
#include "fermibath/ising_env.hpp"

namespace fermibath {

// Minimizer of the intermediate-map eigenvalue over grid pairs t_m < t_f.
struct EtaResult {
  double eta = 0.0;  // <= 0 always
  std::size_t tm_index = 0;
  std::size_t tf_index = 0;
  double tm = 0.0;
  double tf = 0.0;
  std::size_t skipped_cells = 0;  // t_m points with |x(t_m)| <= tol_sing
};

// O(T) scan: for each t_m the worst t_f maximizes |x| on (t_m, t_end], so one
// suffix-maximum pass suffices. Ties resolve to the earliest (t_m, t_f) pair,
// matching an exhaustive ascending scan with strict improvement.
EtaResult eta_scan(const DecoherenceTrace& trace, double tol_sing = kDefaultTolSing);

// Two-qubit measure: exhaustive minimum over pairs of the smallest eigenvalue
// of the 16x16 intermediate Choi matrix. A t_m is skipped when any of the
// three overlap components is singular there.
EtaResult eta_two_qubit(const TwoQubitTrace& trace, const TwoQubitParams& params,
                        double tol_sing = kDefaultTolSing);

struct RevivalStats {
  double l_dec = 0.0;  // global echo minimum (ties: latest grid point)
  double l_rev = 0.0;  // echo maximum strictly after the minimum (ties: earliest)
  double tau = 0.0;    // time of that maximum
  std::size_t dec_index = 0;
  std::size_t rev_index = 0;
};

// Throws NoRevival when the global echo minimum sits at the final grid point.
RevivalStats revival_stats(const DecoherenceTrace& trace);

// Negativity of the qubit+ancilla pair prepared in |phi+>: E_SA(t) = |x(t)|.
std::vector<double> negativity_trace(const DecoherenceTrace& trace);

// Independent route: eigenvalues of the partial transpose of
// (Phi(t,0) (x) I)[|phi+><phi+|], summed as sum_i (|p_i| - p_i).
double negativity_by_partial_transpose(Complex x);

// Witness of non-Markovianity: discrete positive variation
// sum over i of max(0, E_{i+1} - E_i). Zero for monotone nonincreasing input.
double witness_positive_variation(std::span<const double> entanglement);

// Strict three-point local extrema with plateau merging (the first point of a
// plateau wins). Endpoints are not extrema.
struct LocalExtrema {
  std::vector<std::size_t> maxima;
  std::vector<std::size_t> minima;
};
LocalExtrema local_extrema(std::span<const double> values);

struct NonMarkovReport {
  double eta = 0.0;
  double argmin_tm = 0.0;
  double argmin_tf = 0.0;
  std::size_t skipped_cells = 0;
  std::optional<RevivalStats> revival;  // absent when no revival exists
  double witness_n = 0.0;
};

// Full report for a one-qubit trace: eta scan + revival statistics +
// entanglement witness over E_SA = |x|.
NonMarkovReport assemble_report(const DecoherenceTrace& trace, double tol_sing = kDefaultTolSing);

// Flat `key,value` rows.
void write_report_csv(std::ostream& out, const NonMarkovReport& report);

}  // namespace fermibath

#endif  // FERMIBATH_NONMARKOV_MEASURES_HPP
