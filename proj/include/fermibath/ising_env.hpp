#ifndef FERMIBATH_ISING_ENV_HPP
#define FERMIBATH_ISING_ENV_HPP

#include <array>
#include <vector>

#include "fermibath/paired_modes.hpp"

namespace fermibath {

// Transverse-field Ising ring coupled to one central qubit through the field:
// H_g has field lambda, H_e has field lambda + delta.
struct IsingParams {
  int lattice_size = 0;   // even, >= 2
  double lambda = 0.0;    // >= 0
  double delta = 0.0;     // >= 0
  double coupling_j = 1.0;

  void validate() const;
};

// Two central qubits: environment Hamiltonians H_a = H_0 - delta_a * sum sigma^z
// with delta_0 = 0, plus the system couplings (J_S, lambda_S) that enter only
// as phases.
struct TwoQubitParams {
  int lattice_size = 0;
  double lambda = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double j_s = 1.0;
  double lambda_s = 0.0;
  double coupling_j = 1.0;

  void validate() const;
};

// Even-sector (anti-periodic) momenta k = (2 pi / L) q, q = 1/2, 3/2, ...,
// (L-1)/2. Exactly L/2 values, ascending, all in (0, pi).
std::vector<double> momentum_grid(int lattice_size);

// Two-argument arctangent branch of the Bogoliubov angle:
// theta = atan2(-sin k, cos k - lambda_eff). Only differences of angles enter
// observables, so the overall branch is free; this one is fixed so outputs are
// reproducible, and the physical results are pinned against the dense oracle.
double bogoliubov_angle(double k, double lambda_eff);

// Single-particle energy of the diagonalized even-sector chain,
// 2 J sqrt(1 + lambda_eff^2 - 2 lambda_eff cos k). Even in k.
double dispersion(double k, double lambda_eff, double coupling_j = 1.0);

// Mode table for (H_g, H_e) at fields (lambda, lambda + delta).
ModeSpectrum build_spectrum(const IsingParams& params);

// Mode tables for H_0, H_1, H_2 at fields lambda + {0, delta1, delta2}.
// Each spectrum pairs H_0 (as the "g" frame) with H_a (as the "e" frame), so
// spectra[a] exposes alpha_{0,a} directly; alpha_{a,b} follows from
// theta_a - theta_b.
std::array<ModeSpectrum, 3> build_two_qubit_spectra(const TwoQubitParams& params);

}  // namespace fermibath

#endif  // FERMIBATH_ISING_ENV_HPP
