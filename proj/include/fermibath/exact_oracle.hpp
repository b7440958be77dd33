#ifndef FERMIBATH_EXACT_ORACLE_HPP
#define FERMIBATH_EXACT_ORACLE_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace fermibath {

inline constexpr int kOracleMaxSites1Q = 12;
inline constexpr int kOracleMaxSites2Q = 10;

// Dense 2^L x 2^L transverse-field Ising Hamiltonian,
// H = -J sum_j (sx_j sx_{j+1} + lambda sz_j), periodic (site L+1 = site 1).
// Basis: computational sz eigenstates, site j = bit j, bit 0 <-> sz = +1.
Eigen::MatrixXcd build_ising_dense(int lattice_size, double lambda, double coupling_j = 1.0);

// Diagonal of the parity operator prod_j sz_j in the same basis.
Eigen::VectorXd parity_diagonal(int lattice_size);

struct EvenGroundState {
  double energy = 0.0;
  Eigen::VectorXcd state;
};

// Lowest eigenvector with parity expectation > 0.99. Throws ParityAmbiguity
// when a mixed-parity eigenvector sits within 1e-10 of the selection (the
// even choice is then ill-defined) or when no even eigenvector exists.
EvenGroundState even_ground_state(const Eigen::MatrixXcd& hamiltonian, int lattice_size);

// Even-sector ground energy of the dense chain; cross-check for the analytic
// -(1/2) sum_k eps_g^k.
double oracle_even_ground_energy(int lattice_size, double lambda);

// Brute-force decoherence factor <phi_g(t)|phi_e(t)> from exact evolution of
// the even-sector ground state, H_e = H_g - delta * sum_j sz_j.
std::vector<std::complex<double>> oracle_decoherence_factor(int lattice_size, double lambda,
                                                            double delta,
                                                            std::span<const double> times);

// Brute-force two-qubit overlaps x_{0,1}, x_{0,2}, x_{1,2} (in that order),
// x_{a,b}(t) = <phi_b(t)|phi_a(t)> with |phi_a(t)> = e^{-i H_a t} |G_0>.
std::array<std::vector<std::complex<double>>, 3> oracle_two_qubit_overlaps(
    int lattice_size, double lambda, double delta1, double delta2, std::span<const double> times);

}  // namespace fermibath

#endif  // FERMIBATH_EXACT_ORACLE_HPP
