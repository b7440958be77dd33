#ifndef FERMIBATH_PAIRED_MODES_HPP
#define FERMIBATH_PAIRED_MODES_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fermibath {

// One k > 0 mode of a paired-mode quadratic fermionic environment. The -k
// partner is implicit: theta(-k) = -theta(k), eps(-k) = eps(k).
struct ModeEntry {
  double k;        // momentum in (0, pi)
  double theta_g;  // Bogoliubov angle of the unperturbed Hamiltonian
  double theta_e;  // Bogoliubov angle of the perturbed Hamiltonian
  double eps_g;    // single-particle energy, unperturbed (>= 0, J = 1 units)
  double eps_e;    // single-particle energy, perturbed (>= 0)
};

// Half the angle difference between the two Bogoliubov frames; this is the
// only angle combination observables depend on.
inline double alpha(const ModeEntry& entry) { return 0.5 * (entry.theta_g - entry.theta_e); }

// Ground energy of a diagonal form H = sum_k eps^k (A_k^dag A_k - 1/2),
// summing over the full +-k list passed in. Rejects an empty spectrum.
double ground_energy(std::span<const double> energies);

// Bogoliubov mode table for one environment Hamiltonian pair (H_g, H_e),
// stored for k > 0 only, ascending. Immutable after construction; safe to
// share across workers.
class ModeSpectrum {
 public:
  // Validates finiteness, eps >= 0, k in (0, pi) ascending, and L == 2*entries.
  ModeSpectrum(std::vector<ModeEntry> entries, int lattice_size);

  const std::vector<ModeEntry>& entries() const { return entries_; }
  int lattice_size() const { return lattice_size_; }
  double ground_energy_g() const { return ground_energy_g_; }
  double ground_energy_e() const { return ground_energy_e_; }

 private:
  std::vector<ModeEntry> entries_;
  int lattice_size_;
  double ground_energy_g_;
  double ground_energy_e_;
};

// CSV ingestion/emission with header `k,theta_g,theta_e,eps_g,eps_e`, one row
// per k > 0 mode. Lines starting with '#' are ignored on input.
ModeSpectrum spectrum_from_csv(std::istream& in);
ModeSpectrum load_spectrum_csv(const std::string& path);
void write_spectrum_csv(std::ostream& out, const ModeSpectrum& spec);

}  // namespace fermibath

#endif  // FERMIBATH_PAIRED_MODES_HPP
