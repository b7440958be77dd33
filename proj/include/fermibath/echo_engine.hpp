#ifndef FERMIBATH_ECHO_ENGINE_HPP
#define FERMIBATH_ECHO_ENGINE_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fermibath/paired_modes.hpp"
#include "fermibath/time_grid.hpp"

namespace fermibath {

using Complex = std::complex<double>;

// Decoherence factor x(t) = <phi_g(t)|phi_e(t)> in the factorized form
//   e^{-i(E_e - E_g) t} prod_{k>0} [cos^2 a_k + sin^2 a_k e^{-2 i eps_e^k t}],
// a_k = (theta_g^k - theta_e^k)/2. Modulus <= 1; exactly 1 at t = 0.
Complex decoherence_factor(const ModeSpectrum& spec, double t);

// Loschmidt echo |x(t)|^2, clipped into [0, 1].
double loschmidt_echo(const ModeSpectrum& spec, double t);

// Two-qubit overlap x_{a,b}(t) = <phi_b(t)|phi_a(t)>, a, b in {0, 1, 2}, from
// the three spectra of build_two_qubit_spectra. Four-term per-mode product
// over k > 0 with global phase e^{-i(E_a - E_b) t}.
Complex overlap_two_qubit(int a, int b, const std::array<ModeSpectrum, 3>& spectra, double t);

// One-qubit trace: x at every grid point, evaluated in ascending-k order per
// point so results are bitwise identical for any worker count.
struct DecoherenceTrace {
  TimeGrid grid;
  std::vector<Complex> x;
  std::uint64_t params_fingerprint = 0;

  double abs_x(std::size_t i) const { return std::abs(x[i]); }
  double echo(std::size_t i) const;
};

// Two-qubit trace: the components x_{0,1}, x_{0,2}, x_{1,2} in that order.
struct TwoQubitTrace {
  TimeGrid grid;
  std::array<std::vector<Complex>, 3> x;  // indices: 0 -> (0,1), 1 -> (0,2), 2 -> (1,2)
  std::uint64_t params_fingerprint = 0;

  static constexpr std::array<std::pair<int, int>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
};

DecoherenceTrace trace_over_grid(const ModeSpectrum& spec, const TimeGrid& grid, int workers = 1);
TwoQubitTrace trace_over_grid(const std::array<ModeSpectrum, 3>& spectra, const TimeGrid& grid,
                              int workers = 1);

// CSV export: `t,re_x,im_x,abs_x,echo` / `t,re_x01,im_x01,re_x02,im_x02,re_x12,im_x12`.
void write_trace_csv(std::ostream& out, const DecoherenceTrace& trace);
void write_trace_csv(std::ostream& out, const TwoQubitTrace& trace);

std::uint64_t fingerprint_bytes(const void* data, std::size_t n, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace fermibath

#endif  // FERMIBATH_ECHO_ENGINE_HPP
