#ifndef FERMIBATH_CHANNEL_MAPS_HPP
#define FERMIBATH_CHANNEL_MAPS_HPP

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>
#include <vector>

namespace fermibath {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Matrix16c = Eigen::Matrix<Complex, 16, 16>;

// Vectorization convention: vec(|i><j|) = |i> (x) |j>, basis order (g, e) for
// one qubit and (gg, ge, eg, ee) for two, so vec(rho) lists rho row-major.

// One-qubit dephasing superoperator diag(1, x*, x, 1): populations fixed,
// coherences scaled by x / x*. Rejects |x| > 1 + 1e-9.
class Superoperator1Q {
 public:
  explicit Superoperator1Q(Complex x);

  Complex x() const { return x_; }
  const Matrix4c& matrix() const { return matrix_; }

  // rho' = vec^{-1}(Phi vec(rho)).
  Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho) const;

 private:
  Complex x_;
  Matrix4c matrix_;
};

Superoperator1Q map_1q(Complex x);

// y(t_f, t_m) = x(t_f) / x(t_m). Throws SingularIntermediate when
// |x(t_m)| <= tol_sing.
Complex intermediate_ratio(Complex x_f, Complex x_m, double tol_sing, double t_m = 0.0);

inline constexpr double kDefaultTolSing = 1e-12;

// Dense Hermitian Choi matrix with cached ascending spectrum.
class DynamicalMatrix {
 public:
  // Checks Hermiticity to 1e-12 (max entrywise |D - D^dagger|), then solves.
  explicit DynamicalMatrix(Eigen::MatrixXcd entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  double min_eigenvalue() const { return eigenvalues_.front(); }

 private:
  Eigen::MatrixXcd entries_;
  std::vector<double> eigenvalues_;
};

// 4x4 Choi matrix of the one-qubit intermediate map: units at corners (0,0)
// and (3,3), y at (3,0), y* at (0,3). Spectrum {0, 0, 1-|y|, 1+|y|}.
DynamicalMatrix dynamical_matrix_1q(Complex y);

// Smallest eigenvalue of dynamical_matrix_1q in closed form: min(0, 1 - |y|).
double min_eigenvalue_1q(Complex y);

// 16x16 Choi matrix of the two-qubit intermediate map. y01, y02, y12 are the
// component ratios, dt = t_f - t_m, and the system phases are
// phi_+- = 2 J_S (1 +- lambda_S), phi_0 = 4 J_S lambda_S.
DynamicalMatrix dynamical_matrix_2q(Complex y01, Complex y02, Complex y12, double j_s,
                                    double lambda_s, double dt);

// Full real spectrum, ascending. Hermiticity checked to 1e-12; eigenvalue sum
// matches the trace to 1e-10.
std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& m);

// CSV of (row, col, re, im) triples, nonzero entries only.
void write_choi_csv(std::ostream& out, const DynamicalMatrix& d);

}  // namespace fermibath

#endif  // FERMIBATH_CHANNEL_MAPS_HPP
