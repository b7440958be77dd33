#ifndef FERMIBATH_ERRORS_HPP
#define FERMIBATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermibath {

// Base class for numerical/domain failures. Parameter-validation problems use
// std::invalid_argument instead; the CLI maps the two families to different
// exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// |x(t_m)| at or below tol_sing: the intermediate-map pseudo-inverse does not
// exist at this grid point.
class SingularIntermediate : public Error {
 public:
  SingularIntermediate(double t_m, double abs_x, double tol)
      : Error("intermediate map singular at t_m=" + std::to_string(t_m) +
              " (|x|=" + std::to_string(abs_x) + " <= tol_sing=" + std::to_string(tol) + ")"),
        t_m(t_m) {}
  double t_m;
};

class EmptyTrace : public Error {
 public:
  EmptyTrace() : Error("trace has fewer than two grid points") {}
};

class NoRevival : public Error {
 public:
  NoRevival() : Error("echo global minimum sits at the final grid point; no revival exists") {}
};

class SizeLimit : public Error {
 public:
  SizeLimit(int L, int cap)
      : Error("dense oracle limited to L <= " + std::to_string(cap) +
              " (requested L=" + std::to_string(L) + ")") {}
};

class ParityAmbiguity : public Error {
 public:
  explicit ParityAmbiguity(const std::string& msg) : Error(msg) {}
};

class GridMismatch : public Error {
 public:
  GridMismatch() : Error("traces were evaluated on different time grids") {}
};

class InsufficientPoints : public Error {
 public:
  InsufficientPoints(std::size_t got, std::size_t need)
      : Error("fit needs at least " + std::to_string(need) + " points, got " +
              std::to_string(got)) {}
};

class NonNegativeEta : public Error {
 public:
  explicit NonNegativeEta(double L)
      : Error("eta >= 0 at L=" + std::to_string(L) + "; ln(-eta) undefined") {}
};

class NonHermitian : public Error {
 public:
  explicit NonHermitian(double residual)
      : Error("matrix fails Hermiticity check (max |D - D^dagger| = " +
              std::to_string(residual) + ")") {}
};

}  // namespace fermibath

#endif  // FERMIBATH_ERRORS_HPP
