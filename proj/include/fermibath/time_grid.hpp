#ifndef FERMIBATH_TIME_GRID_HPP
#define FERMIBATH_TIME_GRID_HPP

#include <cstddef>

namespace fermibath {

// Uniform time grid t_i = t_start + i * spacing, i = 0 .. n_points-1.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t n_points = 0;

  TimeGrid() = default;
  TimeGrid(double start, double end, std::size_t n);

  double spacing() const { return (t_end - t_start) / static_cast<double>(n_points - 1); }
  double time(std::size_t i) const { return t_start + static_cast<double>(i) * spacing(); }

  bool operator==(const TimeGrid&) const = default;
};

}  // namespace fermibath

#endif  // FERMIBATH_TIME_GRID_HPP
