#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/markoff.hpp"

// Counting quantities built from length spectra: N(L), the normalized
// counts nu^L = N(L)/L^d, log-log growth fits, the simplex factor
// (d-n)!/d! L^d / prod(l_i), and the unit-ball identity on the two-holed
// projective plane.

namespace crosscap {

struct CountSeries {
  std::vector<double> lengths;  // sorted nondecreasing, positive
  std::string label;
  bool certified = true;

  static CountSeries from_lengths(std::vector<double> lengths, std::string label,
                                  bool certified = true);
};

/// Number of entries <= L (inclusive).
std::int64_t count_upto(const CountSeries& s, double L);

/// count_upto(s, L) / L^d.
double nu_value(const CountSeries& s, double L, int d);

struct ExponentFit {
  double slope;
  double intercept;
  double r_squared;
  double window_lo;
  double window_hi;
  int points;
};

/// Geometric grid from hi down to lo with the given ratio (default
/// 2^(1/4)), returned increasing.
std::vector<double> geometric_grid(double lo, double hi, double ratio = 1.189207115002721);

/// Least-squares slope of log N(L) against log L over the grid points
/// with nonzero counts; throws "fit window too small" below 5 points.
ExponentFit fit_exponent(const CountSeries& s, const std::vector<double>& grid);

/// Fit over the top `decades` decades of the data range.
ExponentFit fit_exponent_top(const CountSeries& s, double decades = 2.0);

struct BallCountRow {
  double L;
  std::int64_t count;
  double nu;
};

/// N(L) and nu^L = N(L)/L^d tabulated on a grid.
std::vector<BallCountRow> ball_count(const CountSeries& s, const std::vector<double>& grid,
                                     int d);

/// ((d-n)!/d!) L^d / (l_1 ... l_n): the volume of
/// {x in R_+^n : sum x_i l_i <= L} weighted by (L - sum x_i l_i)^(d-n).
double simplex_moment(const std::vector<double>& boundary_lengths, int d, double L);

/// Relative error between the direct count (floor(L/l1)+floor(L/l2))/L of
/// integral simple multicurves of length <= L on the two-holed projective
/// plane and the prediction 1/l1 + 1/l2 of the unit-ball identity.
double bx_identity_error_n12(double l1, double l2, double L);

/// Length spectrum of a Markoff orbit under l(t) = 2 acosh(max(t)/2).
/// Counts integer points: each sorted tuple contributes once per
/// distinct coordinate ordering.
CountSeries markoff_length_series(const MarkoffConfig& config, std::uint64_t bound,
                                  bool weight_by_orderings = true);

}  // namespace crosscap
