#pragma once

#include <cstdint>
#include <vector>

// Geodesic arcs in the Mobius-band collar of a one-sided geodesic.
//
// The collar of core length l and width w lifts to the band of width w
// around the imaginary axis; the deck transformation is the glide
// G(z) = -e^l conj(z).  Arcs from p to q on the collar boundary fall
// into homotopy classes indexed by an integer k, realized by the
// geodesic chords [p~, G^k(q~)] between fixed boundary lifts.  Their
// self-intersection numbers have a closed form, which the geometric
// crossing count reproduces after an index calibration (the k-labeling
// depends on the choice of the boundary arc joining p to q).

namespace crosscap {

struct CollarParams {
  double core_length;
  double width;
  // heights of the endpoint lifts along the band; p~ on the right
  // boundary ray, q~ on the left
  double offset_p = 0.0;
  double offset_q = 0.0;

  double boundary_length() const;  // 2 * core_length * cosh(width)
};

/// i(alpha_k, alpha_k) from the case table:
/// k/2, |k|/2 - 1, (k+1)/2, (|k|-1)/2 for k even >= 0, even < 0,
/// odd > 0, odd < 0.
std::int64_t self_intersections_closed_form(std::int64_t k);

/// Hyperbolic length of the chord [p~, G^k(q~)].  Throws if the two
/// lifts coincide ("degenerate arc").
double arc_length(const CollarParams& params, std::int64_t k);

/// Self-intersection count of the arc alpha_k: half the number of deck
/// translates G^j(alpha_k), 0 < |j| <= j_window, crossing alpha_k.
/// Stable once j_window >= |k| + 2.
std::int64_t self_intersections_geometric(const CollarParams& params, std::int64_t k,
                                          std::int64_t j_window);

struct CollarCalibration {
  int sign;    // +-1
  int offset;  // small integer
};

/// Index calibration between the geometric count and the closed form:
/// geometric(k) == closed_form(sign * k + offset) for all k.  Determined
/// by matching on |k| <= 6; throws if no (sign, offset) matches.
CollarCalibration calibrate_collar_index(const CollarParams& params);

struct CollarMarginRow {
  std::int64_t k;
  std::int64_t i_closed;  // calibrated closed form
  std::int64_t i_geom;
  double length;
  double margin;
};

/// Margins of |i(a_k,a_k) - l(a_k)/(2 l)| <= (l(dC) + 2w)/(2 l) + 1
/// for k in [k_min, k_max]; all margins nonnegative when the bound holds.
std::vector<CollarMarginRow> verify_collar_inequality(const CollarParams& params,
                                                      std::int64_t k_min,
                                                      std::int64_t k_max);

}  // namespace crosscap
