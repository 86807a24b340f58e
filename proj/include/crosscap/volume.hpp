#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosscap/surface.hpp"

// The twist-flow-invariant volume form on Fenchel-Nielsen charts of
// nonorientable surfaces: coth(l) dl over one-sided length coordinates,
// dtau ^ dl over two-sided pairs.  Its distinguishing features at desk
// scale: the volume diverges logarithmically as a one-sided coordinate's
// lower cutoff goes to zero, while the region where all one-sided
// geodesics stay longer than epsilon has finite volume.

namespace crosscap {

struct OneSidedCoordinate {
  std::string label;
  double lo, hi;  // length range, 0 < lo < hi
};

struct TwoSidedCoordinate {
  std::string label;
  double len_lo, len_hi;
  double twist_lo, twist_hi;
};

struct FNChart {
  std::vector<OneSidedCoordinate> one_sided;
  std::vector<TwoSidedCoordinate> two_sided;
};

/// Product of coth over the one-sided lengths; 1 when there are none.
/// Throws "outside chart" for nonpositive lengths.
double norbury_density(const std::vector<double>& one_sided_lengths);

enum class IntegrationMethod { Quadrature, MonteCarlo };

struct VolumeEstimate {
  double value;
  double error;  // quadrature refinement bound or Monte Carlo standard error
  std::string method;
  std::uint64_t evaluations;
  std::uint32_t seed;  // meaningful for Monte Carlo only
  bool certified = true;
};

/// Volume of the chart box: the density integrated over the one-sided
/// length ranges times the two-sided box measures.  Quadrature uses
/// composite Gauss-Legendre panels (budget = panels per octave);
/// Monte Carlo is seeded and reproducible.
VolumeEstimate integrate_chart(const FNChart& chart, IntegrationMethod method,
                               std::uint64_t budget, std::uint32_t seed = 1);

/// log(sinh(hi)) - log(sinh(lo)): the exact one-coordinate integral, the
/// reference for the quadrature agreement checks.
double coth_integral(double lo, double hi);

struct DivergenceSample {
  double delta;
  double volume;
};

/// Volumes of the template chart with the one-sided lower cutoffs
/// replaced by delta, for each delta in the decreasing sequence.
std::vector<DivergenceSample> divergence_profile(const std::vector<double>& deltas,
                                                 const FNChart& chart_template,
                                                 IntegrationMethod method,
                                                 std::uint64_t budget);

/// Least-squares slope of volume against log(1/delta).
double divergence_slope(const std::vector<DivergenceSample>& profile);

/// Norbury volume of the region {sys- >= eps} in the Fenchel-Nielsen
/// chart of the one-holed Klein bottle model, with both core lengths
/// capped at `cap`.  sys- at a chart point is the minimum over the twist
/// family of one-sided geodesics, evaluated to saturation; the estimate
/// is certified when every sampled point saturates.  Same-seed estimates
/// are monotone nonincreasing in eps.
VolumeEstimate sys_region_volume(const HolonomyRep& klein_model, double eps, double cap,
                                 IntegrationMethod method, std::uint64_t samples,
                                 std::uint32_t seed);

}  // namespace crosscap
