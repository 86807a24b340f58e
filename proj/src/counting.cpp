#include "crosscap/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace crosscap {

CountSeries CountSeries::from_lengths(std::vector<double> lengths, std::string label,
                                      bool certified) {
  for (double l : lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("count series lengths must be positive");
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return {std::move(lengths), std::move(label), certified};
}

std::int64_t count_upto(const CountSeries& s, double L) {
  if (L < 0.0) throw std::invalid_argument("length bound must be nonnegative");
  return std::upper_bound(s.lengths.begin(), s.lengths.end(), L) - s.lengths.begin();
}

double nu_value(const CountSeries& s, double L, int d) {
  if (!(L > 0.0)) throw std::invalid_argument("length bound must be positive");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  return static_cast<double>(count_upto(s, L)) / std::pow(L, d);
}

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
  if (!(lo > 0.0) || !(hi > lo) || !(ratio > 1.0)) {
    throw std::invalid_argument("bad grid parameters");
  }
  std::vector<double> grid;
  for (double L = hi; L >= lo * (1.0 - 1e-12); L /= ratio) grid.push_back(L);
  std::reverse(grid.begin(), grid.end());
  return grid;
}

ExponentFit fit_exponent(const CountSeries& s, const std::vector<double>& grid) {
  std::vector<double> xs, ys;
  for (double L : grid) {
    std::int64_t n = count_upto(s, L);
    if (n > 0) {
      xs.push_back(std::log(L));
      ys.push_back(std::log(static_cast<double>(n)));
    }
  }
  if (xs.size() < 5) throw std::invalid_argument("fit window too small");
  int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  double slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (int i = 0; i < n; ++i) {
    double r = ys[i] - (slope * xs[i] + intercept);
    ss_res += r * r;
  }
  double r2 = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
  double lo = std::exp(xs.front()), hi = std::exp(xs.back());
  return {slope, intercept, r2, std::min(lo, hi), std::max(lo, hi), n};
}

ExponentFit fit_exponent_top(const CountSeries& s, double decades) {
  if (s.lengths.empty()) throw std::invalid_argument("fit window too small");
  double hi = s.lengths.back();
  double lo = hi / std::pow(10.0, decades);
  return fit_exponent(s, geometric_grid(lo, hi));
}

std::vector<BallCountRow> ball_count(const CountSeries& s, const std::vector<double>& grid,
                                     int d) {
  std::vector<BallCountRow> rows;
  for (double L : grid) {
    rows.push_back({L, count_upto(s, L), nu_value(s, L, d)});
  }
  return rows;
}

double simplex_moment(const std::vector<double>& boundary_lengths, int d, double L) {
  int n = static_cast<int>(boundary_lengths.size());
  if (n > d) throw std::invalid_argument("overdetermined simplex");
  if (!(L > 0.0)) throw std::invalid_argument("length bound must be positive");
  double value = std::pow(L, d);
  for (double l : boundary_lengths) {
    if (!(l > 0.0)) throw std::invalid_argument("boundary lengths must be positive");
    value /= l;
  }
  // (d-n)!/d! = 1 / (d (d-1) ... (d-n+1))
  for (int i = 0; i < n; ++i) value /= static_cast<double>(d - i);
  return value;
}

double bx_identity_error_n12(double l1, double l2, double L) {
  if (!(l1 > 0.0) || !(l2 > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("invalid lengths");
  }
  double direct = (std::floor(L / l1) + std::floor(L / l2)) / L;
  double predicted = 1.0 / l1 + 1.0 / l2;
  return std::fabs(direct - predicted) / predicted;
}

CountSeries markoff_length_series(const MarkoffConfig& config, std::uint64_t bound,
                                  bool weight_by_orderings) {
  std::vector<double> lengths;
  for (const MarkoffTuple& t : markoff_orbit(config, bound)) {
    double len = 2.0 * std::acosh(static_cast<double>(t.back()) / 2.0);
    if (!(len > 0.0)) continue;  // the root tuple maps to length 0
    int copies = 1;
    if (weight_by_orderings) {
      std::map<std::uint64_t, int> mult;
      for (std::uint64_t x : t) ++mult[x];
      int f = 1;
      for (int i = 2; i <= config.arity; ++i) f *= i;
      for (const auto& [value, count] : mult) {
        (void)value;
        for (int i = 2; i <= count; ++i) f /= i;
      }
      copies = f;
    }
    for (int c = 0; c < copies; ++c) lengths.push_back(len);
  }
  std::string label = (config.arity == 3) ? "markoff-triples" : "markoff-quadruples";
  return CountSeries::from_lengths(std::move(lengths), std::move(label), true);
}

}  // namespace crosscap
