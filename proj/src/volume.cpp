#include "crosscap/volume.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "crosscap/curves.hpp"

namespace crosscap {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr int kGaussOrder = 16;
constexpr double kGaussNode[kGaussOrder] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kGaussWeight[kGaussOrder] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double gauss_panel_coth(double a, double b) {
  double mid = (a + b) / 2.0, half = (b - a) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) {
    sum += kGaussWeight[i] / std::tanh(mid + half * kGaussNode[i]);
  }
  return sum * half;
}

// composite quadrature of coth over [lo, hi] with geometric panels, so
// the integrable blowup at 0 is resolved at any cutoff
double quad_coth(double lo, double hi, std::uint64_t panels_per_octave) {
  double total = 0.0;
  double a = lo;
  while (a < hi) {
    double b = std::min(hi, a * 2.0);
    std::uint64_t n = std::max<std::uint64_t>(1, panels_per_octave);
    for (std::uint64_t k = 0; k < n; ++k) {
      double pa = a + (b - a) * static_cast<double>(k) / static_cast<double>(n);
      double pb = a + (b - a) * static_cast<double>(k + 1) / static_cast<double>(n);
      total += gauss_panel_coth(pa, pb);
    }
    a = b;
  }
  return total;
}

void validate_chart(const FNChart& chart) {
  for (const auto& c : chart.one_sided) {
    if (!(c.lo > 0.0) || !(c.hi > c.lo) || !std::isfinite(c.hi)) {
      throw std::invalid_argument("unbounded chart; use divergence profile");
    }
  }
  for (const auto& c : chart.two_sided) {
    if (!(c.len_lo >= 0.0) || !(c.len_hi > c.len_lo) || !std::isfinite(c.len_hi) ||
        !(c.twist_hi >= c.twist_lo) || !std::isfinite(c.twist_hi)) {
      throw std::invalid_argument("unbounded chart; use divergence profile");
    }
  }
}

}  // namespace

double norbury_density(const std::vector<double>& one_sided_lengths) {
  double density = 1.0;
  for (double l : one_sided_lengths) {
    if (!(l > 0.0)) throw std::domain_error("outside chart");
    density /= std::tanh(l);
  }
  return density;
}

double coth_integral(double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("bad integration range");
  return std::log(std::sinh(hi)) - std::log(std::sinh(lo));
}

VolumeEstimate integrate_chart(const FNChart& chart, IntegrationMethod method,
                               std::uint64_t budget, std::uint32_t seed) {
  validate_chart(chart);
  double box = 1.0;  // two-sided block: twist range x length range
  for (const auto& c : chart.two_sided) {
    box *= (c.len_hi - c.len_lo) * (c.twist_hi - c.twist_lo);
  }

  if (method == IntegrationMethod::Quadrature) {
    std::uint64_t panels = std::max<std::uint64_t>(2, budget);
    double value = box, refined = box;
    for (const auto& c : chart.one_sided) {
      value *= quad_coth(c.lo, c.hi, panels);
      refined *= quad_coth(c.lo, c.hi, 2 * panels);
    }
    std::uint64_t evals = panels * kGaussOrder * std::max<std::size_t>(1, chart.one_sided.size());
    return {refined, std::fabs(refined - value), "quadrature", evals, 0, true};
  }

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t n = std::max<std::uint64_t>(16, budget);
  double vol_box = box;
  for (const auto& c : chart.one_sided) vol_box *= (c.hi - c.lo);
  double sum = 0.0, sumsq = 0.0;
  std::vector<double> point(chart.one_sided.size());
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < chart.one_sided.size(); ++d) {
      point[d] = chart.one_sided[d].lo +
                 (chart.one_sided[d].hi - chart.one_sided[d].lo) * unit(rng);
    }
    double f = norbury_density(point);
    sum += f;
    sumsq += f * f;
  }
  double mean = sum / static_cast<double>(n);
  double var = std::max(0.0, sumsq / static_cast<double>(n) - mean * mean);
  double se = std::sqrt(var / static_cast<double>(n));
  return {mean * vol_box, se * vol_box, "monte-carlo", n, seed, true};
}

std::vector<DivergenceSample> divergence_profile(const std::vector<double>& deltas,
                                                 const FNChart& chart_template,
                                                 IntegrationMethod method,
                                                 std::uint64_t budget) {
  std::vector<DivergenceSample> profile;
  double prev = std::numeric_limits<double>::infinity();
  for (double delta : deltas) {
    if (!(delta > 0.0) || delta > prev) {
      throw std::invalid_argument("cutoffs must be positive and nonincreasing");
    }
    prev = delta;
    FNChart chart = chart_template;
    for (auto& c : chart.one_sided) c.lo = delta;
    profile.push_back({delta, integrate_chart(chart, method, budget).value});
  }
  return profile;
}

double divergence_slope(const std::vector<DivergenceSample>& profile) {
  if (profile.size() < 2) throw std::invalid_argument("profile too short");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = static_cast<int>(profile.size());
  for (const auto& s : profile) {
    double x = std::log(1.0 / s.delta);
    sx += x;
    sy += s.volume;
    sxx += x * x;
    sxy += x * s.volume;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

// sys- on the one-holed Klein bottle as the minimum over the twist
// family of one-sided geodesics, via the trace recurrence
// tr(A C^(n+1)) = tr(C) tr(A C^n) - tr(A C^(n-1)).
struct SysMinusEvaluator {
  double boundary_length;
  Word gamma_inf_word;  // in the letters of the builtin model

  explicit SysMinusEvaluator(const HolonomyRep& model) {
    if (model.model_name != "N21") {
      throw std::invalid_argument("sys-region volume requires the one-holed Klein bottle model");
    }
    boundary_length = model.surface.boundary_lengths.at(0);
    gamma_inf_word = n21_gamma_inf(model);
  }

  // returns {value, saturated}
  std::pair<double, bool> operator()(double core1, double core2) const {
    HolonomyRep rep = builtin_model(BuiltinModel::N21, {core1, core2, boundary_length});
    Isometry a = rep.generators[0];
    Isometry c = holonomy_of_word(rep, gamma_inf_word);
    double trc = c.trace();
    // t_n = tr(a c^n)
    double t_prev = compose(a, c.inverse()).trace();
    double t_cur = a.trace();
    double best = std::numeric_limits<double>::infinity();
    int best_n = 0;
    // the family minimum sits within |n| <= (competing lengths)/l(gamma_inf)
    double linf = translation_length_from_trace(trc, 1.0).value;
    int reach = 12;
    if (linf > 1e-6) {
      reach = std::max(reach, static_cast<int>(2.0 * (core1 + core2 + 2.0) / linf) + 4);
    }
    reach = std::min(reach, 400);
    auto consider = [&](double tr, int n) {
      TranslationLength t = translation_length_from_trace(tr, -1.0);
      if (t.value < best) {
        best = t.value;
        best_n = n;
      }
    };
    consider(t_cur, 0);
    double fwd_prev = t_prev, fwd_cur = t_cur;
    for (int n = 1; n <= reach; ++n) {
      double next = trc * fwd_cur - fwd_prev;
      fwd_prev = fwd_cur;
      fwd_cur = next;
      consider(next, n);
    }
    double bwd_prev = t_cur, bwd_cur = t_prev;
    consider(bwd_cur, -1);
    for (int n = -2; n >= -reach; --n) {
      double next = trc * bwd_cur - bwd_prev;
      bwd_prev = bwd_cur;
      bwd_cur = next;
      consider(next, n);
    }
    bool saturated = std::abs(best_n) <= reach - 2;
    return {best, saturated};
  }
};

}  // namespace

VolumeEstimate sys_region_volume(const HolonomyRep& klein_model, double eps, double cap,
                                 IntegrationMethod method, std::uint64_t samples,
                                 std::uint32_t seed) {
  if (!(eps > 0.0) || !(cap >= eps)) {
    throw std::invalid_argument("need 0 < eps <= cap");
  }
  SysMinusEvaluator sys(klein_model);

  auto weight = [&](double l1, double l2, bool& saturated) -> double {
    // sys- is at most the shorter core, so points below eps contribute
    // nothing and need no holonomy build
    if (std::min(l1, l2) < eps) return 0.0;
    auto [value, ok] = sys(l1, l2);
    saturated = saturated && ok;
    if (value < eps) return 0.0;
    return 1.0 / (std::tanh(l1) * std::tanh(l2));
  };

  bool saturated = true;
  if (method == IntegrationMethod::MonteCarlo) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uint64_t n = std::max<std::uint64_t>(64, samples);
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      double l1 = cap * unit(rng);
      double l2 = cap * unit(rng);
      if (l1 <= 0.0 || l2 <= 0.0) continue;
      double f = weight(l1, l2, saturated);
      sum += f;
      sumsq += f * f;
    }
    double mean = sum / static_cast<double>(n);
    double var = std::max(0.0, sumsq / static_cast<double>(n) - mean * mean);
    double se = std::sqrt(var / static_cast<double>(n));
    return {mean * cap * cap, se * cap * cap, "monte-carlo", n, seed, saturated};
  }

  // midpoint grid; the reported error bounds the indicator boundary cells
  std::uint64_t side = std::max<std::uint64_t>(8, static_cast<std::uint64_t>(
                                                      std::sqrt(static_cast<double>(samples))));
  double h = cap / static_cast<double>(side);
  double total = 0.0, boundary = 0.0;
  std::vector<bool> inside(side * side);
  std::vector<double> dens(side * side);
  for (std::uint64_t i = 0; i < side; ++i) {
    for (std::uint64_t j = 0; j < side; ++j) {
      double l1 = (static_cast<double>(i) + 0.5) * h;
      double l2 = (static_cast<double>(j) + 0.5) * h;
      bool in = false;
      if (std::min(l1, l2) >= eps) {
        auto [value, ok] = sys(l1, l2);
        saturated = saturated && ok;
        in = (value >= eps);
      }
      inside[i * side + j] = in;
      dens[i * side + j] = 1.0 / (std::tanh(l1) * std::tanh(l2));
      if (in) total += dens[i * side + j] * h * h;
    }
  }
  for (std::uint64_t i = 0; i < side; ++i) {
    for (std::uint64_t j = 0; j < side; ++j) {
      bool in = inside[i * side + j];
      bool edge = (i + 1 < side && inside[(i + 1) * side + j] != in) ||
                  (j + 1 < side && inside[i * side + j + 1] != in);
      if (edge) boundary += dens[i * side + j] * h * h;
    }
  }
  return {total, boundary, "grid-quadrature", side * side, 0, saturated};
}

}  // namespace crosscap
