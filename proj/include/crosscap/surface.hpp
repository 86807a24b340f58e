#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosscap/hypgeo.hpp"
#include "crosscap/words.hpp"

// Hyperbolic structures on nonorientable surfaces, built by gluing pants
// and capping boundary geodesics with crosscaps.  A crosscap cap replaces
// a boundary geodesic of length 2l by a one-sided geodesic of length l
// whose holonomy is the glide-reflection square root of the boundary
// holonomy.

namespace crosscap {

struct SurfaceDescriptor {
  bool orientable = false;
  int genus = 0;
  int punctures_plus_boundary = 0;
  std::vector<double> boundary_lengths;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus - punctures_plus_boundary
                      : 2 - genus - punctures_plus_boundary;
  }
  int dim_ml() const {
    return orientable ? 6 * genus - 6 + 2 * punctures_plus_boundary
                      : 3 * genus - 6 + 2 * punctures_plus_boundary;
  }
};

/// Discrete faithful representation of the fundamental group, with
/// bookkeeping for relations, boundary words and model-specific markings.
struct HolonomyRep {
  SurfaceDescriptor surface;
  std::vector<std::string> generator_names;
  std::vector<Isometry> generators;
  std::vector<Word> relation_words;

  // Named curve classes fixed by the construction ("boundary1", the
  // one-holed-torus marking of N3, ...).
  std::map<std::string, Word> named_words;
  std::string model_name;  // empty for ad-hoc builds

  int rank() const { return static_cast<int>(generators.size()); }
  int generator_index(const std::string& name) const;  // throws on unknown label
  bool one_sided_generator(int index) const { return generators[index].det() < 0.0; }
  bool has_one_sided_generator() const;
};

/// Holonomy of a word; the empty word maps to the identity.
Isometry holonomy_of_word(const HolonomyRep& rep, const Word& w);

/// Trace and det sign of the word's holonomy.  The trace comes from an
/// extended-precision product (plain double loses digits geometrically
/// on mixed expanding/contracting words); the det sign is the exact
/// parity of one-sided letters, which stays valid far beyond the range
/// where a computed determinant means anything.
struct HolonomyTrace {
  double trace;
  double det;  // +-1
};
HolonomyTrace holonomy_trace(const HolonomyRep& rep, const Word& w);

/// Boundary fixed points of the word's holonomy axis, attracting second.
/// Computed from the extended-precision product; scale-invariant, so it
/// works for words whose matrix entries overflow the double range of
/// meaningful determinants.  Throws std::domain_error("no axis") for
/// elliptic or parabolic classes.
AxisEndpoints axis_feet_of_word(const HolonomyRep& rep, const Word& w);

/// Raw extended-precision holonomy product, for boundary-point maps of
/// words too large to normalize into an Isometry.
struct RawHolonomy {
  long double a, b, c, d;
  double det_sign;  // exact parity
};
RawHolonomy raw_holonomy(const HolonomyRep& rep, const Word& w);

/// Geodesic length of the curve class of w; throws std::domain_error
/// ("not a closed geodesic class") for parabolic or elliptic holonomy.
double curve_length(const HolonomyRep& rep, const Word& w);

/// Largest relation residual, measured as distance to +-identity.
double relation_residual(const HolonomyRep& rep);

/// Hyperbolic pair of pants with cuff lengths (l1, l2, l3); generators
/// "x", "y" with boundary classes x, y, (xy)^-1 and trace normalization
/// tr x = -2 cosh(l1/2), tr y = -2 cosh(l2/2), tr xy = -2 cosh(l3/2).
HolonomyRep build_pants(double l1, double l2, double l3);

/// Caps the boundary geodesic of the given class with a crosscap: adds a
/// glide generator whose square is the boundary holonomy.  The boundary
/// must be hyperbolic of length 2*core_length (tolerance 1e-6).
HolonomyRep attach_crosscap(const HolonomyRep& rep, const Word& boundary_word,
                            double core_length, const std::string& label = "g");

/// Glide-reflection square root of a hyperbolic isometry (shared axis,
/// det -1, g*g = +-B).  Throws for non-hyperbolic input.
Isometry glide_square_root(const Isometry& B);

enum class BuiltinModel { N12, N21, N3, N13 };

/// Benchmark nonorientable models.
///   N12: projective plane with two holes, params {core1, L1, L2};
///        generators "a", "b" are its two one-sided geodesics.
///   N21: Klein bottle with one hole, params {core1, core2, L};
///        pants + two crosscaps, boundary class (a^2 b^2)^-1.
///   N3:  closed genus-3 nonorientable, params {l1, l2, l3} pants cuffs;
///        pants + three crosscaps, relation a^2 b^2 c^2 = 1.
///   N13: projective plane with three holes, params {d, twist, core, L1, L2, L3};
///        two pants glued along d, one crosscap; generators "a", "b", "g".
HolonomyRep builtin_model(BuiltinModel model, const std::vector<double>& params);
HolonomyRep builtin_model(const std::string& name, const std::vector<double>& params);
std::vector<double> default_model_params(BuiltinModel model);

struct SysMinusResult {
  double value;
  bool certified;
  Word witness;
};

/// Shortest one-sided closed geodesic among primitive classes of word
/// length <= word_budget; certified when budget+2 gives the same value.
SysMinusResult sys_minus(const HolonomyRep& rep, int word_budget);

/// Plain-text key-value model configuration:
///   model = N21
///   core_lengths = 0.8, 1.0
///   boundary_lengths = 1.2
/// Recognized keys: model, pants_lengths, core_lengths, twists,
/// boundary_lengths.  Unknown keys are rejected.
struct ModelConfig {
  std::string model;
  std::map<std::string, std::vector<double>> values;
};

ModelConfig parse_model_config(const std::string& text);
HolonomyRep model_from_config(const ModelConfig& config);

}  // namespace crosscap
