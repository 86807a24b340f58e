#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crosscap/counting.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/words.hpp"

// Closed-curve enumeration on the builtin models: simplicity testing
// through linked shift axes, self-intersection numbers through deck
// translates, and simple-curve spectra for the growth experiments.
//
// A primitive class [w] is simple iff no two of its cyclic shifts have
// crossing axes: a self-intersection point lifts to a crossing of two
// distinct lifts, and reading the two strand itineraries from the tile
// of the crossing exhibits a crossing pair of shift axes.  This gives an
// O(|w|^2) exact simplicity test.  The crossing-pair count itself only
// bounds the self-intersection number from above (distinct pairs can
// project to the same double point); the actual count enumerates the
// distinct axis translates crossing a fundamental period, halved.

namespace crosscap {

enum class Sidedness { OneSided, TwoSided };

struct CurveRecord {
  Word word;  // canonical class representative, full generator alphabet
  Sidedness sided;
  double length;
  std::optional<std::int64_t> self_intersections;
};

struct SelfIntersectionCount {
  std::int64_t value;
  bool certified;
};

/// Number of crossing pairs among the shift axes of the primitive class
/// [w]: zero iff the class is simple; an upper bound otherwise.
/// Uncertified when some axis comparison falls within the
/// transversality tolerance.  Throws "non-primitive" for proper powers.
SelfIntersectionCount shift_crossing_pairs(const HolonomyRep& rep, const Word& w);

/// Exact simplicity test via shift_crossing_pairs.
bool is_simple_class(const HolonomyRep& rep, const Word& w);

/// Self-intersection number by enumerating group elements up to the
/// given word-length budget and counting distinct axis translates that
/// cross a fundamental period of axis(w), halved.  Certified when the
/// budget + 2 count agrees.  Exponential in the budget; for small words.
SelfIntersectionCount self_intersection_number(const HolonomyRep& rep, const Word& w,
                                               int search_budget);

struct SimpleEnumeration {
  std::vector<CurveRecord> curves;  // sorted by length
  bool certified;
  int budget_used;

  CountSeries to_series(const std::string& label) const;
};

/// All simple closed geodesics of the given sidedness with length
/// <= l_max, enumerated to the word-length budget.  Uses the structured
/// families of the builtin models (twist family on the one-holed Klein
/// bottle, one-holed-torus slopes on the genus-3 closed model) backed by
/// brute-force enumeration at small budgets; generic models fall back to
/// brute force with an uncertified flag when the budget cannot saturate.
SimpleEnumeration enumerate_simple(const HolonomyRep& rep, Sidedness filter, double l_max,
                                   int budget);

/// The unique two-sided simple closed geodesic of the one-holed Klein
/// bottle model, as a word.
Word n21_gamma_inf(const HolonomyRep& rep);

/// n-th one-sided simple closed geodesic of the one-holed Klein bottle:
/// the twist family a * gamma_inf^n.
Word n21_family_word(const HolonomyRep& rep, std::int64_t n);

/// Primitive slope words in a rank-2 subgroup, Stern-Brocot style:
/// all W(p/q) with geodesic length <= l_max.
std::vector<Word> slope_words(const HolonomyRep& rep, const Word& x, const Word& y,
                              double l_max, int budget);

}  // namespace crosscap
