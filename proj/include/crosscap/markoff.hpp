#pragma once

#include <cstdint>
#include <vector>

// Positive integer solutions of Markoff-Hurwitz equations
//   x_1^2 + ... + x_n^2 = A * x_1 ... x_n        (n = 3 or 4)
// and their Vieta moves x_i -> A * prod_{j != i} x_j - x_i.  All
// arithmetic is exact: coordinates are 64-bit, intermediates 128-bit
// with explicit overflow checks.

namespace crosscap {

using MarkoffTuple = std::vector<std::uint64_t>;  // sorted nondecreasing

struct MarkoffConfig {
  int arity;                  // 3 or 4
  std::uint64_t coefficient;  // A in sum of squares = A * product
  std::vector<MarkoffTuple> seeds;

  static MarkoffConfig triples();     // x^2+y^2+z^2 = 3xyz, seed (1,1,1)
  static MarkoffConfig quadruples();  // x^2+y^2+z^2+w^2 = xyzw, seed (2,2,2,2)
};

/// Exact equation check (overflow-checked; an overflowing product cannot
/// equal the bounded sum of squares, so it simply fails).
bool satisfies_equation(const MarkoffConfig& config, const MarkoffTuple& t);

/// Replaces coordinate i by A * (product of the others) - t_i and
/// resorts.  Throws std::domain_error("left positive cone") if the new
/// coordinate would not be a positive integer.
MarkoffTuple vieta_move(const MarkoffConfig& config, const MarkoffTuple& t, int index);

/// Breadth-first closure of the seeds under all Vieta moves, pruned at
/// max coordinate > bound; deduplicated, lexicographically sorted.
std::vector<MarkoffTuple> markoff_orbit(const MarkoffConfig& config, std::uint64_t bound);

/// Exhaustive scan oracle: all sorted tuples with coordinates <= bound
/// satisfying the equation, found by completing each (n-1)-prefix with
/// the integer roots of the quadratic in the largest coordinate.
/// Guarded to bound <= 10^4.
std::vector<MarkoffTuple> markoff_bruteforce(const MarkoffConfig& config,
                                             std::uint64_t bound);

}  // namespace crosscap
