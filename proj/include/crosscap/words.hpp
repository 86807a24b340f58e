#pragma once

#include <string>
#include <vector>

// Cyclic words in a finitely generated free group.  A letter is a nonzero
// int: +k is generator number k-1, -k its inverse.  Conjugacy classes of
// closed curves are represented by cyclically reduced words in canonical
// form: the lexicographically least rotation among the rotations of the
// word and of its inverse (classes are taken up to inversion, since a
// curve and its reverse have the same geodesic).

namespace crosscap {

using Letter = int;

struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);

/// Canonical representative of the conjugacy class of w, up to inversion.
Word canonical_class(const Word& w);

/// True iff the cyclic word is not a proper power.
bool is_primitive(const Word& w);

/// All primitive conjugacy-class representatives (up to inversion) of
/// cyclically reduced length between 1 and max_len in the free group of
/// the given rank.
std::vector<Word> word_classes(int rank, int max_len);

/// Parses words like "a b A" or "abA" (capital = inverse) over single-letter
/// generator names; used by tests and the CLI.
Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);

std::string format_word(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace crosscap
