#include "crosscap/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace crosscap {

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (l == 0) throw std::invalid_argument("zero letter");
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.letters.size() >= 2 && r.letters.front() == -r.letters.back()) {
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
  }
  return r;
}

Word inverse_word(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

Word power(const Word& w, int n) {
  Word base = (n >= 0) ? w : inverse_word(w);
  int k = (n >= 0) ? n : -n;
  Word out;
  for (int i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

namespace {

// Letter order a < a^-1 < b < b^-1 < ..., so canonical forms prefer
// positive letters.
int letter_key(Letter l) { return 2 * std::abs(l) + (l < 0 ? 1 : 0); }

bool class_less(const Word& x, const Word& y) {
  return std::lexicographical_compare(
      x.letters.begin(), x.letters.end(), y.letters.begin(), y.letters.end(),
      [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });
}

Word least_rotation(const Word& w) {
  std::size_t n = w.letters.size();
  Word best = w;
  Word rot = w;
  for (std::size_t i = 1; i < n; ++i) {
    std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
    if (class_less(rot, best)) best = rot;
  }
  return best;
}

}  // namespace

Word canonical_class(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word a = least_rotation(r);
  Word b = least_rotation(inverse_word(r));
  return class_less(b, a) ? b : a;
}

bool is_primitive(const Word& w) {
  Word r = cyclic_reduce(w);
  std::size_t n = r.letters.size();
  if (n == 0) return false;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) {
      periodic = (r.letters[i] == r.letters[i - p]);
    }
    if (periodic) return false;
  }
  return true;
}

std::vector<Word> word_classes(int rank, int max_len) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<Word> out;
  Word cur;
  // DFS over cyclically reduced words; keep only canonical primitives,
  // so each class appears exactly once.
  auto emit = [&]() {
    if (cur.letters.front() == -cur.letters.back() && cur.letters.size() > 1) return;
    if (canonical_class(cur) != cur) return;
    if (!is_primitive(cur)) return;
    out.push_back(cur);
  };
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  auto dfs = [&](auto&& self, int depth_left) -> void {
    if (!cur.letters.empty()) emit();
    if (depth_left == 0) return;
    for (Letter l : alphabet) {
      if (!cur.letters.empty() && cur.letters.back() == -l) continue;
      cur.letters.push_back(l);
      self(self, depth_left - 1);
      cur.letters.pop_back();
    }
  };
  dfs(dfs, max_len);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word out;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    bool inv = (ch >= 'A' && ch <= 'Z');
    std::string name(1, inv ? static_cast<char>(ch - 'A' + 'a') : ch);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("unknown generator: " + name);
    Letter l = static_cast<Letter>(it - names.begin()) + 1;
    out.letters.push_back(inv ? -l : l);
  }
  return free_reduce(out);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters) {
    int idx = (l > 0 ? l : -l) - 1;
    if (idx < 0 || idx >= static_cast<int>(names.size())) {
      throw std::invalid_argument("letter outside generator range");
    }
    std::string name = names[idx];
    if (l < 0) {
      for (char& ch : name) ch = static_cast<char>(std::toupper(ch));
    }
    out += name;
  }
  return out;
}

}  // namespace crosscap
