#include "twg/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace twg {

char letter_to_char(Letter l) {
  return l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' + (-l) - 1);
}

Letter letter_from_char(char c) {
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(c - 'a' + 1);
  if (c >= 'A' && c <= 'Z') return static_cast<Letter>(-(c - 'A' + 1));
  throw std::invalid_argument(std::string("not a word letter: '") + c + "'");
}

Word word_from_string(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) w.push_back(letter_from_char(c));
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) s.push_back(letter_to_char(l));
  return s;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse(w.back());
}

Word reduced(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word reduced_concat(const Word& u, const Word& v) {
  Word out = u;
  out.reserve(u.size() + v.size());
  for (Letter l : v) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word rotated(const Word& w, std::size_t i) {
  if (w.empty()) return w;
  i %= w.size();
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + i, w.end());
  out.insert(out.end(), w.begin(), w.begin() + i);
  return out;
}

std::strong_ordering compare_words(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) <=> letter_rank(b[i]);
  return std::strong_ordering::equal;
}

namespace {
// Rank-lex comparison of two rotations of the same word.
bool rotation_less(const Word& w, std::size_t i, std::size_t j) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    int ri = letter_rank(w[(i + k) % n]);
    int rj = letter_rank(w[(j + k) % n]);
    if (ri != rj) return ri < rj;
  }
  return false;
}
}  // namespace

Word canonical_cyclic(const Word& w) {
  Word v = reduced(w);
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == inverse(v[hi - 1])) {
    ++lo;
    --hi;
  }
  Word c(v.begin() + lo, v.begin() + hi);
  if (c.size() < 2) return c;
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (rotation_less(c, i, best)) best = i;
  return rotated(c, best);
}

UndirectedClass UndirectedClass::of(const Word& w) {
  Word a = canonical_cyclic(w);
  Word b = canonical_cyclic(twg::inverse(a));
  return UndirectedClass(compare_words(a, b) <= 0 ? std::move(a) : std::move(b));
}

RootPower primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: trivial class has no root");
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t k = p; k < n && periodic; ++k) periodic = (w[k] == w[k - p]);
    if (periodic) return {Word(w.begin(), w.begin() + p), static_cast<int>(n / p)};
  }
  return {w, 1};  // unreachable
}

Word power(const Word& w, int m) {
  if (m < 0) return power(twg::inverse(w), -m);
  Word out;
  out.reserve(w.size() * m);
  for (int k = 0; k < m; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace twg
