#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twg {

// A letter of the free group F_n: +k is the k-th generator (1-based),
// -k its inverse. Printed as 'a'..'z' / 'A'..'Z'.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

constexpr int kMaxGenerators = 26;

inline Letter inverse(Letter l) { return static_cast<Letter>(-l); }

// Total order a < b < ... < A < B < ...: all generators before all inverses.
inline int letter_rank(Letter l) {
  return l > 0 ? l - 1 : kMaxGenerators + (-l) - 1;
}

char letter_to_char(Letter l);
Letter letter_from_char(char c);  // throws std::invalid_argument

Word word_from_string(std::string_view s);
std::string word_to_string(const Word& w);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Free reduction: cancel adjacent inverse pairs until none remain.
Word reduced(const Word& w);
Word reduced_concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word rotated(const Word& w, std::size_t i);

// Lexicographic comparison under letter_rank, shorter words first on ties.
std::strong_ordering compare_words(const Word& a, const Word& b);

// Cyclic reduction followed by the rank-minimal rotation.
Word canonical_cyclic(const Word& w);

// A free homotopy class of directed closed curves: a cyclically reduced
// word in canonical (rank-minimal) rotation.
class DirectedClass {
 public:
  DirectedClass() = default;  // trivial class
  static DirectedClass of(const Word& w) { return DirectedClass(canonical_cyclic(w)); }
  static DirectedClass of(std::string_view s) { return of(word_from_string(s)); }

  const Word& word() const { return rep_; }
  std::size_t length() const { return rep_.size(); }
  bool trivial() const { return rep_.empty(); }
  DirectedClass reversed() const { return DirectedClass(canonical_cyclic(twg::inverse(rep_))); }

  friend std::strong_ordering operator<=>(const DirectedClass& a, const DirectedClass& b) {
    return compare_words(a.rep_, b.rep_);
  }
  friend bool operator==(const DirectedClass&, const DirectedClass&) = default;

 private:
  explicit DirectedClass(Word w) : rep_(std::move(w)) {}
  Word rep_;
};

// A free homotopy class of undirected closed curves: the rank-minimal of
// the canonical forms of w and w^-1.
class UndirectedClass {
 public:
  UndirectedClass() = default;
  static UndirectedClass of(const Word& w);
  static UndirectedClass of(std::string_view s) { return of(word_from_string(s)); }
  static UndirectedClass of(const DirectedClass& c) { return of(c.word()); }

  const Word& word() const { return rep_; }
  std::size_t length() const { return rep_.size(); }
  bool trivial() const { return rep_.empty(); }
  // A directed representative (the stored word itself).
  DirectedClass lift() const { return DirectedClass::of(rep_); }

  friend std::strong_ordering operator<=>(const UndirectedClass& a, const UndirectedClass& b) {
    return compare_words(a.rep_, b.rep_);
  }
  friend bool operator==(const UndirectedClass&, const UndirectedClass&) = default;

 private:
  explicit UndirectedClass(Word w) : rep_(std::move(w)) {}
  Word rep_;
};

// w = root^exponent with root of minimal length. Errors on the empty word.
struct RootPower {
  Word root;
  int exponent;
};
RootPower primitive_root(const Word& w);  // throws std::invalid_argument on empty input

Word power(const Word& w, int m);

}  // namespace twg
