#pragma once

// Freely reduced words in a free group, run-length compressed into syllables.

#include <compare>
#include <cstdint>
#include <vector>

namespace novikit::groups {

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;  // nonzero

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct Word {
  std::vector<Syllable> syls;  // reduced: adjacent syllables have distinct gens

  Word() = default;
  static Word generator(int gen, std::int64_t exp = 1);
  // concatenate-and-reduce constructor from raw letters
  static Word from_letters(const std::vector<std::pair<int, int>>& letters);

  bool trivial() const { return syls.empty(); }
  std::int64_t length() const;  // sum of |exp|
  int max_generator() const;    // -1 when trivial

  Word inverse() const;
  Word cyclically_reduced() const;
  // expand into single letters (gen, +-1)
  std::vector<std::pair<int, int>> letters() const;

  friend auto operator<=>(const Word&, const Word&) = default;
};

// concatenation with free reduction
Word operator*(const Word& a, const Word& b);
Word& operator*=(Word& a, const Word& b);
Word pow(const Word& a, std::int64_t k);
Word conjugate(const Word& w, const Word& by);  // by * w * by^-1

// append one syllable, reducing
void push_syllable(Word& w, int gen, std::int64_t exp);

}  // namespace novikit::groups
