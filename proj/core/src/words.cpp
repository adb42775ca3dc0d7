#include "novikit/words.hpp"

#include <algorithm>
#include <cstdlib>

namespace novikit::groups {

Word Word::generator(int gen, std::int64_t exp) {
  Word w;
  if (exp != 0) w.syls.push_back({gen, exp});
  return w;
}

Word Word::from_letters(const std::vector<std::pair<int, int>>& letters) {
  Word w;
  for (auto [g, e] : letters) push_syllable(w, g, e);
  return w;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syls) n += std::abs(s.exp);
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& s : syls) m = std::max(m, s.gen);
  return m;
}

Word Word::inverse() const {
  Word out;
  out.syls.reserve(syls.size());
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) out.syls.push_back({it->gen, -it->exp});
  return out;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.syls.size() >= 2 && w.syls.front().gen == w.syls.back().gen) {
    // conjugating by the first syllable merges it into the last one
    Syllable front = w.syls.front();
    Syllable back = w.syls.back();
    Word mid;
    mid.syls.assign(w.syls.begin() + 1, w.syls.end() - 1);
    push_syllable(mid, back.gen, back.exp + front.exp);
    w = std::move(mid);
  }
  return w;
}

std::vector<std::pair<int, int>> Word::letters() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : syls) {
    std::int64_t n = std::abs(s.exp);
    int sign = s.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < n; ++i) out.emplace_back(s.gen, sign);
  }
  return out;
}

void push_syllable(Word& w, int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!w.syls.empty() && w.syls.back().gen == gen) {
    w.syls.back().exp += exp;
    if (w.syls.back().exp == 0) w.syls.pop_back();
  } else {
    w.syls.push_back({gen, exp});
  }
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out *= b;
  return out;
}

Word& operator*=(Word& a, const Word& b) {
  for (const auto& s : b.syls) push_syllable(a, s.gen, s.exp);
  return a;
}

Word pow(const Word& a, std::int64_t k) {
  Word base = k < 0 ? a.inverse() : a;
  std::int64_t n = std::abs(k);
  Word out;
  for (std::int64_t i = 0; i < n; ++i) out *= base;
  return out;
}

Word conjugate(const Word& w, const Word& by) { return by * w * by.inverse(); }

}  // namespace novikit::groups
