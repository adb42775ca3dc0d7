#include "novikit/fox.hpp"

namespace novikit::groups {

void FreeRingExpr::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

FreeRingExpr expr_of(const Word& w, Int c) {
  FreeRingExpr e;
  e.add(w, c);
  return e;
}

FreeRingExpr operator+(const FreeRingExpr& a, const FreeRingExpr& b) {
  FreeRingExpr out = a;
  for (const auto& [w, c] : b.terms) out.add(w, c);
  return out;
}

FreeRingExpr operator-(const FreeRingExpr& a, const FreeRingExpr& b) {
  FreeRingExpr out = a;
  for (const auto& [w, c] : b.terms) out.add(w, -c);
  return out;
}

FreeRingExpr operator*(const FreeRingExpr& a, const Word& w) {
  FreeRingExpr out;
  for (const auto& [u, c] : a.terms) out.add(u * w, c);
  return out;
}

FreeRingExpr fox_derivative(const Word& word, int gen) {
  FreeRingExpr out;
  Word prefix;
  for (auto [g, e] : word.letters()) {
    if (g == gen) {
      if (e == 1) {
        out.add(prefix, 1);
      } else {
        out.add(prefix * Word::generator(g, -1), -1);
      }
    }
    push_syllable(prefix, g, e);
  }
  return out;
}

bool fox_fundamental_identity(const Word& relator, int ngens) {
  FreeRingExpr lhs;
  for (int j = 0; j < ngens; ++j) {
    FreeRingExpr d = fox_derivative(relator, j);
    lhs = lhs + d * Word::generator(j, 1) - d;
  }
  FreeRingExpr rhs = expr_of(relator) - expr_of(Word{});
  return lhs == rhs;
}

}  // namespace novikit::groups
