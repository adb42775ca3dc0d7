#pragma once

// Free differential calculus. Derivatives live in the integral group ring of
// the free group, represented as finite formal sums of reduced words.

#include <map>

#include "novikit/laurent.hpp"
#include "novikit/words.hpp"

namespace novikit::groups {

// element of Z[F]
struct FreeRingExpr {
  std::map<Word, Int> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const Int& c);

  friend bool operator==(const FreeRingExpr&, const FreeRingExpr&) = default;
};

FreeRingExpr expr_of(const Word& w, Int c = 1);
FreeRingExpr operator+(const FreeRingExpr& a, const FreeRingExpr& b);
FreeRingExpr operator-(const FreeRingExpr& a, const FreeRingExpr& b);
// right-multiply every term by w
FreeRingExpr operator*(const FreeRingExpr& a, const Word& w);

// d(word)/d(x_gen), satisfying d(uv)/dx = du/dx + u dv/dx, dx/dx = 1,
// d(x^-1)/dx = -x^-1
FreeRingExpr fox_derivative(const Word& word, int gen);

// sum_j d(r)/d(x_j) (x_j - 1) == r - 1 in Z[F]
bool fox_fundamental_identity(const Word& relator, int ngens);

}  // namespace novikit::groups
