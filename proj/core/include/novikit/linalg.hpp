#pragma once

// Small exact linear algebra over Z and Q used across the toolkit:
// Smith normal form with transform tracking, rational elimination,
// integer kernel bases. Sizes here are tiny; clarity over speed.

#include <optional>
#include <vector>

#include "novikit/laurent.hpp"

namespace novikit::linalg {

using IMat = std::vector<std::vector<Int>>;
using IVec = std::vector<Int>;
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

struct Smith {
  std::vector<Int> diag;  // nonnegative, each dividing the next
  IMat left;              // U with U * A * V = diag(d); only U is tracked
};

// Smith normal form of an m x n integer matrix (row transform tracked).
Smith smith_normal_form(IMat a);

// gcd of all k x k minors (brute force; independent check for Smith form)
Int determinantal_divisor(const IMat& a, int k);

IMat identity(int n);
IMat multiply(const IMat& a, const IMat& b);

// rank over Q
int rank(QMat a);

// solve a * x = b over Q; nullopt when inconsistent
std::optional<QVec> solve(QMat a, QVec b);

// inverse over Q; nullopt when singular
std::optional<QMat> inverse(QMat a);

Rat determinant(QMat a);

// integer column reduction a -> a * v with v unimodular; pivot columns have
// independent images, the remaining columns of a * v are zero
struct ColReduction {
  IMat reduced;
  IMat v;
  std::vector<size_t> pivot_cols;
  std::vector<size_t> zero_cols;
};
ColReduction column_reduce(IMat a);

// basis of { x in Z^n : a * x = 0 } (a is m x n), primitive columns
IMat integer_kernel(const IMat& a);

// unique solution of a * x = b when the columns of a are independent over Q
// and the solution is integral; nullopt otherwise
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

}  // namespace novikit::linalg
