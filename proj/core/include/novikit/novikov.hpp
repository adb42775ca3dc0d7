#pragma once

// Truncated arithmetic in the Novikov completion of Z[Z^n] with respect to a
// grading covector phi, leading-level decompositions, matrix inversion by
// geometric series, and the acyclicity test for based complexes of the
// standard 3-manifold shape.
//
// direction = +1 works in the completion whose supports are bounded below in
// phi-level, direction = -1 in the opposite one. A Laurent polynomial is
// invertible in the +1 completion iff its bottom slice is a unit, in the -1
// completion iff its top slice is; it is monic iff both hold. All verdicts
// are exact (they depend only on extreme slices, never on the horizon); the
// horizon only bounds how much of an inverse series is materialized.

#include <optional>
#include <string>
#include <vector>

#include "novikit/laurent.hpp"

namespace novikit::novikov {

using laurent::Exp;
using laurent::Laurent;
using laurent::Phi;

using Matrix = std::vector<std::vector<Laurent>>;

// A truncated element of the completion: exact below `horizon`, unknown above.
struct Series {
  Laurent known;  // support has phi-level in [level_min, horizon)
  Rat horizon;    // exclusive precision bound
  Phi phi;

  bool exact_zero() const { return known.is_zero(); }
};

Series make_series(const Laurent& p, const Phi& phi, Rat horizon);
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
// equal on all levels below min(a.horizon, b.horizon)
bool congruent(const Series& a, const Series& b);

using SeriesMatrix = std::vector<std::vector<Series>>;

SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix series_matrix(const Matrix& a, const Phi& phi, Rat horizon);
bool congruent_identity(const SeriesMatrix& a);

// A = leading * x^shift + tail, phi(shift) = level (the minimal level in A),
// leading nonzero with all entries at phi-level 0, tail strictly above level.
struct LevelDecomposition {
  Matrix leading;
  Exp shift;   // lexicographically least exponent at the minimal level
  Rat level;
  Matrix tail;
};

// throws ZeroMatrix
LevelDecomposition decompose(const Matrix& a, const Phi& phi);
LevelDecomposition decompose(const Laurent& p, const Phi& phi);

// scalar invertibility in the chosen completion; throws ZeroPolynomial
bool laurent_invertible(const Laurent& p, const Phi& phi, int direction);

// truncated inverse of a scalar; nullopt when not invertible
std::optional<Series> invert_scalar(const Laurent& p, const Phi& phi, int direction,
                                    Rat horizon_levels);

enum class InvertStatus { invertible, not_invertible, degenerate };

struct InvertResult {
  InvertStatus status = InvertStatus::not_invertible;
  SeriesMatrix inverse;  // filled iff status == invertible
  std::string reason;
};

// Leading-level test: decompose A, require the leading matrix nondegenerate
// (over a commutative domain: nonzero determinant), then invertibility of A
// in the completion is equivalent to the leading matrix being invertible
// over the group ring of ker(phi), i.e. to its determinant being +-monomial.
// A degenerate leading matrix is reported as such; the test is inconclusive
// there and the verdict is never silently folded into not_invertible.
InvertResult invert_matrix(const Matrix& a, const Phi& phi, Rat horizon_levels = 32,
                           int direction = +1);

// --- based complexes of the standard shape ----------------------------------
//
// closed shape:    0 -> R --d3--> R^n --d2--> R^n --d1--> R -> 0
// boundary shape:            0 -> R^{n-1} --d2--> R^n --d1--> R -> 0
//
// d1 = (a_1 ... a_n) with a_1 a unit of the completion; in the closed shape
// d3 = (c_1 ... c_n)^t with c_1 a unit. The core matrix B' is d2 with the
// first row (and, in the closed shape, the first column) removed.

struct BasedComplex {
  std::optional<Matrix> d3;  // n x 1 column, closed shape only
  Matrix d2;                 // n x n (closed) or n x (n-1) (boundary)
  std::vector<Laurent> d1;   // 1 x n row
  int vars = 1;

  bool closed() const { return d3.has_value(); }
};

// shape, composite-zero and corner-unit checks; throws BadShape
void validate(const BasedComplex& c, const Phi& phi, int direction);

Matrix core_matrix(const BasedComplex& c);

// The row/column clearing matrices of the equivalence: P fixes the d3 side,
// Q the d1 side, and conjugation turns the corners into (a_1 0 ... 0) and
// (c_1 0 ... 0)^t while leaving the core block untouched.
struct ClearedForm {
  SeriesMatrix p;        // n x n, first column (1, c_2 c_1^-1, ...)^t
  SeriesMatrix q;        // n x n, first row (1, -a_1^-1 a_2, ...)
  SeriesMatrix d1_q;     // d1 * Q, congruent to (a_1, 0, ..., 0)
  SeriesMatrix pinv_d3;  // P^-1 * d3, congruent to (c_1, 0, ..., 0)^t
};
ClearedForm cleared_form(const BasedComplex& c, const Phi& phi, int direction,
                         Rat horizon_levels = 32);

// acyclicity of the complex over the chosen completion (exact verdict)
bool acyclicity_test(const BasedComplex& c, const Phi& phi, int direction);

}  // namespace novikit::novikov
