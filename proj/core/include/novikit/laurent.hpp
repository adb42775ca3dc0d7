#pragma once

// Exact multivariable integer Laurent polynomials Z[Z^n], their fraction
// field, grading covectors phi, degree functions and monicness predicates.
//
// Coefficients are arbitrary-precision integers; exponent vectors are int64
// (word-length data, additions never get near the limit). Terms are kept in
// a std::map keyed by exponent vector, so iteration order is deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "novikit/errors.hpp"

namespace novikit {
using Int = mpz_class;
using Rat = mpq_class;
}  // namespace novikit

namespace novikit::laurent {

using Exp = std::vector<std::int64_t>;

// Rational grading covector on Z^n. phi(e) is the "level" of a monomial.
struct Phi {
  std::vector<Rat> values;

  int vars() const { return static_cast<int>(values.size()); }
  Rat level(const Exp& e) const;
  bool is_zero() const;
  Phi negated() const;

  static Phi ones(int n);
  static Phi of(std::vector<Rat> v) { return Phi{std::move(v)}; }
};

struct Laurent {
  int vars = 1;
  std::map<Exp, Int> terms;  // no zero coefficients; every key has size vars

  Laurent() = default;
  explicit Laurent(int n) : vars(n) {}

  bool is_zero() const { return terms.empty(); }
  // single term with coefficient +-1, i.e. a unit of Z[Z^n]
  bool is_unit() const;
  bool is_constant() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;
};

Laurent constant(int vars, Int c);
Laurent monomial(int vars, const Exp& e, Int c = 1);
Laurent variable(int vars, int i, std::int64_t power = 1);

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Int& c);
Laurent& operator+=(Laurent& a, const Laurent& b);
Laurent& operator-=(Laurent& a, const Laurent& b);

// multiply by the monomial x^e (a unit)
Laurent shifted(const Laurent& p, const Exp& e);

// -infinity is encoded as nullopt
std::optional<Rat> deg_phi(const Laurent& p, const Phi& phi);
Rat min_level(const Laurent& p, const Phi& phi);  // pre: p != 0
Rat max_level(const Laurent& p, const Phi& phi);  // pre: p != 0
Laurent slice(const Laurent& p, const Phi& phi, const Rat& level);

// lowest / highest phi-level slice of p; pre: p != 0
Laurent bottom_slice(const Laurent& p, const Phi& phi);
Laurent top_slice(const Laurent& p, const Phi& phi);

// monic <=> both extreme slices are units; top-monic <=> highest slice is.
// Throws ZeroPolynomial on p = 0.
bool is_monic(const Laurent& p, const Phi& phi);
bool is_top_monic(const Laurent& p, const Phi& phi);
bool is_bottom_monic(const Laurent& p, const Phi& phi);
bool is_monic(const Laurent& p);      // univariate, phi(t) = 1
bool is_top_monic(const Laurent& p);  // univariate, phi(t) = 1

// a == +-x^k * b for some sign and monomial shift
bool equal_up_to_unit(const Laurent& a, const Laurent& b);

// exact division in Z[Z^n]; nullopt when b does not divide a
std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b);

// fraction-free Bareiss expansion; exact and multiplicative
Laurent determinant(const std::vector<std::vector<Laurent>>& m);
std::vector<std::vector<Laurent>> adjugate(const std::vector<std::vector<Laurent>>& m);

// evaluation at a rational point with nonzero coordinates
Rat eval(const Laurent& p, const std::vector<Rat>& point);

// gcd of the coefficients (positive), 0 for the zero polynomial
Int content(const Laurent& p);

// univariate (vars == 1) gcd over Z[t^{+-1}], defined up to units; the result
// is normalized with exponents >= 0, lowest exponent 0, positive lowest term
Laurent gcd_univariate(const Laurent& a, const Laurent& b);

// ---------------------------------------------------------------------------

struct Fraction {
  Laurent num;
  Laurent den;  // nonzero

  static Fraction of(Laurent n, Laurent d);
  static Fraction one(int vars);
  bool is_zero() const { return num.is_zero(); }
};

Fraction operator*(const Fraction& a, const Fraction& b);
Fraction operator+(const Fraction& a, const Fraction& b);
// value equality: a.num * b.den == b.num * a.den
bool operator==(const Fraction& a, const Fraction& b);

// cancel common factors; full gcd reduction for one variable, monomial and
// integer content only for several (no multivariate factorization here)
Fraction reduced(const Fraction& f);
// unit-normalize: denominator's lowest term gets exponent 0 and positive sign
Fraction normalized(const Fraction& f, const Phi& phi);

std::optional<Rat> deg_phi(const Fraction& f, const Phi& phi);
// quotient-of-two-monic-polynomials test; throws ZeroValue on f = 0
bool monic_fraction(const Fraction& f, const Phi& phi);
bool monic_fraction(const Fraction& f);  // univariate, phi(t) = 1

// ---------------------------------------------------------------------------

// A torsion value: a fraction defined up to +-(monomial), or zero.
struct TorsionValue {
  std::optional<Fraction> value;  // nullopt encodes the zero torsion

  static TorsionValue zero() { return {}; }
  static TorsionValue of(Fraction f) { return {std::move(f)}; }
  bool is_zero() const { return !value.has_value(); }
};

// canonical representative: num and den each shifted to lowest exponent 0
// (phi-order, lexicographic tie-break) with positive lowest coefficients
TorsionValue normalized(const TorsionValue& t, const Phi& phi);
bool equal_up_to_unit(const TorsionValue& a, const TorsionValue& b);
std::optional<Rat> deg_phi(const TorsionValue& t, const Phi& phi);

}  // namespace novikit::laurent
