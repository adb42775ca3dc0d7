#pragma once

// Group-ring arithmetic for torsion-free polycyclic groups given in collected
// normal form, with central commutator rules (class <= 2); the integral
// Heisenberg group is the built-in instance. Elements are finite Z-linear
// combinations of normal-form tuples. The phi-graded leading-level test
// reduces invertibility over the completion to a Laurent determinant over
// the group ring of ker(phi), which must be abelian here; anything wilder is
// rejected with UnsupportedKernel rather than guessed at.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novikit/laurent.hpp"

namespace novikit::pc {

using ExpTuple = std::vector<std::int64_t>;

struct Group {
  int rank = 0;
  // comm[j][i] for i < j: g_j g_i = g_i g_j * w with w the exponent tuple of
  // a central word supported on generators with index > j
  std::vector<std::vector<ExpTuple>> comm;
  std::vector<std::string> names;

  static Group heisenberg();  // x, y, z with z = [x, y] central

  bool central(int k) const;
  ExpTuple id() const { return ExpTuple(static_cast<size_t>(rank), 0); }
  ExpTuple mul(const ExpTuple& a, const ExpTuple& b) const;
  ExpTuple inv(const ExpTuple& a) const;
  ExpTuple power(const ExpTuple& a, std::int64_t k) const;
  // confluence: rules reference only central generators of higher index and
  // the product is associative on all signed generator triples
  void validate() const;
};

// collect a word over pc generators (letters (gen, +-1)) into normal form
ExpTuple collect(const Group& g, const std::vector<std::pair<int, int>>& letters);

struct Element {
  std::map<ExpTuple, Int> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const ExpTuple& e, const Int& c);

  static Element of(const ExpTuple& e, Int c = 1);
  static Element zero() { return {}; }

  friend bool operator==(const Element&, const Element&) = default;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element multiply(const Group& g, const Element& a, const Element& b);

struct Grading {
  std::vector<Rat> phi;

  Rat level(const ExpTuple& e) const;
};

// checked: phi must vanish on every commutator rule word
Grading grading(const Group& g, std::vector<Rat> phi);

std::optional<Rat> deg_phi(const Element& a, const Grading& gr);  // nullopt = -inf

enum class Invertibility { invertible, not_invertible, degenerate };

struct InvertReport {
  Invertibility status = Invertibility::not_invertible;
  std::string detail;
};

// Leading-level invertibility over the Novikov completion of Z[G] in the
// direction of +phi (supports bounded below). Throws UnsupportedKernel when
// ker(phi) is not commutative-representable, ZeroMatrix on the zero matrix.
InvertReport invertibility(const Group& g, const std::vector<std::vector<Element>>& a,
                           const Grading& gr);
InvertReport invertibility(const Group& g, const Element& a, const Grading& gr);

}  // namespace novikit::pc
