#pragma once

// Finitely presented groups: abelianization via Smith normal form, induced
// cohomology classes, braid closures, and maps into free abelian targets.

#include <optional>
#include <string>
#include <vector>

#include "novikit/fox.hpp"
#include "novikit/laurent.hpp"
#include "novikit/words.hpp"

namespace novikit::groups {

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;  // stored cyclically reduced

  int ngens() const { return static_cast<int>(gens.size()); }
  // deficiency = #generators - #relators
  int deficiency() const { return ngens() - static_cast<int>(relators.size()); }

  static Presentation make(std::vector<std::string> gens, std::vector<Word> relators);
};

// rational class on the generators, vanishing on every relator
struct CohomologyClass {
  std::vector<Rat> values;
  bool primitive = false;  // meaningful only for integral classes with gcd 1

  Rat eval(const Word& w) const;  // signed exponent sum against values
};

// checked constructor; throws InvalidInput when a relator is not annihilated
CohomologyClass cohomology_class(const Presentation& p, std::vector<Rat> values);

// scale a rational class to a primitive integral one; returns the class and
// the scale factor applied (reported to the caller, never hidden)
std::pair<CohomologyClass, Rat> clear_to_primitive(const CohomologyClass& phi);

struct Abelianization {
  int rank = 0;
  std::vector<Int> torsion;  // entries > 1, each dividing the next
  // primitive integral covectors spanning Hom(H_1/torsion, Z), one per rank
  std::vector<std::vector<Int>> free_covectors;
};

Abelianization abelianization(const Presentation& p);

// basis of H^1(-;Z) as classes on the generators, sign-normalized so the
// first nonzero value is positive; throws NoFreeQuotient when rank is 0
std::vector<CohomologyClass> induced_phi(const Presentation& p);

// --- braid closures -----------------------------------------------------------

// Closure of a braid word (generator i of the braid group written as +-i,
// 1-based). Produces the deficiency-one presentation of the knot group on the
// strand meridians; throws NotAKnot if the closure has several components.
Presentation braid_to_knot_group(const std::vector<int>& braid);

// --- maps to free abelian targets ----------------------------------------------

// homomorphism F(gens) -> Z^vars killing all relators
struct GammaMap {
  int vars = 1;
  std::vector<laurent::Exp> images;  // one exponent vector per generator

  laurent::Exp apply(const Word& w) const;
  laurent::Laurent apply(const FreeRingExpr& e) const;
};

// gamma = phi for a primitive integral class (target Z)
GammaMap gamma_from_phi(const Presentation& p, const CohomologyClass& phi);
// gamma = projection onto the free part of the abelianization (target Z^rank)
GammaMap gamma_free_abelianization(const Presentation& p, const Abelianization& ab);
// checked: relators must map to zero
void validate(const GammaMap& g, const Presentation& p);

}  // namespace novikit::groups
