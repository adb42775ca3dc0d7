#pragma once

// Chain complexes of presentation 2-complexes, Reidemeister torsion in the
// commutative case, homology vanishing over Novikov completions, fiberedness
// obstructions, Thurston-norm lower bounds, and the open-cone probe around a
// vanishing class.

#include <optional>
#include <string>
#include <vector>

#include "novikit/novikov.hpp"
#include "novikit/polycyclic.hpp"
#include "novikit/presentation.hpp"

namespace novikit::torsion {

using groups::CohomologyClass;
using groups::GammaMap;
using groups::Presentation;
using laurent::Phi;
using laurent::TorsionValue;

struct PresentationComplex {
  novikov::BasedComplex complex;  // boundary shape for presentations
  int corner_generator = 0;       // original index of the generator moved up front
  std::vector<int> generator_order;
};

// Fox Jacobian of a deficiency-one presentation pushed through gamma, with
// the generator order rotated so the corner entry 1 - gamma(x_0) has nonzero
// phi-level. Throws NoPhiNonzeroGenerator when phi kills every generator.
PresentationComplex build_complex(const Presentation& p, const GammaMap& gamma, const Phi& phi);

// torsion of a based complex of the standard shape: det(core) divided by the
// corner units; zero when the core determinant vanishes
TorsionValue tau_of_complex(const novikov::BasedComplex& c, const Phi& phi);

bool novikov_vanishes(const novikov::BasedComplex& c, const Phi& phi, int direction);

enum class Vanishing { vanishes, nonvanishing, inconclusive };

// homomorphisms into a pc target: generator -> normal-form tuple
struct PcMap {
  const pc::Group* grp = nullptr;
  std::vector<pc::ExpTuple> images;
};
void validate(const PcMap& m, const Presentation& p);

// vanishing over the completion of the pc group ring; a degenerate leading
// matrix surfaces as inconclusive, never as a verdict
Vanishing novikov_vanishes_pc(const Presentation& p, const PcMap& gamma, const pc::Grading& gr);

struct FiberVerdict {
  TorsionValue tau;
  std::optional<Rat> tau_degree;  // nullopt = -inf (tau == 0)
  bool monic = false;
  bool novikov_plus = false;
  bool novikov_minus = false;
  std::optional<Rat> thurston_lower_bound;
  bool passed = false;
  std::string obstruction;  // failing test when !passed
  Rat phi_scale = 1;        // factor applied to make phi a primitive class
  std::vector<std::string> caveats;
};

// Runs the whole obstruction pipeline for a deficiency-one presentation and
// a class phi (default: the induced class when the abelianization has rank
// one). Passing means no obstruction fired; it certifies fiberedness only
// when the input presents an actual 3-manifold group, which the caveats say.
FiberVerdict fiber_check(const Presentation& p,
                         std::optional<CohomologyClass> phi = std::nullopt);

// degree of the Alexander polynomial of a knot-exterior presentation
Rat delta_zero(const Presentation& p);

// open cone of classes psi around phi along which vanishing persists:
// psi(e) > 0 for every support exponent of the normalized core P, plus
// psi(corner) != 0 constraints
struct Cone {
  std::vector<laurent::Exp> positive;  // constraints psi . e > 0
  std::vector<laurent::Exp> nonzero;   // constraints psi . e != 0
  int vars = 1;
};
Cone fibered_cone_probe(const novikov::BasedComplex& c, const Phi& phi);
Cone fibered_cone_probe(const novikov::Matrix& core, const Phi& phi);

bool satisfies(const Cone& cone, const Phi& psi);

}  // namespace novikit::torsion
