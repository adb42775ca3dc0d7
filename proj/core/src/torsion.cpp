#include "novikit/torsion.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace novikit::torsion {

using groups::fox_derivative;
using groups::Word;
using laurent::Fraction;
using laurent::Laurent;

PresentationComplex build_complex(const Presentation& p, const GammaMap& gamma,
                                  const Phi& phi) {
  groups::validate(gamma, p);
  if (p.deficiency() < 0)
    throw Error(errc::bad_shape, "presentation has negative deficiency");
  const int n = p.ngens();

  // rotate so the corner generator has nonzero phi-level
  int corner = -1;
  for (int j = 0; j < n; ++j) {
    if (phi.level(gamma.images[static_cast<size_t>(j)]) != 0) {
      corner = j;
      break;
    }
  }
  if (corner < 0)
    throw Error(errc::no_phi_nonzero_generator,
                "phi vanishes on every generator image; the class is zero on the group");
  std::vector<int> order;
  for (int j = 0; j < n; ++j) order.push_back((corner + j) % n);

  PresentationComplex out;
  out.corner_generator = corner;
  out.generator_order = order;
  out.complex.vars = gamma.vars;

  // d1 row: 1 - gamma(x_j) in the rotated order
  for (int j : order) {
    Laurent one = laurent::constant(gamma.vars, 1);
    Laurent img = laurent::monomial(gamma.vars, gamma.images[static_cast<size_t>(j)], 1);
    out.complex.d1.push_back(one - img);
  }
  // d2 columns indexed by relators, rows by generators (rotated)
  out.complex.d2.assign(static_cast<size_t>(n), {});
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
    int j = order[i];
    for (const auto& r : p.relators) {
      out.complex.d2[i].push_back(gamma.apply(fox_derivative(r, j)));
    }
  }

  // image of the fundamental identity: sum_j (1 - gamma(x_j)) d(r)/d(x_j) = 0
  for (size_t c = 0; c < p.relators.size(); ++c) {
    Laurent acc(gamma.vars);
    for (size_t i = 0; i < static_cast<size_t>(n); ++i)
      acc += out.complex.d1[i] * out.complex.d2[i][c];
    assert(acc.is_zero());
  }
  return out;
}

TorsionValue tau_of_complex(const novikov::BasedComplex& c, const Phi& phi) {
  const size_t n = c.d1.size();
  if (n == 0) throw Error(errc::bad_shape, "empty complex");
  const Laurent& a1 = c.d1[0];
  if (a1.is_zero()) throw Error(errc::bad_shape, "corner entry of d1 vanishes");
  if (c.closed() && (*c.d3)[0][0].is_zero())
    throw Error(errc::bad_shape, "corner entry of d3 vanishes");

  Laurent det = laurent::determinant(novikov::core_matrix(c));
  if (det.is_zero()) return TorsionValue::zero();

  Laurent den = a1;
  if (c.closed()) den = den * (*c.d3)[0][0];
  return laurent::normalized(TorsionValue::of(Fraction::of(std::move(det), std::move(den))),
                             phi);
}

bool novikov_vanishes(const novikov::BasedComplex& c, const Phi& phi, int direction) {
  return novikov::acyclicity_test(c, phi, direction);
}

void validate(const PcMap& m, const Presentation& p) {
  if (!m.grp) throw Error(errc::invalid, "pc map without a target group");
  if (static_cast<int>(m.images.size()) != p.ngens())
    throw Error(errc::invalid, "pc map needs one image per generator");
  for (const auto& r : p.relators) {
    pc::ExpTuple acc = m.grp->id();
    for (auto [g, e] : r.letters()) {
      const pc::ExpTuple& img = m.images[static_cast<size_t>(g)];
      acc = m.grp->mul(acc, e == 1 ? img : m.grp->inv(img));
    }
    if (acc != m.grp->id()) throw Error(errc::invalid, "pc map does not kill a relator");
  }
}

namespace {

pc::Element pc_image(const pc::Group& g, const PcMap& m, const Word& w) {
  pc::ExpTuple acc = g.id();
  for (auto [gen, e] : w.letters()) {
    const pc::ExpTuple& img = m.images[static_cast<size_t>(gen)];
    acc = g.mul(acc, e == 1 ? img : g.inv(img));
  }
  return pc::Element::of(acc);
}

pc::Element pc_image(const pc::Group& g, const PcMap& m, const groups::FreeRingExpr& e) {
  pc::Element out;
  for (const auto& [w, c] : e.terms) {
    pc::ExpTuple t = g.id();
    for (auto [gen, ex] : w.letters()) {
      const pc::ExpTuple& img = m.images[static_cast<size_t>(gen)];
      t = g.mul(t, ex == 1 ? img : g.inv(img));
    }
    out.add(t, c);
  }
  return out;
}

}  // namespace

Vanishing novikov_vanishes_pc(const Presentation& p, const PcMap& gamma,
                              const pc::Grading& gr) {
  validate(gamma, p);
  const pc::Group& g = *gamma.grp;
  const int n = p.ngens();
  if (p.deficiency() != 1)
    throw Error(errc::bad_shape, "pc vanishing test expects a deficiency-one presentation");

  int corner = -1;
  for (int j = 0; j < n; ++j) {
    if (gr.level(gamma.images[static_cast<size_t>(j)]) != 0) {
      corner = j;
      break;
    }
  }
  if (corner < 0)
    throw Error(errc::no_phi_nonzero_generator, "grading kills every generator image");

  // core matrix: Fox Jacobian with the corner generator's row removed
  std::vector<std::vector<pc::Element>> core;
  for (int j = 0; j < n; ++j) {
    if (j == corner) continue;
    std::vector<pc::Element> row;
    for (const auto& r : p.relators) row.push_back(pc_image(g, gamma, fox_derivative(r, j)));
    core.push_back(std::move(row));
  }
  if (core.empty()) return Vanishing::vanishes;
  bool zero = true;
  for (const auto& row : core)
    for (const auto& el : row) zero = zero && el.is_zero();
  if (zero) return Vanishing::nonvanishing;

  pc::InvertReport rep = pc::invertibility(g, core, gr);
  switch (rep.status) {
    case pc::Invertibility::invertible:
      return Vanishing::vanishes;
    case pc::Invertibility::not_invertible:
      return Vanishing::nonvanishing;
    case pc::Invertibility::degenerate:
      return Vanishing::inconclusive;
  }
  return Vanishing::inconclusive;
}

FiberVerdict fiber_check(const Presentation& p, std::optional<CohomologyClass> phi_in) {
  if (p.deficiency() != 1)
    throw Error(errc::bad_shape, "fiber check expects a deficiency-one presentation");

  FiberVerdict v;
  CohomologyClass phi;
  if (phi_in) {
    auto [cleared, scale] = groups::clear_to_primitive(*phi_in);
    phi = std::move(cleared);
    v.phi_scale = scale;
    if (scale != 1)
      v.caveats.push_back("phi was scaled by " + Rat(scale).get_str() +
                          " to a primitive integral class");
  } else {
    auto basis = induced_phi(p);
    if (basis.size() != 1)
      throw Error(errc::invalid,
                  "abelianization has rank > 1; pass --phi to select a class");
    phi = basis[0];
  }

  GammaMap gamma = groups::gamma_from_phi(p, phi);
  Phi grading = Phi::ones(1);
  PresentationComplex pc = build_complex(p, gamma, grading);

  v.tau = tau_of_complex(pc.complex, grading);
  v.tau_degree = laurent::deg_phi(v.tau, grading);

  if (v.tau.is_zero()) {
    v.monic = false;
    v.novikov_plus = novikov_vanishes(pc.complex, grading, +1);
    v.novikov_minus = novikov_vanishes(pc.complex, grading, -1);
    v.passed = false;
    v.obstruction = "torsion-zero";
    return v;
  }

  v.monic = laurent::monic_fraction(*v.tau.value, grading);
  v.novikov_plus = novikov_vanishes(pc.complex, grading, +1);
  v.novikov_minus = novikov_vanishes(pc.complex, grading, -1);
  v.thurston_lower_bound = v.tau_degree;
  if (*v.tau_degree < 0)
    v.caveats.push_back(
        "torsion degree is negative; the norm bound degenerates (genus-zero fiber)");
  v.caveats.push_back(
      "passing clears the obstructions; fiberedness itself needs the input to present a "
      "3-manifold group");

  // monic <=> vanishing in both directions whenever tau != 0
  assert(v.monic == (v.novikov_plus && v.novikov_minus));

  if (!v.monic) {
    v.passed = false;
    v.obstruction = "non-monic";
  } else if (!v.novikov_plus || !v.novikov_minus) {
    v.passed = false;
    v.obstruction = v.novikov_plus ? "novikov-minus" : "novikov-plus";
  } else {
    v.passed = true;
  }
  return v;
}

Rat delta_zero(const Presentation& p) {
  groups::Abelianization ab = groups::abelianization(p);
  if (ab.rank != 1 || !ab.torsion.empty())
    throw Error(errc::invalid, "delta_0 expects a knot-exterior presentation (H_1 = Z)");
  FiberVerdict v = fiber_check(p);
  if (v.tau.is_zero()) throw Error(errc::zero_value, "torsion vanishes; delta_0 undefined");
  return *v.tau_degree + 1;
}

// --- fibered cone -----------------------------------------------------------------

Cone fibered_cone_probe(const novikov::Matrix& core, const Phi& phi) {
  Cone cone;
  cone.vars = phi.vars();
  if (core.empty()) return cone;

  novikov::LevelDecomposition dec = novikov::decompose(core, phi);
  Laurent det = laurent::determinant(dec.leading);
  if (det.is_zero() || !det.is_unit())
    throw Error(errc::not_normalizable, "leading matrix of the core is not invertible");

  // normalize to id + P by multiplying with the inverse of the leading part
  novikov::Matrix m0 = laurent::adjugate(dec.leading);
  const laurent::Exp& de = det.terms.begin()->first;
  const bool neg = det.terms.begin()->second < 0;
  laurent::Exp back(de.size());
  for (size_t i = 0; i < de.size(); ++i) back[i] = -de[i] - dec.shift[i];
  for (auto& row : m0)
    for (auto& e : row) {
      e = laurent::shifted(e, back);
      if (neg) e = -e;
    }

  const size_t n = core.size();
  std::set<laurent::Exp> support;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Laurent acc(phi.vars());
      for (size_t l = 0; l < n; ++l) acc += m0[i][l] * core[l][j];
      if (i == j) acc -= laurent::constant(phi.vars(), 1);
      for (const auto& [e, c] : acc.terms) {
        assert(phi.level(e) > 0);
        support.insert(e);
      }
    }
  cone.positive.assign(support.begin(), support.end());
  return cone;
}

Cone fibered_cone_probe(const novikov::BasedComplex& c, const Phi& phi) {
  if (!novikov_vanishes(c, phi, +1))
    throw Error(errc::invalid, "cone probe requires vanishing in the +phi direction");
  Cone cone = fibered_cone_probe(novikov::core_matrix(c), phi);
  std::set<laurent::Exp> corners;
  auto corner_exp = [&](const Laurent& p) {
    // corner entries have the shape 1 - x^e; constrain psi(e) != 0
    for (const auto& [e, coef] : p.terms) {
      if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; }))
        corners.insert(e);
    }
  };
  corner_exp(c.d1[0]);
  if (c.closed()) corner_exp((*c.d3)[0][0]);
  cone.nonzero.assign(corners.begin(), corners.end());
  return cone;
}

bool satisfies(const Cone& cone, const Phi& psi) {
  for (const auto& e : cone.positive) {
    if (psi.level(e) <= 0) return false;
  }
  for (const auto& e : cone.nonzero) {
    if (psi.level(e) == 0) return false;
  }
  return true;
}

}  // namespace novikit::torsion
