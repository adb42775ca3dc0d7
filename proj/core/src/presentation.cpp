#include "novikit/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "novikit/linalg.hpp"

namespace novikit::groups {

Presentation Presentation::make(std::vector<std::string> gens, std::vector<Word> relators) {
  Presentation p;
  p.gens = std::move(gens);
  p.relators.reserve(relators.size());
  for (auto& r : relators) {
    Word cr = r.cyclically_reduced();
    if (cr.max_generator() >= p.ngens())
      throw Error(errc::invalid, "relator references an undeclared generator");
    p.relators.push_back(std::move(cr));
  }
  return p;
}

Rat CohomologyClass::eval(const Word& w) const {
  Rat acc = 0;
  for (const auto& s : w.syls) {
    acc += values[static_cast<size_t>(s.gen)] * Rat(static_cast<long>(s.exp));
  }
  acc.canonicalize();
  return acc;
}

CohomologyClass cohomology_class(const Presentation& p, std::vector<Rat> values) {
  if (static_cast<int>(values.size()) != p.ngens())
    throw Error(errc::invalid, "class needs one value per generator");
  CohomologyClass phi{std::move(values), false};
  for (const auto& r : p.relators) {
    if (phi.eval(r) != 0)
      throw Error(errc::invalid, "class does not vanish on a relator");
  }
  // primitive <=> integral with content 1
  Int g = 0;
  bool integral = true;
  for (const auto& v : phi.values) {
    if (v.get_den() != 1) {
      integral = false;
      break;
    }
    Int n = v.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  phi.primitive = integral && g == 1;
  return phi;
}

std::pair<CohomologyClass, Rat> clear_to_primitive(const CohomologyClass& phi) {
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& v : phi.values) {
    Int n = v.get_num(), d = v.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  if (num_gcd == 0) throw Error(errc::invalid, "cannot scale the zero class");
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  CohomologyClass out = phi;
  for (auto& v : out.values) {
    v *= scale;
    v.canonicalize();
  }
  out.primitive = true;
  return {out, scale};
}

Abelianization abelianization(const Presentation& p) {
  const int g = p.ngens();
  const size_t r = p.relators.size();
  // columns of the g x r matrix are relator exponent vectors
  linalg::IMat m(static_cast<size_t>(g), linalg::IVec(std::max<size_t>(r, 1), 0));
  for (size_t j = 0; j < r; ++j) {
    for (const auto& s : p.relators[j].syls) {
      m[static_cast<size_t>(s.gen)][j] += Int(static_cast<long>(s.exp));
    }
  }
  linalg::Smith snf = linalg::smith_normal_form(std::move(m));

  Abelianization ab;
  size_t nonzero = snf.diag.size();
  ab.rank = g - static_cast<int>(nonzero);
  for (const auto& d : snf.diag) {
    if (d > 1) ab.torsion.push_back(d);
  }
  // rows of U past the nonzero diagonal block are covectors onto the free
  // part; sign-normalized so the first nonzero entry is positive
  for (size_t i = nonzero; i < static_cast<size_t>(g); ++i) {
    auto cov = snf.left[i];
    for (const auto& x : cov) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : cov) y = -y;
        break;
      }
    }
    ab.free_covectors.push_back(std::move(cov));
  }
  return ab;
}

std::vector<CohomologyClass> induced_phi(const Presentation& p) {
  Abelianization ab = abelianization(p);
  if (ab.rank == 0)
    throw Error(errc::no_free_quotient, "abelianization has rank 0");
  std::vector<CohomologyClass> basis;
  for (const auto& cov : ab.free_covectors) {
    std::vector<Rat> vals;
    vals.reserve(cov.size());
    for (const auto& x : cov) vals.emplace_back(x);
    basis.push_back(cohomology_class(p, std::move(vals)));
  }
  return basis;
}

// --- braids --------------------------------------------------------------------

namespace {

// sigma_i maps x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i (0-based i)
Word artin_image(int letter, int gen) {
  int i = std::abs(letter) - 1;
  if (letter > 0) {
    if (gen == i)
      return Word::from_letters({{i, 1}, {i + 1, 1}, {i, -1}});
    if (gen == i + 1) return Word::generator(i);
  } else {
    if (gen == i) return Word::generator(i + 1);
    if (gen == i + 1) return Word::from_letters({{i + 1, -1}, {i, 1}, {i + 1, 1}});
  }
  return Word::generator(gen);
}

Word apply_letter(int letter, const Word& w) {
  Word out;
  for (auto [g, e] : w.letters()) {
    Word img = artin_image(letter, g);
    out *= (e == 1 ? img : img.inverse());
  }
  return out;
}

}  // namespace

Presentation braid_to_knot_group(const std::vector<int>& braid) {
  if (braid.empty()) throw Error(errc::invalid, "empty braid word");
  int strands = 0;
  for (int x : braid) {
    if (x == 0) throw Error(errc::invalid, "braid letters are nonzero integers");
    strands = std::max(strands, std::abs(x) + 1);
  }

  // closure components = cycles of the underlying permutation
  std::vector<int> perm(static_cast<size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : braid) {
    int i = std::abs(x) - 1;
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(i + 1)]);
  }
  std::vector<bool> seen(static_cast<size_t>(strands), false);
  int components = 0;
  for (int s = 0; s < strands; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++components;
    for (int t = s; !seen[static_cast<size_t>(t)]; t = perm[static_cast<size_t>(t)])
      seen[static_cast<size_t>(t)] = true;
  }
  if (components != 1)
    throw Error(errc::not_a_knot, "closure has " + std::to_string(components) + " components");

  std::vector<std::string> names;
  for (int s = 0; s < strands; ++s) names.push_back(std::string(1, static_cast<char>('a' + s)));

  // relators beta(x_g) x_g^-1; one is redundant for a knot closure and the
  // last is dropped to land on a deficiency-one presentation
  std::vector<Word> rels;
  for (int g = 0; g + 1 < strands; ++g) {
    Word image = Word::generator(g);
    for (int letter : braid) image = apply_letter(letter, image);
    rels.push_back(image * Word::generator(g, -1));
  }
  return Presentation::make(std::move(names), std::move(rels));
}

// --- gamma maps ------------------------------------------------------------------

laurent::Exp GammaMap::apply(const Word& w) const {
  laurent::Exp out(static_cast<size_t>(vars), 0);
  for (const auto& s : w.syls) {
    const laurent::Exp& img = images[static_cast<size_t>(s.gen)];
    for (size_t i = 0; i < out.size(); ++i) out[i] += img[i] * s.exp;
  }
  return out;
}

laurent::Laurent GammaMap::apply(const FreeRingExpr& e) const {
  laurent::Laurent out(vars);
  for (const auto& [w, c] : e.terms) {
    out += laurent::monomial(vars, apply(w), c);
  }
  return out;
}

GammaMap gamma_from_phi(const Presentation& p, const CohomologyClass& phi) {
  GammaMap g;
  g.vars = 1;
  g.images.reserve(phi.values.size());
  for (const auto& v : phi.values) {
    if (v.get_den() != 1)
      throw Error(errc::invalid, "gamma map needs an integral class; clear denominators first");
    g.images.push_back({static_cast<std::int64_t>(v.get_num().get_si())});
  }
  validate(g, p);
  return g;
}

GammaMap gamma_free_abelianization(const Presentation& p, const Abelianization& ab) {
  GammaMap g;
  g.vars = ab.rank;
  g.images.assign(static_cast<size_t>(p.ngens()), laurent::Exp(static_cast<size_t>(ab.rank), 0));
  for (size_t i = 0; i < ab.free_covectors.size(); ++i) {
    for (int j = 0; j < p.ngens(); ++j) {
      g.images[static_cast<size_t>(j)][i] =
          static_cast<std::int64_t>(ab.free_covectors[i][static_cast<size_t>(j)].get_si());
    }
  }
  validate(g, p);
  return g;
}

void validate(const GammaMap& g, const Presentation& p) {
  if (static_cast<int>(g.images.size()) != p.ngens())
    throw Error(errc::invalid, "gamma map needs one image per generator");
  for (const auto& r : p.relators) {
    laurent::Exp e = g.apply(r);
    if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x != 0; }))
      throw Error(errc::invalid, "gamma map does not kill a relator");
  }
}

}  // namespace novikit::groups
