#pragma once

// Deterministic random generators for the property tests. Every suite seeds
// its own engine, so failures reproduce.

#include <random>

#include "novikit/laurent.hpp"
#include "novikit/novikov.hpp"
#include "novikit/presentation.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline novikit::laurent::Laurent laurent(Rng& rng, int vars, int max_terms,
                                         std::int64_t exp_range, std::int64_t coef_range,
                                         bool nonzero = false) {
  using namespace novikit::laurent;
  Laurent p(vars);
  int terms = static_cast<int>(uniform(rng, nonzero ? 1 : 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exp e(static_cast<size_t>(vars));
    for (auto& x : e) x = uniform(rng, -exp_range, exp_range);
    std::int64_t c = uniform(rng, -coef_range, coef_range);
    p += monomial(vars, e, novikit::Int(static_cast<long>(c)));
  }
  if (nonzero && p.is_zero()) p += monomial(vars, Exp(static_cast<size_t>(vars), 0), 1);
  return p;
}

inline novikit::groups::Word word(Rng& rng, int ngens, int len) {
  std::vector<std::pair<int, int>> letters;
  for (int i = 0; i < len; ++i) {
    letters.emplace_back(static_cast<int>(uniform(rng, 0, ngens - 1)),
                         uniform(rng, 0, 1) == 0 ? 1 : -1);
  }
  return novikit::groups::Word::from_letters(letters);
}

// random deficiency-one presentation on 2 or 3 generators with nontrivial
// relators; the abelianization has rank >= 1 automatically
inline novikit::groups::Presentation presentation(Rng& rng, int max_len = 8) {
  int ngens = static_cast<int>(uniform(rng, 2, 3));
  std::vector<std::string> names;
  for (int i = 0; i < ngens; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<novikit::groups::Word> rels;
  for (int r = 0; r + 1 < ngens; ++r) {
    novikit::groups::Word w;
    do {
      w = word(rng, ngens, static_cast<int>(uniform(rng, 2, max_len)));
    } while (w.cyclically_reduced().trivial());
    rels.push_back(w);
  }
  return novikit::groups::Presentation::make(std::move(names), std::move(rels));
}

// random based complex of the standard closed shape over Z[t] with nonzero
// corners: B = ((AC) id - C A) M ((AC) id - C A) kills A on the left and C
// on the right by construction
struct ShapedComplex {
  novikit::novikov::BasedComplex complex;
};

inline std::optional<ShapedComplex> shaped_complex(Rng& rng, int n) {
  using namespace novikit::laurent;
  auto poly = [&](bool nonzero) { return gen::laurent(rng, 1, 3, 2, 2, nonzero); };
  std::vector<Laurent> a, c;
  for (int i = 0; i < n; ++i) {
    a.push_back(poly(i == 0));
    c.push_back(poly(i == 0));
  }
  Laurent ac(1);
  for (int i = 0; i < n; ++i) ac += a[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
  if (ac.is_zero()) return std::nullopt;

  // Q = (A C) id - C A annihilates A on the left and C on the right
  auto q = [&](size_t i, size_t j) {
    Laurent out = c[i] * a[j] * novikit::Int(-1);
    if (i == j) out += ac;
    return out;
  };
  std::vector<std::vector<Laurent>> m(static_cast<size_t>(n),
                                      std::vector<Laurent>(static_cast<size_t>(n)));
  for (auto& row : m)
    for (auto& e : row) e = poly(false);

  std::vector<std::vector<Laurent>> qm(static_cast<size_t>(n),
                                       std::vector<Laurent>(static_cast<size_t>(n), Laurent(1)));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = 0; j < static_cast<size_t>(n); ++j)
      for (size_t k = 0; k < static_cast<size_t>(n); ++k) qm[i][j] += q(i, k) * m[k][j];
  std::vector<std::vector<Laurent>> b(static_cast<size_t>(n),
                                      std::vector<Laurent>(static_cast<size_t>(n), Laurent(1)));
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = 0; j < static_cast<size_t>(n); ++j)
      for (size_t k = 0; k < static_cast<size_t>(n); ++k) b[i][j] += qm[i][k] * q(k, j);

  ShapedComplex out;
  out.complex.vars = 1;
  out.complex.d1 = a;
  out.complex.d2 = b;
  novikit::novikov::Matrix d3;
  for (int i = 0; i < n; ++i) d3.push_back({c[static_cast<size_t>(i)]});
  out.complex.d3 = std::move(d3);
  return out;
}

}  // namespace gen
