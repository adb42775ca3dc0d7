#include "novikit/polycyclic.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "novikit/linalg.hpp"

namespace novikit::pc {

Group Group::heisenberg() {
  Group g;
  g.rank = 3;
  g.names = {"x", "y", "z"};
  g.comm.assign(3, std::vector<ExpTuple>(3, ExpTuple{}));
  // y x = x y z^-1, z central
  g.comm[1][0] = ExpTuple{0, 0, -1};
  g.comm[2][0] = ExpTuple{0, 0, 0};
  g.comm[2][1] = ExpTuple{0, 0, 0};
  g.validate();
  return g;
}

bool Group::central(int k) const {
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      if (i != k && j != k) continue;
      const ExpTuple& w = comm[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (std::any_of(w.begin(), w.end(), [](std::int64_t x) { return x != 0; })) return false;
    }
  }
  return true;
}

ExpTuple Group::mul(const ExpTuple& a, const ExpTuple& b) const {
  ExpTuple out(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k)
    out[static_cast<size_t>(k)] = a[static_cast<size_t>(k)] + b[static_cast<size_t>(k)];
  // moving g_i^{b_i} left past g_j^{a_j} (j > i) picks up w_{ij}^{a_j b_i}
  for (int i = 0; i < rank; ++i) {
    if (b[static_cast<size_t>(i)] == 0) continue;
    for (int j = i + 1; j < rank; ++j) {
      if (a[static_cast<size_t>(j)] == 0) continue;
      const ExpTuple& w = comm[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (w.empty()) continue;
      std::int64_t f = a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)];
      for (int k = 0; k < rank; ++k) out[static_cast<size_t>(k)] += f * w[static_cast<size_t>(k)];
    }
  }
  return out;
}

ExpTuple Group::inv(const ExpTuple& a) const {
  // a * (-a) is central; subtract it off
  ExpTuple neg(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) neg[static_cast<size_t>(k)] = -a[static_cast<size_t>(k)];
  ExpTuple c = mul(a, neg);
  ExpTuple out(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k)
    out[static_cast<size_t>(k)] = neg[static_cast<size_t>(k)] - c[static_cast<size_t>(k)];
  assert(mul(a, out) == id());
  return out;
}

ExpTuple Group::power(const ExpTuple& a, std::int64_t k) const {
  ExpTuple base = k < 0 ? inv(a) : a;
  std::int64_t n = std::abs(k);
  ExpTuple acc = id();
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

void Group::validate() const {
  if (static_cast<int>(comm.size()) != rank)
    throw Error(errc::invalid, "commutation table size mismatch");
  for (int j = 0; j < rank; ++j) {
    if (static_cast<int>(comm[static_cast<size_t>(j)].size()) != rank)
      throw Error(errc::invalid, "commutation table size mismatch");
    for (int i = 0; i < j; ++i) {
      const ExpTuple& w = comm[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (w.empty()) continue;
      if (static_cast<int>(w.size()) != rank)
        throw Error(errc::invalid, "commutator word length mismatch");
      for (int k = 0; k < rank; ++k) {
        if (w[static_cast<size_t>(k)] == 0) continue;
        if (k <= j || !central(k))
          throw Error(errc::invalid,
                      "commutator words must use central generators of higher index");
      }
    }
  }
  // associativity on all signed generator triples
  std::vector<ExpTuple> gens;
  for (int i = 0; i < rank; ++i) {
    ExpTuple e = id();
    e[static_cast<size_t>(i)] = 1;
    gens.push_back(e);
    e[static_cast<size_t>(i)] = -1;
    gens.push_back(e);
  }
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(errc::invalid, "commutation rules are not confluent");
      }
}

ExpTuple collect(const Group& g, const std::vector<std::pair<int, int>>& letters) {
  ExpTuple acc = g.id();
  for (auto [gen, e] : letters) {
    if (gen < 0 || gen >= g.rank) throw Error(errc::invalid, "pc generator out of range");
    ExpTuple step = g.id();
    step[static_cast<size_t>(gen)] = e;
    acc = g.mul(acc, step);
  }
  return acc;
}

void Element::add(const ExpTuple& e, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Element Element::of(const ExpTuple& e, Int c) {
  Element out;
  out.add(e, c);
  return out;
}

Element add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [e, c] : b.terms) out.add(e, c);
  return out;
}

Element sub(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [e, c] : b.terms) out.add(e, -c);
  return out;
}

Element multiply(const Group& g, const Element& a, const Element& b) {
  Element out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.add(g.mul(ea, eb), ca * cb);
  return out;
}

Rat Grading::level(const ExpTuple& e) const {
  Rat acc = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) acc += phi[i] * Rat(static_cast<long>(e[i]));
  }
  acc.canonicalize();
  return acc;
}

Grading grading(const Group& g, std::vector<Rat> phi) {
  if (static_cast<int>(phi.size()) != g.rank)
    throw Error(errc::invalid, "grading needs one value per pc generator");
  Grading gr{std::move(phi)};
  for (int j = 0; j < g.rank; ++j)
    for (int i = 0; i < j; ++i) {
      const ExpTuple& w = g.comm[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!w.empty() && gr.level(w) != 0)
        throw Error(errc::invalid, "grading must vanish on commutator words");
    }
  return gr;
}

std::optional<Rat> deg_phi(const Element& a, const Grading& gr) {
  if (a.is_zero()) return std::nullopt;
  bool first = true;
  Rat lo, hi;
  for (const auto& [e, c] : a.terms) {
    Rat l = gr.level(e);
    if (first || l < lo) lo = l;
    if (first || l > hi) hi = l;
    first = false;
  }
  return hi - lo;
}

// --- leading-level invertibility ------------------------------------------------

namespace {

// isomorphism ker(phi) -> Z^{rank-1} for an abelian kernel: a block of
// "lift" generators with independent non-central exponents followed by a
// lattice basis of the purely central kernel directions
struct KernelIso {
  const Group* group = nullptr;
  std::vector<ExpTuple> lifts;    // pairwise commuting, non-central parts independent
  std::vector<ExpTuple> central;  // central kernel lattice basis
  std::vector<int> noncentral_idx;
  linalg::IMat lift_nc;     // non-central rows of the lifts
  linalg::IMat central_mat;  // central basis as columns

  int dim() const { return static_cast<int>(lifts.size() + central.size()); }

  std::optional<std::vector<std::int64_t>> coordinates(const ExpTuple& w) const;
};

KernelIso build_kernel_iso(const Group& g, const Grading& gr) {
  const int r = g.rank;
  // integer covector for phi
  Int lcm = 1;
  for (const auto& v : gr.phi) {
    Int d = v.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  linalg::IMat cov(1, linalg::IVec(static_cast<size_t>(r)));
  for (int i = 0; i < r; ++i) {
    Rat scaled = gr.phi[static_cast<size_t>(i)] * Rat(lcm);
    scaled.canonicalize();
    cov[0][static_cast<size_t>(i)] = scaled.get_num();
  }
  linalg::IMat basis = linalg::integer_kernel(cov);  // rows are basis vectors

  std::vector<int> nc;
  for (int k = 0; k < r; ++k)
    if (!g.central(k)) nc.push_back(k);

  // split the kernel basis into lifts (independent non-central part) and
  // purely central directions via a unimodular column transform
  linalg::IMat basis_cols(static_cast<size_t>(r), linalg::IVec(basis.size(), 0));
  for (size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i < r; ++i) basis_cols[static_cast<size_t>(i)][b] = basis[b][static_cast<size_t>(i)];
  linalg::IMat nc_rows(nc.size(), linalg::IVec(basis.size(), 0));
  for (size_t i = 0; i < nc.size(); ++i)
    for (size_t b = 0; b < basis.size(); ++b)
      nc_rows[i][b] = basis_cols[static_cast<size_t>(nc[i])][b];
  linalg::ColReduction red = linalg::column_reduce(nc_rows);
  linalg::IMat split = linalg::multiply(basis_cols, red.v);

  KernelIso iso;
  iso.group = &g;
  iso.noncentral_idx = nc;
  auto column_tuple = [&](size_t j) {
    ExpTuple t(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
      const Int& x = split[static_cast<size_t>(i)][j];
      if (!x.fits_slong_p()) throw Error(errc::unsupported_kernel, "kernel basis overflow");
      t[static_cast<size_t>(i)] = x.get_si();
    }
    return t;
  };
  for (size_t j : red.pivot_cols) iso.lifts.push_back(column_tuple(j));
  for (size_t j : red.zero_cols) {
    ExpTuple t = column_tuple(j);
    for (int idx : nc) {
      if (t[static_cast<size_t>(idx)] != 0)
        throw Error(errc::unsupported_kernel, "central split failed");
    }
    iso.central.push_back(t);
  }

  // kernel must be abelian: lifts commute pairwise (central dirs always do)
  for (size_t i = 0; i < iso.lifts.size(); ++i)
    for (size_t j = i + 1; j < iso.lifts.size(); ++j) {
      if (g.mul(iso.lifts[i], iso.lifts[j]) != g.mul(iso.lifts[j], iso.lifts[i]))
        throw Error(errc::unsupported_kernel, "ker(phi) is not abelian");
    }

  iso.lift_nc.assign(nc.size(), linalg::IVec(iso.lifts.size(), 0));
  for (size_t i = 0; i < nc.size(); ++i)
    for (size_t j = 0; j < iso.lifts.size(); ++j)
      iso.lift_nc[i][j] = iso.lifts[j][static_cast<size_t>(nc[i])];
  iso.central_mat.assign(static_cast<size_t>(r), linalg::IVec(iso.central.size(), 0));
  for (size_t j = 0; j < iso.central.size(); ++j)
    for (int i = 0; i < r; ++i)
      iso.central_mat[static_cast<size_t>(i)][j] = iso.central[j][static_cast<size_t>(i)];
  return iso;
}

std::optional<std::vector<std::int64_t>> KernelIso::coordinates(const ExpTuple& w) const {
  const Group& g = *group;
  linalg::IVec nc_part(noncentral_idx.size());
  for (size_t i = 0; i < noncentral_idx.size(); ++i)
    nc_part[i] = Int(static_cast<long>(w[static_cast<size_t>(noncentral_idx[i])]));
  auto k1 = linalg::solve_integer(lift_nc, nc_part);
  if (!k1) return std::nullopt;

  ExpTuple prod = g.id();
  for (size_t j = 0; j < lifts.size(); ++j) {
    if (!(*k1)[j].fits_slong_p()) return std::nullopt;
    prod = g.mul(prod, g.power(lifts[j], (*k1)[j].get_si()));
  }
  // the leftover is a purely central kernel element
  ExpTuple d = g.mul(g.inv(prod), w);
  for (int idx : noncentral_idx) {
    if (d[static_cast<size_t>(idx)] != 0) return std::nullopt;
  }
  linalg::IVec dv(static_cast<size_t>(g.rank));
  for (int i = 0; i < g.rank; ++i) dv[static_cast<size_t>(i)] = Int(static_cast<long>(d[static_cast<size_t>(i)]));
  auto k2 = linalg::solve_integer(central_mat, dv);
  if (!k2) return std::nullopt;

  std::vector<std::int64_t> out;
  out.reserve(lifts.size() + central.size());
  for (const auto& x : *k1) out.push_back(x.get_si());
  for (const auto& x : *k2) {
    if (!x.fits_slong_p()) return std::nullopt;
    out.push_back(x.get_si());
  }
  return out;
}

}  // namespace

InvertReport invertibility(const Group& g, const std::vector<std::vector<Element>>& a,
                           const Grading& gr) {
  const size_t n = a.size();
  // minimal level and the lexicographically least tuple attaining it
  std::optional<Rat> level;
  for (const auto& row : a)
    for (const auto& el : row)
      for (const auto& [e, c] : el.terms) {
        Rat l = gr.level(e);
        if (!level || l < *level) level = l;
      }
  if (!level) throw Error(errc::zero_matrix, "level decomposition of the zero matrix");
  std::optional<ExpTuple> shift;
  for (const auto& row : a)
    for (const auto& el : row)
      for (const auto& [e, c] : el.terms) {
        if (gr.level(e) == *level && (!shift || e < *shift)) shift = e;
      }
  ExpTuple shift_inv = g.inv(*shift);

  KernelIso iso = build_kernel_iso(g, gr);
  const int dim = iso.dim();
  const int lv = std::max(dim, 1);

  // leading matrix over Z[ker(phi)], rendered as Laurent in dim variables
  std::vector<std::vector<laurent::Laurent>> lead(n,
      std::vector<laurent::Laurent>(n, laurent::Laurent(lv)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : a[i][j].terms) {
        if (gr.level(e) != *level) continue;
        ExpTuple k = g.mul(e, shift_inv);
        auto coords = iso.coordinates(k);
        if (!coords) throw Error(errc::unsupported_kernel, "kernel coordinates failed");
        laurent::Exp exp(static_cast<size_t>(lv), 0);
        for (int t = 0; t < dim; ++t) exp[static_cast<size_t>(t)] = (*coords)[static_cast<size_t>(t)];
        lead[i][j] += laurent::monomial(lv, exp, c);
      }
    }

  laurent::Laurent det = laurent::determinant(lead);
  if (det.is_zero())
    return InvertReport{Invertibility::degenerate,
                        "leading matrix has a nonzero annihilator; test inconclusive"};
  if (!det.is_unit())
    return InvertReport{Invertibility::not_invertible,
                        "leading matrix is not invertible over the kernel ring"};
  return InvertReport{Invertibility::invertible, ""};
}

InvertReport invertibility(const Group& g, const Element& a, const Grading& gr) {
  return invertibility(g, std::vector<std::vector<Element>>{{a}}, gr);
}

}  // namespace novikit::pc
