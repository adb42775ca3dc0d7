#include "novikit/novikov.hpp"

#include <algorithm>
#include <cassert>

namespace novikit::novikov {

using laurent::deg_phi;
using laurent::determinant;
using laurent::max_level;
using laurent::min_level;
using laurent::monomial;
using laurent::shifted;
using laurent::slice;

namespace {

Laurent truncated(const Laurent& p, const Phi& phi, const Rat& horizon) {
  Laurent out(p.vars);
  for (const auto& [e, c] : p.terms) {
    if (phi.level(e) < horizon) out.terms.emplace(e, c);
  }
  return out;
}

Exp negated(const Exp& e) {
  Exp out = e;
  for (auto& x : out) x = -x;
  return out;
}

Matrix identity_matrix(size_t n, int vars) {
  Matrix id(n, std::vector<Laurent>(n, Laurent(vars)));
  for (size_t i = 0; i < n; ++i) id[i][i] = laurent::constant(vars, 1);
  return id;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  int vars = a.empty() ? 1 : a[0][0].vars;
  Matrix out(m, std::vector<Laurent>(n, Laurent(vars)));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[l][j].is_zero()) continue;
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

bool mat_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::optional<Rat> mat_min_level(const Matrix& a, const Phi& phi) {
  std::optional<Rat> best;
  for (const auto& row : a)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      Rat l = min_level(e, phi);
      if (!best || l < *best) best = l;
    }
  return best;
}

}  // namespace

Series make_series(const Laurent& p, const Phi& phi, Rat horizon) {
  return Series{truncated(p, phi, horizon), std::move(horizon), phi};
}

Series add(const Series& a, const Series& b) {
  Rat h = std::min(a.horizon, b.horizon);
  return Series{truncated(a.known + b.known, a.phi, h), h, a.phi};
}

Series sub(const Series& a, const Series& b) {
  Rat h = std::min(a.horizon, b.horizon);
  return Series{truncated(a.known - b.known, a.phi, h), h, a.phi};
}

Series mul(const Series& a, const Series& b) {
  // unknown tails enter at min_level(a) + b.horizon, a.horizon + min_level(b)
  // and a.horizon + b.horizon; the result is exact strictly below all three
  Rat h = a.horizon + b.horizon;
  if (!a.known.is_zero()) h = std::min(h, Rat(min_level(a.known, a.phi) + b.horizon));
  if (!b.known.is_zero()) h = std::min(h, Rat(a.horizon + min_level(b.known, b.phi)));
  return Series{truncated(a.known * b.known, a.phi, h), h, a.phi};
}

bool congruent(const Series& a, const Series& b) {
  Rat h = std::min(a.horizon, b.horizon);
  Laurent diff = a.known - b.known;
  for (const auto& [e, c] : diff.terms) {
    if (a.phi.level(e) < h) return false;
  }
  return true;
}

SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b) {
  size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  SeriesMatrix out(m);
  for (size_t i = 0; i < m; ++i) {
    out[i].reserve(n);
    for (size_t j = 0; j < n; ++j) {
      Series acc = mul(a[i][0], b[0][j]);
      for (size_t l = 1; l < k; ++l) acc = add(acc, mul(a[i][l], b[l][j]));
      out[i].push_back(std::move(acc));
    }
  }
  return out;
}

SeriesMatrix series_matrix(const Matrix& a, const Phi& phi, Rat horizon) {
  SeriesMatrix out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& e : a[i]) out[i].push_back(make_series(e, phi, horizon));
  }
  return out;
}

bool congruent_identity(const SeriesMatrix& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      const Series& s = a[i][j];
      Laurent want = i == j ? laurent::constant(s.known.vars, 1) : Laurent(s.known.vars);
      if (!congruent(s, Series{want, s.horizon, s.phi})) return false;
    }
  return true;
}

LevelDecomposition decompose(const Matrix& a, const Phi& phi) {
  auto level = mat_min_level(a, phi);
  if (!level) throw Error(errc::zero_matrix, "level decomposition of the zero matrix");
  const int vars = a[0][0].vars;

  Matrix slices(a.size());
  std::optional<Exp> shift;
  for (size_t i = 0; i < a.size(); ++i) {
    slices[i].reserve(a[i].size());
    for (const auto& p : a[i]) {
      Laurent s = p.is_zero() ? Laurent(vars) : slice(p, phi, *level);
      if (!s.is_zero()) {
        const Exp& least = s.terms.begin()->first;
        if (!shift || least < *shift) shift = least;
      }
      slices[i].push_back(std::move(s));
    }
  }
  Matrix leading(a.size());
  Matrix tail(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    leading[i].reserve(a[i].size());
    tail[i].reserve(a[i].size());
    for (size_t j = 0; j < a[i].size(); ++j) {
      leading[i].push_back(shifted(slices[i][j], negated(*shift)));
      tail[i].push_back(a[i][j] - slices[i][j]);
    }
  }
  return LevelDecomposition{std::move(leading), *shift, *level, std::move(tail)};
}

LevelDecomposition decompose(const Laurent& p, const Phi& phi) {
  return decompose(Matrix{{p}}, phi);
}

bool laurent_invertible(const Laurent& p, const Phi& phi, int direction) {
  if (p.is_zero()) throw Error(errc::zero_polynomial, "invertibility of 0");
  return direction >= 0 ? laurent::is_bottom_monic(p, phi) : laurent::is_top_monic(p, phi);
}

std::optional<Series> invert_scalar(const Laurent& p, const Phi& phi, int direction,
                                    Rat horizon_levels) {
  InvertResult r = invert_matrix(Matrix{{p}}, phi, std::move(horizon_levels), direction);
  if (r.status != InvertStatus::invertible) return std::nullopt;
  return r.inverse[0][0];
}

InvertResult invert_matrix(const Matrix& a, const Phi& phi_in, Rat horizon_levels,
                           int direction) {
  const Phi phi = direction >= 0 ? phi_in : phi_in.negated();
  const size_t n = a.size();
  const int vars = n == 0 ? 1 : a[0][0].vars;

  LevelDecomposition dec = decompose(a, phi);
  Laurent det = determinant(dec.leading);
  if (det.is_zero()) {
    return InvertResult{InvertStatus::degenerate, {},
                        "leading matrix has a nonzero annihilator; test inconclusive"};
  }
  if (!det.is_unit()) {
    return InvertResult{InvertStatus::not_invertible, {},
                        "leading matrix is not invertible over the kernel ring"};
  }

  // inverse of the leading part: adj(L) * det^-1, then the monomial shift
  Matrix m0 = laurent::adjugate(dec.leading);
  const Exp& de = det.terms.begin()->first;
  const bool neg = det.terms.begin()->second < 0;
  Exp back = negated(de);
  for (size_t i = 0; i < back.size(); ++i) back[i] -= dec.shift[i];
  for (auto& row : m0)
    for (auto& e : row) {
      e = shifted(e, back);
      if (neg) e = -e;
    }

  // A * m0 = id + E with E of strictly positive level
  Matrix e = mat_sub(mat_mul(a, m0), identity_matrix(n, vars));
  auto e_min = mat_min_level(e, phi);
  assert(!e_min || *e_min > 0);

  Rat result_min = *mat_min_level(m0, phi);
  Rat horizon_abs = result_min + horizon_levels;

  // geometric series: A^-1 = m0 * sum_k (-E)^k, truncated entrywise
  Matrix sum = identity_matrix(n, vars);
  Matrix power = identity_matrix(n, vars);
  while (true) {
    power = mat_mul(power, e);
    for (auto& row : power)
      for (auto& p : row) {
        p = -truncated(p, phi, horizon_levels);  // relative levels of the sum
      }
    if (mat_zero(power)) break;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) sum[i][j] += power[i][j];
  }
  Matrix inv = mat_mul(m0, sum);

  SeriesMatrix out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i].reserve(n);
    for (size_t j = 0; j < n; ++j) {
      out[i].push_back(Series{truncated(inv[i][j], phi, horizon_abs), horizon_abs, phi});
    }
  }
  return InvertResult{InvertStatus::invertible, std::move(out), ""};
}

// --- based complexes ----------------------------------------------------------

void validate(const BasedComplex& c, const Phi& phi, int direction) {
  const size_t n = c.d1.size();
  if (n == 0) throw Error(errc::bad_shape, "empty complex");
  const size_t cols = c.closed() ? n : n - 1;
  if (c.d2.size() != n) throw Error(errc::bad_shape, "d2 must have one row per d1 entry");
  for (const auto& row : c.d2) {
    if (row.size() != cols) throw Error(errc::bad_shape, "d2 has inconsistent columns");
  }
  if (c.closed() && (c.d3->size() != n || (*c.d3)[0].size() != 1))
    throw Error(errc::bad_shape, "d3 must be an n x 1 column");

  // composites vanish
  for (size_t j = 0; j < cols; ++j) {
    Laurent acc(c.vars);
    for (size_t i = 0; i < n; ++i) acc += c.d1[i] * c.d2[i][j];
    if (!acc.is_zero()) throw Error(errc::bad_shape, "d1 * d2 != 0");
  }
  if (c.closed()) {
    for (size_t i = 0; i < n; ++i) {
      Laurent acc(c.vars);
      for (size_t j = 0; j < n; ++j) acc += c.d2[i][j] * (*c.d3)[j][0];
      if (!acc.is_zero()) throw Error(errc::bad_shape, "d2 * d3 != 0");
    }
  }

  // corner units
  if (c.d1[0].is_zero() || !laurent_invertible(c.d1[0], phi, direction))
    throw Error(errc::bad_shape, "corner entry of d1 is not a unit of the completion");
  if (c.closed()) {
    const Laurent& c1 = (*c.d3)[0][0];
    if (c1.is_zero() || !laurent_invertible(c1, phi, direction))
      throw Error(errc::bad_shape, "corner entry of d3 is not a unit of the completion");
  }
}

Matrix core_matrix(const BasedComplex& c) {
  const size_t n = c.d1.size();
  const size_t col0 = c.closed() ? 1 : 0;
  Matrix core;
  core.reserve(n - 1);
  for (size_t i = 1; i < n; ++i) {
    std::vector<Laurent> row;
    for (size_t j = col0; j < c.d2[i].size(); ++j) row.push_back(c.d2[i][j]);
    core.push_back(std::move(row));
  }
  return core;
}

ClearedForm cleared_form(const BasedComplex& c, const Phi& phi, int direction,
                         Rat horizon_levels) {
  validate(c, phi, direction);
  const size_t n = c.d1.size();
  const Phi phi_eff = direction >= 0 ? phi : phi.negated();

  auto a1_inv = invert_scalar(c.d1[0], phi, direction, horizon_levels);
  assert(a1_inv);
  Rat h = a1_inv->horizon;

  auto ser = [&](const Laurent& p) { return make_series(p, phi_eff, h); };
  auto zero = [&]() { return make_series(Laurent(c.vars), phi_eff, h); };
  auto one = [&]() { return make_series(laurent::constant(c.vars, 1), phi_eff, h); };

  ClearedForm out;
  // Q = id except the first row (1, -a1^-1 a_2, ..., -a1^-1 a_n)
  out.q.assign(n, {});
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j)
        out.q[i].push_back(one());
      else if (i == 0)
        out.q[i].push_back(sub(zero(), mul(*a1_inv, ser(c.d1[j]))));
      else
        out.q[i].push_back(zero());
    }
  }
  SeriesMatrix d1s(1);
  for (size_t j = 0; j < n; ++j) d1s[0].push_back(ser(c.d1[j]));
  out.d1_q = mul(d1s, out.q);

  if (c.closed()) {
    auto c1_inv = invert_scalar((*c.d3)[0][0], phi, direction, horizon_levels);
    assert(c1_inv);
    // P^-1 = id except the first column (1, -c_2 c_1^-1, ...)^t
    SeriesMatrix pinv(n);
    out.p.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j) {
          out.p[i].push_back(one());
          pinv[i].push_back(one());
        } else if (j == 0) {
          Series f = mul(ser((*c.d3)[i][0]), *c1_inv);
          pinv[i].push_back(sub(zero(), f));
          out.p[i].push_back(std::move(f));
        } else {
          out.p[i].push_back(zero());
          pinv[i].push_back(zero());
        }
      }
    }
    SeriesMatrix d3s(n);
    for (size_t i = 0; i < n; ++i) d3s[i].push_back(ser((*c.d3)[i][0]));
    out.pinv_d3 = mul(pinv, d3s);
  }
  return out;
}

bool acyclicity_test(const BasedComplex& c, const Phi& phi, int direction) {
  // conjugating by the clearing matrices isolates the corners and leaves the
  // core block untouched; acyclicity then reduces to the core determinant
  ClearedForm cleared = cleared_form(c, phi, direction);
  for (size_t j = 1; j < cleared.d1_q[0].size(); ++j) {
    assert(congruent(cleared.d1_q[0][j],
                     Series{Laurent(c.vars), cleared.d1_q[0][j].horizon, cleared.d1_q[0][j].phi}));
  }
  Matrix core = core_matrix(c);
  if (core.empty()) return true;
  Laurent det = determinant(core);
  if (det.is_zero()) return false;
  return laurent_invertible(det, phi, direction);
}

}  // namespace novikit::novikov
