#include "novikit/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace novikit::laurent {

Rat Phi::level(const Exp& e) const {
  assert(static_cast<int>(e.size()) == vars());
  Rat acc = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) acc += values[i] * Rat(static_cast<long>(e[i]));
  }
  acc.canonicalize();
  return acc;
}

bool Phi::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rat& v) { return v == 0; });
}

Phi Phi::negated() const {
  Phi out = *this;
  for (auto& v : out.values) v = -v;
  return out;
}

Phi Phi::ones(int n) {
  return Phi{std::vector<Rat>(static_cast<size_t>(n), Rat(1))};
}

bool Laurent::is_unit() const {
  if (terms.size() != 1) return false;
  const Int& c = terms.begin()->second;
  return c == 1 || c == -1;
}

bool Laurent::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() != 1) return false;
  const Exp& e = terms.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
}

Laurent constant(int vars, Int c) {
  Laurent p(vars);
  if (c != 0) p.terms.emplace(Exp(static_cast<size_t>(vars), 0), std::move(c));
  return p;
}

Laurent monomial(int vars, const Exp& e, Int c) {
  assert(static_cast<int>(e.size()) == vars);
  Laurent p(vars);
  if (c != 0) p.terms.emplace(e, std::move(c));
  return p;
}

Laurent variable(int vars, int i, std::int64_t power) {
  Exp e(static_cast<size_t>(vars), 0);
  e[static_cast<size_t>(i)] = power;
  return monomial(vars, e, 1);
}

Laurent& operator+=(Laurent& a, const Laurent& b) {
  assert(a.vars == b.vars);
  for (const auto& [e, c] : b.terms) {
    auto it = a.terms.find(e);
    if (it == a.terms.end()) {
      a.terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) a.terms.erase(it);
    }
  }
  return a;
}

Laurent& operator-=(Laurent& a, const Laurent& b) {
  assert(a.vars == b.vars);
  for (const auto& [e, c] : b.terms) {
    auto it = a.terms.find(e);
    if (it == a.terms.end()) {
      a.terms.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) a.terms.erase(it);
    }
  }
  return a;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  out += b;
  return out;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
  Laurent out = a;
  out -= b;
  return out;
}

Laurent operator-(const Laurent& a) {
  Laurent out(a.vars);
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
  return out;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  assert(a.vars == b.vars);
  Laurent out(a.vars);
  Exp e(static_cast<size_t>(a.vars));
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.terms.find(e);
      if (it == out.terms.end()) {
        Int c = ca * cb;
        if (c != 0) out.terms.emplace(e, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

Laurent operator*(const Laurent& a, const Int& c) {
  Laurent out(a.vars);
  if (c == 0) return out;
  for (const auto& [e, ca] : a.terms) out.terms.emplace(e, ca * c);
  return out;
}

Laurent shifted(const Laurent& p, const Exp& s) {
  assert(static_cast<int>(s.size()) == p.vars);
  Laurent out(p.vars);
  for (const auto& [e, c] : p.terms) {
    Exp ne = e;
    for (size_t i = 0; i < ne.size(); ++i) ne[i] += s[i];
    out.terms.emplace(std::move(ne), c);
  }
  return out;
}

std::optional<Rat> deg_phi(const Laurent& p, const Phi& phi) {
  if (p.is_zero()) return std::nullopt;
  return max_level(p, phi) - min_level(p, phi);
}

Rat min_level(const Laurent& p, const Phi& phi) {
  assert(!p.is_zero());
  bool first = true;
  Rat best;
  for (const auto& [e, c] : p.terms) {
    Rat l = phi.level(e);
    if (first || l < best) best = l;
    first = false;
  }
  return best;
}

Rat max_level(const Laurent& p, const Phi& phi) {
  assert(!p.is_zero());
  bool first = true;
  Rat best;
  for (const auto& [e, c] : p.terms) {
    Rat l = phi.level(e);
    if (first || l > best) best = l;
    first = false;
  }
  return best;
}

Laurent slice(const Laurent& p, const Phi& phi, const Rat& level) {
  Laurent out(p.vars);
  for (const auto& [e, c] : p.terms) {
    if (phi.level(e) == level) out.terms.emplace(e, c);
  }
  return out;
}

Laurent bottom_slice(const Laurent& p, const Phi& phi) {
  return slice(p, phi, min_level(p, phi));
}

Laurent top_slice(const Laurent& p, const Phi& phi) {
  return slice(p, phi, max_level(p, phi));
}

bool is_monic(const Laurent& p, const Phi& phi) {
  if (p.is_zero()) throw Error(errc::zero_polynomial, "monicness of 0 is undefined");
  return bottom_slice(p, phi).is_unit() && top_slice(p, phi).is_unit();
}

bool is_top_monic(const Laurent& p, const Phi& phi) {
  if (p.is_zero()) throw Error(errc::zero_polynomial, "monicness of 0 is undefined");
  return top_slice(p, phi).is_unit();
}

bool is_bottom_monic(const Laurent& p, const Phi& phi) {
  if (p.is_zero()) throw Error(errc::zero_polynomial, "monicness of 0 is undefined");
  return bottom_slice(p, phi).is_unit();
}

bool is_monic(const Laurent& p) { return is_monic(p, Phi::ones(p.vars)); }
bool is_top_monic(const Laurent& p) { return is_top_monic(p, Phi::ones(p.vars)); }

bool equal_up_to_unit(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.vars != b.vars || a.terms.size() != b.terms.size()) return false;
  // align the lexicographically least exponents
  const Exp& ea = a.terms.begin()->first;
  const Exp& eb = b.terms.begin()->first;
  Exp s(ea.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = ea[i] - eb[i];
  Laurent bs = shifted(b, s);
  return a == bs || a == -bs;
}

// per-variable minimum exponent over the support (Newton polytope corner)
static Exp support_min(const Laurent& p) {
  Exp m(static_cast<size_t>(p.vars), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    for (size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

static Exp negated(const Exp& e) {
  Exp out = e;
  for (auto& x : out) x = -x;
  return out;
}

std::optional<Laurent> try_divide(const Laurent& a, const Laurent& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return Laurent(a.vars);
  // strip monomial units so both operands are honest polynomials with
  // per-variable minimum exponent 0; the shifts are restored at the end
  Exp ma = support_min(a), mb = support_min(b);
  Laurent r = shifted(a, negated(ma));
  Laurent d = shifted(b, negated(mb));
  // lex-leading term of d (std::map keeps keys lex-sorted; rbegin is largest)
  const Exp& lde = d.terms.rbegin()->first;
  const Int& ldc = d.terms.rbegin()->second;
  Laurent q(a.vars);
  while (!r.is_zero()) {
    const Exp& lre = r.terms.rbegin()->first;
    const Int& lrc = r.terms.rbegin()->second;
    Exp diff(lre.size());
    for (size_t i = 0; i < diff.size(); ++i) {
      diff[i] = lre[i] - lde[i];
      if (diff[i] < 0) return std::nullopt;
    }
    if (lrc % ldc != 0) return std::nullopt;
    Int qc = lrc / ldc;
    q.terms.emplace(diff, qc);
    r -= shifted(d, diff) * qc;
  }
  Exp back(ma.size());
  for (size_t i = 0; i < back.size(); ++i) back[i] = ma[i] - mb[i];
  return shifted(q, back);
}

Laurent determinant(const std::vector<std::vector<Laurent>>& m) {
  const size_t n = m.size();
  if (n == 0) return constant(1, 1);
  const int vars = m[0][0].vars;
  for (const auto& row : m) assert(row.size() == n);
  if (n == 1) return m[0][0];

  // Bareiss fraction-free elimination; every division is exact in Z[Z^n]
  std::vector<std::vector<Laurent>> a = m;
  int sign = 1;
  Laurent prev = constant(vars, 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return Laurent(vars);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Laurent num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = try_divide(num, prev);
        assert(q.has_value());
        a[i][j] = std::move(*q);
      }
      a[i][k] = Laurent(vars);
    }
    prev = a[k][k];
  }
  Laurent det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::vector<std::vector<Laurent>> adjugate(const std::vector<std::vector<Laurent>>& m) {
  const size_t n = m.size();
  const int vars = n == 0 ? 1 : m[0][0].vars;
  std::vector<std::vector<Laurent>> adj(n, std::vector<Laurent>(n, Laurent(vars)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Laurent>> minor;
      minor.reserve(n - 1);
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Laurent> row;
        row.reserve(n - 1);
        for (size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Laurent cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = std::move(cof);  // transpose of the cofactor matrix
    }
  }
  return adj;
}

Rat eval(const Laurent& p, const std::vector<Rat>& point) {
  assert(static_cast<int>(point.size()) == p.vars);
  Rat acc = 0;
  for (const auto& [e, c] : p.terms) {
    Rat t(c);
    for (size_t i = 0; i < point.size(); ++i) {
      if (e[i] == 0) continue;
      Rat base = point[i];
      assert(base != 0);
      std::int64_t k = e[i];
      if (k < 0) {
        base = 1 / base;
        k = -k;
      }
      for (std::int64_t j = 0; j < k; ++j) t *= base;
    }
    acc += t;
  }
  acc.canonicalize();
  return acc;
}

Int content(const Laurent& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// --- univariate polynomial helpers (dense on shifted support) ---------------

namespace {

struct Poly {
  std::vector<Int> c;  // c[i] coefficient of t^i; trailing zeros trimmed

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

Poly to_poly(const Laurent& p) {
  Poly out;
  if (p.is_zero()) return out;
  std::int64_t lo = p.terms.begin()->first[0];
  std::int64_t hi = p.terms.rbegin()->first[0];
  out.c.assign(static_cast<size_t>(hi - lo + 1), Int(0));
  for (const auto& [e, coef] : p.terms) out.c[static_cast<size_t>(e[0] - lo)] = coef;
  return out;
}

Laurent from_poly(const Poly& p) {
  Laurent out(1);
  for (size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i] != 0) out.terms.emplace(Exp{static_cast<std::int64_t>(i)}, p.c[i]);
  }
  return out;
}

Int poly_content(const Poly& p) {
  Int g = 0;
  for (const auto& x : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Poly primitive(Poly p) {
  Int g = poly_content(p);
  if (g > 1) {
    for (auto& x : p.c) x /= g;
  }
  return p;
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod b
Poly prem(Poly a, const Poly& b) {
  const Int& lb = b.c.back();
  int db = b.deg();
  while (!a.zero() && a.deg() >= db) {
    Int la = a.c.back();
    int shift = a.deg() - db;
    for (auto& x : a.c) x *= lb;
    for (int i = 0; i <= db; ++i) {
      a.c[static_cast<size_t>(i + shift)] -= la * b.c[static_cast<size_t>(i)];
    }
    a.trim();
  }
  return a;
}

}  // namespace

Laurent gcd_univariate(const Laurent& a, const Laurent& b) {
  assert(a.vars == 1 && b.vars == 1);
  if (a.is_zero() && b.is_zero()) return Laurent(1);
  if (a.is_zero() || b.is_zero()) {
    const Laurent& p = a.is_zero() ? b : a;
    Laurent out = shifted(p, negated(support_min(p)));
    if (out.terms.begin()->second < 0) out = -out;
    return out;
  }
  Poly pa = to_poly(a), pb = to_poly(b);
  Int cont;
  mpz_gcd(cont.get_mpz_t(), poly_content(pa).get_mpz_t(), poly_content(pb).get_mpz_t());
  pa = primitive(std::move(pa));
  pb = primitive(std::move(pb));
  if (pa.deg() < pb.deg()) std::swap(pa, pb);
  while (!pb.zero()) {
    Poly r = primitive(prem(pa, pb));
    pa = std::move(pb);
    pb = std::move(r);
  }
  Laurent g = from_poly(pa) * cont;
  if (g.terms.begin()->second < 0) g = -g;
  return g;
}

// --- fractions ---------------------------------------------------------------

Fraction Fraction::of(Laurent n, Laurent d) {
  if (d.is_zero()) throw Error(errc::invalid, "fraction with zero denominator");
  assert(n.vars == d.vars);
  return Fraction{std::move(n), std::move(d)};
}

Fraction Fraction::one(int vars) {
  return Fraction{constant(vars, 1), constant(vars, 1)};
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction::of(a.num * b.num, a.den * b.den);
}

bool operator==(const Fraction& a, const Fraction& b) {
  return a.num * b.den == b.num * a.den;
}

Fraction reduced(const Fraction& f) {
  if (f.num.is_zero()) return Fraction::of(Laurent(f.num.vars), constant(f.den.vars, 1));
  Laurent num = f.num, den = f.den;
  if (num.vars == 1) {
    Laurent g = gcd_univariate(num, den);
    if (!g.is_unit()) {
      num = *try_divide(num, g);
      den = *try_divide(den, g);
    }
  } else {
    Int g;
    mpz_gcd(g.get_mpz_t(), content(num).get_mpz_t(), content(den).get_mpz_t());
    if (g > 1) {
      num = *try_divide(num, constant(num.vars, g));
      den = *try_divide(den, constant(den.vars, g));
    }
  }
  // clear the monomial content of the denominator
  Exp md = support_min(den);
  den = shifted(den, negated(md));
  num = shifted(num, negated(md));
  return Fraction{std::move(num), std::move(den)};
}

// lowest term in phi-order with lexicographic tie-break
static std::pair<Exp, Int> lowest_term(const Laurent& p, const Phi& phi) {
  assert(!p.is_zero());
  Laurent bottom = bottom_slice(p, phi);
  return {bottom.terms.begin()->first, bottom.terms.begin()->second};
}

Fraction normalized(const Fraction& f, const Phi& phi) {
  Fraction r = reduced(f);
  auto [e, c] = lowest_term(r.den, phi);
  // shift the common unit so the denominator's lowest term sits at exponent 0
  r.num = shifted(r.num, negated(e));
  r.den = shifted(r.den, negated(e));
  if (c < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

std::optional<Rat> deg_phi(const Fraction& f, const Phi& phi) {
  if (f.num.is_zero()) return std::nullopt;
  return *deg_phi(f.num, phi) - *deg_phi(f.den, phi);
}

bool monic_fraction(const Fraction& f, const Phi& phi) {
  if (f.is_zero()) throw Error(errc::zero_value, "monicness of the zero fraction is undefined");
  Fraction r = reduced(f);
  return is_monic(r.num, phi) && is_monic(r.den, phi);
}

bool monic_fraction(const Fraction& f) {
  return monic_fraction(f, Phi::ones(f.num.vars));
}

// --- torsion values ---------------------------------------------------------

TorsionValue normalized(const TorsionValue& t, const Phi& phi) {
  if (t.is_zero()) return TorsionValue::zero();
  Fraction r = normalized(*t.value, phi);
  // the value is only defined up to +-monomial: pin the numerator as well
  auto [e, c] = lowest_term(r.num, phi);
  r.num = shifted(r.num, negated(e));
  if (c < 0) r.num = -r.num;
  return TorsionValue::of(std::move(r));
}

bool equal_up_to_unit(const TorsionValue& a, const TorsionValue& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  // cross-multiplied equality modulo +-monomial
  return equal_up_to_unit(a.value->num * b.value->den, b.value->num * a.value->den);
}

std::optional<Rat> deg_phi(const TorsionValue& t, const Phi& phi) {
  if (t.is_zero()) return std::nullopt;
  return deg_phi(*t.value, phi);
}

}  // namespace novikit::laurent
