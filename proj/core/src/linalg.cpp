#include "novikit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace novikit::linalg {

IMat identity(int n) {
  IMat u(static_cast<size_t>(n), IVec(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return u;
}

IMat multiply(const IMat& a, const IMat& b) {
  size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
  IMat out(m, IVec(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Smith smith_normal_form(IMat a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  IMat u = identity(static_cast<int>(m));

  auto row_sub = [&](size_t dst, size_t src, const Int& q) {
    for (size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
    for (size_t j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto col_sub = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
  };

  std::vector<Int> diag;
  size_t t = 0;
  while (t < m && t < n) {
    // locate a pivot of minimal absolute value
    bool found = false;
    size_t pi = t, pj = t;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];  // C++ truncation keeps |remainder| < |pivot|
        row_sub(i, t, q);
        if (a[i][t] != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_sub(j, t, q);
        if (a[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
    }
    // enforce divisibility d_t | a[i][j] for the rest of the block
    bool redo = false;
    for (size_t i = t + 1; i < m && !redo; ++i)
      for (size_t j = t + 1; j < n && !redo; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          // add row i to row t and restart the cleaning pass
          for (size_t k = 0; k < n; ++k) a[t][k] += a[i][k];
          for (size_t k = 0; k < m; ++k) u[t][k] += u[i][k];
          redo = true;
        }
      }
    if (redo) continue;
    if (a[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < m; ++j) u[t][j] = -u[t][j];
    }
    diag.push_back(a[t][t]);
    ++t;
  }
  return Smith{std::move(diag), std::move(u)};
}

Int determinantal_divisor(const IMat& a, int k) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  if (k <= 0 || k > std::min(m, n)) return 0;
  std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
  Int g = 0;

  auto minor_det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
    QMat q(rs.size(), QVec(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j)
        q[i][j] = Rat(a[static_cast<size_t>(rs[i])][static_cast<size_t>(cs[j])]);
    Rat d = determinant(std::move(q));
    return d.get_num();
  };

  // iterate over all k-subsets of rows and columns
  std::vector<int> rsel(static_cast<size_t>(k)), csel(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) rsel[static_cast<size_t>(i)] = i;
  while (true) {
    for (int i = 0; i < k; ++i) csel[static_cast<size_t>(i)] = i;
    while (true) {
      Int d = minor_det(rsel, csel);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      int p = k - 1;
      while (p >= 0 && csel[static_cast<size_t>(p)] == n - k + p) --p;
      if (p < 0) break;
      ++csel[static_cast<size_t>(p)];
      for (int q = p + 1; q < k; ++q) csel[static_cast<size_t>(q)] = csel[static_cast<size_t>(q - 1)] + 1;
    }
    int p = k - 1;
    while (p >= 0 && rsel[static_cast<size_t>(p)] == m - k + p) --p;
    if (p < 0) break;
    ++rsel[static_cast<size_t>(p)];
    for (int q = p + 1; q < k; ++q) rsel[static_cast<size_t>(q)] = rsel[static_cast<size_t>(q - 1)] + 1;
  }
  return g;
}

int rank(QMat a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  int r = 0;
  size_t col = 0;
  for (size_t row = 0; row < m && col < n; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[row], a[piv]);
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++r;
  }
  return r;
}

std::optional<QVec> solve(QMat a, QVec b) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[row], a[piv]);
    std::swap(b[row], b[piv]);
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (size_t i = row; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  QVec x(n, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) {
    size_t c = static_cast<size_t>(pivot_col[i]);
    x[c] = b[i] / a[i][c];
  }
  return x;
}

std::optional<QMat> inverse(QMat a) {
  const size_t n = a.size();
  QMat inv(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rat determinant(QMat a) {
  const size_t n = a.size();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[col], a[piv]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  det.canonicalize();
  return det;
}

ColReduction column_reduce(IMat a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  ColReduction out;
  out.v = identity(static_cast<int>(n));
  std::vector<bool> pivot(n, false);
  for (size_t r = 0; r < m; ++r) {
    // Euclidean elimination along row r over the non-pivot columns
    while (true) {
      size_t best = n;
      for (size_t j = 0; j < n; ++j) {
        if (pivot[j] || a[r][j] == 0) continue;
        if (best == n || cmp(abs(a[r][j]), abs(a[r][best])) < 0) best = j;
      }
      if (best == n) break;
      bool leftover = false;
      for (size_t j = 0; j < n; ++j) {
        if (j == best || pivot[j] || a[r][j] == 0) continue;
        Int q = a[r][j] / a[r][best];
        for (size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][best];
        for (size_t i = 0; i < n; ++i) out.v[i][j] -= q * out.v[i][best];
        if (a[r][j] != 0) leftover = true;
      }
      if (!leftover) {
        pivot[best] = true;
        break;
      }
    }
  }
  for (size_t j = 0; j < n; ++j) {
    bool zero = true;
    for (size_t i = 0; i < m && zero; ++i) zero = a[i][j] == 0;
    if (zero)
      out.zero_cols.push_back(j);
    else
      out.pivot_cols.push_back(j);
  }
  out.reduced = std::move(a);
  return out;
}

IMat integer_kernel(const IMat& a) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  if (n == 0) return {};
  ColReduction red = column_reduce(a);
  IMat basis;
  for (size_t j : red.zero_cols) {
    IVec col(n);
    for (size_t i = 0; i < n; ++i) col[i] = red.v[i][j];
    for (const auto& x : col) {
      if (x != 0) {
        if (x < 0)
          for (auto& y : col) y = -y;
        break;
      }
    }
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<IVec> solve_integer(const IMat& a, const IVec& b) {
  const size_t m = a.size();
  const size_t n = m == 0 ? 0 : a[0].size();
  QMat qa(m, QVec(n));
  QVec qb(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) qa[i][j] = Rat(a[i][j]);
    qb[i] = Rat(b[i]);
  }
  auto x = solve(std::move(qa), std::move(qb));
  if (!x) return std::nullopt;
  IVec out(n);
  for (size_t j = 0; j < n; ++j) {
    if ((*x)[j].get_den() != 1) return std::nullopt;
    out[j] = (*x)[j].get_num();
  }
  return out;
}

}  // namespace novikit::linalg
