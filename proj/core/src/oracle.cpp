#include "novikit/oracle.hpp"

#include <algorithm>
#include <map>

#include "novikit/linalg.hpp"

namespace novikit::oracle {

using laurent::Laurent;

Verdict matrix_invertible(const std::vector<std::vector<Laurent>>& a, int direction,
                          int horizon_levels) {
  const size_t n = a.size();
  if (n == 0) return Verdict::invertible_to_horizon;

  // layer the matrix by exponent: A = sum_k A_k t^(c+k), mirrored for -1
  std::map<std::int64_t, linalg::QMat> layers;
  bool nonzero = false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : a[i][j].terms) {
        nonzero = true;
        std::int64_t k = direction >= 0 ? e[0] : -e[0];
        auto [it, fresh] = layers.try_emplace(
            k, linalg::QMat(n, linalg::QVec(n, Rat(0))));
        it->second[i][j] = Rat(c);
      }
    }
  if (!nonzero) return Verdict::not_invertible;

  const std::int64_t base = layers.begin()->first;
  auto inv0 = linalg::inverse(layers.at(base));
  if (!inv0) return Verdict::degenerate;  // singular leading layer: inconclusive

  // X = t^{-base} * sum_k Y_k t^k with Y_0 = A_0^-1 and
  // Y_k = -A_0^-1 * sum_{j>=1} A_j Y_{k-j}; invertible over Z iff integral
  auto integral = [](const linalg::QMat& m) {
    for (const auto& row : m)
      for (const auto& x : row)
        if (x.get_den() != 1) return false;
    return true;
  };
  std::vector<linalg::QMat> y;
  y.push_back(*inv0);
  if (!integral(y[0])) return Verdict::not_invertible;
  for (int k = 1; k <= horizon_levels; ++k) {
    linalg::QMat acc(n, linalg::QVec(n, Rat(0)));
    bool any = false;
    for (const auto& [off, layer] : layers) {
      std::int64_t j = off - base;
      if (j < 1 || j > k) continue;
      const auto& yk = y[static_cast<size_t>(k - j)];
      for (size_t r = 0; r < n; ++r)
        for (size_t m = 0; m < n; ++m) {
          if (layer[r][m] == 0) continue;
          for (size_t c = 0; c < n; ++c) acc[r][c] += layer[r][m] * yk[m][c];
          any = true;
        }
    }
    linalg::QMat yk(n, linalg::QVec(n, Rat(0)));
    if (any) {
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
          Rat s = 0;
          for (size_t m = 0; m < n; ++m) s += (*inv0)[r][m] * acc[m][c];
          s.canonicalize();
          yk[r][c] = -s;
        }
    }
    if (!integral(yk)) return Verdict::not_invertible;
    y.push_back(std::move(yk));
  }
  return Verdict::invertible_to_horizon;
}

Verdict poly_invertible(const Laurent& p, int direction, int horizon_levels) {
  return matrix_invertible({{p}}, direction, horizon_levels);
}

}  // namespace novikit::oracle
