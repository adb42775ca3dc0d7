#include "novikit/surfaces.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace novikit::surfaces {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
  }
};

}  // namespace

void validate(const CutGraph& g) {
  if (g.regions <= 0) throw Error(errc::invalid, "cut graph needs at least one region");
  for (const auto& e : g.edges) {
    if (e.from < 0 || e.from >= g.regions || e.to < 0 || e.to >= g.regions)
      throw Error(errc::invalid, "edge endpoint out of range");
    if (e.chi < 0) throw Error(errc::invalid, "complexity chi_- must be nonnegative");
    if (static_cast<int>(e.h2.size()) != g.h2rank)
      throw Error(errc::invalid, "homology class rank mismatch");
  }
  // per-region null-homology: outgoing classes minus incoming classes vanish
  for (int r = 0; r < g.regions; ++r) {
    std::vector<std::int64_t> acc(static_cast<size_t>(g.h2rank), 0);
    for (const auto& e : g.edges) {
      for (int k = 0; k < g.h2rank; ++k) {
        if (e.from == r) acc[static_cast<size_t>(k)] += e.h2[static_cast<size_t>(k)];
        if (e.to == r) acc[static_cast<size_t>(k)] -= e.h2[static_cast<size_t>(k)];
      }
    }
    if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; }))
      throw Error(errc::invalid,
                  "region " + std::to_string(r) + " has a non-null-homologous boundary");
  }
  // connectivity
  UnionFind uf(g.regions);
  for (const auto& e : g.edges) uf.unite(e.from, e.to);
  for (int r = 1; r < g.regions; ++r) {
    if (uf.find(r) != uf.find(0)) throw Error(errc::invalid, "cut graph is disconnected");
  }
}

std::int64_t Weight::total() const {
  std::int64_t t = 0;
  for (auto x : w) t += x;
  return t;
}

int Weight::support_size() const {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](std::int64_t x) { return x != 0; }));
}

int complement_components(const CutGraph& g, const Weight& w) {
  UnionFind uf(g.regions);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (w.w[i] == 0) uf.unite(g.edges[i].from, g.edges[i].to);
  }
  int components = 0;
  for (int r = 0; r < g.regions; ++r) {
    if (uf.find(r) == r) ++components;
  }
  return components;
}

std::vector<std::int64_t> weighted_class(const CutGraph& g, const Weight& w) {
  std::vector<std::int64_t> acc(static_cast<size_t>(g.h2rank), 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    for (int k = 0; k < g.h2rank; ++k)
      acc[static_cast<size_t>(k)] += w.w[i] * g.edges[i].h2[static_cast<size_t>(k)];
  }
  return acc;
}

std::int64_t weighted_chi(const CutGraph& g, const Weight& w) {
  std::int64_t acc = 0;
  for (size_t i = 0; i < g.edges.size(); ++i) acc += w.w[i] * g.edges[i].chi;
  return acc;
}

WeightReport reduce_weights(const CutGraph& g, Weight w0, bool relax) {
  validate(g);
  if (w0.w.size() != g.edges.size())
    throw Error(errc::invalid, "weight needs one entry per edge");
  for (auto x : w0.w) {
    if (x < 0) throw Error(errc::invalid, "weights are nonnegative");
  }

  const auto class0 = weighted_class(g, w0);
  const auto chi0 = weighted_chi(g, w0);
  const bool start_connected = complement_components(g, w0) == 1;

  WeightReport rep;
  rep.chi_start = chi0;
  Weight w = std::move(w0);

  while (complement_components(g, w) > 1) {
    // component of the weight-zero graph containing the smallest region index
    UnionFind uf(g.regions);
    for (size_t i = 0; i < g.edges.size(); ++i) {
      if (w.w[i] == 0) uf.unite(g.edges[i].from, g.edges[i].to);
    }
    const int root = uf.find(0);
    auto in_component = [&](int r) { return uf.find(r) == root; };

    // boundary edges by orientation; edges inside the component cancel
    std::vector<size_t> plus, minus;
    for (size_t i = 0; i < g.edges.size(); ++i) {
      if (w.w[i] == 0) continue;
      bool from_in = in_component(g.edges[i].from);
      bool to_in = in_component(g.edges[i].to);
      if (from_in && !to_in) plus.push_back(i);
      if (to_in && !from_in) minus.push_back(i);
    }
    if (plus.empty() || minus.empty())
      throw Error(errc::empty_side,
                  "region " + std::to_string(root) +
                      ": one orientation side of the boundary is empty (a null-homologous "
                      "subcollection)");

    std::int64_t chi_plus = 0, chi_minus = 0;
    for (size_t i : plus) chi_plus += g.edges[i].chi;
    for (size_t i : minus) chi_minus += g.edges[i].chi;

    if (chi_plus != chi_minus) {
      if (!relax)
        throw Error(errc::strict_inequality_branch,
                    "region " + std::to_string(root) +
                        ": strict complexity inequality; the input weight is not "
                        "norm-minimizing");
      // complexity-decreasing move: drop the heavier side by one round
      const auto& heavy = chi_plus > chi_minus ? plus : minus;
      const auto& light = chi_plus > chi_minus ? minus : plus;
      for (size_t i : heavy) w.w[i] -= 1;
      for (size_t i : light) w.w[i] += 1;
      ++rep.iterations;
      continue;
    }

    // minimal weight among boundary edges, smallest index on ties
    size_t imin = plus[0];
    bool imin_plus = true;
    for (size_t i : plus) {
      if (w.w[i] < w.w[imin] || (w.w[i] == w.w[imin] && i < imin)) {
        imin = i;
        imin_plus = true;
      }
    }
    for (size_t i : minus) {
      if (w.w[i] < w.w[imin] || (w.w[i] == w.w[imin] && i < imin)) {
        imin = i;
        imin_plus = false;
      }
    }
    const std::int64_t m = w.w[imin];
    const auto& same = imin_plus ? plus : minus;
    const auto& other = imin_plus ? minus : plus;
    const int support_before = w.support_size();
    for (size_t i : same) w.w[i] -= m;
    for (size_t i : other) w.w[i] += m;
    ++rep.iterations;

    assert(weighted_class(g, w) == class0);
    assert(weighted_chi(g, w) == chi0);
    assert(w.support_size() < support_before);
    (void)support_before;
  }

  rep.class_preserved = weighted_class(g, w) == class0;
  rep.chi_final = weighted_chi(g, w);
  rep.chi_preserved = rep.chi_final == chi0;
  rep.complement_connected = complement_components(g, w) == 1;
  rep.total_ge_two = start_connected || w.total() > 1;
  rep.final_weight = std::move(w);
  return rep;
}

ObstructionReport connectedness_obstruction(const CutGraph& g, const Weight& w0,
                                            bool phi_primitive, bool tau_nonzero) {
  ObstructionReport out;
  if (complement_components(g, w0) == 1) {
    out.verdict = Obstruction::no_obstruction;
    out.detail = "complement already connected; nothing to reduce";
    out.reduction.final_weight = w0;
    out.reduction.complement_connected = true;
    return out;
  }
  out.reduction = reduce_weights(g, w0);
  if (!tau_nonzero) {
    out.verdict = Obstruction::consistent;
    out.detail = "torsion vanishes; no concentration forced";
    return out;
  }
  const auto& v = out.reduction.final_weight;
  std::vector<size_t> support;
  for (size_t i = 0; i < v.w.size(); ++i) {
    if (v.w[i] != 0) support.push_back(i);
  }
  if (support.size() == 1) {
    std::int64_t n = v.w[support[0]];
    if (n > 1 && phi_primitive) {
      out.verdict = Obstruction::contradiction;
      out.detail = "class equals " + std::to_string(n) +
                   " times a component class; a primitive class cannot be divisible";
    } else {
      out.verdict = Obstruction::consistent;
      out.detail = n > 1 ? "class divisible by " + std::to_string(n) +
                               ", consistent with a non-primitive class"
                         : "weight concentrated with multiplicity one";
    }
  } else {
    // nonzero torsion forces concentration on a single component
    out.verdict = Obstruction::contradiction;
    out.detail = "connected complement with several weighted components cannot carry "
                 "nonzero torsion";
  }
  return out;
}

}  // namespace novikit::surfaces
