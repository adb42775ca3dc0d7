#include "novikit/hnn.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace novikit::hnn {

void validate(const HnnData& h) {
  if (h.assoc.size() != h.images.size())
    throw Error(errc::invalid, "assoc and images must have matching counts");
  const int n = h.base.ngens();
  for (const auto& w : h.assoc) {
    if (w.max_generator() >= n)
      throw Error(errc::invalid, "assoc word references an undeclared base generator");
  }
  for (const auto& w : h.images) {
    if (w.max_generator() >= n)
      throw Error(errc::invalid, "image word references an undeclared base generator");
  }
}

bool SubgroupGraph::complete() const {
  for (int v = 0; v < vertices(); ++v) {
    for (int g = 0; g < ngens(); ++g) {
      if (out[static_cast<size_t>(v)][static_cast<size_t>(g)] < 0 ||
          in[static_cast<size_t>(v)][static_cast<size_t>(g)] < 0)
        return false;
    }
  }
  return true;
}

std::optional<long long> SubgroupGraph::index() const {
  if (!complete()) return std::nullopt;
  return vertices();
}

bool SubgroupGraph::is_rose() const {
  if (vertices() != 1) return false;
  for (int g = 0; g < ngens(); ++g) {
    if (out[0][static_cast<size_t>(g)] != 0) return false;
  }
  return true;
}

namespace {

struct RawEdge {
  int tail, gen, head;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the basepoint's class at the smallest id
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

SubgroupGraph canonicalize(int ngens, const std::vector<RawEdge>& edges, int nvertices,
                           int base) {
  // adjacency on raw ids
  std::vector<std::vector<int>> out(static_cast<size_t>(nvertices),
                                    std::vector<int>(static_cast<size_t>(ngens), -1));
  std::vector<std::vector<int>> in(static_cast<size_t>(nvertices),
                                   std::vector<int>(static_cast<size_t>(ngens), -1));
  for (const auto& e : edges) {
    out[static_cast<size_t>(e.tail)][static_cast<size_t>(e.gen)] = e.head;
    in[static_cast<size_t>(e.head)][static_cast<size_t>(e.gen)] = e.tail;
  }
  // basepoint-first BFS relabeling, out-edges before in-edges, labels ascending
  std::vector<int> label(static_cast<size_t>(nvertices), -1);
  std::deque<int> queue{base};
  label[static_cast<size_t>(base)] = 0;
  int next = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int g = 0; g < ngens; ++g) {
      for (int w : {out[static_cast<size_t>(v)][static_cast<size_t>(g)],
                    in[static_cast<size_t>(v)][static_cast<size_t>(g)]}) {
        if (w >= 0 && label[static_cast<size_t>(w)] < 0) {
          label[static_cast<size_t>(w)] = next++;
          queue.push_back(w);
        }
      }
    }
  }
  SubgroupGraph g;
  g.out.assign(static_cast<size_t>(next), std::vector<int>(static_cast<size_t>(ngens), -1));
  g.in.assign(static_cast<size_t>(next), std::vector<int>(static_cast<size_t>(ngens), -1));
  for (const auto& e : edges) {
    int t = label[static_cast<size_t>(e.tail)];
    int h = label[static_cast<size_t>(e.head)];
    if (t < 0 || h < 0) continue;  // unreachable (pruned) component
    g.out[static_cast<size_t>(t)][static_cast<size_t>(e.gen)] = h;
    g.in[static_cast<size_t>(h)][static_cast<size_t>(e.gen)] = t;
  }
  return g;
}

}  // namespace

SubgroupGraph fold(int ngens, const std::vector<Word>& subgroup_gens) {
  // wedge of subdivided loops at the basepoint
  std::vector<RawEdge> edges;
  int nvertices = 1;
  for (const auto& w : subgroup_gens) {
    auto letters = w.letters();
    if (letters.empty()) continue;
    int cur = 0;
    for (size_t i = 0; i < letters.size(); ++i) {
      int nxt = (i + 1 == letters.size()) ? 0 : nvertices++;
      auto [g, e] = letters[i];
      if (e == 1)
        edges.push_back({cur, g, nxt});
      else
        edges.push_back({nxt, g, cur});
      cur = nxt;
    }
  }

  // fold: identify heads of equal-labeled edges with a common tail, and tails
  // of equal-labeled edges with a common head, until stable
  UnionFind uf(static_cast<size_t>(nvertices));
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const auto& e : edges) {
      int t = uf.find(e.tail), h = uf.find(e.head);
      auto [it_o, new_o] = out_seen.try_emplace({t, e.gen}, h);
      if (!new_o && uf.find(it_o->second) != h) {
        uf.unite(it_o->second, h);
        changed = true;
      }
      auto [it_i, new_i] = in_seen.try_emplace({h, e.gen}, t);
      if (!new_i && uf.find(it_i->second) != t) {
        uf.unite(it_i->second, t);
        changed = true;
      }
    }
  }
  // rebuild on class representatives, deduplicating parallel edges
  std::map<int, int> compact;
  auto id_of = [&](int v) {
    int r = uf.find(v);
    auto [it, fresh] = compact.try_emplace(r, static_cast<int>(compact.size()));
    return it->second;
  };
  int base = id_of(uf.find(0));
  std::set<std::tuple<int, int, int>> dedup;
  std::vector<RawEdge> folded;
  for (const auto& e : edges) {
    int t = id_of(e.tail), h = id_of(e.head);
    if (dedup.insert({t, e.gen, h}).second) folded.push_back({t, e.gen, h});
  }
  int total = static_cast<int>(compact.size());

  // prune hanging trees: non-base vertices of degree <= 1 go
  std::vector<bool> alive(static_cast<size_t>(total), true);
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> degree(static_cast<size_t>(total), 0);
    for (const auto& e : folded) {
      if (!alive[static_cast<size_t>(e.tail)] || !alive[static_cast<size_t>(e.head)]) continue;
      ++degree[static_cast<size_t>(e.tail)];
      ++degree[static_cast<size_t>(e.head)];
    }
    for (int v = 0; v < total; ++v) {
      if (v != base && alive[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] <= 1) {
        alive[static_cast<size_t>(v)] = false;
        pruned = true;
      }
    }
    if (pruned) {
      std::vector<RawEdge> kept;
      for (const auto& e : folded) {
        if (alive[static_cast<size_t>(e.tail)] && alive[static_cast<size_t>(e.head)])
          kept.push_back(e);
      }
      folded = std::move(kept);
    }
  }
  return canonicalize(ngens, folded, total, base);
}

bool graph_accepts(const SubgroupGraph& g, const Word& w) {
  int cur = 0;
  for (auto [gen, e] : w.letters()) {
    int nxt = e == 1 ? g.out[static_cast<size_t>(cur)][static_cast<size_t>(gen)]
                     : g.in[static_cast<size_t>(cur)][static_cast<size_t>(gen)];
    if (nxt < 0) return false;
    cur = nxt;
  }
  return cur == 0;
}

Ascending is_ascending_free_base(const HnnData& h) {
  validate(h);
  if (!h.base.relators.empty()) return Ascending::unknown;
  SubgroupGraph g = fold(h.base.ngens(), h.assoc);
  return g.is_rose() ? Ascending::ascending : Ascending::not_ascending;
}

TruncatedCosetAction build_truncated_action(const HnnData& h, int depth) {
  validate(h);
  if (!h.base.relators.empty())
    throw Error(errc::invalid, "coset enumeration needs a free base");
  SubgroupGraph g = fold(h.base.ngens(), h.assoc);
  const int ngens = h.base.ngens();

  std::vector<std::vector<int>> out = g.out, in = g.in;
  std::vector<int> dist(out.size(), 0);  // folded-core vertices sit at depth 0

  // Schreier extension: missing transitions open fresh cosets, breadth-first,
  // until every vertex within the depth bound is complete
  std::deque<int> queue;
  for (int v = 0; v < static_cast<int>(out.size()); ++v) queue.push_back(v);
  bool truncated = false;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int gen = 0; gen < ngens; ++gen) {
      for (int dir = 0; dir < 2; ++dir) {
        auto& fwd = dir == 0 ? out : in;
        auto& bwd = dir == 0 ? in : out;
        if (fwd[static_cast<size_t>(v)][static_cast<size_t>(gen)] >= 0) continue;
        if (dist[static_cast<size_t>(v)] >= depth) {
          truncated = true;
          continue;
        }
        int w = static_cast<int>(out.size());
        out.emplace_back(static_cast<size_t>(ngens), -1);
        in.emplace_back(static_cast<size_t>(ngens), -1);
        dist.push_back(dist[static_cast<size_t>(v)] + 1);
        fwd[static_cast<size_t>(v)][static_cast<size_t>(gen)] = w;
        bwd[static_cast<size_t>(w)][static_cast<size_t>(gen)] = v;
        queue.push_back(w);
      }
    }
  }

  TruncatedCosetAction act;
  act.x_size = static_cast<int>(out.size());
  act.y_size = 1;  // the level-zero truncation sees a single coset of B
  act.iota.assign(static_cast<size_t>(act.x_size), 0);
  act.gamma.resize(static_cast<size_t>(act.x_size));
  std::iota(act.gamma.begin(), act.gamma.end(), 0);
  act.depth = depth;
  act.truncated = truncated;
  return act;
}

std::vector<Int> apply_iota(const TruncatedCosetAction& c, const std::vector<Int>& v) {
  std::vector<Int> out(static_cast<size_t>(c.y_size), 0);
  for (size_t x = 0; x < v.size(); ++x) out[static_cast<size_t>(c.iota[x])] += v[x];
  return out;
}

std::vector<Int> apply_gamma(const TruncatedCosetAction& c, const std::vector<Int>& v) {
  std::vector<Int> out(static_cast<size_t>(c.x_size), 0);
  for (size_t x = 0; x < v.size(); ++x) out[static_cast<size_t>(c.gamma[x])] += v[x];
  return out;
}

std::optional<Witness> witness_series(const TruncatedCosetAction& c) {
  std::vector<std::vector<int>> fibers(static_cast<size_t>(c.y_size));
  for (int x = 0; x < c.x_size; ++x)
    fibers[static_cast<size_t>(c.iota[static_cast<size_t>(x)])].push_back(x);
  for (const auto& f : fibers) {
    if (f.empty())
      throw Error(errc::not_surjective, "iota misses a coset; the truncation is unusable");
  }

  // smallest fiber with a collision gives the minimal-support kernel element
  std::optional<std::pair<int, int>> pair;
  for (const auto& f : fibers) {
    if (f.size() >= 2) {
      if (!pair || std::make_pair(f[0], f[1]) < *pair) pair = {f[0], f[1]};
    }
  }
  if (!pair) return std::nullopt;  // iota injective

  Witness w;
  std::vector<Int> f0(static_cast<size_t>(c.x_size), 0);
  f0[static_cast<size_t>(pair->first)] = 1;
  f0[static_cast<size_t>(pair->second)] = -1;
  w.f.push_back(std::move(f0));
  // canonical lift: gamma(f_i) itself solves iota(f) = iota(gamma(f_i))
  for (int i = 0; i < c.depth; ++i) w.f.push_back(apply_gamma(c, w.f.back()));
  return w;
}

}  // namespace novikit::hnn
