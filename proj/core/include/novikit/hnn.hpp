#pragma once

// HNN data, Stallings folding for subgroups of free groups, the ascending
// test, truncated coset actions and the infinite-series kernel witness.

#include <optional>
#include <string>
#include <vector>

#include "novikit/laurent.hpp"
#include "novikit/presentation.hpp"
#include "novikit/words.hpp"

namespace novikit::hnn {

using groups::Presentation;
using groups::Word;

struct HnnData {
  Presentation base;               // B
  std::vector<Word> assoc;         // generators of A inside B
  std::vector<Word> images;        // gamma(a_i) in B, same count
  std::string stable_letter = "t";
};
void validate(const HnnData& h);

// folded based subgroup graph of a free group; vertex 0 is the base point
struct SubgroupGraph {
  // out[v][g] = head of the g-labeled edge leaving v, -1 when absent;
  // in[v][g] = tail of the g-labeled edge entering v
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  int vertices() const { return static_cast<int>(out.size()); }
  int ngens() const { return out.empty() ? 0 : static_cast<int>(out[0].size()); }
  // a covering of the rose <=> every vertex has every in/out edge
  bool complete() const;
  // finite index = vertex count of a complete folded graph
  std::optional<long long> index() const;
  bool is_rose() const;

  friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;
};

// fold the wedge of loops spelling the given subgroup generators; the result
// is pruned to its core and canonically relabeled (basepoint-first BFS), so
// equal subgroups give equal graphs
SubgroupGraph fold(int ngens, const std::vector<Word>& subgroup_gens);

// membership of w in the subgroup carried by a folded graph
bool graph_accepts(const SubgroupGraph& g, const Word& w);

enum class Ascending { ascending, not_ascending, unknown };

// A = B test for free base via folding; Unknown when the base has relators
Ascending is_ascending_free_base(const HnnData& h);

// truncated model of the coset modules entering the kernel-witness story
struct TruncatedCosetAction {
  int x_size = 0;              // cosets approximating pi_phi / A
  int y_size = 0;              // cosets approximating pi_phi / B
  std::vector<int> iota;       // X -> Y
  std::vector<int> gamma;      // X -> X (already lifted through iota)
  int depth = 0;
  bool truncated = false;      // enumeration hit the depth bound before closing
};

// enumerate cosets of A in a free base by Schreier extension of the folded
// graph up to words of the given length; gamma defaults to the identity since
// the level-collapsed model carries no computable coset action of gamma
TruncatedCosetAction build_truncated_action(const HnnData& h, int depth);

// witness of nonvanishing: f_0 in ker(iota), f_0 != 0, and lifts with
// iota(f_{i+1}) = iota(gamma(f_i)); coordinates over X, one row per level.
// nullopt = NoWitness (iota injective). Throws NotSurjective.
struct Witness {
  std::vector<std::vector<Int>> f;  // f[0..depth], each of length x_size
};
std::optional<Witness> witness_series(const TruncatedCosetAction& c);

// evaluate iota / gamma on a coordinate vector over X
std::vector<Int> apply_iota(const TruncatedCosetAction& c, const std::vector<Int>& v);
std::vector<Int> apply_gamma(const TruncatedCosetAction& c, const std::vector<Int>& v);

}  // namespace novikit::hnn
