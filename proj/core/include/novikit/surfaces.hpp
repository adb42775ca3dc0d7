#pragma once

// Combinatorial model of a decomposing surface: regions of the complement as
// vertices, surface components as directed edges carrying a complexity and a
// homology class. Weight reduction concentrates a starting weight on fewer
// components while preserving class and complexity and connecting the
// complement; the obstruction consumer turns the result into the
// divisibility contradiction for primitive classes.

#include <cstdint>
#include <string>
#include <vector>

#include "novikit/laurent.hpp"

namespace novikit::surfaces {

struct Edge {
  int from = 0;                    // negative-side region
  int to = 0;                      // positive-side region
  std::int64_t chi = 0;            // complexity chi_-(component), >= 0
  std::vector<std::int64_t> h2;    // homology class, fixed ambient rank
};

struct CutGraph {
  int regions = 0;
  std::vector<Edge> edges;
  int h2rank = 0;
};

// connectivity, index ranges, nonnegative chi, per-region null-homology
void validate(const CutGraph& g);

struct Weight {
  std::vector<std::int64_t> w;  // per edge, nonnegative

  std::int64_t total() const;   // |w|
  int support_size() const;     // N(w)
  static Weight ones(size_t edges) { return Weight{std::vector<std::int64_t>(edges, 1)}; }
};

// components of the complement of the supported subsurface: regions glued
// across weight-zero edges
int complement_components(const CutGraph& g, const Weight& w);

std::vector<std::int64_t> weighted_class(const CutGraph& g, const Weight& w);
std::int64_t weighted_chi(const CutGraph& g, const Weight& w);

struct WeightReport {
  Weight final_weight;
  bool class_preserved = false;
  bool chi_preserved = false;
  bool complement_connected = false;
  bool total_ge_two = false;  // |v| > 1, vacuous when the start was connected
  int iterations = 0;
  std::int64_t chi_start = 0;
  std::int64_t chi_final = 0;
};

// Iterates the balancing move: pick the complement component with the
// smallest region index, split its boundary weights by orientation, require
// the chi sums of the two sides to agree, and shift the minimal weight from
// one side to the other. Strict chi inequality is an input error (it would
// certify the input as non-minimizing) unless relax is set, in which case
// the complexity-decreasing move is applied and the drop reported.
WeightReport reduce_weights(const CutGraph& g, Weight w0, bool relax = false);

enum class Obstruction { contradiction, no_obstruction, consistent };

struct ObstructionReport {
  Obstruction verdict = Obstruction::consistent;
  std::string detail;
  WeightReport reduction;
};

// tau_nonzero is supplied by the torsion pipeline; with a nonzero torsion a
// connected-complement decomposition concentrates on one component, and a
// multiplicity > 1 contradicts primitivity of the class
ObstructionReport connectedness_obstruction(const CutGraph& g, const Weight& w0,
                                            bool phi_primitive, bool tau_nonzero);

}  // namespace novikit::surfaces
