#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphae/graph.hpp"

namespace graphae {

// Incomplete-graph split for link prediction: train graph plus held-out
// positive edges and sampled unconnected pairs for validation and test.
struct EdgeSplit {
  Graph train_graph;
  std::vector<Edge> val_pos, val_neg;
  std::vector<Edge> test_pos, test_neg;
  std::uint64_t seed = 0;
};

// Removes round(val_frac*m) + round(test_frac*m) edges uniformly at random
// and samples the same numbers of distinct non-edges of the ORIGINAL graph,
// disjoint across the two negative sets. Identical seeds reproduce the
// split bit for bit.
EdgeSplit split_edges(const Graph& g, double val_frac, double test_frac,
                      std::uint64_t seed);
inline EdgeSplit split_edges(const Graph& g, std::uint64_t seed) {
  return split_edges(g, 0.05, 0.10, seed);
}

// Uniformly sampled distinct unordered non-edges of g, none in `exclude`.
// Rejection sampling backed by exhaustive enumeration when non-edges are
// scarce (density > 50%).
std::vector<Edge> sample_negatives(const Graph& g, int count,
                                   const std::vector<Edge>& exclude,
                                   std::uint64_t seed);

// Text round-trip: "section u v" lines with sections train/val_pos/val_neg/
// test_pos/test_neg; u and v are original node tokens.
void save_split(const EdgeSplit& split, const Graph& original, const std::string& path);
EdgeSplit load_split(const std::string& path, const Graph& original);

}  // namespace graphae
