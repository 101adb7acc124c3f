#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace graphae {

using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Matrix = Eigen::MatrixXd;

// Unordered node pair, stored canonically with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
  bool operator<(const Edge& o) const { return a < o.a || (a == o.a && b < o.b); }
};

inline std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// Immutable undirected graph: binary adjacency in compressed row form,
// original-token mapping, optional node features and community labels.
// Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  // Canonical constructor from deduplicated edges. Tokens may be empty,
  // in which case node i's token is the decimal string "i".
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> tokens = {});

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const {
    return u != v && edge_set_.count(edge_key(u, v)) > 0;
  }
  int degree(int v) const { return row_ptr_[v + 1] - row_ptr_[v]; }

  // Neighbors of v in ascending order.
  const int* neighbors_begin(int v) const { return cols_.data() + row_ptr_[v]; }
  const int* neighbors_end(int v) const { return cols_.data() + row_ptr_[v + 1]; }

  std::string token(int v) const;
  // Dense index for an original token, or -1.
  int index_of(const std::string& token) const;

  const std::optional<Matrix>& features() const { return features_; }
  const std::optional<std::vector<int>>& labels() const { return labels_; }
  int num_label_classes() const;

  void attach_features(Matrix x);
  void attach_labels(std::vector<int> labels);

  // Same nodes and tokens, different edge set.
  Graph with_edges(std::vector<Edge> edges) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                       // canonical, sorted
  std::vector<int> row_ptr_, cols_;               // symmetric CSR, no self-loops
  std::unordered_set<std::uint64_t> edge_set_;
  std::vector<std::string> tokens_;               // empty => identity tokens
  std::unordered_map<std::string, int> token_index_;
  std::optional<Matrix> features_;
  std::optional<std::vector<int>> labels_;
};

// Symmetric normalization of adjacency-plus-self-loops: entry (i,j) of the
// matrix is (A+I)_ij / sqrt(d_i d_j) with d the degrees of A+I.
struct NormalizedAdjacency {
  SpMat matrix;                 // n x n, symmetric, values in (0, 1]
  std::vector<double> degrees;  // row sums of the matrix being normalized
};

// Text loaders. Edge lists are "src dst" token pairs, one per line,
// '#'-comments ignored; a self-pair line registers the node and is dropped
// as an edge. Feature files are dense CSV (row per node) or "node feature
// value" triplets; label files are "node label" pairs. Nodes in feature
// and label files are referenced by original token.
Graph load_edge_list(const std::string& path, bool directed_input = true);

enum class FeatureFormat { DenseCsv, SparseTriplet };
Matrix load_features(const std::string& path, FeatureFormat format, const Graph& g);

std::vector<int> load_labels(const std::string& path, const Graph& g);

// In-place L1 row normalization; zero rows are left untouched.
void row_normalize(Matrix& x);

NormalizedAdjacency normalized_adjacency(const Graph& g);

// Normalization of A + alpha*A^2 (diagonal of A^2 kept) plus self-loops,
// with degrees taken as row sums of the combined matrix. alpha = 0 reduces
// to normalized_adjacency.
NormalizedAdjacency normalized_khop(const Graph& g, double alpha);

}  // namespace graphae
