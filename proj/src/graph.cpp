#include "graphae/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphae {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> tokens)
    : n_(n), edges_(std::move(edges)), tokens_(std::move(tokens)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative node count");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b >= n_) throw std::invalid_argument("graph: edge index out of range");
    if (e.a == e.b) throw std::invalid_argument("graph: self-loop in edge list");
    ++deg[e.a];
    ++deg[e.b];
    edge_set_.insert(edge_key(e.a, e.b));
  }
  row_ptr_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) row_ptr_[v + 1] = row_ptr_[v] + deg[v];
  cols_.resize(row_ptr_[n_]);
  std::vector<int> fill(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const Edge& e : edges_) {
    cols_[fill[e.a]++] = e.b;
    cols_[fill[e.b]++] = e.a;
  }
  // Neighbor rows are kept ascending.
  for (int v = 0; v < n_; ++v)
    std::sort(cols_.begin() + row_ptr_[v], cols_.begin() + row_ptr_[v + 1]);

  if (!tokens_.empty()) {
    if (static_cast<int>(tokens_.size()) != n_)
      throw std::invalid_argument("graph: token count != node count");
    token_index_.reserve(tokens_.size());
    for (int i = 0; i < n_; ++i) token_index_.emplace(tokens_[i], i);
  }
}

std::string Graph::token(int v) const {
  return tokens_.empty() ? std::to_string(v) : tokens_[v];
}

int Graph::index_of(const std::string& token) const {
  if (tokens_.empty()) {
    try {
      size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos == token.size() && v >= 0 && v < n_) return v;
    } catch (const std::exception&) {
    }
    return -1;
  }
  auto it = token_index_.find(token);
  return it == token_index_.end() ? -1 : it->second;
}

int Graph::num_label_classes() const {
  if (!labels_) return 0;
  int k = 0;
  for (int l : *labels_) k = std::max(k, l + 1);
  return k;
}

void Graph::attach_features(Matrix x) {
  if (x.rows() != n_) throw std::invalid_argument("features: row count != node count");
  features_ = std::move(x);
}

void Graph::attach_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("labels: count != node count");
  labels_ = std::move(labels);
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
  Graph g(n_, std::move(edges), tokens_);
  g.features_ = features_;
  g.labels_ = labels_;
  return g;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void parse_error(const std::string& path, int lineno, const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
}

double parse_double(const std::string& tok, const std::string& path, int lineno) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) parse_error(path, lineno, "non-numeric value '" + tok + "'");
    return v;
  } catch (const std::invalid_argument&) {
    parse_error(path, lineno, "non-numeric value '" + tok + "'");
  } catch (const std::out_of_range&) {
    parse_error(path, lineno, "value out of range '" + tok + "'");
  }
}

}  // namespace

Graph load_edge_list(const std::string& path, bool directed_input) {
  (void)directed_input;  // directions are always ignored; edges are symmetrized
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);

  std::vector<std::string> tokens;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& t) {
    auto [it, inserted] = index.emplace(t, static_cast<int>(tokens.size()));
    if (inserted) tokens.push_back(t);
    return it->second;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string ta, tb, extra;
    if (!(ls >> ta >> tb)) parse_error(path, lineno, "expected two node tokens");
    if (ls >> extra) parse_error(path, lineno, "trailing token '" + extra + "'");
    int a = intern(ta);
    int b = intern(tb);
    if (a != b) edges.emplace_back(a, b);
  }
  Graph g(static_cast<int>(tokens.size()), std::move(edges), std::move(tokens));
  if (g.num_edges() == 0) throw std::runtime_error("empty graph (no edges): " + path);
  return g;
}

Matrix load_features(const std::string& path, FeatureFormat format, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open feature file: " + path);
  const int n = g.num_nodes();
  std::string line;
  int lineno = 0;

  if (format == FeatureFormat::DenseCsv) {
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
      ++lineno;
      if (is_blank_or_comment(line)) continue;
      std::vector<double> row;
      std::string cell;
      std::istringstream ls(line);
      while (std::getline(ls, cell, ',')) row.push_back(parse_double(cell, path, lineno));
      if (!rows.empty() && row.size() != rows.front().size())
        parse_error(path, lineno, "inconsistent column count");
      rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != n)
      throw std::runtime_error(path + ": feature rows (" + std::to_string(rows.size()) +
                               ") != graph nodes (" + std::to_string(n) + ")");
    Matrix x(n, rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < x.cols(); ++j) x(i, j) = rows[i][j];
    return x;
  }

  // Sparse triplets; feature dimension is max feature index + 1.
  struct Trip {
    int node, feat;
    double value;
  };
  std::vector<Trip> trips;
  int f = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string tn, tf, tv;
    if (!(ls >> tn >> tf >> tv)) parse_error(path, lineno, "expected 'node feature value'");
    int node = g.index_of(tn);
    if (node < 0) parse_error(path, lineno, "unknown node token '" + tn + "'");
    int feat = static_cast<int>(parse_double(tf, path, lineno));
    if (feat < 0) parse_error(path, lineno, "negative feature index");
    double value = parse_double(tv, path, lineno);
    f = std::max(f, feat + 1);
    trips.push_back({node, feat, value});
  }
  Matrix x = Matrix::Zero(n, f);
  for (const Trip& t : trips) x(t.node, t.feat) = t.value;
  return x;
}

std::vector<int> load_labels(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open label file: " + path);
  std::vector<int> labels(g.num_nodes(), -1);
  std::unordered_map<std::string, int> classes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string tn, tl;
    if (!(ls >> tn >> tl)) parse_error(path, lineno, "expected 'node label'");
    int node = g.index_of(tn);
    if (node < 0) parse_error(path, lineno, "unknown node token '" + tn + "'");
    auto [it, inserted] = classes.emplace(tl, static_cast<int>(classes.size()));
    labels[node] = it->second;
  }
  for (int i = 0; i < g.num_nodes(); ++i)
    if (labels[i] < 0)
      throw std::runtime_error(path + ": no label for node '" + g.token(i) + "'");
  return labels;
}

void row_normalize(Matrix& x) {
  for (int i = 0; i < x.rows(); ++i) {
    double s = x.row(i).cwiseAbs().sum();
    if (s > 0) x.row(i) /= s;
  }
}

NormalizedAdjacency normalized_adjacency(const Graph& g) {
  const int n = g.num_nodes();
  NormalizedAdjacency out;
  out.degrees.resize(n);
  std::vector<double> inv_sqrt(n);
  for (int v = 0; v < n; ++v) {
    out.degrees[v] = g.degree(v) + 1.0;  // self-loop
    inv_sqrt[v] = 1.0 / std::sqrt(out.degrees[v]);
  }
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * g.num_edges() + n);
  for (int v = 0; v < n; ++v) {
    trips.emplace_back(v, v, inv_sqrt[v] * inv_sqrt[v]);
    for (const int* p = g.neighbors_begin(v); p != g.neighbors_end(v); ++p)
      trips.emplace_back(v, *p, inv_sqrt[v] * inv_sqrt[*p]);
  }
  out.matrix.resize(n, n);
  out.matrix.setFromTriplets(trips.begin(), trips.end());
  out.matrix.makeCompressed();
  return out;
}

NormalizedAdjacency normalized_khop(const Graph& g, double alpha) {
  if (alpha < 0) throw std::invalid_argument("normalized_khop: alpha must be >= 0");
  if (alpha == 0) return normalized_adjacency(g);

  const int n = g.num_nodes();
  SpMat a(n, n);
  {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(2 * g.num_edges());
    for (const Edge& e : g.edges()) {
      trips.emplace_back(e.a, e.b, 1.0);
      trips.emplace_back(e.b, e.a, 1.0);
    }
    a.setFromTriplets(trips.begin(), trips.end());
  }
  SpMat m = a + SpMat(alpha * (a * a));  // A^2 diagonal (closed walks) kept
  SpMat ident(n, n);
  ident.setIdentity();
  SpMat t = m + ident;

  NormalizedAdjacency out;
  out.degrees.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    for (SpMat::InnerIterator it(t, v); it; ++it) out.degrees[v] += it.value();
  std::vector<double> inv_sqrt(n);
  for (int v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(out.degrees[v]);

  for (int v = 0; v < n; ++v)
    for (SpMat::InnerIterator it(t, v); it; ++it)
      it.valueRef() *= inv_sqrt[v] * inv_sqrt[it.col()];
  t.makeCompressed();
  out.matrix = std::move(t);
  return out;
}

}  // namespace graphae
