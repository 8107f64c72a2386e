#include "etlink/transition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "etlink/error.hpp"

namespace etlink {

struct Triplet {
  NodeId row;
  NodeId col;
  double value;
};

class TransitionBuilder {
 public:
  static TransitionMatrix make(std::size_t n, Variant variant, std::uint64_t graph_id,
                               std::vector<Triplet> t) {
    TransitionMatrix m;
    m.n_ = n;
    m.variant_ = variant;
    m.graph_id_ = graph_id;
    std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    m.row_ptr_.assign(n + 1, 0);
    m.col_idx_.reserve(t.size());
    m.values_.reserve(t.size());
    for (const auto& e : t) {
      ++m.row_ptr_[e.row + 1];
      m.col_idx_.push_back(e.col);
      m.values_.push_back(e.value);
    }
    for (std::size_t i = 0; i < n; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];

    std::stable_sort(t.begin(), t.end(),
                     [](const Triplet& a, const Triplet& b) { return a.col < b.col; });
    m.col_ptr_.assign(n + 1, 0);
    m.row_idx_.reserve(t.size());
    m.col_values_.reserve(t.size());
    for (const auto& e : t) {
      ++m.col_ptr_[e.col + 1];
      m.row_idx_.push_back(e.row);
      m.col_values_.push_back(e.value);
    }
    for (std::size_t i = 0; i < n; ++i) m.col_ptr_[i + 1] += m.col_ptr_[i];
    return m;
  }
};

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Standard:
      return "standard";
    case Variant::Normalized:
      return "normalized";
    case Variant::Weighted:
      return "weighted";
    case Variant::Custom:
      return "custom";
  }
  return "unknown";
}

TransitionMatrix TransitionMatrix::from_dense(const DenseMatrix& m, Variant variant) {
  if (!m.square()) throw std::invalid_argument("transition matrix must be square");
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument("transition matrix entries must be finite and nonnegative");
      if (v > 0.0) t.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), v});
    }
  }
  return TransitionBuilder::make(m.rows(), variant, 0, std::move(t));
}

double TransitionMatrix::at(NodeId i, NodeId j) const {
  const auto idx = row_indices(i);
  const auto it = std::lower_bound(idx.begin(), idx.end(), j);
  if (it == idx.end() || *it != j) return 0.0;
  return values_[row_ptr_[i] + static_cast<std::size_t>(it - idx.begin())];
}

void TransitionMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) acc += values_[k] * x[col_idx_[k]];
    y[i] = acc;
  }
}

DenseMatrix TransitionMatrix::dense() const {
  DenseMatrix d(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) d(i, col_idx_[k]) = values_[k];
  return d;
}

TransitionMatrix TransitionMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      t.push_back({col_idx_[k], static_cast<NodeId>(i), values_[k]});
  return TransitionBuilder::make(n_, Variant::Custom, graph_id_, std::move(t));
}

bool TransitionMatrix::row_stochastic(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) s += values_[k];
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

namespace {

std::vector<Triplet> pattern(const Graph& g) {
  std::vector<Triplet> t;
  for (NodeId i = 0; i < g.n(); ++i) {
    const auto nb = g.out_neighbors(i);
    const auto w = g.out_weights(i);
    for (std::size_t k = 0; k < nb.size(); ++k) t.push_back({i, nb[k], w[k]});
  }
  return t;
}

}  // namespace

TransitionMatrix adjacency_matrix(const Graph& g) {
  auto t = pattern(g);
  for (auto& e : t) e.value = 1.0;
  return TransitionBuilder::make(g.n(), Variant::Standard, g.id(), std::move(t));
}

TransitionMatrix normalized_matrix(const Graph& g) {
  auto t = pattern(g);
  for (NodeId i = 0; i < g.n(); ++i) {
    if (g.out_degree(i) == 0)
      throw DatasetError("normalized transition matrix: node '" + g.label(i) +
                         "' has no outgoing edges");
  }
  for (auto& e : t) e.value = 1.0 / static_cast<double>(g.out_degree(e.row));
  return TransitionBuilder::make(g.n(), Variant::Normalized, g.id(), std::move(t));
}

TransitionMatrix weighted_matrix(const Graph& g) {
  if (!g.weighted()) throw std::invalid_argument("weighted transition matrix needs a weighted graph");
  auto t = pattern(g);
  for (const auto& e : t) {
    if (!(e.value > 0.0)) {
      throw std::invalid_argument("weighted transition matrix: edge " + g.label(e.row) + " -> " +
                                  g.label(e.col) + " has non-positive weight");
    }
  }
  return TransitionBuilder::make(g.n(), Variant::Weighted, g.id(), std::move(t));
}

TransitionMatrix transition_matrix(const Graph& g, Variant variant) {
  switch (variant) {
    case Variant::Standard:
      return adjacency_matrix(g);
    case Variant::Normalized:
      return normalized_matrix(g);
    case Variant::Weighted:
      return weighted_matrix(g);
    case Variant::Custom:
      break;
  }
  throw std::invalid_argument("custom transition matrices cannot be derived from a graph");
}

bool is_irreducible(const TransitionMatrix& m) {
  const std::size_t n = m.n();
  if (n == 0) return false;
  if (n == 1) return true;
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : forward ? m.row_indices(v) : m.col_indices(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

}  // namespace etlink
