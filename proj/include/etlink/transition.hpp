#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "etlink/dense.hpp"
#include "etlink/graph.hpp"

namespace etlink {

enum class Variant { Standard, Normalized, Weighted, Custom };

std::string_view to_string(Variant v);

// Nonnegative square matrix whose sparsity pattern is the edge set of a
// graph. Stored in compressed rows (and compressed columns for in-arcs).
class TransitionMatrix {
 public:
  // Custom matrix from a dense array; entries must be finite and
  // nonnegative (throws std::invalid_argument otherwise).
  static TransitionMatrix from_dense(const DenseMatrix& m, Variant variant = Variant::Custom);

  std::size_t n() const { return n_; }
  Variant variant() const { return variant_; }
  // Id of the originating graph, 0 for custom matrices.
  std::uint64_t graph_id() const { return graph_id_; }

  double at(NodeId i, NodeId j) const;

  std::span<const NodeId> row_indices(NodeId i) const {
    return {col_idx_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
  }
  std::span<const double> row_values(NodeId i) const {
    return {values_.data() + row_ptr_[i], row_ptr_[i + 1] - row_ptr_[i]};
  }
  std::span<const NodeId> col_indices(NodeId j) const {
    return {row_idx_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }
  std::span<const double> col_values(NodeId j) const {
    return {col_values_.data() + col_ptr_[j], col_ptr_[j + 1] - col_ptr_[j]};
  }

  std::size_t nonzeros() const { return values_.size(); }

  // y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;

  DenseMatrix dense() const;
  TransitionMatrix transpose() const;

  // Every row sums to 1 within `tol`.
  bool row_stochastic(double tol = 1e-12) const;

 private:
  friend class TransitionBuilder;
  TransitionMatrix() = default;

  std::size_t n_ = 0;
  Variant variant_ = Variant::Custom;
  std::uint64_t graph_id_ = 0;
  std::vector<std::size_t> row_ptr_;
  std::vector<NodeId> col_idx_;
  std::vector<double> values_;
  std::vector<std::size_t> col_ptr_;
  std::vector<NodeId> row_idx_;
  std::vector<double> col_values_;
};

// a_ij = 1 iff e_ij is an edge.
TransitionMatrix adjacency_matrix(const Graph& g);

// Row i of the adjacency matrix divided by the out-degree of i. Throws
// DatasetError naming the first node without out-edges.
TransitionMatrix normalized_matrix(const Graph& g);

// w_ij = weight of e_ij. Requires a weighted graph with positive weights.
TransitionMatrix weighted_matrix(const Graph& g);

TransitionMatrix transition_matrix(const Graph& g, Variant variant);

// True when the pattern of M is strongly connected.
bool is_irreducible(const TransitionMatrix& m);

}  // namespace etlink
