#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "etlink/edge_record.hpp"

namespace etlink {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src;
  NodeId dst;
  double weight;
  std::optional<std::int64_t> timestamp;
};

enum class NodeNumbering {
  FirstAppearance,  // ids follow first occurrence in the edge list
  LabelOrder,       // ids follow the canonical label order
};

// Canonical label order: labels that are integers come first, ordered
// numerically; all other labels follow in byte-lexicographic order.
bool label_less(std::string_view a, std::string_view b);

// Immutable graph over nodes 0..n-1. Undirected graphs store each edge once
// with src <= dst; adjacency queries are symmetric.
class Graph {
 public:
  // Duplicate (src,dst) pairs keep the first weight and the earliest
  // timestamp. With weighted=false all weights are 1. A zero weight, or a
  // missing weight on a weighted graph, throws std::invalid_argument.
  static Graph build(std::span<const EdgeRecord> records, bool directed, bool weighted,
                     NodeNumbering numbering = NodeNumbering::FirstAppearance);

  // Convenience for integer-labelled edge lists.
  static Graph from_pairs(std::span<const std::pair<int, int>> pairs, bool directed);
  static Graph from_pairs(std::initializer_list<std::pair<int, int>> pairs, bool directed);

  // Graph with the given labels as nodes (isolated nodes allowed) and edges
  // in node-id space. Edges are canonicalized and deduplicated like build().
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges,
                          bool directed, bool weighted);

  std::size_t n() const { return labels_.size(); }
  std::size_t m() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  std::uint64_t id() const { return id_; }

  std::span<const Edge> edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::optional<NodeId> find(std::string_view label) const;

  // Position of each node in the canonical label order.
  std::span<const std::uint32_t> label_rank() const { return label_rank_; }

  // Out-neighbors (directed) or neighbors (undirected), ascending, including
  // self-loops.
  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  // Weights aligned with out_neighbors(v).
  std::span<const double> out_weights(NodeId v) const;

  bool has_edge(NodeId src, NodeId dst) const;
  std::size_t out_degree(NodeId v) const { return out_neighbors(v).size(); }
  std::size_t self_loop_count() const { return self_loops_; }

  // Subgraph induced by `nodes`; node ids follow the order of `nodes`.
  Graph induced(std::span<const NodeId> nodes) const;

 private:
  Graph() = default;
  void index();

  bool directed_ = false;
  bool weighted_ = false;
  std::uint64_t id_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> label_rank_;
  std::unordered_map<std::string, NodeId> lookup_;
  std::vector<Edge> edges_;
  std::size_t self_loops_ = 0;

  std::vector<std::size_t> out_ptr_;
  std::vector<NodeId> out_idx_;
  std::vector<double> out_w_;
  std::vector<std::size_t> in_ptr_;
  std::vector<NodeId> in_idx_;
};

enum class Connectivity { Connected, StronglyConnected, WeaklyConnected, Disconnected };

std::string_view to_string(Connectivity c);

Connectivity connectivity(const Graph& g);

// Connected (undirected) or strongly connected (directed) components, each
// listing its nodes in ascending id order.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Largest connected (undirected) or strongly connected (directed) component
// as an induced subgraph. Ties go to the component holding the smallest label.
Graph largest_component(const Graph& g);

// Hop distances from BFS; weights are ignored.
class DistanceMatrix {
 public:
  static constexpr std::uint16_t kUnreachable = 0xFFFF;

  explicit DistanceMatrix(std::size_t n);

  std::size_t n() const { return n_; }
  std::uint16_t operator()(NodeId i, NodeId j) const { return from_[i * n_ + j]; }
  bool reachable(NodeId i, NodeId j) const { return (*this)(i, j) != kUnreachable; }

  // delta(i, *) and delta(*, j), each contiguous.
  std::span<const std::uint16_t> from(NodeId i) const { return {from_.data() + i * n_, n_}; }
  std::span<const std::uint16_t> to(NodeId j) const { return {to_.data() + j * n_, n_}; }

  // Largest finite distance.
  std::uint16_t diameter() const;

 private:
  friend DistanceMatrix bfs_distances(const Graph& g);
  void set(NodeId i, NodeId j, std::uint16_t d) {
    from_[i * n_ + j] = d;
    to_[j * n_ + i] = d;
  }

  std::size_t n_;
  std::vector<std::uint16_t> from_;
  std::vector<std::uint16_t> to_;
};

DistanceMatrix bfs_distances(const Graph& g);

// { j : delta(i, j) <= ell }, including i, ascending.
std::vector<NodeId> neighborhood_within(const Graph& g, NodeId i, unsigned ell);

}  // namespace etlink
