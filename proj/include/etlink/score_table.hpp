#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "etlink/dense.hpp"
#include "etlink/graph.hpp"

namespace etlink {

struct NodePair {
  NodeId src;
  NodeId dst;
  auto operator<=>(const NodePair&) const = default;
};

// Scores for ordered node pairs; larger means "more likely an edge".
class ScoreTable {
 public:
  ScoreTable(std::string predictor_id, DenseMatrix scores);

  std::size_t n() const { return scores_.rows(); }
  double score(NodeId i, NodeId j) const { return scores_(i, j); }
  const std::string& predictor_id() const { return predictor_id_; }
  bool higher_is_better() const { return true; }
  const DenseMatrix& matrix() const { return scores_; }

  // (s_ij + s_ji) / 2, used to score unordered pairs of undirected graphs.
  ScoreTable symmetrized() const;

 private:
  std::string predictor_id_;
  DenseMatrix scores_;
};

struct RankedPair {
  NodePair pair;
  double score;
};

// Ranking key: the score rounded to 12 significant digits, the precision at
// which scores are written out. Values equal at that precision tie.
double rank_key(double score);

// Sorts `pairs` by rank_key (descending, or ascending when `descending` is
// false), ties broken by (src, dst) ascending in `label_rank` order (node id
// order when `label_rank` is empty). Returns at most `limit` pairs.
std::vector<RankedPair> rank_pairs(const ScoreTable& scores, std::span<const NodePair> pairs,
                                   bool descending, std::span<const std::uint32_t> label_rank = {},
                                   std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace etlink
