#include "etlink/score_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace etlink {

ScoreTable::ScoreTable(std::string predictor_id, DenseMatrix scores)
    : predictor_id_(std::move(predictor_id)), scores_(std::move(scores)) {
  if (!scores_.square()) throw std::invalid_argument("ScoreTable: score matrix must be square");
}

ScoreTable ScoreTable::symmetrized() const {
  DenseMatrix s(n(), n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) s(i, j) = 0.5 * (scores_(i, j) + scores_(j, i));
  return ScoreTable(predictor_id_, std::move(s));
}

double rank_key(double score) {
  if (score == 0.0 || !std::isfinite(score)) return score;
  // Through text, so the key is exactly the value a score file would hold.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", score);
  return std::strtod(buf, nullptr);
}

std::vector<RankedPair> rank_pairs(const ScoreTable& scores, std::span<const NodePair> pairs,
                                   bool descending, std::span<const std::uint32_t> label_rank,
                                   std::size_t limit) {
  struct Keyed {
    double key;
    std::uint32_t src_rank;
    std::uint32_t dst_rank;
    std::size_t index;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(pairs.size());
  const auto rank_of = [&](NodeId v) {
    return label_rank.empty() ? static_cast<std::uint32_t>(v) : label_rank[v];
  };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [s, d] = pairs[k];
    const double key = rank_key(scores.score(s, d));
    keyed.push_back({descending ? -key : key, rank_of(s), rank_of(d), k});
  }
  const auto less = [](const Keyed& a, const Keyed& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.src_rank != b.src_rank) return a.src_rank < b.src_rank;
    return a.dst_rank < b.dst_rank;
  };
  const std::size_t take = std::min(limit, keyed.size());
  if (take < keyed.size()) {
    std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(take), keyed.end(),
                      less);
    keyed.resize(take);
  } else {
    std::sort(keyed.begin(), keyed.end(), less);
  }
  std::vector<RankedPair> out;
  out.reserve(take);
  for (const auto& k : keyed) {
    const NodePair p = pairs[k.index];
    out.push_back({p, scores.score(p.src, p.dst)});
  }
  return out;
}

}  // namespace etlink
