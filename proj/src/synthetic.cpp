#include "etlink/synthetic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace etlink {

namespace {

// std:: distributions differ between standard libraries; these do not.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

std::vector<EdgeRecord> stamp(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                              TimestampOrder order, std::mt19937_64& rng) {
  std::vector<std::int64_t> times(edges.size());
  std::iota(times.begin(), times.end(), std::int64_t{0});
  if (order == TimestampOrder::Random) shuffle(times, rng);
  std::vector<EdgeRecord> out;
  out.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    out.push_back({std::to_string(edges[e].first), std::to_string(edges[e].second), std::nullopt,
                   times[e]});
  return out;
}

}  // namespace

std::vector<EdgeRecord> preferential_attachment(const PreferentialAttachmentOptions& opt) {
  const std::uint32_t k = opt.edges_per_node;
  if (k == 0) throw std::invalid_argument("edges_per_node must be positive");
  if (opt.nodes <= k) throw std::invalid_argument("need more nodes than edges_per_node");

  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  // Every endpoint occurrence; sampling from it is degree-proportional.
  std::vector<std::uint32_t> ends;
  for (std::uint32_t a = 0; a <= k; ++a)
    for (std::uint32_t b = a + 1; b <= k; ++b) {
      edges.emplace_back(a, b);
      ends.push_back(a);
      ends.push_back(b);
    }

  std::vector<std::uint32_t> picked;
  for (std::uint32_t v = k + 1; v < opt.nodes; ++v) {
    picked.clear();
    while (picked.size() < k) {
      const std::uint32_t u = ends[uniform_below(rng, ends.size())];
      if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
    }
    for (std::uint32_t u : picked) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  return stamp(edges, opt.order, rng);
}

std::vector<EdgeRecord> random_strong_digraph(std::uint32_t nodes, double p, std::uint64_t seed) {
  if (nodes < 2) throw std::invalid_argument("need at least two nodes");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < nodes; ++i) edges.emplace_back(i, (i + 1) % nodes);
  for (std::uint32_t i = 0; i < nodes; ++i)
    for (std::uint32_t j = 0; j < nodes; ++j)
      if (i != j && j != (i + 1) % nodes && uniform_unit(rng) < p) edges.emplace_back(i, j);
  return stamp(edges, TimestampOrder::Random, rng);
}

}  // namespace etlink
