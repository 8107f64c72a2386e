#pragma once

#include <cstdint>
#include <vector>

#include "etlink/edge_record.hpp"

namespace etlink {

enum class TimestampOrder {
  Growth,  // edges stamped in the order the generator adds them
  Random,  // a seeded random permutation of the growth order
};

struct PreferentialAttachmentOptions {
  std::uint32_t nodes = 2000;
  std::uint32_t edges_per_node = 20;
  std::uint64_t seed = 1;
  TimestampOrder order = TimestampOrder::Random;
};

// Barabasi-Albert growth: a clique on edges_per_node + 1 seed nodes, then
// each new node links to edges_per_node distinct earlier nodes picked with
// probability proportional to degree. Labels are 0..nodes-1, undirected,
// every record carries a timestamp. Output depends only on the options.
std::vector<EdgeRecord> preferential_attachment(const PreferentialAttachmentOptions& opt);

// Strongly connected random digraph: a directed cycle through all nodes
// plus each other ordered pair with probability p. Timestamps are a random
// permutation.
std::vector<EdgeRecord> random_strong_digraph(std::uint32_t nodes, double p, std::uint64_t seed);

}  // namespace etlink
