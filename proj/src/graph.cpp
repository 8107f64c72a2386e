#include "etlink/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace etlink {

namespace {

std::atomic<std::uint64_t> next_graph_id{1};

std::optional<std::int64_t> as_integer(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::uint64_t pair_key(NodeId a, NodeId b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  const auto ia = as_integer(a);
  const auto ib = as_integer(b);
  if (ia && ib) return *ia != *ib ? *ia < *ib : a < b;
  if (ia != ib) return ia.has_value();
  return a < b;
}

Graph Graph::build(std::span<const EdgeRecord> records, bool directed, bool weighted,
                   NodeNumbering numbering) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  for (const auto& r : records) {
    if (r.src.empty() || r.dst.empty()) throw std::invalid_argument("edge with empty node label");
    for (const std::string* l : {&r.src, &r.dst}) {
      if (ids.try_emplace(*l, static_cast<NodeId>(labels.size())).second) labels.push_back(*l);
    }
  }
  if (numbering == NodeNumbering::LabelOrder) {
    std::sort(labels.begin(), labels.end(),
              [](const std::string& a, const std::string& b) { return label_less(a, b); });
    for (std::size_t i = 0; i < labels.size(); ++i) ids[labels[i]] = static_cast<NodeId>(i);
  }

  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const auto& r : records) {
    double w = 1.0;
    if (weighted) {
      if (!r.weight) {
        throw std::invalid_argument("weighted graph: edge " + r.src + " -> " + r.dst +
                                    " has no weight");
      }
      w = *r.weight;
    }
    if (weighted && w == 0.0) {
      throw std::invalid_argument("edge " + r.src + " -> " + r.dst + " has zero weight");
    }
    edges.push_back(Edge{ids.at(r.src), ids.at(r.dst), w, r.timestamp});
  }
  return from_edges(std::move(labels), edges, directed, weighted);
}

Graph Graph::from_pairs(std::span<const std::pair<int, int>> pairs, bool directed) {
  std::vector<EdgeRecord> records;
  records.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    records.push_back(EdgeRecord{std::to_string(a), std::to_string(b), std::nullopt, std::nullopt});
  return build(records, directed, false, NodeNumbering::LabelOrder);
}

Graph Graph::from_pairs(std::initializer_list<std::pair<int, int>> pairs, bool directed) {
  return from_pairs(std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()), directed);
}

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges,
                        bool directed, bool weighted) {
  Graph g;
  g.directed_ = directed;
  g.weighted_ = weighted;
  g.id_ = next_graph_id.fetch_add(1);
  g.labels_ = std::move(labels);
  const std::size_t n = g.labels_.size();
  g.lookup_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.lookup_.try_emplace(g.labels_[i], static_cast<NodeId>(i)).second)
      throw std::invalid_argument("duplicate node label: " + g.labels_[i]);
  }

  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(edges.size());
  for (Edge e : edges) {
    if (e.src >= n || e.dst >= n) throw std::invalid_argument("edge endpoint out of range");
    if (!directed && e.src > e.dst) std::swap(e.src, e.dst);
    if (!weighted) e.weight = 1.0;
    const auto [it, fresh] = seen.try_emplace(pair_key(e.src, e.dst), g.edges_.size());
    if (fresh) {
      g.edges_.push_back(e);
      if (e.src == e.dst) ++g.self_loops_;
      continue;
    }
    auto& kept = g.edges_[it->second];
    if (e.timestamp && (!kept.timestamp || *e.timestamp < *kept.timestamp))
      kept.timestamp = e.timestamp;
  }

  g.label_rank_.resize(n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return label_less(g.labels_[a], g.labels_[b]); });
  for (std::size_t r = 0; r < n; ++r) g.label_rank_[order[r]] = static_cast<std::uint32_t>(r);

  g.index();
  return g;
}

void Graph::index() {
  const std::size_t n = labels_.size();
  struct Arc {
    NodeId from, to;
    double w;
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges_.size() * (directed_ ? 1 : 2));
  for (const auto& e : edges_) {
    arcs.push_back({e.src, e.dst, e.weight});
    if (!directed_ && e.src != e.dst) arcs.push_back({e.dst, e.src, e.weight});
  }
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.from != b.from ? a.from < b.from : a.to < b.to; });
  out_ptr_.assign(n + 1, 0);
  out_idx_.resize(arcs.size());
  out_w_.resize(arcs.size());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    ++out_ptr_[arcs[k].from + 1];
    out_idx_[k] = arcs[k].to;
    out_w_[k] = arcs[k].w;
  }
  for (std::size_t v = 0; v < n; ++v) out_ptr_[v + 1] += out_ptr_[v];

  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.to != b.to ? a.to < b.to : a.from < b.from; });
  in_ptr_.assign(n + 1, 0);
  in_idx_.resize(arcs.size());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    ++in_ptr_[arcs[k].to + 1];
    in_idx_[k] = arcs[k].from;
  }
  for (std::size_t v = 0; v < n; ++v) in_ptr_[v + 1] += in_ptr_[v];
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  const auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const NodeId> Graph::out_neighbors(NodeId v) const {
  return {out_idx_.data() + out_ptr_[v], out_ptr_[v + 1] - out_ptr_[v]};
}

std::span<const NodeId> Graph::in_neighbors(NodeId v) const {
  return {in_idx_.data() + in_ptr_[v], in_ptr_[v + 1] - in_ptr_[v]};
}

std::span<const double> Graph::out_weights(NodeId v) const {
  return {out_w_.data() + out_ptr_[v], out_ptr_[v + 1] - out_ptr_[v]};
}

bool Graph::has_edge(NodeId src, NodeId dst) const {
  const auto nb = out_neighbors(src);
  return std::binary_search(nb.begin(), nb.end(), dst);
}

Graph Graph::induced(std::span<const NodeId> nodes) const {
  constexpr NodeId kAbsent = ~NodeId{0};
  std::vector<NodeId> remap(n(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    remap[nodes[k]] = static_cast<NodeId>(k);
    labels.push_back(labels_[nodes[k]]);
  }
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (remap[e.src] == kAbsent || remap[e.dst] == kAbsent) continue;
    kept.push_back(Edge{remap[e.src], remap[e.dst], e.weight, e.timestamp});
  }
  return from_edges(std::move(labels), kept, directed_, weighted_);
}

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Connected:
      return "connected";
    case Connectivity::StronglyConnected:
      return "strongly-connected";
    case Connectivity::WeaklyConnected:
      return "weakly-connected";
    case Connectivity::Disconnected:
      return "disconnected";
  }
  return "unknown";
}

namespace {

// Nodes reachable from `start` following out-arcs, in-arcs, or both.
std::size_t reach_count(const Graph& g, NodeId start, bool forward, bool backward) {
  std::vector<char> seen(g.n(), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    auto visit = [&](std::span<const NodeId> nb) {
      for (NodeId w : nb) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    };
    if (forward) visit(g.out_neighbors(v));
    if (backward) visit(g.in_neighbors(v));
  }
  return count;
}

// Component id per node: weak components for undirected graphs, strong
// components (iterative Tarjan) for directed ones.
std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t& count) {
  const std::size_t n = g.n();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> comp(n, kNone);
  count = 0;
  if (!g.directed()) {
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
      if (comp[s] != kNone) continue;
      comp[s] = count;
      stack.push_back(s);
      while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.out_neighbors(v)) {
          if (comp[w] == kNone) {
            comp[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    return comp;
  }

  std::vector<std::uint32_t> index(n, kNone), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> scc_stack;
  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::uint32_t counter = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    scc_stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto nb = g.out_neighbors(f.v);
      if (f.next < nb.size()) {
        const NodeId w = nb[f.next++];
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        NodeId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

Connectivity connectivity(const Graph& g) {
  const std::size_t n = g.n();
  if (!g.directed()) {
    if (n <= 1 || reach_count(g, 0, true, false) == n) return Connectivity::Connected;
    return Connectivity::Disconnected;
  }
  if (n <= 1) return Connectivity::StronglyConnected;
  if (reach_count(g, 0, true, false) == n && reach_count(g, 0, false, true) == n)
    return Connectivity::StronglyConnected;
  if (reach_count(g, 0, true, true) == n) return Connectivity::WeaklyConnected;
  return Connectivity::Disconnected;
}

Graph largest_component(const Graph& g) {
  if (g.n() == 0) return g;
  std::uint32_t count = 0;
  const auto comp = component_labels(g, count);
  std::vector<std::size_t> size(count, 0);
  std::vector<std::uint32_t> min_rank(count, ~std::uint32_t{0});
  const auto rank = g.label_rank();
  for (NodeId v = 0; v < g.n(); ++v) {
    ++size[comp[v]];
    min_rank[comp[v]] = std::min(min_rank[comp[v]], rank[v]);
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (size[c] > size[best] || (size[c] == size[best] && min_rank[c] < min_rank[best])) best = c;
  }
  std::vector<NodeId> nodes;
  nodes.reserve(size[best]);
  for (NodeId v = 0; v < g.n(); ++v)
    if (comp[v] == best) nodes.push_back(v);
  return g.induced(nodes);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::uint32_t count = 0;
  const auto comp = component_labels(g, count);
  std::vector<std::vector<NodeId>> out(count);
  for (NodeId v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

DistanceMatrix::DistanceMatrix(std::size_t n)
    : n_(n), from_(n * n, kUnreachable), to_(n * n, kUnreachable) {}

std::uint16_t DistanceMatrix::diameter() const {
  std::uint16_t d = 0;
  for (std::uint16_t v : from_)
    if (v != kUnreachable) d = std::max(d, v);
  return d;
}

DistanceMatrix bfs_distances(const Graph& g) {
  const std::size_t n = g.n();
  if (n >= DistanceMatrix::kUnreachable)
    throw std::invalid_argument("bfs_distances: graph too large for 16-bit hop counts");
  DistanceMatrix dist(n);
  std::vector<NodeId> frontier, next;
  std::vector<std::uint16_t> level(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(level.begin(), level.end(), DistanceMatrix::kUnreachable);
    level[s] = 0;
    frontier.assign(1, s);
    std::uint16_t d = 0;
    while (!frontier.empty()) {
      ++d;
      next.clear();
      for (NodeId v : frontier) {
        for (NodeId w : g.out_neighbors(v)) {
          if (level[w] == DistanceMatrix::kUnreachable) {
            level[w] = d;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
    for (NodeId t = 0; t < n; ++t) dist.set(s, t, level[t]);
  }
  return dist;
}

std::vector<NodeId> neighborhood_within(const Graph& g, NodeId i, unsigned ell) {
  if (ell == 0) throw std::invalid_argument("neighborhood_within: ell must be positive");
  std::vector<std::uint32_t> level(g.n(), ~std::uint32_t{0});
  std::vector<NodeId> frontier{i}, next, out{i};
  level[i] = 0;
  for (unsigned d = 1; d <= ell && !frontier.empty(); ++d) {
    next.clear();
    for (NodeId v : frontier) {
      for (NodeId w : g.out_neighbors(v)) {
        if (level[w] == ~std::uint32_t{0}) {
          level[w] = d;
          next.push_back(w);
          out.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace etlink
