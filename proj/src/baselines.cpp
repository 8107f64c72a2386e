#include "etlink/baselines.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "etlink/error.hpp"
#include "etlink/spectral.hpp"
#include "etlink/transition.hpp"

namespace etlink {

namespace {

void require_connected(const Graph& g, const char* who) {
  const auto c = connectivity(g);
  if (c != Connectivity::Connected && c != Connectivity::StronglyConnected) {
    throw DatasetError(std::string(who) + " needs a " +
                       (g.directed() ? "strongly connected" : "connected") + " graph (got " +
                       std::string(to_string(c)) + ")");
  }
}

void require_undirected(const Graph& g, const char* who) {
  if (g.directed()) throw ConfigError(std::string(who) + " is defined for undirected graphs only");
}

// Neighbor sets without self-loops.
std::vector<std::vector<NodeId>> neighbor_sets(const Graph& g) {
  std::vector<std::vector<NodeId>> out(g.n());
  for (NodeId v = 0; v < g.n(); ++v) {
    for (NodeId w : g.out_neighbors(v))
      if (w != v) out[v].push_back(w);
  }
  return out;
}

std::size_t intersection_size(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

ScoreTable shortest_path_score(const Graph& g) {
  require_connected(g, "shortest-path");
  const auto d = bfs_distances(g);
  DenseMatrix s(g.n(), g.n());
  for (NodeId i = 0; i < g.n(); ++i)
    for (NodeId j = 0; j < g.n(); ++j) s(i, j) = -static_cast<double>(d(i, j));
  return ScoreTable("shortest-path", std::move(s));
}

double katz_beta_limit(const Graph& g) {
  // rho of a reducible matrix is the largest rho over its irreducible
  // diagonal blocks, i.e. over the strongly connected components.
  double rho = 0.0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1 && !g.has_edge(comp[0], comp[0])) continue;
    rho = std::max(rho, spectral_data(adjacency_matrix(g.induced(comp))).rho);
  }
  return rho > 0.0 ? 1.0 / rho : std::numeric_limits<double>::infinity();
}

ScoreTable katz_score(const Graph& g, std::optional<double> beta) {
  const double limit = katz_beta_limit(g);
  const double b = beta.value_or(0.5 * limit);
  if (!(b > 0.0) || !(b < 1.0) || !(b < limit)) {
    std::ostringstream msg;
    msg << "katz: beta=" << b << " outside the convergence range (0, min(1, 1/rho(A)) = "
        << std::min(1.0, limit) << ")";
    throw ConfigError(msg.str());
  }
  const std::size_t n = g.n();
  DenseMatrix m = DenseMatrix::identity(n);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j : g.out_neighbors(i)) m(i, j) -= b;
  DenseMatrix inv = LuFactorization(std::move(m)).inverse();
  for (std::size_t i = 0; i < n; ++i) inv(i, i) -= 1.0;
  return ScoreTable("katz", std::move(inv));
}

ScoreTable hitting_time_score(const Graph& g) {
  require_connected(g, "hitting-time");
  const std::size_t n = g.n();
  const DenseMatrix p = normalized_matrix(g).dense();

  // Stationary distribution: (I - P)^T pi = 0 with the last equation
  // replaced by sum(pi) = 1.
  DenseMatrix sys(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = (i == j ? 1.0 : 0.0) - p(j, i);
  for (std::size_t j = 0; j < n; ++j) sys(n - 1, j) = 1.0;
  std::vector<double> rhs(n, 0.0);
  rhs[n - 1] = 1.0;
  const std::vector<double> pi = LuFactorization(std::move(sys)).solve(rhs);

  // Fundamental matrix Z = (I - P + 1 pi)^{-1}; H_ij = (Z_jj - Z_ij) / pi_j.
  DenseMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f(i, j) = (i == j ? 1.0 : 0.0) - p(i, j) + pi[j];
  const DenseMatrix z = LuFactorization(std::move(f)).inverse();

  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s(i, j) = -(z(j, j) - z(i, j)) / pi[j];
  return ScoreTable("hitting-time", std::move(s));
}

ScoreTable common_neighbors_score(const Graph& g) {
  require_undirected(g, "common-neighbors");
  const auto nb = neighbor_sets(g);
  DenseMatrix s(g.n(), g.n());
  for (NodeId i = 0; i < g.n(); ++i)
    for (NodeId j = i + 1; j < g.n(); ++j)
      s(i, j) = s(j, i) = static_cast<double>(intersection_size(nb[i], nb[j]));
  return ScoreTable("common-neighbors", std::move(s));
}

ScoreTable jaccard_score(const Graph& g) {
  require_undirected(g, "jaccard");
  const auto nb = neighbor_sets(g);
  DenseMatrix s(g.n(), g.n());
  for (NodeId i = 0; i < g.n(); ++i) {
    for (NodeId j = i + 1; j < g.n(); ++j) {
      const std::size_t common = intersection_size(nb[i], nb[j]);
      const std::size_t uni = nb[i].size() + nb[j].size() - common;
      s(i, j) = s(j, i) = uni == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(uni);
    }
  }
  return ScoreTable("jaccard", std::move(s));
}

ScoreTable preferential_attachment_score(const Graph& g) {
  require_undirected(g, "preferential-attachment");
  const auto nb = neighbor_sets(g);
  DenseMatrix s(g.n(), g.n());
  for (NodeId i = 0; i < g.n(); ++i)
    for (NodeId j = 0; j < g.n(); ++j)
      if (i != j) s(i, j) = static_cast<double>(nb[i].size() * nb[j].size());
  return ScoreTable("preferential-attachment", std::move(s));
}

ScoreTable resistance_distance_score(const Graph& g) {
  require_undirected(g, "resistance-distance");
  require_connected(g, "resistance-distance");
  const std::size_t n = g.n();
  const auto nb = neighbor_sets(g);
  const double shift = 1.0 / static_cast<double>(n);
  // L+ = (L + J/n)^{-1} - J/n for connected graphs.
  DenseMatrix l(n, n, shift);
  for (NodeId i = 0; i < n; ++i) {
    l(i, i) += static_cast<double>(nb[i].size());
    for (NodeId j : nb[i]) l(i, j) -= 1.0;
  }
  DenseMatrix pinv = LuFactorization(std::move(l)).inverse();
  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s(i, j) = -(pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j));
  return ScoreTable("resistance-distance", std::move(s));
}

}  // namespace etlink
