#pragma once

#include <optional>

#include "etlink/graph.hpp"
#include "etlink/score_table.hpp"

namespace etlink {

// All baseline scores follow "higher is better": distance-like quantities
// are negated.

// -delta(i,j). Requires a (strongly) connected graph.
ScoreTable shortest_path_score(const Graph& g);

// sum_{l>=1} beta^l (A^l)_ij = ((I - beta A)^{-1} - I)_ij, counting walks.
// beta defaults to 0.5 / rho(A); beta outside (0, 1/rho(A)) throws ConfigError.
ScoreTable katz_score(const Graph& g, std::optional<double> beta = std::nullopt);

// Largest beta for which the Katz series converges, 1 / rho(A).
double katz_beta_limit(const Graph& g);

// -H_ij, the expected number of steps for the random walk with
// P = D^{-1} A to first reach j from i. Requires a (strongly) connected graph.
ScoreTable hitting_time_score(const Graph& g);

// Undirected-only predictors; directed input throws ConfigError.
ScoreTable common_neighbors_score(const Graph& g);
ScoreTable jaccard_score(const Graph& g);
ScoreTable preferential_attachment_score(const Graph& g);

// -(L+_ii + L+_jj - 2 L+_ij) with L+ the pseudoinverse of the Laplacian.
// Requires a connected undirected graph.
ScoreTable resistance_distance_score(const Graph& g);

}  // namespace etlink
