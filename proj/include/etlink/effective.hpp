#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etlink/dense.hpp"
#include "etlink/graph.hpp"
#include "etlink/score_table.hpp"
#include "etlink/spectral.hpp"
#include "etlink/transition.hpp"

namespace etlink {

enum class EtMode { Exact, LStep };

// Matrix of eventual-transition scores. In Exact mode with a row-stochastic
// source, off-diagonal entries are probabilities of reaching j from i before
// returning to i, and every row sums to n-1.
struct EffectiveTransitionMatrix {
  DenseMatrix entries;
  EtMode mode = EtMode::Exact;
  unsigned ell = 0;  // step bound, LStep only
  Variant source_variant = Variant::Custom;
  double source_rho = 0.0;
  bool source_stochastic = false;

  std::size_t n() const { return entries.rows(); }
};

// 2x2 reduction over the ordered pair (i, j):
//   [ ii  ij ]
//   [ ji  jj ]
struct PairReduction {
  double ii = 0.0;
  double ij = 0.0;
  double ji = 0.0;
  double jj = 0.0;
};

struct EtOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  NumericsConfig numerics;
};

PairReduction pair_reduction_exact(const DenseMatrix& m, NodeId i, NodeId j, double rho,
                                   const NumericsConfig& cfg = {});

// One 2x2 isoradial reduction per unordered pair, assembled so that
// eps_ij = I_{ij}(M)_12 (i<j), eps_ji = I_{ij}(M)_21 and eps_ii sums the
// (i,i) entries of all reductions involving i. Requires irreducible M;
// throws DatasetError otherwise.
EffectiveTransitionMatrix effective_transition_exact(const TransitionMatrix& m,
                                                     const SpectralData& sd,
                                                     const EtOptions& opt = {});

// E / (n - 1). Row stochastic when the source is. Throws std::invalid_argument
// for l-step matrices or non-stochastic sources.
DenseMatrix scaled_effective(const EffectiveTransitionMatrix& e);

struct GammaSet {
  NodeId i = 0;
  NodeId j = 0;
  unsigned ell = 0;
  std::vector<NodeId> members;  // ascending, contains i and j
};

// { k : d(i,k) + d(k,j) <= ell and d(j,k) + d(k,i) <= ell } ∪ {i, j}.
GammaSet gamma_set(const DistanceMatrix& d, NodeId i, NodeId j, unsigned ell);

// M_SS + rho^{-1} M_ST (sum_{k=0}^{ell} (rho^{-1} M_TT)^k) M_TS for S = {i, j}
// and T = `interior` (must not contain i or j). Evaluated with ell
// sparse matrix-vector steps; no matrix powers are formed.
PairReduction truncated_reduction(const TransitionMatrix& m, NodeId i, NodeId j,
                                  std::span<const NodeId> interior, unsigned ell, double rho);

// truncated_reduction with T = gamma_set(d, i, j, ell) minus {i, j}.
PairReduction lstep_reduction(const TransitionMatrix& m, NodeId i, NodeId j, unsigned ell,
                              const DistanceMatrix& d, double rho);

// l-step approximation assembled with the same index rule as the exact
// matrix. The source need not be irreducible.
EffectiveTransitionMatrix effective_transition_lstep(const TransitionMatrix& m, unsigned ell,
                                                     const DistanceMatrix& d,
                                                     const SpectralData& sd,
                                                     const EtOptions& opt = {});

// score(i,j) = eps_ij off the diagonal; the diagonal is 0 unless include_loops.
ScoreTable et_score(const EffectiveTransitionMatrix& e, bool include_loops = false,
                    std::string predictor_id = "effective-transition");

}  // namespace etlink
