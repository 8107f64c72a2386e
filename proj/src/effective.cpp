#include "etlink/effective.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "etlink/error.hpp"
#include "etlink/kernels.hpp"

namespace etlink {

namespace {

unsigned resolve_threads(unsigned requested, std::size_t rows) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(rows, 1)));
}

// Runs body(i, worker) for every row i, rows handed out dynamically. Each
// pair is computed by exactly one worker, so results do not depend on the
// number of threads.
template <typename Body>
void for_each_row(std::size_t rows, unsigned threads, Body&& body) {
  threads = resolve_threads(threads, rows);
  if (threads <= 1) {
    for (std::size_t i = 0; i < rows; ++i) body(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < rows && !failed; i = next.fetch_add(1))
          body(i, w);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Pair results land in `entries` (off-diagonal) and `loop_part`, where
// loop_part(i, k) is the (i,i) entry of the reduction over {i, k}. The
// diagonal is then summed in ascending k for every i.
void assemble_diagonal(DenseMatrix& entries, const DenseMatrix& loop_part) {
  const std::size_t n = entries.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) acc += loop_part(i, k);
    entries(i, i) = acc;
  }
}

void store_pair(DenseMatrix& entries, DenseMatrix& loop_part, NodeId i, NodeId j,
                const PairReduction& r) {
  entries(i, j) = r.ij;
  entries(j, i) = r.ji;
  loop_part(i, j) = r.ii;
  loop_part(j, i) = r.jj;
}

struct PairWorkspace {
  explicit PairWorkspace(std::size_t n) : local(n, -1), mask(n, 0) {}

  std::vector<std::int32_t> local;
  std::vector<std::uint8_t> mask;
  std::vector<NodeId> interior;
  std::vector<std::uint32_t> ptr;
  std::vector<std::uint32_t> idx;
  std::vector<double> val;
  std::vector<double> b, x, y;
};

// Interleaved two-column Horner recurrence
//   X <- B + (rho^{-1} M_TT) X,  X_0 = B,  B = M_TS,
// run ell times, so X = sum_{k=0}^{ell} (rho^{-1} M_TT)^k M_TS.
PairReduction evaluate_truncated(const TransitionMatrix& m, NodeId i, NodeId j,
                                 std::span<const NodeId> interior, unsigned ell, double rho_inv,
                                 PairWorkspace& ws) {
  PairReduction r{m.at(i, i), m.at(i, j), m.at(j, i), m.at(j, j)};
  const std::size_t t = interior.size();
  if (t == 0) return r;

  for (std::size_t l = 0; l < t; ++l) ws.local[interior[l]] = static_cast<std::int32_t>(l);

  ws.ptr.assign(t + 1, 0);
  ws.idx.clear();
  ws.val.clear();
  ws.b.assign(2 * t, 0.0);
  for (std::size_t l = 0; l < t; ++l) {
    const auto cols = m.row_indices(interior[l]);
    const auto vals = m.row_values(interior[l]);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const NodeId c = cols[e];
      if (c == i) {
        ws.b[2 * l] = vals[e];
      } else if (c == j) {
        ws.b[2 * l + 1] = vals[e];
      } else if (const std::int32_t lc = ws.local[c]; lc >= 0) {
        ws.idx.push_back(static_cast<std::uint32_t>(lc));
        ws.val.push_back(vals[e] * rho_inv);
      }
    }
    ws.ptr[l + 1] = static_cast<std::uint32_t>(ws.idx.size());
  }

  ws.x = ws.b;
  ws.y.resize(2 * t);
  for (unsigned step = 0; step < ell; ++step) {
    for (std::size_t l = 0; l < t; ++l) {
      double a0 = ws.b[2 * l];
      double a1 = ws.b[2 * l + 1];
      for (std::uint32_t e = ws.ptr[l]; e < ws.ptr[l + 1]; ++e) {
        const double v = ws.val[e];
        const std::uint32_t c = ws.idx[e];
        a0 += v * ws.x[2 * c];
        a1 += v * ws.x[2 * c + 1];
      }
      ws.y[2 * l] = a0;
      ws.y[2 * l + 1] = a1;
    }
    ws.x.swap(ws.y);
  }

  const auto left = [&](NodeId row, double& to_i, double& to_j) {
    double a0 = 0.0, a1 = 0.0;
    const auto cols = m.row_indices(row);
    const auto vals = m.row_values(row);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      if (const std::int32_t lc = ws.local[cols[e]]; lc >= 0) {
        a0 += vals[e] * ws.x[2 * static_cast<std::size_t>(lc)];
        a1 += vals[e] * ws.x[2 * static_cast<std::size_t>(lc) + 1];
      }
    }
    to_i += rho_inv * a0;
    to_j += rho_inv * a1;
  };
  left(i, r.ii, r.ij);
  left(j, r.ji, r.jj);

  for (NodeId k : interior) ws.local[k] = -1;
  return r;
}

void collect_gamma(const DistanceMatrix& d, NodeId i, NodeId j, unsigned ell, PairWorkspace& ws) {
  const std::size_t n = d.n();
  const auto bound = static_cast<std::uint16_t>(
      std::min<unsigned>(ell, DistanceMatrix::kUnreachable - 1));
  kernels::active().gamma_mask(d.from(i).data(), d.to(j).data(), d.from(j).data(),
                               d.to(i).data(), bound, ws.mask.data(), n);
  ws.interior.clear();
  for (std::size_t k = 0; k < n; ++k)
    if (ws.mask[k] && k != i && k != j) ws.interior.push_back(static_cast<NodeId>(k));
}

void check_pair(std::size_t n, NodeId i, NodeId j) {
  if (i >= n || j >= n) throw std::invalid_argument("node index out of range");
  if (i == j) throw std::invalid_argument("pair reduction needs two distinct nodes");
}

}  // namespace

PairReduction pair_reduction_exact(const DenseMatrix& m, NodeId i, NodeId j, double rho,
                                   const NumericsConfig& cfg) {
  check_pair(m.rows(), i, j);
  const std::size_t subset[2] = {i, j};
  const ReducedMatrix red = isoradial_reduction(m, subset, rho, cfg);
  return {red.entries(0, 0), red.entries(0, 1), red.entries(1, 0), red.entries(1, 1)};
}

EffectiveTransitionMatrix effective_transition_exact(const TransitionMatrix& m,
                                                     const SpectralData& sd,
                                                     const EtOptions& opt) {
  const std::size_t n = m.n();
  if (n < 2) throw std::invalid_argument("effective transition matrix needs at least two nodes");
  if (!is_irreducible(m)) {
    throw DatasetError(
        "exact effective transitions need an irreducible transition matrix "
        "(graph not (strongly) connected)");
  }
  const DenseMatrix dense = m.dense();
  EffectiveTransitionMatrix out;
  out.entries = DenseMatrix(n, n);
  out.mode = EtMode::Exact;
  out.source_variant = m.variant();
  out.source_rho = sd.rho;
  out.source_stochastic = m.row_stochastic(opt.numerics.power_tol * 100);
  DenseMatrix loop_part(n, n);

  for_each_row(n, opt.threads, [&](std::size_t i, unsigned) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = pair_reduction_exact(dense, static_cast<NodeId>(i), static_cast<NodeId>(j),
                                          sd.rho, opt.numerics);
      store_pair(out.entries, loop_part, static_cast<NodeId>(i), static_cast<NodeId>(j), r);
    }
  });
  assemble_diagonal(out.entries, loop_part);
  return out;
}

DenseMatrix scaled_effective(const EffectiveTransitionMatrix& e) {
  if (e.mode != EtMode::Exact)
    throw std::invalid_argument("scaled effective matrix is defined for exact matrices only");
  if (!e.source_stochastic)
    throw std::invalid_argument("scaled effective matrix needs a row-stochastic source");
  const std::size_t n = e.n();
  DenseMatrix s = e.entries;
  const double div = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) /= div;
  return s;
}

GammaSet gamma_set(const DistanceMatrix& d, NodeId i, NodeId j, unsigned ell) {
  check_pair(d.n(), i, j);
  if (ell == 0) throw std::invalid_argument("gamma_set: ell must be positive");
  PairWorkspace ws(d.n());
  collect_gamma(d, i, j, ell, ws);
  GammaSet g{i, j, ell, std::move(ws.interior)};
  g.members.push_back(i);
  g.members.push_back(j);
  std::sort(g.members.begin(), g.members.end());
  return g;
}

PairReduction truncated_reduction(const TransitionMatrix& m, NodeId i, NodeId j,
                                  std::span<const NodeId> interior, unsigned ell, double rho) {
  check_pair(m.n(), i, j);
  if (!(rho > 0.0)) throw std::invalid_argument("truncated reduction: rho must be positive");
  for (NodeId k : interior) {
    if (k >= m.n() || k == i || k == j)
      throw std::invalid_argument("truncated reduction: bad interior node");
  }
  PairWorkspace ws(m.n());
  return evaluate_truncated(m, i, j, interior, ell, 1.0 / rho, ws);
}

PairReduction lstep_reduction(const TransitionMatrix& m, NodeId i, NodeId j, unsigned ell,
                              const DistanceMatrix& d, double rho) {
  check_pair(m.n(), i, j);
  if (d.n() != m.n()) throw std::invalid_argument("distance matrix size mismatch");
  if (ell == 0) throw std::invalid_argument("l-step reduction: ell must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("l-step reduction: rho must be positive");
  PairWorkspace ws(m.n());
  collect_gamma(d, i, j, ell, ws);
  return evaluate_truncated(m, i, j, ws.interior, ell, 1.0 / rho, ws);
}

EffectiveTransitionMatrix effective_transition_lstep(const TransitionMatrix& m, unsigned ell,
                                                     const DistanceMatrix& d,
                                                     const SpectralData& sd,
                                                     const EtOptions& opt) {
  const std::size_t n = m.n();
  if (n < 2) throw std::invalid_argument("effective transition matrix needs at least two nodes");
  if (d.n() != n) throw std::invalid_argument("distance matrix size mismatch");
  if (ell == 0) throw std::invalid_argument("l-step approximation: ell must be positive");
  if (!(sd.rho > 0.0)) throw std::invalid_argument("l-step approximation: rho must be positive");

  EffectiveTransitionMatrix out;
  out.entries = DenseMatrix(n, n);
  out.mode = EtMode::LStep;
  out.ell = ell;
  out.source_variant = m.variant();
  out.source_rho = sd.rho;
  out.source_stochastic = m.row_stochastic(opt.numerics.power_tol * 100);
  DenseMatrix loop_part(n, n);
  const double rho_inv = 1.0 / sd.rho;

  const unsigned threads = resolve_threads(opt.threads, n);
  std::vector<PairWorkspace> workspaces;
  workspaces.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) workspaces.emplace_back(n);

  for_each_row(n, threads, [&](std::size_t i, unsigned w) {
    PairWorkspace& ws = workspaces[w];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto a = static_cast<NodeId>(i);
      const auto b = static_cast<NodeId>(j);
      collect_gamma(d, a, b, ell, ws);
      store_pair(out.entries, loop_part, a, b, evaluate_truncated(m, a, b, ws.interior, ell, rho_inv, ws));
    }
  });
  assemble_diagonal(out.entries, loop_part);
  return out;
}

ScoreTable et_score(const EffectiveTransitionMatrix& e, bool include_loops,
                    std::string predictor_id) {
  DenseMatrix s = e.entries;
  if (!include_loops)
    for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) = 0.0;
  return ScoreTable(std::move(predictor_id), std::move(s));
}

}  // namespace etlink
