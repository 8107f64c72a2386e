#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "etlink/edge_record.hpp"
#include "etlink/graph.hpp"
#include "etlink/io.hpp"
#include "etlink/score_table.hpp"

namespace etlink {

struct SplitOptions {
  bool directed = true;
  bool weighted = false;
  bool include_loops = false;
  NodeNumbering numbering = NodeNumbering::FirstAppearance;
};

// Outcome of the temporal split. Test edges are in train-graph node ids,
// canonical (src <= dst) for undirected graphs, sorted and unique.
struct SplitResult {
  Graph train;
  std::vector<NodePair> test_edges;
  std::size_t kappa = 0;
  std::size_t dropped = 0;

  std::size_t records = 0;        // m
  std::size_t train_records = 0;  // ceil(fraction * m)
  std::size_t raw_test = 0;       // m - train_records
  std::size_t dropped_unknown_node = 0;
  std::size_t dropped_outside_component = 0;
  std::size_t dropped_existing = 0;  // already an edge of the train graph
  std::size_t dropped_repeat = 0;    // repeated test edge, or a loop
};

// Records are ordered by timestamp (stable) when every record has one, file
// order when none has one; a mix throws DatasetError. The first
// ceil(fraction*m) records form the training graph, which is then cut down
// to its largest (strongly) connected component. Test edges touching nodes
// outside that component are dropped. Throws DatasetError when no
// predictable test edge is left.
SplitResult temporal_split(std::span<const EdgeRecord> records, double fraction,
                           const SplitOptions& opt);

// Non-edges of `train`: ordered pairs for directed graphs, src < dst for
// undirected ones. Loops (i,i) are included only with include_loops.
std::vector<NodePair> candidate_pairs(const Graph& train, bool include_loops = false);

struct TopK {
  std::vector<RankedPair> ranked;
  bool kappa_exceeds_candidates = false;
};

// Highest-scoring kappa candidates, ties broken by label order.
TopK top_k_predict(const ScoreTable& scores, std::span<const NodePair> candidates,
                   std::size_t kappa, std::span<const std::uint32_t> label_rank = {});

// |predicted ∩ test| / |predicted|. `test_edges` must be sorted.
double accuracy(std::span<const RankedPair> predicted, std::span<const NodePair> test_edges);
std::size_t hits(std::span<const RankedPair> predicted, std::span<const NodePair> test_edges);

// Edges of `train` ranked by score, lowest first when ascending.
std::vector<RankedPair> rank_existing_edges(const ScoreTable& scores, const Graph& train,
                                            bool ascending = true, bool include_loops = false);

// "name" or "name:key=value,key=value".
struct PredictorSpec {
  std::string name;
  std::map<std::string, std::string> params;

  static PredictorSpec parse(std::string_view text);
  std::string params_string() const;
};

const std::vector<std::string>& predictor_names();

struct ExperimentConfig {
  std::string dataset_path;
  EdgeSchema schema;
  bool directed = true;
  bool weighted = false;
  std::vector<PredictorSpec> predictors;
  double split = 0.8;
  std::optional<std::size_t> kappa;
  unsigned ell = 3;
  std::optional<double> beta;
  bool include_loops = false;
  bool seed_label_order = false;
  std::size_t exact_node_cap = 1500;
  unsigned threads = 0;
};

struct ReportRow {
  std::string predictor;
  std::string params;
  std::size_t kappa = 0;
  std::size_t hits = 0;
  double accuracy = 0.0;
  double wall_time_ms = 0.0;
  std::string status = "ok";
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  // Ranked top-kappa predictions, one list per predictor that ran.
  std::vector<std::pair<std::string, std::vector<PredictionRow>>> predictions;
};

ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment(std::span<const EdgeRecord> records,
                                const ExperimentConfig& config);

// Metadata as leading '#' lines, then
// "predictor,params,kappa,hits,accuracy,wall_time_ms,status".
// With include_timing=false the wall_time_ms column is written as 0 so the
// file is reproducible byte for byte.
void write_report(const ExperimentReport& report, std::ostream& out, bool include_timing = true);

}  // namespace etlink
