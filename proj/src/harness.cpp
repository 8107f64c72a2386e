#include "etlink/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "etlink/baselines.hpp"
#include "etlink/effective.hpp"
#include "etlink/error.hpp"
#include "etlink/spectral.hpp"
#include "etlink/transition.hpp"

namespace etlink {

namespace {

// Undirected pairs are written with the smaller label first.
NodePair canonical(NodePair p, const Graph& g) {
  if (!g.directed() && g.label_rank()[p.src] > g.label_rank()[p.dst]) std::swap(p.src, p.dst);
  return p;
}

std::vector<EdgeRecord> temporal_order(std::span<const EdgeRecord> records) {
  std::vector<EdgeRecord> ordered(records.begin(), records.end());
  const auto stamped = std::count_if(ordered.begin(), ordered.end(),
                                     [](const EdgeRecord& r) { return r.timestamp.has_value(); });
  if (stamped == 0) return ordered;
  if (static_cast<std::size_t>(stamped) != ordered.size())
    throw DatasetError("some edges have timestamps and some do not");
  std::stable_sort(ordered.begin(), ordered.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    return *a.timestamp < *b.timestamp;
  });
  return ordered;
}

}  // namespace

SplitResult temporal_split(std::span<const EdgeRecord> records, double fraction,
                           const SplitOptions& opt) {
  if (!(fraction > 0.0 && fraction < 1.0))
    throw ConfigError("split fraction must lie strictly between 0 and 1");
  if (records.empty()) throw DatasetError("no edges to split");
  const std::vector<EdgeRecord> ordered = temporal_order(records);
  const std::size_t m = ordered.size();
  // Guard against 0.7 * 10 = 7.000000000000001 rounding up to 8.
  const auto cut = std::min<std::size_t>(
      m, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(m) - 1e-9)));

  const std::span<const EdgeRecord> train_part(ordered.data(), cut);
  const std::span<const EdgeRecord> test_part(ordered.data() + cut, m - cut);
  const Graph full_train = Graph::build(train_part, opt.directed, opt.weighted, opt.numbering);

  SplitResult out{largest_component(full_train), {}, 0, 0};
  out.records = m;
  out.train_records = cut;
  out.raw_test = test_part.size();

  const Graph& train = out.train;
  for (const auto& r : test_part) {
    if (!full_train.find(r.src) || !full_train.find(r.dst)) {
      ++out.dropped_unknown_node;
      continue;
    }
    const auto s = train.find(r.src);
    const auto d = train.find(r.dst);
    if (!s || !d) {
      ++out.dropped_outside_component;
      continue;
    }
    const NodePair p = canonical({*s, *d}, train);
    if (p.src == p.dst && !opt.include_loops) {
      ++out.dropped_repeat;
      continue;
    }
    if (train.has_edge(p.src, p.dst)) {
      ++out.dropped_existing;
      continue;
    }
    out.test_edges.push_back(p);
  }
  std::sort(out.test_edges.begin(), out.test_edges.end());
  const auto last = std::unique(out.test_edges.begin(), out.test_edges.end());
  out.dropped_repeat += static_cast<std::size_t>(out.test_edges.end() - last);
  out.test_edges.erase(last, out.test_edges.end());

  out.kappa = out.test_edges.size();
  out.dropped = out.raw_test - out.kappa;
  if (out.kappa == 0) throw DatasetError("no predictable test edges");
  return out;
}

std::vector<NodePair> candidate_pairs(const Graph& train, bool include_loops) {
  std::vector<NodePair> out;
  const auto n = static_cast<NodeId>(train.n());
  for (NodeId i = 0; i < n; ++i) {
    const auto nb = train.out_neighbors(i);
    auto it = nb.begin();
    for (NodeId j = train.directed() ? 0 : i; j < n; ++j) {
      while (it != nb.end() && *it < j) ++it;
      const bool edge = it != nb.end() && *it == j;
      if (edge) continue;
      if (i == j && !include_loops) continue;
      out.push_back(canonical({i, j}, train));
    }
  }
  return out;
}

TopK top_k_predict(const ScoreTable& scores, std::span<const NodePair> candidates,
                   std::size_t kappa, std::span<const std::uint32_t> label_rank) {
  TopK out;
  out.kappa_exceeds_candidates = kappa > candidates.size();
  out.ranked = rank_pairs(scores, candidates, true, label_rank, kappa);
  return out;
}

std::size_t hits(std::span<const RankedPair> predicted, std::span<const NodePair> test_edges) {
  std::size_t h = 0;
  for (const auto& p : predicted)
    if (std::binary_search(test_edges.begin(), test_edges.end(), p.pair)) ++h;
  return h;
}

double accuracy(std::span<const RankedPair> predicted, std::span<const NodePair> test_edges) {
  if (predicted.empty()) throw std::invalid_argument("accuracy of an empty prediction list");
  return static_cast<double>(hits(predicted, test_edges)) / static_cast<double>(predicted.size());
}

std::vector<RankedPair> rank_existing_edges(const ScoreTable& scores, const Graph& train,
                                            bool ascending, bool include_loops) {
  std::vector<NodePair> pairs;
  for (const auto& e : train.edges())
    if (e.src != e.dst || include_loops) pairs.push_back(canonical({e.src, e.dst}, train));
  return rank_pairs(scores, pairs, !ascending, train.label_rank());
}

PredictorSpec PredictorSpec::parse(std::string_view text) {
  PredictorSpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw ConfigError("empty predictor name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw ConfigError("predictor parameter '" + std::string(item) + "' is not key=value");
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

std::string PredictorSpec::params_string() const {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + '=' + v;
  }
  return out;
}

const std::vector<std::string>& predictor_names() {
  static const std::vector<std::string> names{
      "shortest-path",  "katz",           "hitting-time",   "common-neighbors",
      "jaccard",        "preferential-attachment",          "resistance-distance",
      "et-standard",    "et-normalized",  "et-weighted",    "eta-standard",
      "eta-normalized", "eta-weighted"};
  return names;
}

namespace {

bool undirected_only(const std::string& name) {
  return name == "common-neighbors" || name == "jaccard" || name == "preferential-attachment" ||
         name == "resistance-distance";
}

bool is_et(const std::string& name) { return name.rfind("et-", 0) == 0; }
bool is_eta(const std::string& name) { return name.rfind("eta-", 0) == 0; }

Variant et_variant(const std::string& name) {
  const std::string v = name.substr(name.find('-') + 1);
  if (v == "standard") return Variant::Standard;
  if (v == "normalized") return Variant::Normalized;
  return Variant::Weighted;
}

double parse_param_double(const PredictorSpec& s, const std::string& key) {
  const std::string& v = s.params.at(key);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw ConfigError(s.name + ": invalid " + key + " '" + v + "'");
  return out;
}

unsigned parse_param_unsigned(const PredictorSpec& s, const std::string& key) {
  const std::string& v = s.params.at(key);
  std::size_t used = 0;
  unsigned long out = 0;
  try {
    out = std::stoul(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-' || out == 0 || out > 10000)
    throw ConfigError(s.name + ": invalid " + key + " '" + v + "' (expected 1..10000)");
  return static_cast<unsigned>(out);
}

// Effective parameters of one predictor after applying global defaults.
struct ResolvedPredictor {
  PredictorSpec spec;
  std::optional<double> beta;
  unsigned ell = 0;
  std::string skip_reason;
};

ResolvedPredictor resolve(const PredictorSpec& spec, const ExperimentConfig& cfg,
                          const Graph& train) {
  const auto& names = predictor_names();
  if (std::find(names.begin(), names.end(), spec.name) == names.end())
    throw ConfigError("unknown predictor '" + spec.name + "'");
  ResolvedPredictor r{spec, std::nullopt, 0, {}};
  for (const auto& [key, value] : spec.params) {
    const bool ok = (key == "beta" && spec.name == "katz") || (key == "ell" && is_eta(spec.name));
    if (!ok) throw ConfigError(spec.name + ": unknown parameter '" + key + "'");
  }
  if (spec.name == "katz") {
    r.beta = spec.params.count("beta") ? std::optional(parse_param_double(spec, "beta")) : cfg.beta;
    if (!r.beta) r.beta = 0.5 * katz_beta_limit(train);
    r.spec.params["beta"] = format_score(*r.beta);
  }
  if (is_eta(spec.name)) {
    r.ell = spec.params.count("ell") ? parse_param_unsigned(spec, "ell") : cfg.ell;
    if (r.ell == 0) throw ConfigError(spec.name + ": ell must be positive");
    r.spec.params["ell"] = std::to_string(r.ell);
  }
  if ((is_et(spec.name) || is_eta(spec.name)) && et_variant(spec.name) == Variant::Weighted &&
      !cfg.weighted) {
    throw ConfigError(spec.name + " needs a weighted dataset (--weighted and a weight column)");
  }
  if (is_et(spec.name) && train.n() > cfg.exact_node_cap) {
    throw ConfigError(spec.name + ": training graph has " + std::to_string(train.n()) +
                      " nodes, above the exact-mode cap of " +
                      std::to_string(cfg.exact_node_cap) + "; use eta-" + spec.name.substr(3) +
                      " (l-step approximation) instead");
  }
  if (cfg.directed && undirected_only(spec.name))
    r.skip_reason = "skipped: " + spec.name + " is defined for undirected graphs only";
  return r;
}

ScoreTable compute_scores(const ResolvedPredictor& p, const Graph& train,
                          const ExperimentConfig& cfg) {
  const std::string& name = p.spec.name;
  if (name == "shortest-path") return shortest_path_score(train);
  if (name == "katz") return katz_score(train, p.beta);
  if (name == "hitting-time") return hitting_time_score(train);
  if (name == "common-neighbors") return common_neighbors_score(train);
  if (name == "jaccard") return jaccard_score(train);
  if (name == "preferential-attachment") return preferential_attachment_score(train);
  if (name == "resistance-distance") return resistance_distance_score(train);

  const TransitionMatrix m = transition_matrix(train, et_variant(name));
  EtOptions opt;
  opt.threads = cfg.threads;
  const SpectralData sd = spectral_data(m, opt.numerics);
  if (is_et(name)) return et_score(effective_transition_exact(m, sd, opt), cfg.include_loops, name);
  const DistanceMatrix d = bfs_distances(train);
  return et_score(effective_transition_lstep(m, p.ell, d, sd, opt), cfg.include_loops, name);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.dataset_path.empty()) throw ConfigError("no dataset path given");
  const auto records = read_edge_list(config.dataset_path, config.schema);
  return run_experiment(records, config);
}

ExperimentReport run_experiment(std::span<const EdgeRecord> records,
                                const ExperimentConfig& config) {
  if (config.predictors.empty()) throw ConfigError("no predictors requested");
  if (config.weighted && !config.schema.has(Column::Weight))
    throw ConfigError("--weighted needs a weight column in the schema");

  SplitOptions so;
  so.directed = config.directed;
  so.weighted = config.weighted;
  so.include_loops = config.include_loops;
  so.numbering =
      config.seed_label_order ? NodeNumbering::LabelOrder : NodeNumbering::FirstAppearance;
  const SplitResult split = [&] {
    try {
      return temporal_split(records, config.split, so);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      // Graph construction rejects bad weights.
      throw DatasetError(e.what());
    }
  }();
  const Graph& train = split.train;

  std::vector<ResolvedPredictor> resolved;
  for (const auto& spec : config.predictors) resolved.push_back(resolve(spec, config, train));

  const std::size_t kappa = config.kappa.value_or(split.kappa);
  if (kappa == 0) throw ConfigError("kappa must be positive");
  const auto candidates = candidate_pairs(train, config.include_loops);

  ExperimentReport report;
  const Graph dataset = Graph::build(records, config.directed, config.weighted);
  report.metadata = {
      {"dataset", config.dataset_path.empty() ? "<memory>" : config.dataset_path},
      {"schema", config.schema.to_string()},
      {"directed", yes_no(config.directed)},
      {"weighted", yes_no(config.weighted)},
      {"records", std::to_string(split.records)},
      {"n", std::to_string(dataset.n())},
      {"m", std::to_string(dataset.m())},
      {"split", format_score(config.split)},
      {"train_records", std::to_string(split.train_records)},
      {"train_n", std::to_string(train.n())},
      {"train_m", std::to_string(train.m())},
      {"raw_test", std::to_string(split.raw_test)},
      {"test_kept", std::to_string(split.kappa)},
      {"dropped", std::to_string(split.dropped)},
      {"dropped_unknown_node", std::to_string(split.dropped_unknown_node)},
      {"dropped_outside_component", std::to_string(split.dropped_outside_component)},
      {"dropped_existing", std::to_string(split.dropped_existing)},
      {"dropped_repeat", std::to_string(split.dropped_repeat)},
      {"test_filter", "endpoints must lie in the training graph's largest component"},
      {"kappa", std::to_string(kappa)},
      {"candidates", std::to_string(candidates.size())},
      {"include_loops", yes_no(config.include_loops)},
  };

  for (const auto& p : resolved) {
    ReportRow row;
    row.predictor = p.spec.name;
    row.params = p.spec.params_string();
    row.kappa = kappa;
    if (!p.skip_reason.empty()) {
      row.status = p.skip_reason;
      report.rows.push_back(row);
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    ScoreTable scores = compute_scores(p, train, config);
    if (!config.directed) scores = scores.symmetrized();
    const auto stop = std::chrono::steady_clock::now();
    row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const TopK top = top_k_predict(scores, candidates, kappa, train.label_rank());
    row.hits = hits(top.ranked, split.test_edges);
    row.accuracy = top.ranked.empty() ? 0.0 : accuracy(top.ranked, split.test_edges);
    if (top.kappa_exceeds_candidates) {
      row.status = "warning: kappa exceeds the " + std::to_string(candidates.size()) +
                   " candidate pairs";
    }

    std::vector<PredictionRow> preds;
    preds.reserve(top.ranked.size());
    for (std::size_t k = 0; k < top.ranked.size(); ++k) {
      const auto& rp = top.ranked[k];
      preds.push_back({k + 1, train.label(rp.pair.src), train.label(rp.pair.dst), rp.score,
                       std::binary_search(split.test_edges.begin(), split.test_edges.end(),
                                          rp.pair)});
    }
    report.predictions.emplace_back(p.spec.name, std::move(preds));
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_report(const ExperimentReport& report, std::ostream& out, bool include_timing) {
  for (const auto& [key, value] : report.metadata) out << "# " << key << '=' << value << '\n';
  out << "predictor,params,kappa,hits,accuracy,wall_time_ms,status\n";
  char buf[64];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%.3f", include_timing ? r.wall_time_ms : 0.0);
    out << r.predictor << ',' << r.params << ',' << r.kappa << ',' << r.hits << ','
        << format_score(r.accuracy) << ',' << buf << ',' << r.status << '\n';
  }
  if (!out) throw std::ios_base::failure("failed writing report");
}

}  // namespace etlink
