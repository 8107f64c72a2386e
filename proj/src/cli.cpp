#include "etlink/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "etlink/error.hpp"
#include "etlink/harness.hpp"
#include "etlink/io.hpp"
#include "etlink/kernels.hpp"
#include "etlink/synthetic.hpp"

namespace etlink {

std::string prediction_path(const std::string& base, const std::string& predictor) {
  const auto slash = base.find_last_of('/');
  const auto dot = base.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return base + "." + predictor;
  return base.substr(0, dot) + "." + predictor + base.substr(dot);
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  return f;
}

struct PredictArgs {
  std::string input;
  std::string schema = "src,dst";
  bool directed = false;
  bool undirected = false;
  bool weighted = false;
  std::vector<std::string> predictors;
  double split = 0.8;
  std::size_t kappa = 0;
  unsigned ell = 3;
  double beta = 0.0;
  bool include_loops = false;
  std::string out_report;
  std::string out_predictions;
  bool seed_label_order = false;
  std::size_t exact_node_cap = 1500;
  unsigned threads = 0;
  bool no_timing = false;
};

struct GenerateArgs {
  std::uint32_t nodes = 2000;
  std::uint32_t edges_per_node = 20;
  std::uint64_t seed = 1;
  std::string order = "random";
  std::string out;
};

int run_predict(const PredictArgs& a, CLI::App& cmd, std::ostream& out) {
  if (a.directed == a.undirected) throw ConfigError("give exactly one of --directed, --undirected");
  ExperimentConfig cfg;
  cfg.dataset_path = a.input;
  cfg.schema = EdgeSchema::parse(a.schema);
  cfg.directed = a.directed;
  cfg.weighted = a.weighted;
  for (const auto& p : a.predictors) cfg.predictors.push_back(PredictorSpec::parse(p));
  cfg.split = a.split;
  if (cmd.count("--kappa")) cfg.kappa = a.kappa;
  cfg.ell = a.ell;
  if (cmd.count("--beta")) cfg.beta = a.beta;
  cfg.include_loops = a.include_loops;
  cfg.seed_label_order = a.seed_label_order;
  cfg.exact_node_cap = a.exact_node_cap;
  cfg.threads = a.threads;

  const ExperimentReport report = run_experiment(cfg);

  if (!a.out_report.empty()) {
    auto f = open_output(a.out_report);
    write_report(report, f, !a.no_timing);
  } else {
    write_report(report, out, !a.no_timing);
  }
  if (!a.out_predictions.empty()) {
    for (const auto& [name, rows] : report.predictions) {
      const std::string path = report.predictions.size() == 1
                                   ? a.out_predictions
                                   : prediction_path(a.out_predictions, name);
      auto f = open_output(path);
      write_ranked_predictions(rows, f);
    }
  }
  return 0;
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
  PreferentialAttachmentOptions opt;
  opt.nodes = a.nodes;
  opt.edges_per_node = a.edges_per_node;
  opt.seed = a.seed;
  opt.order = a.order == "growth" ? TimestampOrder::Growth : TimestampOrder::Random;
  std::vector<EdgeRecord> records;
  try {
    records = preferential_attachment(opt);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ofstream file;
  if (!a.out.empty()) file = open_output(a.out);
  std::ostream& sink = a.out.empty() ? out : file;
  sink << "# preferential attachment n=" << a.nodes << " k=" << a.edges_per_node
       << " seed=" << a.seed << "\n# src dst timestamp\n";
  for (const auto& r : records) sink << r.src << ' ' << r.dst << ' ' << *r.timestamp << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Link prediction with effective transitions and baseline predictors", "etlink"};
  app.require_subcommand(1);
  std::string kernel_choice;
  app.add_option("--kernels", kernel_choice, "Kernel backend: scalar or avx2")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  PredictArgs pa;
  CLI::App* predict = app.add_subcommand("predict", "Run a temporal-split link prediction experiment");
  predict->add_option("--input", pa.input, "Edge list file")->required();
  predict->add_option("--schema", pa.schema, "Column order, e.g. src,dst,timestamp");
  auto* dir = predict->add_flag("--directed", pa.directed, "Treat edges as directed");
  auto* undir = predict->add_flag("--undirected", pa.undirected, "Treat edges as undirected");
  dir->excludes(undir);
  predict->add_flag("--weighted", pa.weighted, "Use the weight column");
  predict
      ->add_option("--predictor", pa.predictors,
                   "NAME[:param=val,...]; repeat for several predictors")
      ->required();
  predict->add_option("--split", pa.split, "Training fraction");
  predict->add_option("--kappa", pa.kappa, "Number of predictions (default: test-set size)");
  predict->add_option("--ell", pa.ell, "Step bound for eta-* predictors");
  predict->add_option("--beta", pa.beta, "Katz damping factor");
  predict->add_flag("--include-loops", pa.include_loops, "Score self-loops as candidates");
  predict->add_option("--out-report", pa.out_report, "Report CSV (default: stdout)");
  predict->add_option("--out-predictions", pa.out_predictions,
                      "Ranked predictions CSV; with several predictors the name is inserted "
                      "before the extension");
  predict->add_flag("--seed-label-order", pa.seed_label_order,
                    "Number nodes in label order instead of first appearance");
  predict->add_option("--exact-node-cap", pa.exact_node_cap,
                      "Largest training graph accepted by et-* predictors");
  predict->add_option("--threads", pa.threads, "Worker threads (0 = all cores)");
  predict->add_flag("--no-timing", pa.no_timing, "Write 0 for wall_time_ms");

  GenerateArgs ga;
  CLI::App* generate =
      app.add_subcommand("generate", "Write a synthetic preferential-attachment edge list");
  generate->add_option("--nodes", ga.nodes, "Number of nodes");
  generate->add_option("--edges-per-node", ga.edges_per_node, "Links added by each new node");
  generate->add_option("--seed", ga.seed, "RNG seed");
  generate->add_option("--order", ga.order, "Timestamp order: random or growth")
      ->check(CLI::IsMember({"random", "growth"}));
  generate->add_option("--out", ga.out, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "etlink: " << e.what() << '\n';
    return 2;
  }

  try {
    if (kernel_choice == "scalar") kernels::force_backend(kernels::Backend::Scalar);
    if (kernel_choice == "avx2") {
      if (!kernels::backend_available(kernels::Backend::Avx2)) throw ConfigError("AVX2 kernels are not available");
      kernels::force_backend(kernels::Backend::Avx2);
    }
    if (predict->parsed()) return run_predict(pa, *predict, out);
    return run_generate(ga, out);
  } catch (const ConfigError& e) {
    err << "etlink: configuration error: " << e.what() << '\n';
    return 2;
  } catch (const DatasetError& e) {
    err << "etlink: dataset error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "etlink: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace etlink
