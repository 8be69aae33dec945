// Command-line front end: generate / embed / evaluate / report.
// Exit codes: 0 success, 1 runtime or I/O error, 2 usage or validation error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netembed/embedding.hpp"
#include "netembed/errors.hpp"
#include "netembed/graph.hpp"
#include "netembed/methods.hpp"
#include "netembed/pcs.hpp"
#include "netembed/report.hpp"
#include "netembed/run_config.hpp"
#include "netembed/skipgram.hpp"
#include "netembed/util.hpp"
#include "netembed/walks.hpp"

namespace fs = std::filesystem;
using namespace netembed;

namespace {

struct GenerateArgs {
  std::vector<std::size_t> blocks;
  double p_in = 0.05;
  double p_out = 0.005;
  std::uint64_t seed = 0;
  std::string out_dir;
};

struct EmbedArgs {
  std::string graph_path;
  std::string method = "deepwalk";
  int dim = 16;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string walks_out;
  bool directed = false;
  MethodConfig config;
  std::string solver = "automatic";
};

struct EvaluateArgs {
  std::string config_path;
  std::string graph_path;
  std::string labels_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<int> replications;
};

struct ReportArgs {
  std::vector<std::string> embeddings;
  std::string labels_path;
  std::string report_json;
  std::string out_dir = ".";
};

Graph load_graph_file(const std::string& path, bool directed, IdMap* ids) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  auto [g, map] = load_edge_list(in, directed);
  if (ids) *ids = std::move(map);
  return std::move(g);
}

int cmd_generate(const GenerateArgs& args) {
  SbmParams params;
  params.block_sizes = args.blocks;
  params.within_prob = args.p_in;
  params.between_prob = args.p_out;
  auto [graph, labels] = generate_sbm(params, args.seed);

  std::ostringstream edges;
  save_edge_list(graph, edges);
  write_file_atomic((fs::path(args.out_dir) / "graph.edges").string(),
                    edges.str());
  std::ostringstream labels_csv;
  save_labels_csv(labels, labels_csv);
  write_file_atomic((fs::path(args.out_dir) / "labels.csv").string(),
                    labels_csv.str());
  std::cerr << "wrote " << graph.node_count() << " nodes, "
            << graph.edge_count() << " edges to " << args.out_dir << "\n";
  return 0;
}

int cmd_embed(EmbedArgs& args) {
  if (!is_known_method(args.method)) {
    std::ostringstream names;
    for (const auto& n : method_names()) names << ' ' << n;
    throw std::invalid_argument("unknown method '" + args.method +
                                "'; valid methods:" + names.str());
  }
  args.config.name = args.method;
  args.config.spectral_solver = [&] {
    if (args.solver == "dense") return SolverChoice::dense;
    if (args.solver == "iterative") return SolverChoice::iterative;
    if (args.solver == "automatic") return SolverChoice::automatic;
    throw std::invalid_argument("unknown solver '" + args.solver + "'");
  }();
  args.config.train.validate();
  if (is_walk_method(args.method)) args.config.walk.validate();

  const Graph g = load_graph_file(args.graph_path, args.directed, nullptr);

  Embedding emb;
  StageSeconds times;
  if (is_walk_method(args.method) && !args.walks_out.empty()) {
    // Same seed derivations as train_method, with the corpus dumped.
    WalkConfig walk = args.config.walk;
    if (args.method == "deepwalk") walk.node2vec.reset();
    Stopwatch sw;
    const WalkCorpus corpus =
        generate_corpus(g, walk, derive_seed(args.seed, "corpus"));
    times.walks = sw.seconds();
    std::ostringstream dump;
    write_corpus(corpus, dump);
    write_file_atomic(args.walks_out, dump.str());
    sw.reset();
    TrainConfig train = args.config.train;
    train.dim = args.dim;
    emb = train_skipgram(corpus, train, derive_seed(args.seed, "sgd"));
    times.train = sw.seconds();
    emb.method = args.method;
    emb.seed = args.seed;
  } else {
    emb = train_method(g, args.config, args.dim, args.seed, &times);
  }
  save_word2vec(emb, args.out_path);
  std::cerr << "method=" << args.method << " dim=" << args.dim
            << " walk_seconds=" << format_double(times.walks)
            << " train_seconds=" << format_double(times.train) << "\n";
  return 0;
}

int cmd_evaluate(const EvaluateArgs& args) {
  nlohmann::json config = nlohmann::json::object();
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw std::runtime_error("cannot open config " + args.config_path);
    try {
      in >> config;
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("config parse error: " +
                                  std::string(e.what()));
    }
  }
  ExperimentPlan plan = plan_from_json(config);
  if (args.seed) plan.base_seed = *args.seed;
  if (args.threads) plan.threads = *args.threads;
  if (args.replications) plan.replications = *args.replications;

  const Graph g = load_graph_file(args.graph_path, /*directed=*/false, nullptr);
  NodeMetadata meta;
  if (!args.labels_path.empty()) {
    std::ifstream in(args.labels_path);
    if (!in) throw std::runtime_error("cannot open labels " + args.labels_path);
    meta = load_metadata_csv(in, g.node_count());
  }
  plan.validate(meta.labels.has_value());  // before any computation

  const PcsReport report = run_all(plan, g, meta);
  const auto written =
      write_pcs_report(report, plan_to_json(plan), args.out_dir);
  for (const auto& path : written) std::cerr << "wrote " << path << "\n";
  return 0;
}

int cmd_report(const ReportArgs& args) {
  std::optional<NodeMetadata> meta;
  for (const std::string& emb_path : args.embeddings) {
    const Embedding emb = load_word2vec(emb_path);
    if (!args.labels_path.empty()) {
      std::ifstream in(args.labels_path);
      if (!in)
        throw std::runtime_error("cannot open labels " + args.labels_path);
      meta = load_metadata_csv(in, static_cast<std::size_t>(emb.node_count()));
    }
    const auto [scores, explained] = pca_project(emb.center, 2);
    std::ostringstream csv;
    csv << "node,x,y,label\n";
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
      csv << i << ',' << format_double(scores(i, 0)) << ','
          << format_double(scores(i, 1)) << ',';
      if (meta && meta->labels) csv << (*meta->labels)[i];
      csv << '\n';
    }
    const std::string out =
        (fs::path(args.out_dir) /
         (fs::path(emb_path).stem().string() + "_projection.csv")).string();
    write_file_atomic(out, csv.str());
    std::cerr << "wrote " << out << " (explained variance "
              << format_double(explained[0]) << ", "
              << format_double(explained[1]) << ")\n";
  }

  if (!args.report_json.empty()) {
    std::ifstream in(args.report_json);
    if (!in) throw std::runtime_error("cannot open report " + args.report_json);
    nlohmann::json doc;
    in >> doc;
    std::ostringstream table;
    table << "method      dim  task                 model          metric     "
             "mean      [q025, q975]        R\n";
    char line[256];
    for (const auto& row : doc.at("predictability")) {
      std::snprintf(line, sizeof(line),
                    "%-11s %3d  %-20s %-14s %-9s %8.4f  [%8.4f, %8.4f] %4d\n",
                    row.at("method").get<std::string>().c_str(),
                    row.at("dim").get<int>(),
                    row.at("task").get<std::string>().c_str(),
                    row.at("model").get<std::string>().c_str(),
                    row.at("metric").get<std::string>().c_str(),
                    row.at("mean").get<double>(), row.at("q025").get<double>(),
                    row.at("q975").get<double>(), row.at("R").get<int>());
      table << line;
    }
    const std::string out = (fs::path(args.out_dir) / "summary.txt").string();
    write_file_atomic(out, table.str());
    std::cout << table.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network embedding toolkit with a PCS evaluation harness"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "Draw a stochastic block model graph and label file");
  generate->add_option("--blocks", gen.blocks, "Block sizes, e.g. 200,200,200")
      ->required()
      ->delimiter(',');
  generate->add_option("--p-in", gen.p_in, "Within-block edge probability");
  generate->add_option("--p-out", gen.p_out, "Between-block edge probability");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("-o,--out", gen.out_dir, "Output directory")->required();

  EmbedArgs emb;
  CLI::App* embed =
      app.add_subcommand("embed", "Train a node embedding on an edge list");
  embed->add_option("graph", emb.graph_path, "Edge list file")->required();
  embed->add_option("--method", emb.method,
                    "deepwalk|node2vec|line1|line2|gf|eigenmap|spectral|"
                    "grarep|lsm");
  embed->add_option("--dim", emb.dim, "Embedding dimension");
  embed->add_option("--seed", emb.seed, "Random seed");
  embed->add_option("-o,--out", emb.out_path, "Output embedding file")
      ->required();
  embed->add_flag("--directed", emb.directed, "Treat the edge list as directed");
  // Hyperparameters start from the method defaults; a flag overrides only
  // when supplied.
  int walks_per_node = 0, walk_length = 0, window = 0, negatives = 0;
  int epochs = 0, grarep_steps = 0, lsm_steps = 0, threads = 0;
  double lr = 0.0, n2v_p = 1.0, n2v_q = 1.0, noise_exp = 0.0;
  double grarep_shift = 0.0, ridge = 0.0;
  CLI::Option* o_walks = embed->add_option("--walks-per-node", walks_per_node,
                                           "Walks started per node");
  CLI::Option* o_len =
      embed->add_option("--walk-length", walk_length, "Maximum walk length");
  CLI::Option* o_window = embed->add_option("--window", window, "SkipGram window");
  CLI::Option* o_neg = embed->add_option("--negatives", negatives,
                                         "Negative samples per positive");
  CLI::Option* o_epochs = embed->add_option(
      "--epochs", epochs, "Training passes / samples per edge");
  CLI::Option* o_lr = embed->add_option("--lr", lr, "Initial learning rate");
  embed->add_option("--p", n2v_p, "node2vec return parameter");
  embed->add_option("--q", n2v_q, "node2vec in-out parameter");
  CLI::Option* o_noise = embed->add_option("--noise-exponent", noise_exp,
                                           "Noise distribution exponent");
  CLI::Option* o_gsteps = embed->add_option("--grarep-steps", grarep_steps,
                                            "GraRep transition steps K");
  CLI::Option* o_gshift = embed->add_option("--grarep-shift", grarep_shift,
                                            "GraRep shift lambda");
  CLI::Option* o_ridge =
      embed->add_option("--ridge", ridge, "Factorization ridge lambda");
  CLI::Option* o_lsm = embed->add_option("--lsm-steps", lsm_steps,
                                         "Latent space model ascent steps");
  CLI::Option* o_threads = embed->add_option(
      "--threads", threads, "Trainer threads (>1 is nondeterministic)");
  embed->add_option("--spectral-solver", emb.solver,
                    "automatic|dense|iterative");
  embed->add_option("--walks-out", emb.walks_out,
                    "Also dump the walk corpus to this file");

  EvaluateArgs eval;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Run the predictability/computability/stability harness");
  evaluate->add_option("--config", eval.config_path, "JSON plan (flags override)");
  evaluate->add_option("--graph", eval.graph_path, "Edge list file")->required();
  evaluate->add_option("--labels", eval.labels_path, "Node label CSV");
  evaluate->add_option("-o,--out", eval.out_dir, "Output directory");
  std::uint64_t seed_override = 0;
  int threads_override = 0, reps_override = 0;
  CLI::Option* seed_opt =
      evaluate->add_option("--seed", seed_override, "Override plan seed");
  CLI::Option* threads_opt =
      evaluate->add_option("--threads", threads_override, "Override threads");
  CLI::Option* reps_opt = evaluate->add_option(
      "--replications", reps_override, "Override replication count");

  ReportArgs rep;
  CLI::App* report = app.add_subcommand(
      "report", "2-D projections and a text summary from saved artifacts");
  report->add_option("--embedding", rep.embeddings, "Embedding file(s)")
      ->required();
  report->add_option("--labels", rep.labels_path, "Node label CSV");
  report->add_option("--report", rep.report_json, "report.json to summarize");
  report->add_option("-o,--out", rep.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (embed->parsed()) {
      if (is_known_method(emb.method))
        emb.config = default_method_config(emb.method);
      if (*o_walks) emb.config.walk.walks_per_node = walks_per_node;
      if (*o_len) emb.config.walk.walk_length = walk_length;
      if (*o_window) emb.config.train.window = window;
      if (*o_neg) emb.config.train.negative_samples = negatives;
      if (*o_epochs) emb.config.train.epochs = epochs;
      if (*o_lr) emb.config.train.learning_rate = lr;
      if (*o_noise) emb.config.train.noise_exponent = noise_exp;
      if (*o_gsteps) emb.config.train.grarep_steps = grarep_steps;
      if (*o_gshift) emb.config.train.grarep_shift = grarep_shift;
      if (*o_ridge) emb.config.train.ridge = ridge;
      if (*o_lsm) emb.config.train.lsm_max_steps = lsm_steps;
      if (*o_threads) {
        emb.config.train.threads = threads;
        emb.config.walk.threads = threads;
      }
      if (emb.method == "node2vec")
        emb.config.walk.node2vec = Node2vecParams{n2v_p, n2v_q};
      return cmd_embed(emb);
    }
    if (evaluate->parsed()) {
      if (*seed_opt) eval.seed = seed_override;
      if (*threads_opt) eval.threads = threads_override;
      if (*reps_opt) eval.replications = reps_override;
      return cmd_evaluate(eval);
    }
    if (report->parsed()) return cmd_report(rep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
