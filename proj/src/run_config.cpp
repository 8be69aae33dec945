#include "netembed/run_config.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace netembed {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key))
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

std::string solver_name(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::dense: return "dense";
    case SolverChoice::iterative: return "iterative";
    default: return "automatic";
  }
}

SolverChoice solver_from_name(const std::string& name) {
  if (name == "dense") return SolverChoice::dense;
  if (name == "iterative") return SolverChoice::iterative;
  if (name == "automatic") return SolverChoice::automatic;
  throw std::invalid_argument("unknown solver '" + name + "'");
}

json method_to_json(const MethodConfig& m) {
  json j;
  j["name"] = m.name;
  j["learning_rate"] = m.train.learning_rate;
  j["epochs"] = m.train.epochs;
  j["negatives"] = m.train.negative_samples;
  j["window"] = m.train.window;
  j["noise_exponent"] = m.train.noise_exponent;
  j["grarep_steps"] = m.train.grarep_steps;
  j["grarep_shift"] = m.train.grarep_shift;
  j["ridge"] = m.train.ridge;
  j["lsm_max_steps"] = m.train.lsm_max_steps;
  j["threads"] = m.train.threads;
  j["walks_per_node"] = m.walk.walks_per_node;
  j["walk_length"] = m.walk.walk_length;
  j["p"] = m.walk.node2vec ? m.walk.node2vec->return_p : 1.0;
  j["q"] = m.walk.node2vec ? m.walk.node2vec->inout_q : 1.0;
  j["spectral_solver"] = solver_name(m.spectral_solver);
  return j;
}

MethodConfig method_from_json(const json& j) {
  static const std::set<std::string> known = {
      "name",          "learning_rate", "epochs",        "negatives",
      "window",        "noise_exponent", "grarep_steps", "grarep_shift",
      "ridge",         "lsm_max_steps", "threads",       "walks_per_node",
      "walk_length",   "p",             "q",             "spectral_solver"};
  reject_unknown_keys(j, known, "method");
  MethodConfig m = default_method_config(j.at("name").get<std::string>());
  m.train.learning_rate = j.value("learning_rate", m.train.learning_rate);
  m.train.epochs = j.value("epochs", m.train.epochs);
  m.train.negative_samples = j.value("negatives", m.train.negative_samples);
  m.train.window = j.value("window", m.train.window);
  m.train.noise_exponent = j.value("noise_exponent", m.train.noise_exponent);
  m.train.grarep_steps = j.value("grarep_steps", m.train.grarep_steps);
  m.train.grarep_shift = j.value("grarep_shift", m.train.grarep_shift);
  m.train.ridge = j.value("ridge", m.train.ridge);
  m.train.lsm_max_steps = j.value("lsm_max_steps", m.train.lsm_max_steps);
  m.train.threads = j.value("threads", m.train.threads);
  m.walk.walks_per_node = j.value("walks_per_node", m.walk.walks_per_node);
  m.walk.walk_length = j.value("walk_length", m.walk.walk_length);
  m.walk.threads = m.train.threads;
  if (m.name == "node2vec")
    m.walk.node2vec = Node2vecParams{j.value("p", 1.0), j.value("q", 1.0)};
  m.spectral_solver =
      solver_from_name(j.value("spectral_solver", std::string("automatic")));
  return m;
}

PerturbMode perturb_mode_from_name(const std::string& name) {
  if (name == "remove_edges") return PerturbMode::remove_edges;
  if (name == "flip_pairs") return PerturbMode::flip_pairs;
  throw std::invalid_argument("unknown perturbation mode '" + name + "'");
}

}  // namespace

json plan_to_json(const ExperimentPlan& plan) {
  json j;
  j["seed"] = plan.base_seed;
  j["threads"] = plan.threads;
  j["replications"] = plan.replications;
  j["cv_folds"] = plan.cv_folds;
  j["dims"] = plan.dims;
  j["tasks"] = plan.tasks;
  j["models"] = plan.models;
  j["methods"] = json::array();
  for (const auto& m : plan.methods) j["methods"].push_back(method_to_json(m));
  j["perturbations"] = json::array();
  for (const auto& [mode, fraction] : plan.perturbations)
    j["perturbations"].push_back(
        {{"mode", perturb_mode_name(mode)}, {"fraction", fraction}});
  j["link_prediction"] = {{"test_fraction", plan.link_test_fraction},
                          {"neg_ratio", plan.link_neg_ratio},
                          {"score", plan.link_score}};
  j["cluster_k"] = plan.cluster_k;
  j["use_covariates"] = plan.use_covariates;
  j["reseed_splits"] = plan.reseed_splits;
  j["forest_trees"] = plan.forest_trees;
  j["kmeans_restarts"] = plan.kmeans_restarts;
  j["computability_replications"] = plan.computability_replications;
  return j;
}

ExperimentPlan plan_from_json(const json& doc) {
  static const std::set<std::string> known = {
      "seed",          "threads",        "replications",
      "cv_folds",      "dims",           "tasks",
      "models",        "methods",        "perturbations",
      "link_prediction", "cluster_k",    "use_covariates",
      "reseed_splits", "forest_trees",   "kmeans_restarts",
      "computability_replications"};
  if (!doc.is_object()) throw std::invalid_argument("config must be an object");
  reject_unknown_keys(doc, known, "config");

  ExperimentPlan plan;
  plan.base_seed = doc.value("seed", plan.base_seed);
  plan.threads = doc.value("threads", plan.threads);
  plan.replications = doc.value("replications", plan.replications);
  plan.cv_folds = doc.value("cv_folds", plan.cv_folds);
  if (doc.contains("dims")) plan.dims = doc["dims"].get<std::vector<int>>();
  if (doc.contains("tasks"))
    plan.tasks = doc["tasks"].get<std::vector<std::string>>();
  if (doc.contains("models"))
    plan.models = doc["models"].get<std::vector<std::string>>();
  if (doc.contains("methods")) {
    plan.methods.clear();
    for (const auto& mj : doc["methods"])
      plan.methods.push_back(method_from_json(mj));
  } else {
    plan.methods = default_plan().methods;
  }
  if (doc.contains("perturbations")) {
    for (const auto& pj : doc["perturbations"]) {
      reject_unknown_keys(pj, {"mode", "fraction"}, "perturbation");
      plan.perturbations.emplace_back(
          perturb_mode_from_name(pj.at("mode").get<std::string>()),
          pj.at("fraction").get<double>());
    }
  }
  if (doc.contains("link_prediction")) {
    const json& lj = doc["link_prediction"];
    reject_unknown_keys(lj, {"test_fraction", "neg_ratio", "score"},
                        "link_prediction");
    plan.link_test_fraction =
        lj.value("test_fraction", plan.link_test_fraction);
    plan.link_neg_ratio = lj.value("neg_ratio", plan.link_neg_ratio);
    plan.link_score = lj.value("score", plan.link_score);
  }
  plan.cluster_k = doc.value("cluster_k", plan.cluster_k);
  plan.use_covariates = doc.value("use_covariates", plan.use_covariates);
  plan.reseed_splits = doc.value("reseed_splits", plan.reseed_splits);
  plan.forest_trees = doc.value("forest_trees", plan.forest_trees);
  plan.kmeans_restarts = doc.value("kmeans_restarts", plan.kmeans_restarts);
  plan.computability_replications = doc.value(
      "computability_replications", plan.computability_replications);
  return plan;
}

ExperimentPlan default_plan() {
  ExperimentPlan plan;
  MethodConfig deepwalk;
  deepwalk.name = "deepwalk";
  MethodConfig spectral;
  spectral.name = "spectral";
  plan.methods = {deepwalk, spectral};
  return plan;
}

}  // namespace netembed
