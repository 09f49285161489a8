#pragma once

// Batch experiments behind the command-line verbs. Each command reads an ExperimentConfig,
// writes flat CSV/text files into the output directory and returns the list of paths.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsc/classical.hpp"
#include "qsc/csv.hpp"
#include "qsc/datasets.hpp"
#include "qsc/encoding.hpp"
#include "qsc/graph.hpp"
#include "qsc/qpea.hpp"
#include "qsc/readout.hpp"

namespace qsc {

enum class DatasetSource { blobs, moons, random_psd, csv };
enum class MatrixTarget { gram, laplacian, normalized_laplacian };

struct DatasetConfig {
  DatasetSource source = DatasetSource::blobs;
  std::string path;                                // csv only
  std::vector<Point> centers{{4.0, 1.0}, {1.0, 4.0}};  // blobs
  std::size_t per_cluster = 8;                     // blobs
  double stddev = 0.5;                             // blobs
  std::size_t per_moon = 8;                        // moons
  double noise = 0.05;                             // moons
  std::size_t dim = 16;                            // random_psd
  std::size_t rank = 6;                            // random_psd
};

struct GraphConfig {
  GraphKind kind = GraphKind::full;
  double sigma = 1.0;
  double epsilon = 1.0;
  std::size_t k = 3;
  bool squared_norm = false;
  bool verbatim_greater = false;
};

struct ClusterConfig {
  std::size_t k = 0;  // 0 selects k by the eigengap
  std::size_t k_max = 6;
  SpectralVariant variant = SpectralVariant::normalized;
};

struct TraceRun {
  PeaMode mode = PeaMode::biased;
  double kappa = 1.0;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  DatasetConfig dataset;
  GraphConfig graph;
  ClusterConfig clusters;
  MatrixTarget target = MatrixTarget::gram;
  bool centered = false;  // gram target only
  PeaConfig pea{6, 1.0, PeaMode::biased, GroverVariant::standard_grover};
  EvolutionBackend backend = EvolutionBackend::exact_exponential;
  AmplifyOptions amplify;
  ReadoutPoint readout = ReadoutPoint::stop;
  std::vector<TraceRun> trace_runs{{PeaMode::qft, 1.0}, {PeaMode::biased, 1.0}, {PeaMode::biased, 20.0}};
  bool trace_verbatim = true;
  double min_overlap = 0.1;
  std::optional<std::vector<std::vector<std::size_t>>> candidates;  // nullopt = auto
  std::size_t mixed_candidates = 4;
  std::string output_dir = "out";
  bool verbose = false;
};

// ---- config parsing -------------------------------------------------------

namespace detail {

using nlohmann::json;

inline void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InvalidArgument("config: '" + where + "' must be an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidArgument("config: unknown key '" + key + "' in '" + where + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

template <typename E>
E parse_enum(const std::string& s, std::initializer_list<std::pair<const char*, E>> table, const char* what) {
  for (const auto& [name, v] : table)
    if (s == name) return v;
  throw InvalidArgument(std::string("config: unknown ") + what + " '" + s + "'");
}

inline PeaMode parse_mode(const std::string& s) {
  return parse_enum<PeaMode>(s, {{"qft", PeaMode::qft}, {"biased", PeaMode::biased}}, "mode");
}

inline GroverVariant parse_variant(const std::string& s) {
  return parse_enum<GroverVariant>(
      s, {{"verbatim", GroverVariant::verbatim}, {"standard_grover", GroverVariant::standard_grover}}, "grover variant");
}

}  // namespace detail

/// Every key is optional; unknown keys are rejected.
inline ExperimentConfig parse_config(const nlohmann::json& j) {
  using detail::read;
  ExperimentConfig c;
  detail::check_keys(j, "root",
                     {"seed", "dataset", "graph", "clusters", "target", "centered", "pea", "amplify", "trace",
                      "candidates", "mixed_candidates", "output_dir"});
  read(j, "seed", c.seed);
  if (j.contains("dataset")) {
    const auto& d = j["dataset"];
    detail::check_keys(d, "dataset", {"source", "path", "centers", "per_cluster", "stddev", "per_moon", "noise", "dim", "rank"});
    std::string src = "blobs";
    read(d, "source", src);
    c.dataset.source = detail::parse_enum<DatasetSource>(
        src,
        {{"blobs", DatasetSource::blobs}, {"moons", DatasetSource::moons}, {"random_psd", DatasetSource::random_psd},
         {"csv", DatasetSource::csv}},
        "dataset source");
    read(d, "path", c.dataset.path);
    read(d, "centers", c.dataset.centers);
    read(d, "per_cluster", c.dataset.per_cluster);
    read(d, "stddev", c.dataset.stddev);
    read(d, "per_moon", c.dataset.per_moon);
    read(d, "noise", c.dataset.noise);
    read(d, "dim", c.dataset.dim);
    read(d, "rank", c.dataset.rank);
  }
  if (j.contains("graph")) {
    const auto& g = j["graph"];
    detail::check_keys(g, "graph", {"kind", "sigma", "epsilon", "k", "squared_norm", "verbatim_greater"});
    std::string kind = "full";
    read(g, "kind", kind);
    c.graph.kind = detail::parse_enum<GraphKind>(
        kind, {{"full", GraphKind::full}, {"epsilon", GraphKind::epsilon}, {"knn", GraphKind::knn}}, "graph kind");
    read(g, "sigma", c.graph.sigma);
    read(g, "epsilon", c.graph.epsilon);
    read(g, "k", c.graph.k);
    read(g, "squared_norm", c.graph.squared_norm);
    read(g, "verbatim_greater", c.graph.verbatim_greater);
  }
  if (j.contains("clusters")) {
    const auto& k = j["clusters"];
    detail::check_keys(k, "clusters", {"k", "k_max", "variant"});
    read(k, "k", c.clusters.k);
    read(k, "k_max", c.clusters.k_max);
    std::string v = "normalized";
    read(k, "variant", v);
    c.clusters.variant = detail::parse_enum<SpectralVariant>(
        v,
        {{"unnormalized", SpectralVariant::unnormalized}, {"normalized", SpectralVariant::normalized},
         {"row_normalized", SpectralVariant::row_normalized}},
        "spectral variant");
  }
  if (j.contains("target")) {
    std::string t;
    read(j, "target", t);
    c.target = detail::parse_enum<MatrixTarget>(
        t,
        {{"gram", MatrixTarget::gram}, {"laplacian", MatrixTarget::laplacian},
         {"normalized_laplacian", MatrixTarget::normalized_laplacian}},
        "matrix target");
  }
  read(j, "centered", c.centered);
  if (j.contains("pea")) {
    const auto& p = j["pea"];
    detail::check_keys(p, "pea", {"m", "kappa", "mode", "variant", "backend"});
    read(p, "m", c.pea.m);
    read(p, "kappa", c.pea.kappa);
    if (p.contains("mode")) c.pea.mode = detail::parse_mode(p["mode"].get<std::string>());
    if (p.contains("variant")) c.pea.variant = detail::parse_variant(p["variant"].get<std::string>());
    if (p.contains("backend"))
      c.backend = detail::parse_enum<EvolutionBackend>(
          p["backend"].get<std::string>(),
          {{"exact_exponential", EvolutionBackend::exact_exponential}, {"linearized", EvolutionBackend::linearized}},
          "backend");
  }
  if (j.contains("amplify")) {
    const auto& a = j["amplify"];
    detail::check_keys(a, "amplify", {"max_iter", "stop_tol", "stop_qubit", "readout"});
    read(a, "max_iter", c.amplify.max_iter);
    read(a, "stop_tol", c.amplify.stop_tol);
    read(a, "stop_qubit", c.amplify.stop_qubit);
    if (a.contains("readout"))
      c.readout = detail::parse_enum<ReadoutPoint>(a["readout"].get<std::string>(),
                                                   {{"stop", ReadoutPoint::stop}, {"peak", ReadoutPoint::peak}}, "readout");
  }
  if (j.contains("trace")) {
    const auto& t = j["trace"];
    detail::check_keys(t, "trace", {"runs", "verbatim", "min_overlap"});
    if (t.contains("runs")) {
      c.trace_runs.clear();
      for (const auto& r : t["runs"]) {
        detail::check_keys(r, "trace.runs", {"mode", "kappa"});
        TraceRun run;
        if (r.contains("mode")) run.mode = detail::parse_mode(r["mode"].get<std::string>());
        read(r, "kappa", run.kappa);
        c.trace_runs.push_back(run);
      }
    }
    read(t, "verbatim", c.trace_verbatim);
    read(t, "min_overlap", c.min_overlap);
  }
  if (j.contains("candidates")) {
    const auto& cand = j["candidates"];
    if (cand.is_string()) {
      if (cand.get<std::string>() != "auto") throw InvalidArgument("config: candidates must be \"auto\" or a list");
    } else {
      std::vector<std::vector<std::size_t>> sets;
      read(j, "candidates", sets);
      c.candidates = std::move(sets);
    }
  }
  read(j, "mixed_candidates", c.mixed_candidates);
  read(j, "output_dir", c.output_dir);

  c.pea.validate();
  if (c.amplify.stop_qubit >= c.pea.m) throw InvalidArgument("config: amplify.stop_qubit must be below pea.m");
  if (c.amplify.stop_tol < 0.0 || c.amplify.stop_tol > 0.5) throw InvalidArgument("config: amplify.stop_tol must be in [0, 0.5]");
  if (c.min_overlap <= 0.0 || c.min_overlap > 1.0) throw InvalidArgument("config: trace.min_overlap must be in (0, 1]");
  if (c.clusters.k_max < 1) throw InvalidArgument("config: clusters.k_max must be >= 1");
  for (const auto& r : c.trace_runs)
    if (r.kappa < 0.0) throw InvalidArgument("config: trace kappa must be nonnegative");
  return c;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open config " + path, 0);
  try {
    return parse_config(nlohmann::json::parse(in, nullptr, true, true));
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(path + ": " + e.what(), 0);
  }
}

// ---- shared plumbing ------------------------------------------------------

struct Dataset {
  std::optional<PointSet> points;             // absent for random_psd
  std::optional<std::vector<std::size_t>> truth;  // generator labels when known
  std::optional<DenseMatrix> matrix;           // random_psd only
};

inline Dataset load_dataset(const ExperimentConfig& c) {
  const auto& d = c.dataset;
  switch (d.source) {
    case DatasetSource::blobs: {
      auto lp = make_blobs(c.seed, d.centers, d.per_cluster, d.stddev);
      return {std::move(lp.points), std::move(lp.labels), std::nullopt};
    }
    case DatasetSource::moons: {
      auto lp = make_moons(c.seed, d.per_moon, d.noise);
      return {std::move(lp.points), std::move(lp.labels), std::nullopt};
    }
    case DatasetSource::random_psd: {
      Rng rng(c.seed);
      return {std::nullopt, std::nullopt, random_psd(rng, d.dim, d.rank)};
    }
    case DatasetSource::csv:
      if (d.path.empty()) throw InvalidArgument("config: dataset.path is required for csv input");
      return {csv::read_points(d.path), std::nullopt, std::nullopt};
  }
  throw InvalidArgument("unknown dataset source");
}

inline const PointSet& require_points(const Dataset& ds, const char* verb) {
  if (!ds.points) throw InvalidArgument(std::string(verb) + " needs point data (random_psd gives only a matrix)");
  return *ds.points;
}

inline SimilarityGraph build_graph(const ExperimentConfig& c, const PointSet& ps) {
  const auto norm = c.graph.squared_norm ? GaussianNorm::squared : GaussianNorm::unsquared;
  switch (c.graph.kind) {
    case GraphKind::epsilon:
      return build_epsilon_graph(ps, c.graph.epsilon,
                                 c.graph.verbatim_greater ? EpsilonSense::verbatim_greater : EpsilonSense::within);
    case GraphKind::knn:
      return build_knn_graph(ps, c.graph.k);
    case GraphKind::full:
      return build_full_graph(ps, c.graph.sigma, norm);
  }
  throw InvalidArgument("unknown graph kind");
}

inline DenseMatrix graph_laplacian(const ExperimentConfig& c, const SimilarityGraph& g) {
  return c.clusters.variant == SpectralVariant::unnormalized ? laplacian(g) : normalized_laplacian(g);
}

/// Hermitian matrix handed to phase estimation.
inline DenseMatrix target_matrix(const ExperimentConfig& c, const Dataset& ds) {
  if (ds.matrix) return *ds.matrix;
  const PointSet& ps = *ds.points;
  switch (c.target) {
    case MatrixTarget::gram:
      return gram_matrix(ps, c.centered);
    case MatrixTarget::laplacian:
      return laplacian(build_graph(c, ps));
    case MatrixTarget::normalized_laplacian:
      return normalized_laplacian(build_graph(c, ps));
  }
  throw InvalidArgument("unknown matrix target");
}

struct ClassicalResult {
  SimilarityGraph graph;
  std::vector<double> eigenvalues;
  std::size_t k = 0;
  ClusterAssignment assignment;
  double trace_objective = 0.0;
};

inline ClassicalResult run_classical(const ExperimentConfig& c, const PointSet& ps) {
  ClassicalResult r;
  r.graph = build_graph(c, ps);
  const auto eig = hermitian_eig(graph_laplacian(c, r.graph));
  r.eigenvalues = eig.values;
  r.k = c.clusters.k ? c.clusters.k : eigengap_select(r.eigenvalues, c.clusters.k_max);
  if (r.k < 2) r.k = 2;
  if (r.k > ps.count()) throw InvalidArgument("clusters.k exceeds the number of points");
  KMeansOptions ko;
  ko.seed = c.seed;
  r.assignment = spectral_cluster(r.graph, r.k, c.clusters.variant, ko);
  // k-means objective measured on the input points with the spectral labels.
  const auto means = detail::cluster_means(ps, r.assignment.labels, r.k, std::vector<Point>(r.k, Point(ps.dim(), 0.0)));
  r.assignment.centroids = means;
  r.assignment.objective = detail::kmeans_objective(ps, r.assignment.labels, means);
  DenseMatrix v(ps.count(), r.k);
  for (std::size_t j = 0; j < r.k; ++j) v.set_column(j, eig.vectors.column(j));
  r.trace_objective = trace_objective(indicators_from_labels(r.assignment.labels, r.k), v);
  return r;
}

namespace detail {

inline std::string out_path(const ExperimentConfig& c, const std::string& name) {
  std::filesystem::create_directories(c.output_dir);
  return (std::filesystem::path(c.output_dir) / name).string();
}

inline void log(const ExperimentConfig& c, const std::string& msg) {
  if (c.verbose) std::clog << "[qsc] " << msg << '\n';
}

inline void write_text(const std::string& path, const std::string& body) {
  auto out = csv::open_out(path);
  out << body;
  if (!body.empty() && body.back() != '\n') out << '\n';
}

inline std::string kappa_tag(double kappa) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", kappa);
  return buf;
}

}  // namespace detail

// ---- commands -------------------------------------------------------------

inline std::vector<std::string> cmd_graph(const ExperimentConfig& c) {
  const Dataset ds = load_dataset(c);
  const PointSet& ps = require_points(ds, "graph");
  const auto g = build_graph(c, ps);
  const auto eig = hermitian_eig(graph_laplacian(c, g));
  const std::size_t k = eigengap_select(eig.values, c.clusters.k_max);
  detail::log(c, "graph: " + std::to_string(ps.count()) + " points, " + std::to_string(component_count(g)) +
                     " components, eigengap k = " + std::to_string(k));

  std::vector<std::string> files{detail::out_path(c, "W.csv"), detail::out_path(c, "laplacian_eigs.csv"),
                                 detail::out_path(c, "eigengap.txt")};
  {
    auto out = csv::open_out(files[0]);
    csv::write_matrix(out, g.weights);
  }
  {
    auto out = csv::open_out(files[1]);
    csv::write_values(out, "eigenvalue", eig.values);
  }
  detail::write_text(files[2], std::to_string(k));
  return files;
}

inline std::vector<std::string> cmd_cluster_classical(const ExperimentConfig& c) {
  const Dataset ds = load_dataset(c);
  const PointSet& ps = require_points(ds, "cluster-classical");
  const auto r = run_classical(c, ps);
  detail::log(c, "cluster-classical: k = " + std::to_string(r.k) + ", objective = " + csv::format_double(r.assignment.objective));

  std::vector<std::string> files{detail::out_path(c, "labels_classical.csv"), detail::out_path(c, "objective.txt"),
                                 detail::out_path(c, "trace_objective.txt")};
  {
    auto out = csv::open_out(files[0]);
    csv::write_labels(out, r.assignment.labels);
  }
  detail::write_text(files[1], csv::format_double(r.assignment.objective));
  detail::write_text(files[2], csv::format_double(r.trace_objective));
  return files;
}

struct TraceSummaryRow {
  std::string mode;
  double kappa = 0.0;
  std::string variant;
  std::size_t peak_iteration = 0;
  double peak_fidelity = 0.0;
  std::size_t first_peak_iteration = 0;
  std::optional<std::size_t> stop_iteration;
};

inline void write_trace_summary(std::ostream& out, const std::vector<TraceSummaryRow>& rows) {
  out << "mode,kappa,variant,peak_iteration,peak_fidelity,first_peak_iteration,stop_iteration\n";
  for (const auto& r : rows)
    out << r.mode << ',' << csv::format_double(r.kappa) << ',' << r.variant << ',' << r.peak_iteration << ','
        << csv::format_double(r.peak_fidelity) << ',' << r.first_peak_iteration << ','
        << (r.stop_iteration ? std::to_string(*r.stop_iteration) : std::string("none")) << '\n';
}

inline std::vector<TraceSummaryRow> read_trace_summary(std::istream& in) {
  std::vector<TraceSummaryRow> rows;
  for (const auto& r : csv::read_table(in, {"mode", "kappa", "variant", "peak_iteration", "peak_fidelity",
                                            "first_peak_iteration", "stop_iteration"})) {
    TraceSummaryRow s;
    s.mode = r.fields[0];
    s.kappa = csv::parse_double(r.fields[1], r.line);
    s.variant = r.fields[2];
    s.peak_iteration = csv::parse_index(r.fields[3], r.line);
    s.peak_fidelity = csv::parse_double(r.fields[4], r.line);
    s.first_peak_iteration = csv::parse_index(r.fields[5], r.line);
    if (r.fields[6] != "none") s.stop_iteration = csv::parse_index(r.fields[6], r.line);
    rows.push_back(std::move(s));
  }
  return rows;
}

/// Input state for trace runs: a seeded random unit vector with the configured overlap onto range(H).
inline ComplexVector trace_input(const ExperimentConfig& c, const DenseMatrix& h) {
  Rng rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
  return random_input_with_overlap(rng, h, c.min_overlap);
}

inline std::vector<std::string> cmd_amplify_trace(const ExperimentConfig& c) {
  const Dataset ds = load_dataset(c);
  const DenseMatrix h = pad_to_power_of_two(target_matrix(c, ds));
  EvolutionOptions eo;
  eo.backend = c.backend;
  const EvolutionOperator u = make_evolution(h, c.pea.m, eo);
  const ComplexVector y = trace_input(c, h);

  AmplifyOptions ao = c.amplify;
  ao.halt_on_stop = false;

  std::vector<GroverVariant> variants{c.pea.variant};
  if (c.trace_verbatim && c.pea.variant != GroverVariant::verbatim) variants.push_back(GroverVariant::verbatim);

  std::vector<std::string> files;
  std::vector<TraceSummaryRow> summary;
  for (const auto& run : c.trace_runs) {
    for (auto variant : variants) {
      PeaConfig pc = c.pea;
      pc.mode = run.mode;
      pc.kappa = run.kappa;
      pc.variant = variant;
      pc.validate();
      const auto res = amplify(pc, u, y, ao);
      const auto& t = res.trajectory;
      std::string name = "trajectory_" + to_string(run.mode) + "_" + detail::kappa_tag(run.kappa);
      if (variant != c.pea.variant) name += "_" + to_string(variant);
      files.push_back(detail::out_path(c, name + ".csv"));
      auto out = csv::open_out(files.back());
      csv::write_trajectory(out, t);
      summary.push_back({to_string(run.mode), run.kappa, to_string(variant), t.peak_iteration, t.peak_fidelity,
                         t.first_peak_iteration, t.stop_iteration});
      detail::log(c, name + ": peak fidelity " + csv::format_double(t.peak_fidelity) + " at iteration " +
                         std::to_string(t.peak_iteration));
    }
  }
  files.push_back(detail::out_path(c, "summary.csv"));
  auto out = csv::open_out(files.back());
  write_trace_summary(out, summary);
  return files;
}

/// Candidate indicators: explicit member lists, or the classical clusters plus seeded mixtures of the first two.
inline std::vector<IndicatorVector> build_candidates(const ExperimentConfig& c, std::size_t n,
                                                     const std::vector<std::size_t>& classical_labels, std::size_t k) {
  std::vector<IndicatorVector> out;
  if (c.candidates) {
    for (std::size_t i = 0; i < c.candidates->size(); ++i) {
      const auto& members = (*c.candidates)[i];
      out.emplace_back(std::set<std::size_t>(members.begin(), members.end()), n, "cand" + std::to_string(i));
    }
    if (out.empty()) throw InvalidArgument("config: candidate list is empty");
    return out;
  }
  out = indicators_from_labels(classical_labels, k);
  if (out.size() >= 2 && c.mixed_candidates > 0) {
    const std::vector<std::size_t> a(out[0].members().begin(), out[0].members().end());
    const std::vector<std::size_t> b(out[1].members().begin(), out[1].members().end());
    const std::size_t size = std::min(a.size(), b.size());
    if (size >= 2) {
      Rng rng(c.seed + 1);
      for (std::size_t i = 0; i < c.mixed_candidates; ++i)
        out.push_back(mixed_indicator(rng, a, b, size, n, "mixed" + std::to_string(i)));
    }
  }
  return out;
}

/// Label of each point = input index of the best-ranked candidate containing it
/// (candidates.size() when no candidate contains the point).
inline std::vector<std::size_t> labels_from_ranking(const std::vector<IndicatorVector>& candidates,
                                                    const std::vector<SimilarityReport>& ranked, std::size_t n) {
  std::vector<std::size_t> labels(n, candidates.size());
  std::vector<bool> done(n, false);
  for (const auto& rep : ranked) {
    std::size_t idx = 0;
    while (idx < candidates.size() && candidates[idx].id() != rep.y_id) ++idx;
    if (idx == candidates.size()) continue;
    for (auto p : candidates[idx].members())
      if (!done[p]) {
        labels[p] = idx;
        done[p] = true;
      }
  }
  return labels;
}

inline std::vector<std::string> cmd_cluster_quantum(const ExperimentConfig& c) {
  const Dataset ds = load_dataset(c);
  const PointSet& ps = require_points(ds, "cluster-quantum");
  const auto classical = run_classical(c, ps);
  const auto candidates = build_candidates(c, ps.count(), classical.assignment.labels, classical.k);
  const DenseMatrix h = target_matrix(c, ds);

  PipelineOptions po;
  po.amplify = c.amplify;
  po.readout = c.readout;
  const auto ranked = rank_indicators(h, candidates, c.pea, po);
  const auto labels = labels_from_ranking(candidates, ranked.quantum, ps.count());

  double worst = 0.0;
  for (double e : ranked.errors) worst = std::max(worst, e);
  const auto terms = householder_decompose(transpose_rows(ps.points())).terms();
  const std::size_t dim = pad_to_power_of_two(h).rows();

  std::ostringstream cmp;
  cmp << "points=" << ps.count() << '\n'
      << "candidates=" << candidates.size() << '\n'
      << "top_candidate=" << ranked.quantum.front().y_id << '\n'
      << "top_candidate_direct=" << ranked.direct.front().y_id << '\n'
      << "rand_index=" << csv::format_double(rand_index(labels, classical.assignment.labels)) << '\n'
      << "adjusted_rand_index=" << csv::format_double(adjusted_rand_index(labels, classical.assignment.labels)) << '\n'
      << "max_similarity_error=" << csv::format_double(worst) << '\n'
      << "householder_terms=" << terms << '\n'
      << "gate_count_estimate=" << gate_count_estimate(terms, dim, c.pea.m) << '\n'
      << "gate_count_estimate_simple=" << gate_count_estimate(terms, dim, c.pea.m, true) << '\n';
  detail::log(c, "cluster-quantum: top candidate " + ranked.quantum.front().y_id);

  std::vector<std::string> files{detail::out_path(c, "similarity_ranking.csv"), detail::out_path(c, "labels_quantum.csv"),
                                 detail::out_path(c, "comparison.txt")};
  {
    auto out = csv::open_out(files[0]);
    std::vector<SimilarityReport> all = ranked.quantum;
    all.insert(all.end(), ranked.direct.begin(), ranked.direct.end());
    csv::write_similarity(out, all);
  }
  {
    auto out = csv::open_out(files[1]);
    csv::write_labels(out, labels);
  }
  detail::write_text(files[2], cmp.str());
  return files;
}

}  // namespace qsc
