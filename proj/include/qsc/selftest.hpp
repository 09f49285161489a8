#pragma once

// Quick invariant checks per module for the `selftest` verb. The unit-test suite is
// the thorough version; these run in well under a second.

#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/csv.hpp"
#include "qsc/datasets.hpp"
#include "qsc/encoding.hpp"
#include "qsc/experiment.hpp"
#include "qsc/graph.hpp"
#include "qsc/numerics.hpp"
#include "qsc/qpea.hpp"
#include "qsc/random.hpp"
#include "qsc/readout.hpp"

namespace qsc {

struct SelfTestCheck {
  std::string module;
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline SelfTestCheck run_check(const std::string& module, const std::string& name, const std::function<bool()>& fn) {
  try {
    return {module, name, fn(), {}};
  } catch (const std::exception& e) {
    return {module, name, false, e.what()};
  }
}

}  // namespace detail

inline std::vector<SelfTestCheck> run_selftest() {
  std::vector<SelfTestCheck> out;
  auto add = [&](const char* module, const char* name, const std::function<bool()>& fn) {
    out.push_back(detail::run_check(module, name, fn));
  };

  add("numerics", "eigendecomposition reconstructs a random Hermitian matrix", [] {
    Rng rng(1);
    const auto h = random_hermitian(rng, 12);
    const auto eig = hermitian_eig(h);
    return max_abs_diff(eig.reconstruct(), h) <= 1e-10 && eig.vectors.is_unitary(1e-10);
  });
  add("numerics", "basis reflection maps y to the first basis vector", [] {
    Rng rng(2);
    const auto y = random_unit_vector(rng, 8);
    const auto br = householder_to_basis(y);
    const ComplexVector img = br.reflection * y;
    return std::abs(std::abs(img[0]) - 1.0) <= 1e-12 && br.reflection.is_unitary();
  });

  add("graph", "two cliques give two components and a double zero eigenvalue", [] {
    DenseMatrix w(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (i != j && (i < 3) == (j < 3)) w(i, j) = 1.0;
    const auto g = SimilarityGraph::from_weights(w);
    const auto eig = hermitian_eig(laplacian(g));
    return component_count(g) == 2 && std::abs(eig.values[0]) < 1e-10 && std::abs(eig.values[1]) < 1e-10 &&
           eig.values[2] > 1e-3;
  });

  add("classical", "spectral clustering separates two blobs", [] {
    const auto lp = make_blobs(3, {{4.0, 1.0}, {1.0, 4.0}}, 8, 0.5);
    const auto g = build_full_graph(lp.points, 1.0);
    const auto a = spectral_cluster(g, 2, SpectralVariant::normalized);
    return adjusted_rand_index(a.labels, lp.labels) == 1.0;
  });
  add("classical", "trace objective identity on orthonormal frames", [] {
    Rng rng(4);
    const auto v = random_orthonormal(rng, 10, 3);
    const auto y = random_orthonormal(rng, 10, 3);
    const double lhs = std::pow((v * v.adjoint() - y * y.adjoint()).frobenius_norm(), 2);
    return std::abs(lhs - (6.0 - 2.0 * trace_objective(y, v))) <= 1e-10;
  });

  add("encoding", "Householder sum reconstructs the Gram matrix", [] {
    Rng rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Point> rows(6, Point(4));
    for (auto& r : rows)
      for (auto& x : r) x = g(rng);
    const PointSet ps(rows);
    return max_abs_diff(householder_decompose(transpose_rows(rows)).reconstruct_from_reflections(), gram_matrix(ps)) <=
           1e-10;
  });
  add("encoding", "exact evolution is unitary with zero phase on the null space", [] {
    Rng rng(6);
    const auto h = random_psd(rng, 8, 3);
    const auto u = make_evolution(h, 6);
    std::size_t zeros = 0;
    for (double p : u.phases()) zeros += p == 0.0;
    return u.unitary().is_unitary(1e-10) && zeros == 5;
  });

  add("qpea", "qft estimator reads an exact phase", [] {
    const auto h = DenseMatrix::diagonal({0.0, 5.0 / 8.0});
    EvolutionOptions eo;
    eo.time = 1.0;
    const auto u = make_evolution(h, 3, eo);
    PeaConfig cfg{3, 1.0, PeaMode::qft, GroverVariant::verbatim};
    const auto s = bpea_run(cfg, u, ComplexVector::basis(2, 1));
    return std::norm(s.amplitudes()[5 * 2 + 1]) >= 1.0 - 1e-10;
  });
  add("qpea", "amplification reaches high fidelity on a random rank-6 matrix", [] {
    Rng rng(0);
    const auto h = random_psd(rng, 16, 6);
    const auto y = random_input_with_overlap(rng, h, 0.1);
    const auto u = make_evolution(h, 6);
    AmplifyOptions ao;
    ao.halt_on_stop = false;
    const auto r = amplify({6, 1.0, PeaMode::qft, GroverVariant::standard_grover}, u, y, ao);
    return r.trajectory.peak_fidelity >= 0.95;
  });

  add("readout", "householder similarity equals the squared overlap", [] {
    Rng rng(7);
    const auto y = random_unit_vector(rng, 8);
    const auto psi = random_unit_vector(rng, 8);
    return std::abs(householder_similarity(psi, y) - std::norm(y.dot(psi))) <= 1e-12;
  });
  add("readout", "exp(iY) is unitary", [] { return e_iY_operator(4).is_unitary(1e-12); });

  add("cli", "config defaults parse", [] {
    const auto c = parse_config(nlohmann::json::object());
    return c.pea.m == 6 && c.trace_runs.size() == 3;
  });
  add("cli", "labels CSV round trip", [] {
    const std::vector<std::size_t> labels{0, 1, 1, 0, 2};
    std::stringstream ss;
    csv::write_labels(ss, labels);
    return csv::read_labels(ss) == labels;
  });
  return out;
}

/// Prints one line per module and per failed check; returns true when everything passed.
inline bool report_selftest(const std::vector<SelfTestCheck>& checks, std::ostream& os) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_module;  // passed, total
  std::vector<std::string> order;
  for (const auto& c : checks) {
    if (!per_module.count(c.module)) order.push_back(c.module);
    auto& [pass, total] = per_module[c.module];
    pass += c.ok;
    ++total;
  }
  bool all = true;
  for (const auto& m : order) {
    const auto [pass, total] = per_module[m];
    os << (pass == total ? "PASS " : "FAIL ") << m << " (" << pass << "/" << total << ")\n";
    all = all && pass == total;
  }
  for (const auto& c : checks)
    if (!c.ok) os << "  failed: " << c.module << ": " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
  return all;
}

}  // namespace qsc
