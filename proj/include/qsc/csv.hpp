#pragma once

// Flat-file I/O. Dialect: comma separated, '.' decimal point, LF line endings, mandatory
// header row on everything written. Doubles are written with 17 significant digits so
// every file reads back bit-exact.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qsc/classical.hpp"
#include "qsc/encoding.hpp"
#include "qsc/errors.hpp"
#include "qsc/graph.hpp"
#include "qsc/qpea.hpp"
#include "qsc/readout.hpp"

namespace qsc::csv {

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string{} : f.substr(b, e - b + 1);
  }
  return out;
}

inline std::optional<double> try_parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

inline double parse_double(std::string_view s, std::size_t line) {
  const auto v = try_parse_double(s);
  if (!v) throw IngestError("not a number: '" + std::string(s) + "'", line);
  return *v;
}

inline std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw IngestError("not a non-negative integer: '" + std::string(s) + "'", line);
  return v;
}

struct Row {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> fields;
};

/// Reads every line, dropping a trailing '\r'. Blank lines are malformed rows.
inline std::vector<Row> read_rows(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) throw IngestError("blank row", n);
    rows.push_back({n, split(line)});
  }
  return rows;
}

/// Table with a required header; every data row must match the header width.
inline std::vector<Row> read_table(std::istream& in, const std::vector<std::string>& expected_header) {
  auto rows = read_rows(in);
  if (rows.empty()) throw IngestError("empty file", 0);
  if (rows.front().fields != expected_header) {
    std::string want;
    for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
    throw IngestError("unexpected header, want '" + want + "'", rows.front().line);
  }
  rows.erase(rows.begin());
  for (const auto& r : rows)
    if (r.fields.size() != expected_header.size())
      throw IngestError("expected " + std::to_string(expected_header.size()) + " fields, got " +
                            std::to_string(r.fields.size()),
                        r.line);
  return rows;
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path, 0);
  return in;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  return out;
}

// ---- points ---------------------------------------------------------------

/// One point per row. The first row is a header when any of its fields is non-numeric.
inline PointSet read_points(std::istream& in) {
  auto rows = read_rows(in);
  if (rows.empty()) throw IngestError("empty file", 0);
  bool header = false;
  for (const auto& f : rows.front().fields)
    if (!try_parse_double(f)) header = true;
  if (header) rows.erase(rows.begin());
  if (rows.empty()) throw IngestError("no data rows", 0);
  const std::size_t width = rows.front().fields.size();
  std::vector<Point> pts;
  for (const auto& r : rows) {
    if (r.fields.size() != width)
      throw IngestError("expected " + std::to_string(width) + " columns, got " + std::to_string(r.fields.size()), r.line);
    Point p;
    for (const auto& f : r.fields) p.push_back(parse_double(f, r.line));
    pts.push_back(std::move(p));
  }
  if (pts.size() < 2) throw IngestError("need at least two points", rows.front().line);
  return PointSet(std::move(pts));
}

inline PointSet read_points(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_points(in);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what(), 0);
  }
}

inline void write_points(std::ostream& out, const PointSet& ps) {
  for (std::size_t d = 0; d < ps.dim(); ++d) out << (d ? "," : "") << 'x' << d;
  out << '\n';
  for (const auto& p : ps.points()) {
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? "," : "") << format_double(p[d]);
    out << '\n';
  }
}

// ---- real matrices --------------------------------------------------------

/// Real part only; header c0..c{n-1}.
inline void write_matrix(std::ostream& out, const DenseMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << 'c' << j;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << format_double(std::real(m(i, j)));
    out << '\n';
  }
}

inline DenseMatrix read_matrix(std::istream& in) {
  auto rows = read_rows(in);
  if (rows.empty()) throw IngestError("empty file", 0);
  const std::size_t cols = rows.front().fields.size();
  std::vector<std::string> header;
  for (std::size_t j = 0; j < cols; ++j) header.push_back("c" + std::to_string(j));
  if (rows.front().fields != header) throw IngestError("unexpected matrix header", rows.front().line);
  DenseMatrix m(rows.size() - 1, cols);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].fields.size() != cols) throw IngestError("ragged matrix row", rows[i].line);
    for (std::size_t j = 0; j < cols; ++j) m(i - 1, j) = parse_double(rows[i].fields[j], rows[i].line);
  }
  return m;
}

// ---- indexed scalar columns -----------------------------------------------

inline void write_values(std::ostream& out, const std::string& name, const std::vector<double>& values) {
  out << "index," << name << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << format_double(values[i]) << '\n';
}

inline std::vector<double> read_values(std::istream& in, const std::string& name) {
  std::vector<double> out;
  for (const auto& r : read_table(in, {"index", name})) {
    if (parse_index(r.fields[0], r.line) != out.size()) throw IngestError("index out of sequence", r.line);
    out.push_back(parse_double(r.fields[1], r.line));
  }
  return out;
}

// ---- labels ---------------------------------------------------------------

inline void write_labels(std::ostream& out, const std::vector<std::size_t>& labels) {
  out << "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

inline std::vector<std::size_t> read_labels(std::istream& in) {
  std::vector<std::size_t> out;
  for (const auto& r : read_table(in, {"index", "label"})) {
    if (parse_index(r.fields[0], r.line) != out.size()) throw IngestError("index out of sequence", r.line);
    out.push_back(parse_index(r.fields[1], r.line));
  }
  return out;
}

// ---- trajectories ---------------------------------------------------------

inline const std::vector<std::string>& trajectory_header() {
  static const std::vector<std::string> h{"iteration", "success_prob", "fidelity", "qubit0_p0"};
  return h;
}

inline void write_trajectory(std::ostream& out, const Trajectory& t) {
  out << "iteration,success_prob,fidelity,qubit0_p0\n";
  for (const auto& p : t.points)
    out << p.iteration << ',' << format_double(p.success_probability) << ',' << format_double(p.fidelity) << ','
        << format_double(p.phase_p0.empty() ? 0.0 : p.phase_p0.front()) << '\n';
}

/// Reads back the four written columns; f2 probabilities and other qubit marginals are not stored.
inline Trajectory read_trajectory(std::istream& in) {
  Trajectory t;
  for (const auto& r : read_table(in, trajectory_header())) {
    TrajectoryPoint p;
    p.iteration = parse_index(r.fields[0], r.line);
    p.success_probability = parse_double(r.fields[1], r.line);
    p.fidelity = parse_double(r.fields[2], r.line);
    p.phase_p0 = {parse_double(r.fields[3], r.line)};
    t.points.push_back(std::move(p));
  }
  t.summarize();
  return t;
}

// ---- similarity reports ---------------------------------------------------

inline void write_similarity(std::ostream& out, const std::vector<SimilarityReport>& reports) {
  out << "y_id,method,similarity,rank\n";
  for (const auto& r : reports)
    out << r.y_id << ',' << to_string(r.method) << ',' << format_double(r.similarity) << ',' << r.rank << '\n';
}

inline std::vector<SimilarityReport> read_similarity(std::istream& in) {
  std::vector<SimilarityReport> out;
  for (const auto& r : read_table(in, {"y_id", "method", "similarity", "rank"})) {
    SimilarityReport s;
    s.y_id = r.fields[0];
    if (r.fields[1] == "householder")
      s.method = SimilarityMethod::householder;
    else if (r.fields[1] == "direct")
      s.method = SimilarityMethod::direct;
    else
      throw IngestError("unknown method '" + r.fields[1] + "'", r.line);
    s.similarity = parse_double(r.fields[2], r.line);
    s.rank = parse_index(r.fields[3], r.line);
    out.push_back(std::move(s));
  }
  return out;
}

// ---- Householder decompositions -------------------------------------------

/// term,coefficient,v0..v{d-1}; reflector entries are real for real data.
inline void write_householder(std::ostream& out, const HouseholderSum& h) {
  out << "term,coefficient";
  for (std::size_t d = 0; d < h.dim; ++d) out << ",v" << d;
  out << '\n';
  for (std::size_t j = 0; j < h.terms(); ++j) {
    out << j << ',' << format_double(h.coefficients[j]);
    for (std::size_t d = 0; d < h.dim; ++d) out << ',' << format_double(std::real(h.reflectors[j][d]));
    out << '\n';
  }
}

inline HouseholderSum read_householder(std::istream& in) {
  auto rows = read_rows(in);
  if (rows.empty()) throw IngestError("empty file", 0);
  const auto& head = rows.front().fields;
  if (head.size() < 3 || head[0] != "term" || head[1] != "coefficient")
    throw IngestError("unexpected householder header", rows.front().line);
  HouseholderSum h;
  h.dim = head.size() - 2;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.fields.size() != head.size()) throw IngestError("ragged householder row", r.line);
    if (parse_index(r.fields[0], r.line) != h.terms()) throw IngestError("term out of sequence", r.line);
    h.coefficients.push_back(parse_double(r.fields[1], r.line));
    ComplexVector v(h.dim);
    for (std::size_t d = 0; d < h.dim; ++d) v[d] = parse_double(r.fields[d + 2], r.line);
    h.reflectors.push_back(std::move(v));
  }
  return h;
}

}  // namespace qsc::csv
