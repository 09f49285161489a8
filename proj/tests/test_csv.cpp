#include <gtest/gtest.h>

#include <sstream>

#include "qsc/csv.hpp"
#include "qsc/random.hpp"

using namespace qsc;

namespace {

template <typename F>
std::size_t ingest_line(F&& fn) {
  try {
    fn();
  } catch (const IngestError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected IngestError";
  return 0;
}

}  // namespace

TEST(Csv, FormatDoubleRoundTripsBitExact) {
  Rng rng(81);
  std::normal_distribution<double> g(0.0, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double x = g(rng);
    EXPECT_EQ(csv::parse_double(csv::format_double(x), 1), x);
  }
  EXPECT_EQ(csv::format_double(0.1), "0.10000000000000001");
}

TEST(Csv, SplitTrimsFields) {
  EXPECT_EQ(csv::split(" a, b ,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(csv::split("1,,2"), (std::vector<std::string>{"1", "", "2"}));
}

TEST(Csv, PointsRoundTripAndOptionalHeader) {
  const PointSet ps({{1.5, -2.0}, {0.1, 3.0}, {1e-300, 7.0}});
  std::stringstream ss;
  csv::write_points(ss, ps);
  EXPECT_EQ(ss.str().substr(0, 6), "x0,x1\n");
  const auto back = csv::read_points(ss);
  EXPECT_EQ(back.points(), ps.points());

  std::istringstream bare("1,2\n3,4\r\n");
  const auto b = csv::read_points(bare);
  EXPECT_EQ(b.count(), 2u);
  EXPECT_EQ(b.points()[1], (Point{3.0, 4.0}));
}

TEST(Csv, MalformedPointsReportTheLine) {
  EXPECT_EQ(ingest_line([] {
              std::istringstream in("x,y\n1,2\n3,oops\n");
              csv::read_points(in);
            }),
            3u);
  EXPECT_EQ(ingest_line([] {
              std::istringstream in("1,2\n3\n");
              csv::read_points(in);
            }),
            2u);
  EXPECT_EQ(ingest_line([] {
              std::istringstream in("1,2\n\n3,4\n");
              csv::read_points(in);
            }),
            2u);
  std::istringstream empty("");
  EXPECT_THROW(csv::read_points(empty), IngestError);
  std::istringstream header_only("x0,x1\n");
  EXPECT_THROW(csv::read_points(header_only), IngestError);
  EXPECT_THROW(csv::read_points(std::string("/nonexistent/points.csv")), IngestError);
}

TEST(Csv, MatrixRoundTrip) {
  Rng rng(82);
  const auto h = random_hermitian(rng, 5, false);
  std::stringstream ss;
  csv::write_matrix(ss, h);
  EXPECT_EQ(max_abs_diff(csv::read_matrix(ss), h), 0.0);
  std::istringstream bad("c0,c1\n1,2\n3\n");
  EXPECT_EQ(ingest_line([&] { csv::read_matrix(bad); }), 3u);
}

TEST(Csv, ValuesAndLabelsRoundTrip) {
  const std::vector<double> v{0.0, -1.25, 3.0e-17, 42.0};
  std::stringstream ss;
  csv::write_values(ss, "eigenvalue", v);
  EXPECT_EQ(csv::read_values(ss, "eigenvalue"), v);

  const std::vector<std::size_t> labels{2, 0, 0, 1};
  std::stringstream ls;
  csv::write_labels(ls, labels);
  EXPECT_EQ(ls.str(), "index,label\n0,2\n1,0\n2,0\n3,1\n");
  EXPECT_EQ(csv::read_labels(ls), labels);

  std::istringstream wrong("index,value\n0,1\n");
  EXPECT_EQ(ingest_line([&] { csv::read_labels(wrong); }), 1u);
  std::istringstream seq("index,label\n0,1\n2,1\n");
  EXPECT_EQ(ingest_line([&] { csv::read_labels(seq); }), 3u);
  std::istringstream neg("index,label\n0,-1\n");
  EXPECT_EQ(ingest_line([&] { csv::read_labels(neg); }), 2u);
}

TEST(Csv, TrajectoryRoundTrip) {
  Trajectory t;
  t.points.push_back({0, 0.25, 0.0, 0.5, {0.75, 0.5}});
  t.points.push_back({1, 0.5, 0.0, 0.9, {0.5, 0.5}});
  t.points.push_back({2, 0.125, 0.0, 0.3, {0.9, 0.5}});
  t.summarize();
  std::stringstream ss;
  csv::write_trajectory(ss, t);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "iteration,success_prob,fidelity,qubit0_p0");
  const auto back = csv::read_trajectory(ss);
  ASSERT_EQ(back.points.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back.points[i].iteration, t.points[i].iteration);
    EXPECT_EQ(back.points[i].success_probability, t.points[i].success_probability);
    EXPECT_EQ(back.points[i].fidelity, t.points[i].fidelity);
    EXPECT_EQ(back.points[i].phase_p0.front(), t.points[i].phase_p0.front());
  }
  EXPECT_EQ(back.peak_iteration, 1u);
}

TEST(Csv, SimilarityRoundTrip) {
  const std::vector<SimilarityReport> r{{"A", 0.9, SimilarityMethod::householder, 1},
                                        {"B", 0.1, SimilarityMethod::direct, 2}};
  std::stringstream ss;
  csv::write_similarity(ss, r);
  const auto back = csv::read_similarity(ss);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].y_id, r[i].y_id);
    EXPECT_EQ(back[i].similarity, r[i].similarity);
    EXPECT_EQ(back[i].method, r[i].method);
    EXPECT_EQ(back[i].rank, r[i].rank);
  }
  std::istringstream bad("y_id,method,similarity,rank\nA,guess,0.5,1\n");
  EXPECT_EQ(ingest_line([&] { csv::read_similarity(bad); }), 2u);
}

TEST(Csv, HouseholderRoundTrip) {
  const auto h = householder_decompose(std::vector<Point>{{1.0, 2.0, 2.0}, {0.0, 0.0, 0.0}, {-3.0, 0.0, 4.0}});
  std::stringstream ss;
  csv::write_householder(ss, h);
  const auto back = csv::read_householder(ss);
  EXPECT_EQ(back.terms(), h.terms());
  EXPECT_EQ(back.coefficients, h.coefficients);
  EXPECT_LE(max_abs_diff(back.reconstruct(), h.reconstruct()), 1e-15);
  std::istringstream empty("");
  EXPECT_THROW(csv::read_householder(empty), IngestError);
}
