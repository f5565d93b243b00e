#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "taugraph/families.hpp"
#include "taugraph/io.hpp"
#include "taugraph/laplacian.hpp"

using namespace taugraph;

TEST(EdgeList, ParsesCommentsAndBlanks) {
  std::istringstream in("# header\n\n0,1,1.5  # trailing\n 1 , 2 , 2\n2,0,0.25\n");
  const auto recs = parse_edge_list(in);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[1].a, 1u);
  EXPECT_EQ(recs[1].b, 2u);
  EXPECT_DOUBLE_EQ(recs[0].length, 1.5);
  EXPECT_DOUBLE_EQ(recs[2].length, 0.25);
}

TEST(EdgeList, RejectsMalformedLines) {
  for (const char* text : {"0,1\n", "0,1,2,3\n", "a,1,1\n", "0,-1,1\n", "0,1,abc\n", "0,1,1x\n"}) {
    std::istringstream in(text);
    try {
      parse_edge_list(in);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    }
  }
  std::istringstream zero("0,1,0\n");
  try {
    parse_edge_list(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveLength);
  }
}

TEST(EdgeList, RoundTripIsExact) {
  const MetrizedGraph g = normalize(mm_graph({3, 4}));
  std::ostringstream out;
  write_edge_list(out, g, {"mm 3 4"});
  std::istringstream in(out.str());
  const MetrizedGraph back = from_edge_list(parse_edge_list(in));
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    EXPECT_EQ(back.edges()[i].a, g.edges()[i].a);
    EXPECT_EQ(back.edges()[i].b, g.edges()[i].b);
    EXPECT_EQ(back.edges()[i].length, g.edges()[i].length);
  }
  EXPECT_EQ(out.str().rfind("# mm 3 4\n", 0), 0u);
}

TEST(EdgeList, MissingFile) {
  try {
    read_edge_list_file("/nonexistent/path.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(MatrixDump, DenseRoundTrip) {
  const DiscreteLaplacian lap(complete(4));
  const PseudoInverse lp = pseudo_inverse(lap);
  std::ostringstream out;
  write_dense_matrix(out, lp.entries());
  std::istringstream in(out.str());
  const Eigen::MatrixXd back = read_dense_matrix(in);
  EXPECT_EQ(back, lp.entries());
}

TEST(MatrixDump, TripletFormat) {
  const DiscreteLaplacian lap(path_graph(2));
  std::ostringstream out;
  write_triplet_matrix(out, lap.sparse());
  EXPECT_EQ(out.str(), "3 3 7\n0 0 1\n0 1 -1\n1 0 -1\n1 1 2\n1 2 -1\n2 1 -1\n2 2 1\n");
}
