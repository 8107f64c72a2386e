#include <gtest/gtest.h>

#include <sstream>

#include "etlink/error.hpp"
#include "etlink/io.hpp"

using namespace etlink;

namespace {

std::vector<EdgeRecord> parse(const std::string& text, const std::string& schema = "src,dst") {
  std::istringstream in(text);
  return parse_edge_list(in, EdgeSchema::parse(schema));
}

std::string dataset_error(const std::string& text, const std::string& schema = "src,dst") {
  try {
    parse(text, schema);
  } catch (const DatasetError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Schema, ParseAndPrint) {
  const auto s = EdgeSchema::parse("timestamp,src,dst,weight");
  EXPECT_EQ(s.columns.size(), 4u);
  EXPECT_EQ(s.columns[0], Column::Timestamp);
  EXPECT_TRUE(s.has(Column::Weight));
  EXPECT_EQ(s.to_string(), "timestamp,src,dst,weight");
  EXPECT_EQ(EdgeSchema{}.to_string(), "src,dst");
}

TEST(Schema, Errors) {
  EXPECT_THROW(EdgeSchema::parse("src"), ConfigError);
  EXPECT_THROW(EdgeSchema::parse("src,dst,src"), ConfigError);
  EXPECT_THROW(EdgeSchema::parse("src,dst,time"), ConfigError);
  EXPECT_THROW(EdgeSchema::parse(""), ConfigError);
  EXPECT_THROW(EdgeSchema::parse("src,,dst"), ConfigError);
}

TEST(EdgeList, DelimitersCommentsAndExtraColumns) {
  const auto r = parse("# header\n% konect style\n1 2 0.5 10\n\n  3,4,1.5,11 extra\n5\t6\t2\t12\n",
                       "src,dst,weight,timestamp");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].src, "1");
  EXPECT_EQ(*r[0].weight, 0.5);
  EXPECT_EQ(*r[1].timestamp, 11);
  EXPECT_EQ(r[2].dst, "6");
  const auto plain = parse("a b c d\n");
  EXPECT_EQ(plain[0].dst, "b");
  EXPECT_FALSE(plain[0].weight);
  EXPECT_FALSE(plain[0].timestamp);
}

TEST(EdgeList, HandlesCrLf) {
  const auto r = parse("1 2\r\n2 3\r\n", "src,dst");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].dst, "2");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_NE(dataset_error("1 2\n3\n").find("line 2"), std::string::npos);
  EXPECT_NE(dataset_error("1 2 x\n", "src,dst,weight").find("line 1: invalid weight 'x'"),
            std::string::npos);
  EXPECT_NE(dataset_error("1 2 nan\n", "src,dst,weight").find("invalid weight"), std::string::npos);
  EXPECT_NE(dataset_error("# c\n1 2 3.5\n", "src,dst,timestamp").find("line 2: invalid timestamp"),
            std::string::npos);
  EXPECT_NE(dataset_error("").find("no edges"), std::string::npos);
  EXPECT_NE(dataset_error("# only comments\n").find("no edges"), std::string::npos);
}

TEST(EdgeList, MissingFile) {
  EXPECT_THROW(read_edge_list("/nonexistent/edges.txt", EdgeSchema{}), DatasetError);
}

TEST(Predictions, FormatAndRoundTrip) {
  EXPECT_EQ(format_score(2.0 / 3), "0.666666666667");
  EXPECT_EQ(format_score(-1.0), "-1");
  EXPECT_EQ(format_score(1e-20), "1e-20");
  const std::vector<PredictionRow> rows{{1, "a", "b", 0.5, true}, {2, "c", "d", -3.25, false}};
  std::ostringstream out;
  write_ranked_predictions(rows, out);
  EXPECT_EQ(out.str(), "rank,src,dst,score,in_test_set\n1,a,b,0.5,true\n2,c,d,-3.25,false\n");
  std::istringstream in(out.str());
  const auto back = read_ranked_predictions(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].src, "c");
  EXPECT_EQ(back[1].score, -3.25);
  EXPECT_FALSE(back[1].in_test_set);
  EXPECT_TRUE(back[0].in_test_set);
}

TEST(Predictions, ReadErrors) {
  std::istringstream bad_header("rank,src\n");
  EXPECT_THROW(read_ranked_predictions(bad_header), DatasetError);
  std::istringstream bad_flag("rank,src,dst,score,in_test_set\n1,a,b,0.5,maybe\n");
  EXPECT_THROW(read_ranked_predictions(bad_flag), DatasetError);
  std::istringstream short_row("rank,src,dst,score,in_test_set\n1,a,b\n");
  EXPECT_THROW(read_ranked_predictions(short_row), DatasetError);
}
