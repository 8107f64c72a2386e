#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "etlink/edge_record.hpp"

namespace etlink {

enum class Column { Src, Dst, Weight, Timestamp };

// Column order of an edge-list file; must name src and dst exactly once.
struct EdgeSchema {
  std::vector<Column> columns{Column::Src, Column::Dst};

  // Parses "src,dst[,weight][,timestamp]" (any order). Throws ConfigError.
  static EdgeSchema parse(std::string_view spec);
  bool has(Column c) const;
  std::string to_string() const;
};

// Whitespace- or comma-delimited rows; '#' and '%' start comment lines;
// columns past the schema are ignored. Throws DatasetError with the line
// number on malformed input, and on input without any record.
std::vector<EdgeRecord> parse_edge_list(std::istream& in, const EdgeSchema& schema);
std::vector<EdgeRecord> read_edge_list(const std::string& path, const EdgeSchema& schema);

struct PredictionRow {
  std::size_t rank = 0;  // 1-based
  std::string src;
  std::string dst;
  double score = 0.0;
  bool in_test_set = false;
};

// Score formatted with 12 significant digits.
std::string format_score(double score);

// CSV with header "rank,src,dst,score,in_test_set".
void write_ranked_predictions(const std::vector<PredictionRow>& rows, std::ostream& out);
std::vector<PredictionRow> read_ranked_predictions(std::istream& in);

}  // namespace etlink
