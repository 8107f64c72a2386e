#include "etlink/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "etlink/error.hpp"

namespace etlink {

namespace {

std::string_view column_name(Column c) {
  switch (c) {
    case Column::Src:
      return "src";
    case Column::Dst:
      return "dst";
    case Column::Weight:
      return "weight";
    case Column::Timestamp:
      return "timestamp";
  }
  return "?";
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  const auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
  while (k < line.size()) {
    while (k < line.size() && is_sep(line[k])) ++k;
    const std::size_t start = k;
    while (k < line.size() && !is_sep(line[k])) ++k;
    if (k > start) out.push_back(line.substr(start, k - start));
  }
  return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

double parse_double(std::string_view s, std::size_t line_no, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw DatasetError(where(line_no) + "invalid " + what + " '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_int(std::string_view s, std::size_t line_no, const char* what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw DatasetError(where(line_no) + "invalid " + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

EdgeSchema EdgeSchema::parse(std::string_view spec) {
  EdgeSchema schema;
  schema.columns.clear();
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string_view tok =
        spec.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Column c;
    if (tok == "src") {
      c = Column::Src;
    } else if (tok == "dst") {
      c = Column::Dst;
    } else if (tok == "weight") {
      c = Column::Weight;
    } else if (tok == "timestamp") {
      c = Column::Timestamp;
    } else {
      throw ConfigError("schema: unknown column '" + std::string(tok) + "'");
    }
    if (schema.has(c)) throw ConfigError("schema: column '" + std::string(tok) + "' repeated");
    schema.columns.push_back(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!schema.has(Column::Src) || !schema.has(Column::Dst))
    throw ConfigError("schema must contain src and dst");
  return schema;
}

bool EdgeSchema::has(Column c) const {
  for (Column x : columns)
    if (x == c) return true;
  return false;
}

std::string EdgeSchema::to_string() const {
  std::string out;
  for (Column c : columns) {
    if (!out.empty()) out += ',';
    out += column_name(c);
  }
  return out;
}

std::vector<EdgeRecord> parse_edge_list(std::istream& in, const EdgeSchema& schema) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.front().front() == '#' || fields.front().front() == '%') continue;
    if (fields.size() < schema.columns.size()) {
      throw DatasetError(where(line_no) + "expected " + std::to_string(schema.columns.size()) +
                         " columns (" + schema.to_string() + "), found " +
                         std::to_string(fields.size()));
    }
    EdgeRecord r;
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
      switch (schema.columns[c]) {
        case Column::Src:
          r.src = fields[c];
          break;
        case Column::Dst:
          r.dst = fields[c];
          break;
        case Column::Weight:
          r.weight = parse_double(fields[c], line_no, "weight");
          break;
        case Column::Timestamp:
          r.timestamp = parse_int(fields[c], line_no, "timestamp");
          break;
      }
    }
    records.push_back(std::move(r));
  }
  if (in.bad()) throw DatasetError("read error after line " + std::to_string(line_no));
  if (records.empty()) throw DatasetError("edge list contains no edges");
  return records;
}

std::vector<EdgeRecord> read_edge_list(const std::string& path, const EdgeSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open edge list '" + path + "'");
  try {
    return parse_edge_list(in, schema);
  } catch (const DatasetError& e) {
    throw DatasetError(path + ": " + e.what());
  }
}

std::string format_score(double score) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", score);
  return buf;
}

void write_ranked_predictions(const std::vector<PredictionRow>& rows, std::ostream& out) {
  out << "rank,src,dst,score,in_test_set\n";
  for (const auto& r : rows) {
    out << r.rank << ',' << r.src << ',' << r.dst << ',' << format_score(r.score) << ','
        << (r.in_test_set ? "true" : "false") << '\n';
  }
  if (!out) throw std::ios_base::failure("failed writing ranked predictions");
}

std::vector<PredictionRow> read_ranked_predictions(std::istream& in) {
  std::vector<PredictionRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != "rank,src,dst,score,in_test_set")
        throw DatasetError("predictions: unexpected header '" + line + "'");
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      f.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    f.push_back(rest);
    if (f.size() != 5) throw DatasetError(where(line_no) + "expected 5 fields");
    PredictionRow r;
    r.rank = static_cast<std::size_t>(parse_int(f[0], line_no, "rank"));
    r.src = f[1];
    r.dst = f[2];
    r.score = parse_double(f[3], line_no, "score");
    if (f[4] == "true") {
      r.in_test_set = true;
    } else if (f[4] != "false") {
      throw DatasetError(where(line_no) + "invalid in_test_set '" + std::string(f[4]) + "'");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace etlink
