#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace etlink {

// One row of an edge-list dataset, labels as they appear in the file.
struct EdgeRecord {
  std::string src;
  std::string dst;
  std::optional<double> weight;
  std::optional<std::int64_t> timestamp;

  bool operator==(const EdgeRecord&) const = default;
};

}  // namespace etlink
