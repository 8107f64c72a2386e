#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etlink {

// Command-line entry point. args excludes the program name.
// Returns 0 on success, 2 on configuration errors, 3 on dataset errors,
// 1 on anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// preds.csv + "katz" -> preds.katz.csv
std::string prediction_path(const std::string& base, const std::string& predictor);

}  // namespace etlink
