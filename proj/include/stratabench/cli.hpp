#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stratabench/poly_json.hpp"

namespace strata {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Bad flags, unreadable or malformed input, invalid parameters.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name. The JSON report goes to `out` (or to
// --out, with a one-line summary on `out`); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report with the "meta" field removed, serialized canonically; reports
// that agree here are byte-identical apart from run metadata.
std::string canonical_report(const json& report);

// JSON document from a path, or UsageError with the byte offset of the
// first syntax error.
json load_json_file(const std::string& path);

}  // namespace strata
