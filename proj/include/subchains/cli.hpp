#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "subchains/bigcount.hpp"
#include "subchains/chaincount.hpp"
#include "subchains/latoracle.hpp"

namespace subchains::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kEnvClosedFormMaxN = "SUBCHAINS_CLOSED_FORM_MAX_N";
inline constexpr const char* kEnvOracleBudget = "SUBCHAINS_ORACLE_BUDGET";

struct Settings {
  int closed_form_max_n = kDefaultClosedFormMaxN;
  std::uint64_t oracle_budget = kDefaultOracleBudget;

  /// Defaults overridden by the environment variables above. Throws
  /// std::invalid_argument on unparsable values.
  static Settings from_environment();
};

/// One result row. `p` holds the string "p" for symbolic output.
struct OutputRecord {
  std::variant<std::int64_t, std::string> p;
  int n = 0;
  std::string F;
  std::string D;
  std::string C;
  std::string method;
  double elapsed_ms = 0.0;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Keys in fixed order: p, n, F, D, C, method, elapsed_ms. One line, no newline.
std::string to_json_line(const OutputRecord& r);
OutputRecord record_from_json(const std::string& line);
std::string csv_header();
std::string to_csv_line(const OutputRecord& r);
std::string to_text_line(const OutputRecord& r);

/// Functions `verify` compares. Tests swap in corrupted versions.
struct VerifyHooks {
  std::function<BigCount(int, std::int64_t)> recurrence = [](int n, std::int64_t p) {
    return x_recurrence(n, p);
  };
  std::function<BigCount(int, std::int64_t, int)> closed_form =
      [](int n, std::int64_t p, int max_n) { return x_closed_form(n, p, max_n); };
};

/// "2:4,3:3" -> {(2,4), (3,3)}: prime and largest rank per entry.
std::vector<std::pair<std::int64_t, int>> parse_oracle_grid(const std::string& spec);

/// Runs the command line (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Settings& settings = {}, const VerifyHooks& hooks = {});

}  // namespace subchains::cli
