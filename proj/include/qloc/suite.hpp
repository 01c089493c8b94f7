#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloc/expr.hpp"

namespace qloc::suite {

class ManifestParseError : public std::runtime_error {
 public:
  ManifestParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// How an entry's residual is judged.
///   exact:   lhs - rhs must vanish identically.
///   fixed:   must vanish up to alpha-degree `order`.
///   config:  `@ order` without a number; uses the runner's order.
enum class OrderMode { exact, fixed, config };

struct IdentityEntry {
  std::string name;
  std::string tag;
  expr::ExprPtr lhs;
  expr::ExprPtr rhs;
  OrderMode mode = OrderMode::exact;
  int order = 0;
  int line = 0;
};

/// Parses `name := lhs == rhs @ (exact|order [N])` lines, `[tag]` section
/// lines and `#` comments.
std::vector<IdentityEntry> parse_manifest(const std::string& text);
std::vector<IdentityEntry> load_manifest(const std::filesystem::path& path);

/// The perturbed copy used as a negative control: negate a nonzero rhs;
/// otherwise flip the top-level + or - of lhs; otherwise turn a top-level
/// comm into dot; otherwise add 1 to lhs.
IdentityEntry negative_control(const IdentityEntry& e);

struct SuiteConfig {
  int order = 3;
  std::string filter;  // substring of the tag; empty selects everything
  int jobs = 1;
};

enum class Status { pass, fail, error };
std::string to_string(Status s);

struct EntryResult {
  std::string name;
  std::string tag;
  Status status = Status::error;
  std::string order;  // "exact" or the number
  std::string residual;
  double ms = 0;
  /// Set when lhs evaluates to a momentum-free scalar (an extracted coefficient).
  std::optional<std::string> coefficient;
};

struct IdentityReport {
  std::string suite;
  int order = 3;
  std::vector<EntryResult> entries;
  int passed = 0;
  int failed = 0;
  int errors = 0;

  [[nodiscard]] bool all_passed() const { return failed == 0 && errors == 0; }
  [[nodiscard]] std::string json() const;
  [[nodiscard]] std::string markdown() const;
  [[nodiscard]] std::string text() const;
};

EntryResult run_entry(const IdentityEntry& e, int order);
IdentityReport run_suite(const std::string& suite_name, const std::vector<IdentityEntry>& entries,
                         const SuiteConfig& config);

/// Writes one plain rendering per expression into `dir`; returns the paths.
std::vector<std::filesystem::path> golden_snapshot(const std::vector<std::string>& exprs,
                                                   const std::filesystem::path& dir,
                                                   const RenderOptions& opts = {},
                                                   int order = 3);
/// Expressions whose current rendering differs from the file in `dir`.
std::vector<std::string> snapshot_diff(const std::vector<std::string>& exprs,
                                       const std::filesystem::path& dir,
                                       const RenderOptions& opts = {}, int order = 3);
std::string snapshot_file_name(const std::string& expr);
std::string snapshot_content(const std::string& expr, const RenderOptions& opts, int order);

}  // namespace qloc::suite
