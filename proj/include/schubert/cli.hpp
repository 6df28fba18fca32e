#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/asymptotics.hpp"
#include "schubert/enumerate.hpp"

namespace schubert::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInfeasible = 2,
  kUsage = 64,
};

std::string engine_version();

/// Parses argv (without the program name), runs the command and writes the
/// JSON or CSV body to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Result cache: one JSON file per entry, written atomically.

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  /// "command|name=value|..." with parameters sorted by name.
  static std::string canonical_key(const std::string& command,
                                   const std::map<std::string, std::string>& parameters);

  std::filesystem::path path_for(const std::string& key) const;

  /// Unreadable, truncated or mismatched entries are reported as misses.
  std::optional<Json> lookup(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path directory_;
};

// ---------------------------------------------------------------------------
// Serialization.

Json to_json(const Feasibility& f);
Json to_json(const TorusSample& sample);
Json to_json(const AsymptoteRow& row);
Json to_json(const CountReport& report, const std::string& command);

std::string csv_header_asymptote();
std::string to_csv(const AsymptoteRow& row);
std::string csv_header_feasibility();
std::string to_csv(const Feasibility& f);

}  // namespace schubert::cli
