#pragma once

// Command-line front end: argument handling, JSON/text output and the
// on-disk table cache.

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace qschubert::cli {

inline constexpr int kCacheVersion = 1;

/// Versioned JSON files `{kind}_{ring}_v{version}.json` in one directory.
/// Unreadable, truncated or mismatched files read as absent.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir, int version = kCacheVersion);
  /// $QSCHUBERT_CACHE, else ~/.qschubert-cache.
  static TableCache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const std::string& kind, const std::string& ring) const;

  std::optional<nlohmann::json> load(const std::string& kind, const std::string& ring) const;
  /// Writes a temporary file next to the target, then renames it into place.
  void store(const std::string& kind, const std::string& ring, const nlohmann::json& data) const;

 private:
  std::filesystem::path dir_;
  int version_;
};

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qschubert::cli
