#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fpg {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
const char* toolkit_version();

struct ManifestCheck {
  std::string id;
  std::string op;
  nlohmann::json args = nlohmann::json::object();
  nlohmann::json expected;
  std::string anchor;
  // Long-running; skipped unless RunOptions::include_extended.
  bool extended = false;
};

// Inputs are held as text so a manifest can be run on modified data without
// touching the files.
struct Manifest {
  std::string presentation_name;
  std::string presentation_text;
  // Loaded in order into one word table; later files may use names from
  // earlier ones.
  std::vector<std::pair<std::string, std::string>> word_files;
  // Subgroup name -> word file whose unnamed entries generate it.
  std::map<std::string, std::string> subgroups;
  std::vector<ManifestCheck> checks;
  std::size_t max_cosets = 1'000'000;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Validates structure, unique ids, known operations, argument and expected
// types. `read` maps a file name from the manifest to its contents.
Manifest parse_manifest(const nlohmann::json& doc, const std::function<std::string(const std::string&)>& read);
// Reads a manifest file; data paths are relative to its directory.
Manifest load_manifest(const std::filesystem::path& path);

// Operation names accepted in manifests.
std::vector<std::string> manifest_operations();

struct RunOptions {
  bool include_extended = false;
  unsigned threads = 1;
};

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string op;
  std::string anchor;
  CheckStatus status = CheckStatus::skipped;
  nlohmann::json computed;
  nlohmann::json expected;
  std::string message;
  double elapsed_ms = 0;
};

struct Report {
  std::vector<CheckResult> checks;  // sorted by id
  std::map<std::string, std::string> digests;  // input name -> sha256 hex
  bool pass() const;
  nlohmann::json to_json(bool include_timing = true) const;
};

// Runs every check; coset tables and subgroup presentations are computed
// once and shared. Operation errors become failed checks. Data files that do
// not parse throw ParseError / WordTableError.
Report run_manifest(const Manifest& m, const RunOptions& options = {});

// FPG_THREADS, or 1.
unsigned default_thread_count();

std::string sha256_hex(std::string_view data);

}  // namespace fpg
