#pragma once

#include "amifmds/amif.hpp"
#include "amifmds/dbscan.hpp"
#include "amifmds/synth.hpp"
#include "amifmds/transform.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amifmds {

inline constexpr std::string_view kToolVersion = "1.0.0";

// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitNumerical = 4,
};

// A failed pipeline stage. what() is prefixed with the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message, int exit_code)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)), exit_code_(exit_code) {}

  const std::string& stage() const { return stage_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

enum class Measure { Amif, Macc, Maccoeff, Euclidean };

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view text);

struct RunResult {
  std::vector<std::filesystem::path> files;  // data outputs, manifest excluded
  std::filesystem::path manifest_path;
  nlohmann::json manifest;
  std::vector<std::string> diagnostics;  // lines for the error stream
};

struct SynthOptions {
  SynthConfig synth;
  std::filesystem::path out_dir = ".";
};

// Writes series.csv, labels.csv and manifest.json into out_dir.
RunResult run_synth(const SynthOptions& opts);

struct AnalyzeOptions {
  std::filesystem::path input;
  std::filesystem::path out_dir = ".";
  bool drop_incomplete = true;
  bool standardize = true;
  std::optional<double> sample_interval_ms;
  Measure measure = Measure::Amif;
  AmifConfig amif;
  std::optional<std::size_t> max_lag;  // MACC lag window; default min(T-1, T/4)
  TransformConfig transform;
  Eigen::Index mds_dim = 2;
  std::optional<DbscanConfig> dbscan;
  bool svg = false;
  unsigned threads = 1;  // does not affect outputs

  void validate() const;
};

// Writes similarity.csv (not for euclidean), dissimilarity.csv,
// embedding.csv, optionally embedding.svg, and manifest.json. All outputs
// are computed before the first file is written.
RunResult run_analyze(const AnalyzeOptions& opts);

struct MdsOptions {
  std::filesystem::path input;   // dissimilarity CSV
  std::filesystem::path output;  // embedding CSV
  Eigen::Index dim = 2;
};
RunResult run_mds(const MdsOptions& opts);

struct ClusterOptions {
  std::filesystem::path input;   // embedding CSV
  std::filesystem::path output;  // embedding CSV with cluster column
  DbscanConfig dbscan;
};
RunResult run_cluster(const ClusterOptions& opts);

struct RenderOptions {
  std::filesystem::path input;   // embedding CSV
  std::filesystem::path output;  // SVG
};
RunResult run_render(const RenderOptions& opts);

// ARI between two label files (labels CSV or clustered embedding CSV),
// matched by series name.
double run_ari(const std::filesystem::path& a, const std::filesystem::path& b);

// Re-executes the run recorded in a manifest. With out_dir set, outputs go
// there instead of the recorded locations. Input digests must match.
RunResult replay(const std::filesystem::path& manifest_path,
                 const std::optional<std::filesystem::path>& out_dir = std::nullopt);

std::string sha256_hex(std::string_view data);

}  // namespace amifmds
