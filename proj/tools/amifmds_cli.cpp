// amifmds: information-theoretic dependency maps for multivariate time-series.
//
//   amifmds synth   --parents 8 --alpha 1e-3 --len 2048 --seed 7 --out-dir run/
//   amifmds analyze run/series.csv --measure amif --q 0.5 --nf 16 --mds-dim 2 --out-dir run/
//   amifmds mds | cluster | render | ari | replay ...
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numerical failure.

#include "amifmds/dbscan.hpp"
#include "amifmds/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

namespace {

using amifmds::StageError;

void print_diagnostics(const amifmds::RunResult& r) {
  for (const auto& d : r.diagnostics) std::cerr << d << '\n';
}

void print_outputs(const amifmds::RunResult& r) {
  for (const auto& f : r.files) std::cout << f.string() << '\n';
  std::cout << r.manifest_path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AMIF-MDS: aggregate mutual information in frequency, MDS embedding and DBSCAN clustering"};
  app.set_version_flag("--version", std::string(amifmds::kToolVersion));
  app.set_config("--config", "", "Key-value (TOML/INI) file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  // synth
  amifmds::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate parent AR(3) / squared-child benchmark series");
  synth_cmd->add_option("--parents", synth.synth.n_parents, "Number of parent processes")->capture_default_str();
  synth_cmd->add_option("--alpha", synth.synth.trend_scale, "Trend scale: slopes drawn from U[-alpha, alpha]")->capture_default_str();
  synth_cmd->add_option("--len", synth.synth.length, "Series length T")->capture_default_str();
  synth_cmd->add_option("--seed", synth.synth.seed, "RNG seed")->capture_default_str();
  synth_cmd->add_flag("--allow-nonstationary", synth.synth.allow_nonstationary,
                      "Keep AR draws with characteristic roots on or outside the unit circle");
  bool synth_raw = false;
  synth_cmd->add_flag("--no-standardize", synth_raw, "Write the raw (trended) series");
  synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")->capture_default_str();

  // analyze
  amifmds::AnalyzeOptions analyze;
  std::string measure = "amif";
  std::string transform = "membership";
  std::string normalization = "mean-frequency-count";
  bool keep_incomplete_error = false;
  bool no_standardize = false;
  double dbscan_eps = 0.0;
  int dbscan_minpts = 1;
  std::size_t max_lag = 0;
  double sample_interval = 0.0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* analyze_cmd = app.add_subcommand("analyze", "Similarity -> dissimilarity -> MDS -> DBSCAN on a series CSV");
  analyze_cmd->add_option("input", analyze.input, "Series CSV (header row of names)")->required();
  analyze_cmd->add_option("--out-dir", analyze.out_dir, "Output directory")->capture_default_str();
  analyze_cmd->add_option("--measure", measure, "amif | macc | maccoeff | euclidean")
      ->check(CLI::IsMember({"amif", "macc", "maccoeff", "euclidean"}))
      ->capture_default_str();
  analyze_cmd->add_option("--q", analyze.amif.q, "Top fraction of frequency pairs kept")->capture_default_str();
  analyze_cmd->add_option("--nf", analyze.amif.n_f, "FFT length / frequency bins")->capture_default_str();
  analyze_cmd->add_option("--k", analyze.amif.mi.k, "KSG neighbor count")->capture_default_str();
  analyze_cmd->add_option("--distance-floor", analyze.amif.mi.distance_floor, "Lower bound on k-NN radius")->capture_default_str();
  analyze_cmd->add_option("--normalization", normalization, "mean-frequency-count | none")
      ->check(CLI::IsMember({"mean-frequency-count", "none"}))
      ->capture_default_str();
  auto* lag_opt = analyze_cmd->add_option("--max-lag", max_lag, "MACC lag window (default min(T-1, T/4))");
  analyze_cmd->add_option("--transform", transform, "membership | logarithmic")
      ->check(CLI::IsMember({"membership", "logarithmic", "log"}))
      ->capture_default_str();
  analyze_cmd->add_option("--epsilon", analyze.transform.epsilon, "Offset inside the logarithm")->capture_default_str();
  analyze_cmd->add_option("--mds-dim", analyze.mds_dim, "Embedding dimension")->capture_default_str();
  auto* eps_opt = analyze_cmd->add_option("--dbscan-eps", dbscan_eps, "Run DBSCAN with this radius");
  analyze_cmd->add_option("--dbscan-minpts", dbscan_minpts, "DBSCAN minimum neighborhood size")->capture_default_str();
  analyze_cmd->add_flag("--svg", analyze.svg, "Also write embedding.svg");
  analyze_cmd->add_flag("--strict", keep_incomplete_error, "Fail on incomplete columns instead of dropping them");
  analyze_cmd->add_flag("--no-standardize", no_standardize, "Skip per-column standardization");
  auto* interval_opt = analyze_cmd->add_option("--sample-interval-ms", sample_interval, "Sampling interval metadata");
  analyze_cmd->add_option("--threads", threads, "Worker threads for the pair loop")->capture_default_str();

  // mds
  amifmds::MdsOptions mds;
  auto* mds_cmd = app.add_subcommand("mds", "Classical MDS of a dissimilarity CSV");
  mds_cmd->add_option("input", mds.input, "Dissimilarity CSV")->required();
  mds_cmd->add_option("-o,--output", mds.output, "Embedding CSV")->required();
  mds_cmd->add_option("--dim", mds.dim, "Embedding dimension")->capture_default_str();

  // cluster
  amifmds::ClusterOptions cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "DBSCAN over an embedding CSV");
  cluster_cmd->add_option("input", cluster.input, "Embedding CSV")->required();
  cluster_cmd->add_option("-o,--output", cluster.output, "Embedding CSV with cluster column")->required();
  cluster_cmd->add_option("--eps", cluster.dbscan.eps, "Neighborhood radius")->capture_default_str();
  cluster_cmd->add_option("--minpts", cluster.dbscan.min_pts, "Minimum neighborhood size")->capture_default_str();

  // render
  amifmds::RenderOptions render;
  auto* render_cmd = app.add_subcommand("render", "SVG scatter of a 2-D or 3-D embedding CSV");
  render_cmd->add_option("input", render.input, "Embedding CSV")->required();
  render_cmd->add_option("-o,--output", render.output, "SVG file")->required();

  // ari
  std::filesystem::path ari_a;
  std::filesystem::path ari_b;
  auto* ari_cmd = app.add_subcommand("ari", "Adjusted Rand index between two labelings");
  ari_cmd->add_option("a", ari_a, "Labels CSV or clustered embedding CSV")->required();
  ari_cmd->add_option("b", ari_b, "Labels CSV or clustered embedding CSV")->required();

  // replay
  std::filesystem::path replay_manifest;
  std::filesystem::path replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay_cmd->add_option("manifest", replay_manifest, "manifest.json")->required();
  auto* replay_out_opt = replay_cmd->add_option("--out-dir", replay_out, "Write outputs here instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? amifmds::kExitOk : amifmds::kExitUsage;
  }

  try {
    if (*synth_cmd) {
      synth.synth.standardize = !synth_raw;
      const auto r = amifmds::run_synth(synth);
      print_diagnostics(r);
      print_outputs(r);
    } else if (*analyze_cmd) {
      try {
        analyze.measure = amifmds::parse_measure(measure);
        analyze.transform.kind = amifmds::parse_transform(transform);
        analyze.amif.normalization = amifmds::parse_normalization(normalization);
      } catch (const std::invalid_argument& e) {
        throw StageError("config", e.what(), amifmds::kExitUsage);
      }
      analyze.drop_incomplete = !keep_incomplete_error;
      analyze.standardize = !no_standardize;
      analyze.threads = threads;
      if (*lag_opt) analyze.max_lag = max_lag;
      if (*eps_opt) analyze.dbscan = amifmds::DbscanConfig{dbscan_eps, dbscan_minpts};
      if (*interval_opt) analyze.sample_interval_ms = sample_interval;
      const auto r = amifmds::run_analyze(analyze);
      print_diagnostics(r);
      print_outputs(r);
    } else if (*mds_cmd) {
      const auto r = amifmds::run_mds(mds);
      print_diagnostics(r);
      print_outputs(r);
    } else if (*cluster_cmd) {
      const auto r = amifmds::run_cluster(cluster);
      print_outputs(r);
    } else if (*render_cmd) {
      const auto r = amifmds::run_render(render);
      print_outputs(r);
    } else if (*ari_cmd) {
      std::cout << amifmds::run_ari(ari_a, ari_b) << '\n';
    } else if (*replay_cmd) {
      const auto r = amifmds::replay(replay_manifest,
                                     *replay_out_opt ? std::optional<std::filesystem::path>(replay_out) : std::nullopt);
      print_diagnostics(r);
      print_outputs(r);
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return amifmds::kExitData;
  }
  return amifmds::kExitOk;
}
