#include "amifmds/pipeline.hpp"

#include "amifmds/baselines.hpp"
#include "amifmds/errors.hpp"
#include "amifmds/matrix_io.hpp"
#include "amifmds/mds.hpp"
#include "amifmds/render.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <memory>

namespace amifmds {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::Amif: return "amif";
    case Measure::Macc: return "macc";
    case Measure::Maccoeff: return "maccoeff";
    case Measure::Euclidean: return "euclidean";
  }
  return "?";
}

Measure parse_measure(std::string_view text) {
  if (text == "amif") return Measure::Amif;
  if (text == "macc") return Measure::Macc;
  if (text == "maccoeff") return Measure::Maccoeff;
  if (text == "euclidean") return Measure::Euclidean;
  throw std::invalid_argument("unknown measure '" + std::string(text) + "'");
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256: digest computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

void AnalyzeOptions::validate() const {
  if (input.empty()) throw std::invalid_argument("analyze: input file required");
  if (measure == Measure::Amif) amif.validate();
  if (mds_dim < 1) throw std::invalid_argument("analyze: --mds-dim must be >= 1");
  if (!(transform.epsilon > 0.0)) throw std::invalid_argument("analyze: epsilon must be positive");
  if (dbscan) {
    if (!(dbscan->eps > 0.0)) throw std::invalid_argument("analyze: --dbscan-eps must be positive");
    if (dbscan->min_pts < 1) throw std::invalid_argument("analyze: --dbscan-minpts must be >= 1");
  }
  if (svg && (mds_dim < 2 || mds_dim > 3)) throw std::invalid_argument("analyze: --svg needs --mds-dim 2 or 3");
}

namespace {

// Stage runner: times the stage and converts failures into StageError with
// the stage name and the matching exit code.
class Stages {
 public:
  template <typename Fn>
  auto run(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record(name, start);
      } else {
        auto result = fn();
        record(name, start);
        return result;
      }
    } catch (const StageError&) {
      throw;
    } catch (const NumericalError& e) {
      throw StageError(name, e.what(), kExitNumerical);
    } catch (const std::exception& e) {
      throw StageError(name, e.what(), kExitData);
    }
  }

  const json& timings() const { return timings_; }

 private:
  void record(const std::string& name, std::chrono::steady_clock::time_point start) {
    timings_[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  json timings_ = json::object();
};

struct PendingFile {
  fs::path path;
  std::string contents;
};

json base_manifest(std::string_view command) {
  json m;
  m["tool"] = "amifmds";
  m["version"] = std::string(kToolVersion);
  m["command"] = std::string(command);
  return m;
}

json input_record(const fs::path& path, const std::string& contents) {
  return {{"path", fs::absolute(path).lexically_normal().string()}, {"sha256", sha256_hex(contents)}};
}

// Writes every pending file, then the manifest (carrying output digests).
RunResult commit(Stages& stages, std::vector<PendingFile> files, const fs::path& manifest_path, json manifest,
                 std::vector<std::string> diagnostics) {
  RunResult result;
  stages.run("write", [&] {
    for (const auto& f : files) {
      if (f.path.has_parent_path()) fs::create_directories(f.path.parent_path());
    }
    json outputs = json::array();
    for (const auto& f : files) {
      write_file_atomic(f.path, f.contents);
      outputs.push_back({{"path", f.path.filename().string()}, {"sha256", sha256_hex(f.contents)}});
      result.files.push_back(f.path);
    }
    manifest["outputs"] = std::move(outputs);
  });
  manifest["timing_ms"] = stages.timings();
  manifest["warnings"] = diagnostics;
  if (manifest_path.has_parent_path()) fs::create_directories(manifest_path.parent_path());
  write_file_atomic(manifest_path, manifest.dump(2) + "\n");
  result.manifest_path = manifest_path;
  result.manifest = std::move(manifest);
  result.diagnostics = std::move(diagnostics);
  return result;
}

std::string read_input(Stages& stages, const fs::path& path) {
  return stages.run("read", [&] { return read_file(path); });
}

json synth_config_json(const SynthOptions& o) {
  return {{"length", o.synth.length},
          {"parents", o.synth.n_parents},
          {"alpha", o.synth.trend_scale},
          {"seed", o.synth.seed},
          {"standardize", o.synth.standardize},
          {"allow_nonstationary", o.synth.allow_nonstationary},
          {"out_dir", fs::absolute(o.out_dir).lexically_normal().string()}};
}

json analyze_config_json(const AnalyzeOptions& o, std::size_t resolved_max_lag) {
  json c;
  c["input"] = fs::absolute(o.input).lexically_normal().string();
  c["out_dir"] = fs::absolute(o.out_dir).lexically_normal().string();
  c["drop_incomplete"] = o.drop_incomplete;
  c["standardize"] = o.standardize;
  c["sample_interval_ms"] = o.sample_interval_ms ? json(*o.sample_interval_ms) : json(nullptr);
  c["measure"] = std::string(to_string(o.measure));
  c["amif"] = {{"nf", o.amif.n_f},
               {"q", o.amif.q},
               {"normalization", std::string(to_string(o.amif.normalization))},
               {"mi", {{"k", o.amif.mi.k}, {"distance_floor", o.amif.mi.distance_floor}}}};
  c["max_lag"] = o.measure == Measure::Macc ? json(resolved_max_lag) : json(nullptr);
  c["transform"] = {{"kind", std::string(to_string(o.transform.kind))}, {"epsilon", o.transform.epsilon}};
  c["mds_dim"] = o.mds_dim;
  c["dbscan"] = o.dbscan ? json{{"eps", o.dbscan->eps}, {"min_pts", o.dbscan->min_pts}} : json(nullptr);
  c["svg"] = o.svg;
  c["threads"] = o.threads;
  return c;
}

json eigen_json(const RealVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

RunResult run_synth(const SynthOptions& opts) {
  try {
    opts.synth.validate();
  } catch (const std::invalid_argument& e) {
    throw StageError("config", e.what(), kExitUsage);
  }
  Stages stages;
  const SynthResult data = stages.run("generate", [&] { return generate(opts.synth); });

  std::vector<PendingFile> files;
  files.push_back({opts.out_dir / "series.csv", format_csv(data.table)});
  files.push_back({opts.out_dir / "labels.csv", format_labels_csv(data.table.names, data.labels.labels)});

  json manifest = base_manifest("synth");
  manifest["config"] = synth_config_json(opts);
  manifest["inputs"] = json::array();
  return commit(stages, std::move(files), opts.out_dir / "manifest.json", std::move(manifest), data.warnings);
}

RunResult run_analyze(const AnalyzeOptions& opts) {
  try {
    opts.validate();
  } catch (const std::invalid_argument& e) {
    throw StageError("config", e.what(), kExitUsage);
  }

  Stages stages;
  std::vector<std::string> diagnostics;
  const std::string raw = read_input(stages, opts.input);
  LoadResult loaded = stages.run("load", [&] { return parse_csv(raw, opts.drop_incomplete); });
  for (const auto& ex : loaded.excluded) diagnostics.push_back(format_exclusion(ex));
  SeriesTable table = std::move(loaded.table);
  table.sample_interval_ms = opts.sample_interval_ms;
  if (opts.standardize) table = stages.run("standardize", [&] { return standardize(table); });

  const std::size_t max_lag = opts.max_lag.value_or(default_max_lag(static_cast<std::size_t>(table.length())));

  std::optional<SimilarityMatrix> similarity;
  DissimilarityMatrix dissimilarity;
  if (opts.measure == Measure::Euclidean) {
    dissimilarity = stages.run("measure", [&] { return euclidean_dissim(table); });
  } else {
    similarity = stages.run("measure", [&] {
      switch (opts.measure) {
        case Measure::Amif: return similarity_matrix(table, opts.amif, opts.threads);
        case Measure::Macc: return baseline_similarity_matrix(table, BaselineMetric::Macc, max_lag, opts.threads);
        default: return baseline_similarity_matrix(table, BaselineMetric::Maccoeff, 0, opts.threads);
      }
    });
    similarity = stages.run("refine", [&] { return refine(*similarity); });
    dissimilarity = stages.run("transform", [&] { return to_dissimilarity(*similarity, opts.transform); });
  }

  const Embedding embedding = stages.run("mds", [&] { return classical_mds(dissimilarity, opts.mds_dim); });
  for (const auto& w : embedding.warnings) diagnostics.push_back(w);

  std::optional<ClusterAssignment> clusters;
  if (opts.dbscan) clusters = stages.run("dbscan", [&] { return dbscan(embedding.coords, *opts.dbscan); });

  std::vector<PendingFile> files;
  if (similarity) files.push_back({opts.out_dir / "similarity.csv", format_similarity_csv(*similarity)});
  files.push_back({opts.out_dir / "dissimilarity.csv", format_dissimilarity_csv(dissimilarity)});
  files.push_back({opts.out_dir / "embedding.csv", format_embedding_csv(embedding, clusters ? &clusters->labels : nullptr)});
  if (opts.svg) {
    const std::string svg = stages.run("render", [&] {
      return render_scatter(embedding.names, embedding.coords, clusters ? clusters->labels : std::vector<int>{});
    });
    files.push_back({opts.out_dir / "embedding.svg", svg});
  }

  json manifest = base_manifest("analyze");
  manifest["config"] = analyze_config_json(opts, max_lag);
  manifest["inputs"] = json::array({input_record(opts.input, raw)});
  manifest["series"] = table.names;
  manifest["excluded"] = json::array();
  for (const auto& ex : loaded.excluded) manifest["excluded"].push_back({{"name", ex.name}, {"reason", ex.reason}});
  manifest["eigenvalues"] = eigen_json(embedding.eigenvalues);
  manifest["stress"] = stress(dissimilarity, embedding);
  manifest["clusters"] = clusters ? json(clusters->cluster_count()) : json(nullptr);
  return commit(stages, std::move(files), opts.out_dir / "manifest.json", std::move(manifest), std::move(diagnostics));
}

RunResult run_mds(const MdsOptions& opts) {
  Stages stages;
  const std::string raw = read_input(stages, opts.input);
  const DissimilarityMatrix g = stages.run("load", [&] { return parse_dissimilarity_csv(raw); });
  if (opts.dim < 1 || opts.dim > g.size() - 1) {
    throw StageError("config", "--dim must lie in [1, " + std::to_string(g.size() - 1) + "]", kExitUsage);
  }
  const Embedding e = stages.run("mds", [&] { return classical_mds(g, opts.dim); });

  json manifest = base_manifest("mds");
  manifest["config"] = {{"input", fs::absolute(opts.input).lexically_normal().string()},
                        {"output", fs::absolute(opts.output).lexically_normal().string()},
                        {"dim", opts.dim}};
  manifest["inputs"] = json::array({input_record(opts.input, raw)});
  manifest["eigenvalues"] = eigen_json(e.eigenvalues);
  manifest["stress"] = stress(g, e);
  auto manifest_path = opts.output;
  manifest_path += ".manifest.json";
  return commit(stages, {{opts.output, format_embedding_csv(e)}}, manifest_path, std::move(manifest), e.warnings);
}

RunResult run_cluster(const ClusterOptions& opts) {
  if (!(opts.dbscan.eps > 0.0) || opts.dbscan.min_pts < 1) {
    throw StageError("config", "dbscan needs eps > 0 and min_pts >= 1", kExitUsage);
  }
  Stages stages;
  const std::string raw = read_input(stages, opts.input);
  const EmbeddingTable table = stages.run("load", [&] { return parse_embedding_csv(raw); });
  const ClusterAssignment clusters = stages.run("dbscan", [&] { return dbscan(table.coords, opts.dbscan); });

  Embedding e;
  e.names = table.names;
  e.coords = table.coords;

  json manifest = base_manifest("cluster");
  manifest["config"] = {{"input", fs::absolute(opts.input).lexically_normal().string()},
                        {"output", fs::absolute(opts.output).lexically_normal().string()},
                        {"dbscan", {{"eps", opts.dbscan.eps}, {"min_pts", opts.dbscan.min_pts}}}};
  manifest["inputs"] = json::array({input_record(opts.input, raw)});
  manifest["clusters"] = clusters.cluster_count();
  auto manifest_path = opts.output;
  manifest_path += ".manifest.json";
  return commit(stages, {{opts.output, format_embedding_csv(e, &clusters.labels)}}, manifest_path,
                std::move(manifest), {});
}

RunResult run_render(const RenderOptions& opts) {
  Stages stages;
  const std::string raw = read_input(stages, opts.input);
  const EmbeddingTable table = stages.run("load", [&] { return parse_embedding_csv(raw); });
  const std::string svg = stages.run("render", [&] {
    return render_scatter(table.names, table.coords, table.clusters.value_or(std::vector<int>{}));
  });

  json manifest = base_manifest("render");
  manifest["config"] = {{"input", fs::absolute(opts.input).lexically_normal().string()},
                        {"output", fs::absolute(opts.output).lexically_normal().string()}};
  manifest["inputs"] = json::array({input_record(opts.input, raw)});
  auto manifest_path = opts.output;
  manifest_path += ".manifest.json";
  return commit(stages, {{opts.output, svg}}, manifest_path, std::move(manifest), {});
}

double run_ari(const fs::path& a, const fs::path& b) {
  Stages stages;
  const NamedLabels la = stages.run("load", [&] { return parse_labels_csv(read_file(a)); });
  const NamedLabels lb = stages.run("load", [&] { return parse_labels_csv(read_file(b)); });
  return stages.run("ari", [&] {
    if (la.names.size() != lb.names.size()) throw DataError("label files cover different numbers of series");
    std::map<std::string, int> by_name;
    for (std::size_t i = 0; i < lb.names.size(); ++i) by_name[lb.names[i]] = lb.labels[i];
    std::vector<int> aligned;
    for (const auto& n : la.names) {
      const auto it = by_name.find(n);
      if (it == by_name.end()) throw DataError("series '" + n + "' missing from second label file");
      aligned.push_back(it->second);
    }
    return adjusted_rand_index(la.labels, aligned);
  });
}

namespace {

fs::path relocate(const fs::path& recorded, const std::optional<fs::path>& out_dir) {
  return out_dir ? *out_dir / recorded.filename() : recorded;
}

void verify_inputs(const json& manifest) {
  for (const auto& in : manifest.at("inputs")) {
    const fs::path path = in.at("path").get<std::string>();
    const std::string digest = sha256_hex(read_file(path));
    if (digest != in.at("sha256").get<std::string>()) {
      throw DataError("input '" + path.string() + "' changed since the manifest was written");
    }
  }
}

}  // namespace

RunResult replay(const fs::path& manifest_path, const std::optional<fs::path>& out_dir) {
  json m;
  std::string command;
  try {
    m = json::parse(read_file(manifest_path));
    command = m.at("command").get<std::string>();
    verify_inputs(m);
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("replay", e.what(), kExitData);
  }
  const json& c = m.at("config");

  try {
    if (command == "synth") {
      SynthOptions o;
      o.synth.length = c.at("length").get<Eigen::Index>();
      o.synth.n_parents = c.at("parents").get<Eigen::Index>();
      o.synth.trend_scale = c.at("alpha").get<double>();
      o.synth.seed = c.at("seed").get<std::uint64_t>();
      o.synth.standardize = c.at("standardize").get<bool>();
      o.synth.allow_nonstationary = c.at("allow_nonstationary").get<bool>();
      o.out_dir = out_dir.value_or(fs::path(c.at("out_dir").get<std::string>()));
      return run_synth(o);
    }
    if (command == "analyze") {
      AnalyzeOptions o;
      o.input = c.at("input").get<std::string>();
      o.out_dir = out_dir.value_or(fs::path(c.at("out_dir").get<std::string>()));
      o.drop_incomplete = c.at("drop_incomplete").get<bool>();
      o.standardize = c.at("standardize").get<bool>();
      if (!c.at("sample_interval_ms").is_null()) o.sample_interval_ms = c.at("sample_interval_ms").get<double>();
      o.measure = parse_measure(c.at("measure").get<std::string>());
      const json& a = c.at("amif");
      o.amif.n_f = a.at("nf").get<Eigen::Index>();
      o.amif.q = a.at("q").get<double>();
      o.amif.normalization = parse_normalization(a.at("normalization").get<std::string>());
      o.amif.mi.k = a.at("mi").at("k").get<int>();
      o.amif.mi.distance_floor = a.at("mi").at("distance_floor").get<double>();
      if (!c.at("max_lag").is_null()) o.max_lag = c.at("max_lag").get<std::size_t>();
      o.transform.kind = parse_transform(c.at("transform").at("kind").get<std::string>());
      o.transform.epsilon = c.at("transform").at("epsilon").get<double>();
      o.mds_dim = c.at("mds_dim").get<Eigen::Index>();
      if (!c.at("dbscan").is_null()) {
        o.dbscan = DbscanConfig{c.at("dbscan").at("eps").get<double>(), c.at("dbscan").at("min_pts").get<int>()};
      }
      o.svg = c.at("svg").get<bool>();
      o.threads = c.at("threads").get<unsigned>();
      return run_analyze(o);
    }
    if (command == "mds") {
      MdsOptions o;
      o.input = c.at("input").get<std::string>();
      o.output = relocate(c.at("output").get<std::string>(), out_dir);
      o.dim = c.at("dim").get<Eigen::Index>();
      return run_mds(o);
    }
    if (command == "cluster") {
      ClusterOptions o;
      o.input = c.at("input").get<std::string>();
      o.output = relocate(c.at("output").get<std::string>(), out_dir);
      o.dbscan = DbscanConfig{c.at("dbscan").at("eps").get<double>(), c.at("dbscan").at("min_pts").get<int>()};
      return run_cluster(o);
    }
    if (command == "render") {
      RenderOptions o;
      o.input = c.at("input").get<std::string>();
      o.output = relocate(c.at("output").get<std::string>(), out_dir);
      return run_render(o);
    }
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError("replay", std::string("malformed manifest: ") + e.what(), kExitData);
  }
  throw StageError("replay", "unknown command '" + command + "' in manifest", kExitData);
}

}  // namespace amifmds
