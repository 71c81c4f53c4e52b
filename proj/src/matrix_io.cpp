#include "amifmds/matrix_io.hpp"

#include "amifmds/errors.hpp"
#include "amifmds/mds.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unordered_set>

namespace amifmds {

std::vector<std::string> default_names(Eigen::Index count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) names.push_back("s" + std::to_string(i + 1));
  return names;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::optional<double> parse_number(std::string_view token) {
  if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
  if (token == "-inf") return -std::numeric_limits<double>::infinity();
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  if (std::isnan(value)) return std::nullopt;
  return value;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

struct ParsedSquare {
  std::vector<std::string> names;
  RealMatrix values;
};

ParsedSquare parse_square_csv(std::string_view text, const char* what) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DataError(std::string(what) + ": empty file");
  const auto header = split_csv_line(lines[0]);
  if (header.size() < 2) throw DataError(std::string(what) + ": header has no series names");
  ParsedSquare out;
  out.names.assign(header.begin() + 1, header.end());
  const auto m = static_cast<Eigen::Index>(out.names.size());
  if (static_cast<Eigen::Index>(lines.size()) - 1 != m) {
    throw DataError(std::string(what) + ": expected " + std::to_string(m) + " rows, found " +
                    std::to_string(lines.size() - 1));
  }
  out.values.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto fields = split_csv_line(lines[static_cast<std::size_t>(i + 1)]);
    if (static_cast<Eigen::Index>(fields.size()) != m + 1) {
      throw DataError(std::string(what) + ": row " + std::to_string(i + 1) + " has " +
                      std::to_string(fields.size()) + " fields, expected " + std::to_string(m + 1));
    }
    if (fields[0] != out.names[static_cast<std::size_t>(i)]) {
      throw DataError(std::string(what) + ": row name '" + fields[0] + "' does not match column '" +
                      out.names[static_cast<std::size_t>(i)] + "'");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto v = parse_number(fields[static_cast<std::size_t>(j + 1)]);
      if (!v) {
        throw DataError(std::string(what) + ": non-numeric cell '" + fields[static_cast<std::size_t>(j + 1)] +
                        "' at row " + std::to_string(i + 1));
      }
      out.values(i, j) = *v;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_matrix_csv(const std::vector<std::string>& names, const RealMatrix& values) {
  std::ostringstream os;
  for (const auto& n : names) os << ',' << quote_if_needed(n);
  os << '\n';
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    os << quote_if_needed(names[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < values.cols(); ++j) os << ',' << format_number(values(i, j));
    os << '\n';
  }
  return os.str();
}

std::string format_similarity_csv(const SimilarityMatrix& s) { return format_matrix_csv(s.names, s.values); }

std::string format_dissimilarity_csv(const DissimilarityMatrix& g) { return format_matrix_csv(g.names, g.values); }

SimilarityMatrix parse_similarity_csv(std::string_view text) {
  auto parsed = parse_square_csv(text, "similarity csv");
  return {std::move(parsed.names), std::move(parsed.values)};
}

DissimilarityMatrix parse_dissimilarity_csv(std::string_view text) {
  auto parsed = parse_square_csv(text, "dissimilarity csv");
  if (!parsed.values.allFinite()) throw DataError("dissimilarity csv: entries must be finite");
  return {std::move(parsed.names), std::move(parsed.values)};
}

std::string format_embedding_csv(const Embedding& e, const std::vector<int>* clusters) {
  std::ostringstream os;
  os << "name";
  for (Eigen::Index c = 0; c < e.coords.cols(); ++c) os << ",dim" << (c + 1);
  if (clusters) os << ",cluster";
  os << '\n';
  for (Eigen::Index i = 0; i < e.coords.rows(); ++i) {
    os << quote_if_needed(e.names[static_cast<std::size_t>(i)]);
    for (Eigen::Index c = 0; c < e.coords.cols(); ++c) os << ',' << format_number(e.coords(i, c));
    if (clusters) os << ',' << (*clusters)[static_cast<std::size_t>(i)];
    os << '\n';
  }
  return os.str();
}

EmbeddingTable parse_embedding_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) throw DataError("embedding csv: no rows");
  const auto header = split_csv_line(lines[0]);
  if (header.empty() || header[0] != "name") throw DataError("embedding csv: header must start with 'name'");
  const bool has_cluster = header.back() == "cluster";
  const auto dims = static_cast<Eigen::Index>(header.size()) - 1 - (has_cluster ? 1 : 0);
  if (dims < 1) throw DataError("embedding csv: no coordinate columns");

  EmbeddingTable out;
  const auto m = static_cast<Eigen::Index>(lines.size()) - 1;
  out.coords.resize(m, dims);
  if (has_cluster) out.clusters.emplace();
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto fields = split_csv_line(lines[static_cast<std::size_t>(i + 1)]);
    if (fields.size() != header.size()) {
      throw DataError("embedding csv: row " + std::to_string(i + 1) + " has wrong field count");
    }
    out.names.push_back(fields[0]);
    for (Eigen::Index c = 0; c < dims; ++c) {
      const auto v = parse_number(fields[static_cast<std::size_t>(c + 1)]);
      if (!v || !std::isfinite(*v)) throw DataError("embedding csv: bad coordinate in row " + std::to_string(i + 1));
      out.coords(i, c) = *v;
    }
    if (has_cluster) {
      const auto& f = fields.back();
      int label = 0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), label);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw DataError("embedding csv: bad cluster label in row " + std::to_string(i + 1));
      }
      out.clusters->push_back(label);
    }
  }
  return out;
}

std::string format_labels_csv(const std::vector<std::string>& names, const std::vector<int>& labels) {
  std::ostringstream os;
  os << "name,label\n";
  for (std::size_t i = 0; i < names.size(); ++i) os << quote_if_needed(names[i]) << ',' << labels[i] << '\n';
  return os.str();
}

NamedLabels parse_labels_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) throw DataError("labels csv: no rows");
  const auto header = split_csv_line(lines[0]);
  if (header.size() < 2 || header[0] != "name" || (header.back() != "label" && header.back() != "cluster")) {
    throw DataError("labels csv: expected header 'name,label' or an embedding with a cluster column");
  }
  NamedLabels out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != header.size()) throw DataError("labels csv: row " + std::to_string(i) + " has wrong field count");
    const auto& f = fields.back();
    int label = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), label);
    if (ec != std::errc{} || ptr != f.data() + f.size()) throw DataError("labels csv: bad label in row " + std::to_string(i));
    if (!seen.insert(fields[0]).second) throw DataError("labels csv: duplicate name '" + fields[0] + "'");
    out.names.push_back(fields[0]);
    out.labels.push_back(label);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move '" + tmp.string() + "' into place: " + ec.message());
  }
}

}  // namespace amifmds
