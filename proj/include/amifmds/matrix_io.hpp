#pragma once

#include "amifmds/matrix.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amifmds {

struct Embedding;

// 17 significant digits; infinities as "inf" / "-inf".
std::string format_number(double value);

// Parses a full numeric token ("inf" accepted). Returns nullopt on anything
// else, including surrounding garbage.
std::optional<double> parse_number(std::string_view token);

// Splits one CSV record on commas; double-quoted fields may contain commas
// and "" escapes. Surrounding whitespace is trimmed from unquoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

// Splits text into lines, dropping a trailing '\r' and a final empty line.
std::vector<std::string_view> split_lines(std::string_view text);

// Square matrix CSV: header ",name1,...,nameM", then one row per series
// beginning with its name.
std::string format_matrix_csv(const std::vector<std::string>& names, const RealMatrix& values);
std::string format_similarity_csv(const SimilarityMatrix& s);
std::string format_dissimilarity_csv(const DissimilarityMatrix& g);

SimilarityMatrix parse_similarity_csv(std::string_view text);
DissimilarityMatrix parse_dissimilarity_csv(std::string_view text);

// "name,dim1..dimd[,cluster]"
std::string format_embedding_csv(const Embedding& e, const std::vector<int>* clusters = nullptr);

struct EmbeddingTable {
  std::vector<std::string> names;
  RealMatrix coords;
  std::optional<std::vector<int>> clusters;
};
EmbeddingTable parse_embedding_csv(std::string_view text);

// "name,label"
std::string format_labels_csv(const std::vector<std::string>& names, const std::vector<int>& labels);

struct NamedLabels {
  std::vector<std::string> names;
  std::vector<int> labels;
};
// Accepts a labels CSV or an embedding CSV with a cluster column.
NamedLabels parse_labels_csv(std::string_view text);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace amifmds
