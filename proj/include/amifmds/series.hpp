#pragma once

#include "amifmds/matrix.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amifmds {

// Multivariate time-series: one named column per series, T rows.
struct SeriesTable {
  std::vector<std::string> names;
  RealMatrix values;  // T x M
  std::optional<double> sample_interval_ms;  // informational only

  Eigen::Index length() const { return values.rows(); }
  Eigen::Index count() const { return values.cols(); }

  // Throws DataError if names are empty/duplicated, the shape disagrees with
  // the name list, or any entry is non-finite.
  void validate() const;
};

// Ground-truth grouping, one integer per series.
struct LabelVector {
  std::vector<int> labels;
};

struct ExcludedColumn {
  std::string name;
  std::string reason;
};

struct LoadResult {
  SeriesTable table;
  std::vector<ExcludedColumn> excluded;
};

// Parses a header + numeric-body CSV. Columns holding any empty or
// non-numeric cell are dropped (and reported) when drop_incomplete is set,
// otherwise they raise DataError. Requires at least one body row and two
// usable columns.
LoadResult parse_csv(std::string_view text, bool drop_incomplete);
LoadResult load_csv(const std::filesystem::path& path, bool drop_incomplete);

// "excluded: <name>: <reason>"
std::string format_exclusion(const ExcludedColumn& column);

// Serializes the table with 17 significant digits per value.
std::string format_csv(const SeriesTable& table);

// Zero mean, unit population variance per column.
SeriesTable standardize(const SeriesTable& table);

}  // namespace amifmds
