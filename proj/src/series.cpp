#include "amifmds/series.hpp"

#include "amifmds/errors.hpp"
#include "amifmds/matrix_io.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace amifmds {

void SeriesTable::validate() const {
  if (static_cast<Eigen::Index>(names.size()) != values.cols()) {
    throw DataError("series table: " + std::to_string(names.size()) + " names for " +
                    std::to_string(values.cols()) + " columns");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw DataError("series table: empty column name");
    if (!seen.insert(n).second) throw DataError("series table: duplicate column name '" + n + "'");
  }
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    if (!values.col(c).allFinite()) throw DataError("series table: non-finite value in column '" + names[static_cast<std::size_t>(c)] + "'");
  }
}

LoadResult parse_csv(std::string_view text, bool drop_incomplete) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DataError("csv: missing header row");
  const auto header = split_csv_line(lines[0]);
  const std::size_t ncols = header.size();

  std::vector<std::string_view> body(lines.begin() + 1, lines.end());
  // Trailing blank lines are not rows.
  while (!body.empty() && body.back().empty()) body.pop_back();
  if (body.empty()) throw DataError("csv: zero rows after the header");

  const auto t = static_cast<Eigen::Index>(body.size());
  RealMatrix raw(t, static_cast<Eigen::Index>(ncols));
  std::vector<std::string> bad_reason(ncols);

  for (std::size_t r = 0; r < body.size(); ++r) {
    const auto fields = split_csv_line(body[r]);
    if (fields.size() != ncols) {
      throw DataError("csv: row " + std::to_string(r + 2) + " has " + std::to_string(fields.size()) +
                      " fields, header has " + std::to_string(ncols));
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      const auto v = parse_number(fields[c]);
      if (v && std::isfinite(*v)) {
        raw(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *v;
        continue;
      }
      if (!bad_reason[c].empty()) continue;
      bad_reason[c] = fields[c].empty() ? "missing value at row " + std::to_string(r + 2)
                                        : "non-numeric value '" + fields[c] + "' at row " + std::to_string(r + 2);
      if (!drop_incomplete) throw DataError("csv: column '" + header[c] + "': " + bad_reason[c]);
    }
  }

  LoadResult out;
  std::vector<Eigen::Index> keep;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (bad_reason[c].empty()) {
      keep.push_back(static_cast<Eigen::Index>(c));
      out.table.names.push_back(header[c]);
    } else {
      out.excluded.push_back({header[c], bad_reason[c]});
    }
  }
  if (keep.size() < 2) {
    throw DataError("csv: " + std::to_string(keep.size()) + " usable column(s), at least 2 required");
  }
  out.table.values.resize(t, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) out.table.values.col(static_cast<Eigen::Index>(i)) = raw.col(keep[i]);
  out.table.validate();
  return out;
}

LoadResult load_csv(const std::filesystem::path& path, bool drop_incomplete) {
  return parse_csv(read_file(path), drop_incomplete);
}

std::string format_exclusion(const ExcludedColumn& column) {
  return "excluded: " + column.name + ": " + column.reason;
}

std::string format_csv(const SeriesTable& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (c) os << ',';
    os << table.names[c];
  }
  os << '\n';
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      if (c) os << ',';
      os << format_number(table.values(r, c));
    }
    os << '\n';
  }
  return os.str();
}

SeriesTable standardize(const SeriesTable& table) {
  SeriesTable out = table;
  const auto t = static_cast<double>(table.length());
  for (Eigen::Index c = 0; c < table.count(); ++c) {
    auto col = out.values.col(c);
    const double mean = col.sum() / t;
    col.array() -= mean;
    const double var = col.squaredNorm() / t;
    if (!(var > 0.0)) {
      throw DataError("standardize: column '" + table.names[static_cast<std::size_t>(c)] + "' has zero variance");
    }
    col /= std::sqrt(var);
    // Second centering pass removes the rounding residue of the first.
    col.array() -= col.sum() / t;
  }
  return out;
}

}  // namespace amifmds
