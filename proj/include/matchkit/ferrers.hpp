#pragma once

#include <string>
#include <vector>

#include "matchkit/error.hpp"
#include "matchkit/matching.hpp"

namespace matchkit {

/// A left-justified array with m rows and m columns. Rows are numbered from
/// the bottom: `rows[i-1]` is the length of row i, so lengths weakly
/// increase with i.
class FerrersShape {
 public:
  FerrersShape(int m, std::vector<int> rows_bottom_up)
      : m_(m), rows_(std::move(rows_bottom_up)) {
    if (m_ < 0 || static_cast<int>(rows_.size()) != m_)
      throw InvalidValue("shape needs exactly m rows");
    for (int i = 0; i < m_; ++i) {
      if (rows_[i] < 0 || rows_[i] > m_)
        throw InvalidValue("row length out of [0,m]");
      if (i > 0 && rows_[i] < rows_[i - 1])
        throw InvalidValue("row " + std::to_string(i + 1) +
                           " is shorter than the row below it");
    }
  }

  int m() const noexcept { return m_; }
  int row_length(int i) const { return rows_.at(i - 1); }
  const std::vector<int>& rows() const noexcept { return rows_; }

  /// Row i has at least i cells and the top row is full; exactly the shapes
  /// that arise from a base word.
  bool realizable() const {
    for (int i = 1; i <= m_; ++i)
      if (rows_[i - 1] < i) return false;
    return m_ == 0 || rows_.back() == m_;
  }

  friend bool operator==(const FerrersShape&, const FerrersShape&) = default;

 private:
  int m_ = 0;
  std::vector<int> rows_;
};

/// One cell per row and per column, each inside the shape.
/// `column_of_row[i-1]` is the column of the cell in row i.
class Transversal {
 public:
  Transversal(FerrersShape shape, std::vector<int> column_of_row)
      : shape_(std::move(shape)), cols_(std::move(column_of_row)) {
    const int m = shape_.m();
    if (static_cast<int>(cols_.size()) != m)
      throw InvalidValue("transversal needs one cell per row");
    std::vector<bool> used(m + 1, false);
    for (int i = 1; i <= m; ++i) {
      int j = cols_[i - 1];
      if (j < 1 || j > shape_.row_length(i))
        throw InvalidValue("cell (" + std::to_string(i) + "," +
                           std::to_string(j) + ") lies outside the shape");
      if (used[j])
        throw InvalidValue("column " + std::to_string(j) + " used twice");
      used[j] = true;
    }
  }

  const FerrersShape& shape() const noexcept { return shape_; }
  int column(int row) const { return cols_.at(row - 1); }
  const std::vector<int>& columns() const noexcept { return cols_; }

  friend bool operator==(const Transversal&, const Transversal&) = default;

 private:
  FerrersShape shape_;
  std::vector<int> cols_;
};

/// Row i has one cell per l-vertex left of the i-th r-vertex; the cell of
/// row i sits in column j when the i-th r-vertex is joined to the j-th
/// l-vertex.
inline Transversal matching_to_transversal(const Matching& m) {
  const int size = m.size();
  std::vector<int> rank_of_left(m.vertex_count() + 1, 0);
  std::vector<int> rows;
  std::vector<int> cols;
  int lefts = 0;
  for (int v = 1; v <= m.vertex_count(); ++v) {
    if (m.is_left(v)) {
      rank_of_left[v] = ++lefts;
    } else {
      rows.push_back(lefts);
      cols.push_back(rank_of_left[m.partner(v)]);
    }
  }
  return Transversal(FerrersShape(size, std::move(rows)), std::move(cols));
}

inline Matching transversal_to_matching(const Transversal& t) {
  const auto& shape = t.shape();
  if (!shape.realizable())
    throw PreconditionError("shape not realizable as a base");
  std::vector<int> lefts;
  std::vector<int> rights;
  int pos = 0;
  for (int i = 1; i <= shape.m(); ++i) {
    while (static_cast<int>(lefts.size()) < shape.row_length(i))
      lefts.push_back(++pos);
    rights.push_back(++pos);
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= shape.m(); ++i)
    edges.push_back({lefts[t.column(i) - 1], rights[i - 1]});
  return Matching::from_edges(edges);
}

/// Checks realizability before the cells, so a bad shape reports as such.
inline Matching transversal_to_matching(const FerrersShape& shape,
                                        std::vector<int> column_of_row) {
  if (!shape.realizable())
    throw PreconditionError("shape not realizable as a base");
  return transversal_to_matching(Transversal(shape, std::move(column_of_row)));
}

/// Rows printed top-down; '#' marks the transversal, '.' other cells.
inline std::string ascii_art(const Transversal& t) {
  const auto& shape = t.shape();
  std::string s = "# Ferrers transversal, m=" + std::to_string(shape.m()) +
                  "; printed top-down, rows numbered from the bottom\n";
  for (int i = shape.m(); i >= 1; --i) {
    std::string num = std::to_string(i);
    s += std::string(num.size() < 3 ? 3 - num.size() : 0, ' ') + num + " |";
    for (int j = 1; j <= shape.row_length(i); ++j)
      s += t.column(i) == j ? '#' : '.';
    s += '\n';
  }
  return s;
}

}  // namespace matchkit
