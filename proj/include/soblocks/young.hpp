#pragma once

#include <compare>
#include <vector>

#include "soblocks/common.hpp"

namespace soblocks {

// Integer partition with weakly decreasing rows; trailing zeros are stripped
// on construction so equal partitions compare equal.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  // 0-based row length, 0 past the last row.
  int row(int i) const {
    return (i >= 0 && i < num_rows()) ? rows_[i] : 0;
  }
  int size() const;  // number of boxes
  bool empty() const { return rows_.empty(); }
  bool fits(int max_rows, int max_cols) const;
  bool has_box(int row1, int col1) const {  // 1-based coordinates
    return row1 >= 1 && row1 <= num_rows() && col1 >= 1 && col1 <= rows_[row1 - 1];
  }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
};

YoungDiagram transpose(const YoungDiagram& y);

// All diagrams with at most `max_rows` rows and `max_cols` columns,
// ordered by size, then lexicographically on the row vector.
std::vector<YoungDiagram> diagrams_in_box(int max_rows, int max_cols);

// Same but restricted to exactly n boxes.
std::vector<YoungDiagram> diagrams_of_size(int max_rows, int max_cols, int n);

std::string to_string(const YoungDiagram& y);

}  // namespace soblocks
