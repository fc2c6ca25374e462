#include "soblocks/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace soblocks {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw domain_error("young: negative row length");
    if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
      throw domain_error("young: rows must be weakly decreasing");
  }
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

int YoungDiagram::size() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

bool YoungDiagram::fits(int max_rows, int max_cols) const {
  return num_rows() <= max_rows && row(0) <= max_cols;
}

YoungDiagram transpose(const YoungDiagram& y) {
  std::vector<int> cols;
  if (!y.empty()) {
    cols.resize(static_cast<std::size_t>(y.row(0)), 0);
    for (int i = 0; i < y.num_rows(); ++i)
      for (int j = 0; j < y.row(i); ++j) cols[static_cast<std::size_t>(j)]++;
  }
  return YoungDiagram(std::move(cols));
}

std::vector<YoungDiagram> diagrams_of_size(int max_rows, int max_cols, int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int len = std::min(remaining, cap); len >= 1; --len) {
      cur.push_back(len);
      gen(remaining - len, len);
      cur.pop_back();
    }
  };
  if (n >= 0) gen(n, max_cols);
  std::sort(out.begin(), out.end(),
            [](const YoungDiagram& a, const YoungDiagram& b) { return a.rows() < b.rows(); });
  return out;
}

std::vector<YoungDiagram> diagrams_in_box(int max_rows, int max_cols) {
  std::vector<YoungDiagram> out;
  for (int n = 0; n <= max_rows * max_cols; ++n) {
    auto part = diagrams_of_size(max_rows, max_cols, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string to_string(const YoungDiagram& y) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < y.num_rows(); ++i) {
    if (i) os << ',';
    os << y.rows()[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

}  // namespace soblocks
