#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lincomb.hpp"

namespace mzv {

// Admissible words of a fixed weight w >= 2, in increasing binary order of
// their w-2 interior letters (first interior letter = most significant bit).
// Column 0 is e1 e0...e0 = (w), the last column is e1...e1 e0 = (1,..,1,2).
struct WeightBasis {
  int weight;

  explicit WeightBasis(int w) : weight(w) {
    if (w < 2 || w > 34) throw std::invalid_argument("WeightBasis: weight must be 2..34");
  }

  int size() const { return 1 << (weight - 2); }

  Word word_at(int col) const {
    if (col < 0 || col >= size()) throw std::out_of_range("WeightBasis::word_at");
    Word w;
    w.push_back(1);
    for (int i = weight - 3; i >= 0; --i) w.push_back((col >> i) & 1);
    w.push_back(0);
    return w;
  }

  int col_of(const Word& w) const {
    if (static_cast<int>(w.size()) != weight || !w.in_h0() || w.empty())
      throw std::invalid_argument("WeightBasis::col_of: not an admissible word of this weight");
    int c = 0;
    for (int i = 1; i <= weight - 2; ++i) c = (c << 1) | w.letter_at(static_cast<uint32_t>(i));
    return c;
  }
};

// One sparse matrix row: (column, coefficient) pairs, column-sorted.
using SparseRow = std::vector<std::pair<int, Rat>>;

inline SparseRow sparse_row_of(const LinComb& x, const WeightBasis& basis) {
  SparseRow r;
  r.reserve(x.size());
  for (const auto& [w, c] : x.terms()) r.emplace_back(basis.col_of(w), c);
  // LinComb iterates words lexicographically, which is not column order.
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

// Incremental reduced row echelon form over Q.  Pivot rows are kept fully
// reduced against each other, so each stores its leading 1 plus entries in
// free columns only; with a small solution space that keeps every row short
// no matter how many relations stream through.
class RrefAccumulator {
 public:
  explicit RrefAccumulator(int ncols) : ncols_(ncols) {
    if (ncols < 0) throw std::invalid_argument("RrefAccumulator: negative column count");
  }

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  const std::map<int, SparseRow>& pivot_rows() const { return pivots_; }

  SparseRow reduce(const SparseRow& row) const {
    std::map<int, Rat> acc;
    for (const auto& [c, v] : row) {
      if (c < 0 || c >= ncols_) throw std::out_of_range("RrefAccumulator: column out of range");
      if (v != 0) acc[c] += v;
    }
    // Pivot-column hits never breed new pivot-column entries (pivot rows only
    // touch free columns), so one sweep over a snapshot suffices.
    std::vector<int> hits;
    for (const auto& [c, v] : acc)
      if (pivots_.count(c)) hits.push_back(c);
    for (int c : hits) {
      auto it = acc.find(c);
      if (it == acc.end() || it->second == 0) continue;
      Rat f = it->second;
      for (const auto& [pc, pv] : pivots_.at(c)) {
        auto [jt, fresh] = acc.emplace(pc, 0);
        jt->second -= f * pv;
        if (jt->second == 0) acc.erase(jt);
      }
    }
    SparseRow out;
    out.reserve(acc.size());
    for (auto& [c, v] : acc)
      if (v != 0) out.emplace_back(c, std::move(v));
    return out;
  }

  // Feed a row; returns true when it enlarges the row space.
  bool consume(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    const int lead = r.front().first;
    const Rat inv = 1 / r.front().second;
    for (auto& [c, v] : r) v *= inv;
    // Clear the new pivot column from the stored rows.
    for (auto& [plead, prow] : pivots_) {
      auto hit = std::lower_bound(prow.begin(), prow.end(), lead,
                                  [](const auto& e, int c) { return e.first < c; });
      if (hit == prow.end() || hit->first != lead) continue;
      Rat f = hit->second;
      std::map<int, Rat> acc(prow.begin(), prow.end());
      for (const auto& [c, v] : r) {
        auto [jt, fresh] = acc.emplace(c, 0);
        jt->second -= f * v;
        if (jt->second == 0) acc.erase(jt);
      }
      prow.assign(acc.begin(), acc.end());
    }
    pivots_.emplace(lead, std::move(r));
    return true;
  }

 private:
  int ncols_;
  std::map<int, SparseRow> pivots_;
};

// Dense-or-sparse exact rational matrix, as small as the tests need it.
class QMatrix {
 public:
  explicit QMatrix(int ncols) : ncols_(ncols) {
    if (ncols < 0) throw std::invalid_argument("QMatrix: negative column count");
  }

  int ncols() const { return ncols_; }
  int nrows() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }

  void add_row(SparseRow r) {
    int prev = -1;
    for (const auto& [c, v] : r) {
      if (c < 0 || c >= ncols_) throw std::out_of_range("QMatrix::add_row: column out of range");
      if (c <= prev) throw std::invalid_argument("QMatrix::add_row: columns must be strictly increasing");
      prev = c;
    }
    rows_.push_back(std::move(r));
  }

  void add_dense_row(const std::vector<Rat>& vals) {
    if (static_cast<int>(vals.size()) != ncols_) throw std::invalid_argument("QMatrix: ragged dense row");
    SparseRow r;
    for (int c = 0; c < ncols_; ++c)
      if (vals[static_cast<size_t>(c)] != 0) r.emplace_back(c, vals[static_cast<size_t>(c)]);
    rows_.push_back(std::move(r));
  }

  int rank() const {
    RrefAccumulator acc(ncols_);
    for (const auto& r : rows_) acc.consume(r);
    return acc.rank();
  }

 private:
  int ncols_;
  std::vector<SparseRow> rows_;
};

// Conjectural dimension of the weight-w graded piece: d_0 = 1, d_1 = 0,
// d_2 = 1, d_w = d_{w-2} + d_{w-3}.
inline long conjectured_dim(int w) {
  if (w < 0) throw std::invalid_argument("conjectured_dim: negative weight");
  std::vector<long> d{1, 0, 1};
  for (int i = 3; i <= w; ++i) d.push_back(d[static_cast<size_t>(i - 2)] + d[static_cast<size_t>(i - 3)]);
  return d[static_cast<size_t>(w)];
}

struct DimensionReport {
  int weight = 0;
  int basis_size = 0;
  long rows = 0;  // relations consumed
  int rank = 0;
  int dim = 0;  // basis_size - rank
};

}  // namespace mzv
