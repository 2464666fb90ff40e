#ifndef FINESETS_TABLEAU_HPP
#define FINESETS_TABLEAU_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finesets/partition.hpp"
#include "finesets/perm_multiset.hpp"
#include "finesets/permutation.hpp"

namespace finesets {

/// Skew diagram outer/inner in English notation (row 0 on top).
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw DomainError("SkewShape: inner partition not contained in outer");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int rows() const { return outer_.length(); }
  int row_start(int r) const { return inner_[r]; }
  int row_end(int r) const { return outer_[r]; }
  int row_length(int r) const { return outer_[r] - inner_[r]; }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.length() == 0; }

  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r < rows(); ++r) {
      for (int c = row_start(r); c < row_end(r); ++c) out.emplace_back(r, c);
    }
    return out;
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

  std::string to_string() const {
    if (is_straight()) return "(" + outer_.to_string() + ")";
    return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
  }

 private:
  Partition outer_;
  Partition inner_;
};

/// Builds a skew shape from rows listed bottom to top as [start, end) column ranges.
inline SkewShape shape_from_rows_bottom_up(const std::vector<std::pair<int, int>>& rows) {
  std::vector<int> outer;
  std::vector<int> inner;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    outer.push_back(it->second);
    inner.push_back(it->first);
  }
  return SkewShape(Partition::trimmed(outer), Partition::trimmed(inner));
}

/// Ribbon Z_{n,J}: cell i+1 sits above cell i when i is in J, otherwise to its right.
inline SkewShape ribbon_shape(int n, const DescSet& j) {
  if (n < 1) throw DomainError("ribbon_shape: n must be positive");
  if (j.degree() != n) throw DegreeMismatch(n, j.degree());
  std::vector<std::pair<int, int>> rows;
  int start = 0;
  int len = 1;
  for (int i = 1; i < n; ++i) {
    if (j.contains(i)) {
      rows.emplace_back(start, start + len);
      start += len - 1;
      len = 1;
    } else {
      ++len;
    }
  }
  rows.emplace_back(start, start + len);
  return shape_from_rows_bottom_up(rows);
}

/// Sizes of the strips of L_{n,J}, left to right: j_1, j_2 - j_1, ..., n-1-j_t, 1.
inline std::vector<int> strip_sizes(int n, const DescSet& j) {
  if (n < 2) throw DomainError("strip_chain_shape: n must be at least 2");
  if (j.degree() != n - 1) throw DegreeMismatch(n - 1, j.degree());
  std::vector<int> sizes;
  int prev = 0;
  for (int i : j.members()) {
    sizes.push_back(i - prev);
    prev = i;
  }
  sizes.push_back(n - 1 - prev);
  sizes.push_back(1);
  return sizes;
}

/// L_{n,J}: disconnected horizontal strips touching at corners, the leftmost
/// at the bottom, the rightmost a single cell at the top. J is a subset of [n-2],
/// given as a descent set of degree n-1.
inline SkewShape strip_chain_shape(int n, const DescSet& j) {
  std::vector<std::pair<int, int>> rows;
  int col = 0;
  for (int s : strip_sizes(n, j)) {
    rows.emplace_back(col, col + s);
    col += s;
  }
  return shape_from_rows_bottom_up(rows);
}

/// (mu, nu): nu on top shifted right past mu, mu underneath.
inline SkewShape two_component_shape(const Partition& mu, const Partition& nu) {
  std::vector<int> outer;
  std::vector<int> inner;
  for (int p : nu.parts()) {
    outer.push_back(p + mu[0]);
    inner.push_back(mu[0]);
  }
  for (int p : mu.parts()) {
    outer.push_back(p);
    inner.push_back(0);
  }
  return SkewShape(Partition::trimmed(outer), Partition::trimmed(inner));
}

/// Standard filling of a skew shape; rows_[r] holds the entries of row r left to right.
class StandardTableau {
 public:
  StandardTableau() = default;
  StandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  /// Straight-shape tableau from its rows.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return StandardTableau(SkewShape(Partition::trimmed(parts)), std::move(rows));
  }

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  int entry(int r, int c) const { return rows_[r][c - shape_.row_start(r)]; }

  /// Row index (0 = top) of each value, indexed by value.
  std::vector<int> row_of_values() const {
    std::vector<int> out(size() + 1, -1);
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      for (int v : rows_[r]) out[v] = r;
    }
    return out;
  }

  /// {i : i+1 lies in a lower row than i}
  DescSet descents() const {
    std::vector<int> row = row_of_values();
    std::uint32_t bits = 0;
    for (int i = 1; i < size(); ++i) {
      if (row[i + 1] > row[i]) bits |= std::uint32_t{1} << i;
    }
    return DescSet(size(), bits);
  }

  /// Rows top to bottom, left to right.
  std::vector<int> row_reading_word() const {
    std::vector<int> out;
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  /// Rows bottom to top, left to right (for a ribbon: the cells from the southwest end).
  std::vector<int> southwest_reading_word() const {
    std::vector<int> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
  }

  /// Entry of the rightmost cell of the top row.
  int top_right() const { return rows_.front().back(); }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

  /// "· · 2 3 4 / · · 7 8 / 1 5 / 6"
  std::string to_string() const {
    std::string out;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (r > 0) out += " / ";
      bool first = true;
      for (int c = 0; c < shape_.row_start(r); ++c) {
        out += first ? "·" : " ·";
        first = false;
      }
      for (int v : rows_[r]) {
        if (!first) out += " ";
        out += std::to_string(v);
        first = false;
      }
    }
    return out;
  }

 private:
  void validate() const {
    int n = shape_.size();
    if (static_cast<int>(rows_.size()) != shape_.rows()) throw DomainError("tableau: row count does not match shape");
    std::vector<bool> seen(n + 1, false);
    for (int r = 0; r < shape_.rows(); ++r) {
      if (static_cast<int>(rows_[r].size()) != shape_.row_length(r)) {
        throw DomainError("tableau: row length does not match shape");
      }
      for (int c = shape_.row_start(r); c < shape_.row_end(r); ++c) {
        int v = entry(r, c);
        if (v < 1 || v > n || seen[v]) throw DomainError("tableau: entries must be exactly 1..n");
        seen[v] = true;
        if (c > shape_.row_start(r) && entry(r, c - 1) >= v) throw DomainError("tableau: rows must increase");
        if (r > 0 && c >= shape_.row_start(r - 1) && c < shape_.row_end(r - 1) && entry(r - 1, c) >= v) {
          throw DomainError("tableau: columns must increase");
        }
      }
    }
  }

  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

// Backtracking over fillings: places 1, 2, ... into cells whose left and upper
// neighbours are already filled (or lie in the inner shape).
class SytWalker {
 public:
  explicit SytWalker(const SkewShape& s) : shape_(s), fill_(s.rows()), rows_(s.rows()) {
    for (int r = 0; r < s.rows(); ++r) fill_[r] = s.row_start(r);
  }

  template <class Fn>
  void run(Fn&& fn) {
    n_ = shape_.size();
    step(1, -1, 0, fn);
  }

 private:
  bool addable(int r) const {
    if (fill_[r] >= shape_.row_end(r)) return false;
    if (r == 0) return true;
    return fill_[r - 1] > fill_[r] || fill_[r] < shape_.row_start(r - 1);
  }

  template <class Fn>
  void step(int v, int last_row, std::uint32_t bits, Fn& fn) {
    if (v > n_) {
      fn(rows_, bits);
      return;
    }
    for (int r = 0; r < shape_.rows(); ++r) {
      if (!addable(r)) continue;
      std::uint32_t nb = bits;
      if (v > 1 && r > last_row) nb |= std::uint32_t{1} << (v - 1);
      ++fill_[r];
      rows_[r].push_back(v);
      step(v + 1, r, nb, fn);
      rows_[r].pop_back();
      --fill_[r];
    }
  }

  const SkewShape& shape_;
  std::vector<int> fill_;
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

}  // namespace detail

/// Calls fn(rows, descent_bits) for every SYT of the shape, without materializing.
template <class Fn>
void for_each_syt(const SkewShape& s, Fn&& fn) {
  detail::SytWalker(s).run(fn);
}

/// All SYT of a shape, ordered lexicographically by row reading word.
inline std::vector<StandardTableau> enumerate_syt(const SkewShape& s) {
  std::vector<StandardTableau> out;
  for_each_syt(s, [&](const std::vector<std::vector<int>>& rows, std::uint32_t) { out.emplace_back(s, rows); });
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.row_reading_word() < b.row_reading_word();
  });
  return out;
}

inline DescSet syt_des(const StandardTableau& t) { return t.descents(); }

/// Row-insertion RSK: (P, Q).
inline std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
  std::vector<std::vector<int>> prow;
  std::vector<std::vector<int>> qrow;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == prow.size()) {
        prow.push_back({x});
        qrow.push_back({i});
        break;
      }
      auto it = std::upper_bound(prow[r].begin(), prow[r].end(), x);
      if (it == prow[r].end()) {
        prow[r].push_back(x);
        qrow[r].push_back(i);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {StandardTableau::from_rows(std::move(prow)), StandardTableau::from_rows(std::move(qrow))};
}

/// Inverse of rsk on a pair of straight tableaux of equal shape.
inline Permutation rsk_inverse(const StandardTableau& ptab, const StandardTableau& qtab) {
  if (!ptab.shape().is_straight() || ptab.shape() != qtab.shape()) {
    throw DomainError("rsk_inverse: need two straight tableaux of the same shape");
  }
  int n = ptab.size();
  auto prow = ptab.rows();
  std::vector<int> qrow_of = qtab.row_of_values();
  std::vector<int> word(n);
  for (int i = n; i >= 1; --i) {
    int r = qrow_of[i];
    int x = prow[r].back();
    prow[r].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      // the largest entry smaller than x gets bumped up
      auto it = std::lower_bound(prow[rr].begin(), prow[rr].end(), x);
      --it;
      std::swap(*it, x);
    }
    word[i - 1] = x;
  }
  return Permutation::from_word(word);
}

/// Knuth class of a straight tableau: every permutation whose insertion tableau is t.
inline PermMultiset knuth_class(const StandardTableau& t) {
  if (!t.shape().is_straight()) throw DomainError("knuth_class: tableau must have straight shape");
  PermMultiset out(t.size());
  for (const StandardTableau& q : enumerate_syt(t.shape())) out.insert_once(rsk_inverse(t, q));
  return out;
}

/// The recording map used for shuffles of Knuth classes: p is split into the
/// subword on letters 1..k and the subword on k+1..n; their recording tableaux,
/// relabelled by positions in p, are placed as the two-component shape.
inline StandardTableau shuffle_recording_map(const Permutation& p, int k) {
  int n = p.size();
  if (k < 0 || k > n) throw DomainError("shuffle_recording_map: split point out of range");
  std::vector<int> low;
  std::vector<int> low_pos;
  std::vector<int> high;
  std::vector<int> high_pos;
  for (int i = 1; i <= n; ++i) {
    if (p(i) <= k) {
      low.push_back(p(i));
      low_pos.push_back(i);
    } else {
      high.push_back(p(i));
      high_pos.push_back(i);
    }
  }
  auto relabel = [](const std::vector<int>& word, const std::vector<int>& pos) {
    std::vector<std::vector<int>> rows;
    if (word.empty()) return rows;
    StandardTableau q = rsk(standardize(word)).second;
    for (const auto& r : q.rows()) {
      std::vector<int> out;
      for (int v : r) out.push_back(pos[v - 1]);
      rows.push_back(std::move(out));
    }
    return rows;
  };
  auto lrows = relabel(low, low_pos);
  auto hrows = relabel(high, high_pos);
  std::vector<int> mu;
  std::vector<int> nu;
  for (const auto& r : lrows) mu.push_back(static_cast<int>(r.size()));
  for (const auto& r : hrows) nu.push_back(static_cast<int>(r.size()));
  SkewShape shape = two_component_shape(Partition::trimmed(mu), Partition::trimmed(nu));
  std::vector<std::vector<int>> rows = hrows;
  rows.insert(rows.end(), lrows.begin(), lrows.end());
  return StandardTableau(std::move(shape), std::move(rows));
}

/// Splits p = sigma c^{-k} with sigma(n) = n: k is the position of n in p
/// taken mod n, and sigma(i) = p(i + k).
inline std::pair<Permutation, int> split_rotation(const Permutation& p) {
  int n = p.size();
  int pos = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) == n) pos = i;
  }
  int k = pos % n;
  return {horizontal_rotate(p, k), k};
}

/// Bijection from R^{-1}_{n-1,J} C_n onto SYT(L_{n,J}): fill the strips of
/// L_{n,J} left to right with sigma^{-1}(1), ..., sigma^{-1}(n), add k mod n
/// to every entry (values kept in 1..n) and re-sort each row.
inline StandardTableau rotation_bijection(const Permutation& p, const DescSet& j) {
  int n = p.size();
  if (j.degree() != n - 1) throw DegreeMismatch(n - 1, j.degree());
  auto [sigma, k] = split_rotation(p);
  Permutation sinv = inverse(sigma);
  std::uint32_t inv_des = des_bits(sinv.values()) & DescSet::full_mask(n - 1);
  if ((inv_des & ~j.bits()) != 0) {
    throw DomainError("rotation_bijection: " + p.to_string() + " is not in R^-1_{n-1,J} C_n for J=" + j.to_string());
  }
  std::vector<int> sizes = strip_sizes(n, j);
  std::vector<std::vector<int>> strips;
  int idx = 1;
  for (int s : sizes) {
    std::vector<int> row;
    for (int t = 0; t < s; ++t, ++idx) row.push_back((sinv(idx) - 1 + k) % n + 1);
    std::sort(row.begin(), row.end());
    strips.push_back(std::move(row));
  }
  std::reverse(strips.begin(), strips.end());
  return StandardTableau(strip_chain_shape(n, j), std::move(strips));
}

}  // namespace finesets

#endif  // FINESETS_TABLEAU_HPP
