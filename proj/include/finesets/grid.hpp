#ifndef FINESETS_GRID_HPP
#define FINESETS_GRID_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "finesets/perm_multiset.hpp"
#include "finesets/permutation.hpp"

namespace finesets {

/// Rectangular {-1, 0, +1} matrix; row 0 is the top row.
class GridMatrix {
 public:
  GridMatrix() = default;
  GridMatrix(int rows, int cols, std::vector<int> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw DomainError("grid matrix must be at least 1x1");
    if (static_cast<int>(e_.size()) != rows * cols) throw DomainError("grid matrix: wrong number of entries");
    bool nonzero = false;
    for (int v : e_) {
      if (v < -1 || v > 1) throw DomainError("grid matrix entries must be -1, 0 or 1");
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) throw DomainError("grid matrix needs a nonzero entry");
  }

  static GridMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw DomainError("grid matrix must be at least 1x1");
    std::vector<int> e;
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw DomainError("grid matrix rows differ in length");
      e.insert(e.end(), r.begin(), r.end());
    }
    return GridMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(e));
  }

  /// "0+/-0/+-": rows top to bottom, separated by '/'.
  static GridMatrix parse(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (ch == '/') {
        rows.emplace_back();
      } else if (ch == '+') {
        rows.back().push_back(1);
      } else if (ch == '-') {
        rows.back().push_back(-1);
      } else if (ch == '0') {
        rows.back().push_back(0);
      } else {
        throw ParseError("bad matrix character '" + std::string(1, ch) + "'", i, {"'+'", "'-'", "'0'", "'/'"});
      }
    }
    return from_rows(rows);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return e_[r * cols_ + c]; }

  std::string to_string() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
      if (r > 0) out += "/";
      for (int c = 0; c < cols_; ++c) out += at(r, c) > 0 ? '+' : at(r, c) < 0 ? '-' : '0';
    }
    return out;
  }

  friend bool operator==(const GridMatrix&, const GridMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> e_;
};

/// Upside-down flip with negated signs (the class of w0 p).
inline GridMatrix grid_complement(const GridMatrix& m) {
  std::vector<int> e;
  for (int r = m.rows() - 1; r >= 0; --r) {
    for (int c = 0; c < m.cols(); ++c) e.push_back(-m.at(r, c));
  }
  return GridMatrix(m.rows(), m.cols(), e);
}

/// Left-right mirror with negated signs (the class of p w0).
inline GridMatrix grid_reverse(const GridMatrix& m) {
  std::vector<int> e;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = m.cols() - 1; c >= 0; --c) e.push_back(-m.at(r, c));
  }
  return GridMatrix(m.rows(), m.cols(), e);
}

/// m*_{i,j} = m_{k+1-i, l+1-j} (the class of w0 p w0).
inline GridMatrix grid_rotate180(const GridMatrix& m) {
  std::vector<int> e;
  for (int r = m.rows() - 1; r >= 0; --r) {
    for (int c = m.cols() - 1; c >= 0; --c) e.push_back(m.at(r, c));
  }
  return GridMatrix(m.rows(), m.cols(), e);
}

/// Reflection in the southwest-northeast diagonal (the class of inverses).
inline GridMatrix grid_inverse(const GridMatrix& m) {
  int rows = m.cols();
  int cols = m.rows();
  std::vector<int> e(rows * cols);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      int nc = m.rows() - 1 - r;
      int nr = m.cols() - 1 - c;
      e[nr * cols + nc] = m.at(r, c);
    }
  }
  return GridMatrix(rows, cols, e);
}

// ---------------------------------------------------------------------------
// Sign vectors and named matrices
// ---------------------------------------------------------------------------

/// Signs listed bottom to top.
using SignVector = std::vector<int>;

inline SignVector parse_sign_vector(const std::string& text) {
  SignVector v;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      v.push_back(1);
    } else if (text[i] == '-') {
      v.push_back(-1);
    } else {
      throw ParseError("bad sign character", i, {"'+'", "'-'"});
    }
  }
  if (v.empty()) throw ParseError("empty sign vector", 0, {"'+'", "'-'"});
  return v;
}

inline std::string sign_vector_to_string(const SignVector& v) {
  std::string out;
  for (int s : v) out += s > 0 ? '+' : '-';
  return out;
}

inline GridMatrix one_column_matrix(const SignVector& v) {
  if (v.empty()) throw DomainError("sign vector must be nonempty");
  std::vector<int> e(v.rbegin(), v.rend());
  return GridMatrix(static_cast<int>(v.size()), 1, e);
}

/// k x k identity: the colayered class.
inline GridMatrix identity_matrix(int k) {
  std::vector<int> e(k * k, 0);
  for (int i = 0; i < k; ++i) e[i * k + i] = 1;
  return GridMatrix(k, k, e);
}

/// 2k x 2 matrix with rows (1,0), (0,1), (1,0), ... from the top.
inline GridMatrix cyclic_descent_matrix(int k) {
  std::vector<int> e;
  for (int i = 0; i < 2 * k; ++i) {
    e.push_back(i % 2 == 0 ? 1 : 0);
    e.push_back(i % 2 == 0 ? 0 : 1);
  }
  return GridMatrix(2 * k, 2, e);
}

/// Vertical stack, the i-th copy from the bottom being m when v_i = + and its complement otherwise.
inline GridMatrix stack_matrix(const SignVector& v, const GridMatrix& m) {
  std::vector<int> e;
  GridMatrix mc = grid_complement(m);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const GridMatrix& block = *it > 0 ? m : mc;
    for (int r = 0; r < block.rows(); ++r) {
      for (int c = 0; c < block.cols(); ++c) e.push_back(block.at(r, c));
    }
  }
  return GridMatrix(static_cast<int>(v.size()) * m.rows(), m.cols(), e);
}

/// v * w = (w^{v_1}, ..., w^{v_r}) where w^{-1} is w reversed and negated.
inline SignVector star_product(const SignVector& v, const SignVector& w) {
  SignVector out;
  for (int s : v) {
    if (s > 0) {
      out.insert(out.end(), w.begin(), w.end());
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    }
  }
  return out;
}

namespace named_grids {
inline GridMatrix left_unimodal() { return GridMatrix::parse("+/-"); }
inline GridMatrix arc_first() { return GridMatrix::parse("+0/-0/0-/0+"); }
inline GridMatrix arc_second() { return GridMatrix::parse("0-/0+/+0/-0"); }
inline GridMatrix j_class() { return GridMatrix::parse("0+/+0/+0/0+"); }
inline GridMatrix k_class() { return GridMatrix::parse("+0/0+/-0/0-"); }
inline GridMatrix figure_one() { return GridMatrix::parse("0+/-0/+-"); }
}  // namespace named_grids

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// A consistently oriented matrix: every nonzero entry equals row_sign * col_sign.
/// Row sign +1 means points in that row rise with the insertion order.
struct OrientedGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_sign;
  std::vector<int> col_sign;
  std::vector<std::pair<int, int>> cells;  // nonzero cells (row, col), the word alphabet
};

/// Signs with r_i c_j = m_ij on every nonzero entry, if they exist.
inline std::optional<OrientedGrid> orient_directly(const GridMatrix& m) {
  OrientedGrid g;
  g.rows = m.rows();
  g.cols = m.cols();
  g.row_sign.assign(m.rows(), 0);
  g.col_sign.assign(m.cols(), 0);
  for (int start = 0; start < m.rows(); ++start) {
    if (g.row_sign[start] != 0) continue;
    g.row_sign[start] = 1;
    std::queue<std::pair<bool, int>> todo;  // (is_row, index)
    todo.push({true, start});
    while (!todo.empty()) {
      auto [is_row, idx] = todo.front();
      todo.pop();
      if (is_row) {
        for (int c = 0; c < m.cols(); ++c) {
          int v = m.at(idx, c);
          if (v == 0) continue;
          int want = v * g.row_sign[idx];
          if (g.col_sign[c] == 0) {
            g.col_sign[c] = want;
            todo.push({false, c});
          } else if (g.col_sign[c] != want) {
            return std::nullopt;
          }
        }
      } else {
        for (int r = 0; r < m.rows(); ++r) {
          int v = m.at(r, idx);
          if (v == 0) continue;
          int want = v * g.col_sign[idx];
          if (g.row_sign[r] == 0) {
            g.row_sign[r] = want;
            todo.push({true, r});
          } else if (g.row_sign[r] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  for (int& s : g.col_sign) {
    if (s == 0) s = 1;
  }
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) g.cells.emplace_back(r, c);
    }
  }
  return g;
}

/// 2x2 refinement: each segment is split into two half-segments so that the
/// refined matrix is consistently oriented with fixed alternating signs.
inline OrientedGrid orient_by_blowup(const GridMatrix& m) {
  OrientedGrid g;
  g.rows = 2 * m.rows();
  g.cols = 2 * m.cols();
  for (int r = 0; r < g.rows; ++r) g.row_sign.push_back(r % 2 == 0 ? -1 : 1);
  for (int c = 0; c < g.cols; ++c) g.col_sign.push_back(c % 2 == 0 ? 1 : -1);
  std::vector<std::vector<int>> sub(g.rows, std::vector<int>(g.cols, 0));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      int v = m.at(r, c);
      if (v > 0) {
        sub[2 * r + 1][2 * c] = 1;
        sub[2 * r][2 * c + 1] = 1;
      } else if (v < 0) {
        sub[2 * r][2 * c] = -1;
        sub[2 * r + 1][2 * c + 1] = -1;
      }
    }
  }
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if (sub[r][c] != 0) g.cells.emplace_back(r, c);
    }
  }
  return g;
}

inline OrientedGrid orient(const GridMatrix& m, bool force_blowup = false) {
  if (!force_blowup) {
    if (auto g = orient_directly(m)) return *g;
  }
  return orient_by_blowup(m);
}

struct GridOptions {
  bool force_blowup = false;
  /// Limit on distinct partial configurations kept at any insertion step.
  std::size_t max_states = 20'000'000;
};

namespace detail {

// Partial configurations are byte strings: the y-ranks of the k points listed
// left to right, then the point count of every column and of every row.
inline std::string insert_point(const OrientedGrid& g, const std::string& state, int k, int cell) {
  const auto [r, c] = g.cells[cell];
  const std::uint8_t* perm = reinterpret_cast<const std::uint8_t*>(state.data());
  const std::uint8_t* col_cnt = perm + k;
  const std::uint8_t* row_cnt = col_cnt + g.cols;
  int x_prefix = 0;
  for (int cc = 0; cc < c; ++cc) x_prefix += col_cnt[cc];
  int x = g.col_sign[c] > 0 ? x_prefix + col_cnt[c] : x_prefix;
  int y_prefix = 0;  // rows are numbered from the top; rows below have larger index
  for (int rr = r + 1; rr < g.rows; ++rr) y_prefix += row_cnt[rr];
  int y = g.row_sign[r] > 0 ? y_prefix + row_cnt[r] : y_prefix;
  std::string out;
  out.resize(static_cast<std::size_t>(k + 1 + g.cols + g.rows));
  std::uint8_t* o = reinterpret_cast<std::uint8_t*>(out.data());
  for (int i = 0, j = 0; i <= k; ++i) {
    if (i == x) {
      o[i] = static_cast<std::uint8_t>(y);
    } else {
      std::uint8_t v = perm[j++];
      o[i] = v >= y ? static_cast<std::uint8_t>(v + 1) : v;
    }
  }
  std::uint8_t* oc = o + k + 1;
  std::uint8_t* orow = oc + g.cols;
  std::copy(col_cnt, col_cnt + g.cols, oc);
  std::copy(row_cnt, row_cnt + g.rows, orow);
  ++oc[c];
  ++orow[r];
  return out;
}

}  // namespace detail

/// G_n(M): all permutations drawable on the standard figure of m, built by
/// inserting points level by level along a consistently oriented refinement,
/// merging identical partial configurations.
inline PermMultiset enumerate_grid(const GridMatrix& m, int n, const GridOptions& opt = {}) {
  if (n < 1 || n > kMaxDegree) throw DomainError("grid enumeration: n out of range");
  OrientedGrid g = orient(m, opt.force_blowup);
  std::unordered_set<std::string> level;
  level.insert(std::string(static_cast<std::size_t>(g.cols + g.rows), '\0'));
  for (int k = 0; k < n; ++k) {
    std::unordered_set<std::string> next;
    for (const std::string& s : level) {
      for (int cell = 0; cell < static_cast<int>(g.cells.size()); ++cell) {
        next.insert(detail::insert_point(g, s, k, cell));
      }
      if (next.size() > opt.max_states) {
        throw ResourceError("grid enumeration of " + m.to_string() + " at n=" + std::to_string(n) +
                            " exceeds the state budget of " + std::to_string(opt.max_states));
      }
    }
    level.swap(next);
  }
  PermMultiset out(n);
  std::array<std::uint8_t, kMaxDegree> w{};
  for (const std::string& s : level) {
    for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(static_cast<std::uint8_t>(s[i]) + 1);
    out.insert_once(Permutation::from_values_unchecked(w.data(), n));
  }
  return out;
}

/// Plain word enumeration: every word of length n over the cell alphabet of
/// the oriented refinement is turned into a point set. Refuses more than
/// `budget` words.
inline PermMultiset enumerate_grid_words(const GridMatrix& m, int n, bool force_blowup = false,
                                         double budget = 1e8) {
  if (n < 1 || n > kMaxDegree) throw DomainError("grid enumeration: n out of range");
  OrientedGrid g = orient(m, force_blowup);
  int a = static_cast<int>(g.cells.size());
  double words = 1;
  for (int i = 0; i < n; ++i) words *= a;
  if (words > budget) {
    throw ResourceError("word enumeration of " + m.to_string() + " at n=" + std::to_string(n) + " needs " +
                        std::to_string(static_cast<long double>(words)) + " words");
  }
  PermMultiset out(n);
  std::vector<int> word(n, 0);
  std::vector<std::string> states(n + 1);
  states[0] = std::string(static_cast<std::size_t>(g.cols + g.rows), '\0');
  // odometer with prefix reuse
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      std::array<std::uint8_t, kMaxDegree> w{};
      for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(static_cast<std::uint8_t>(states[n][i]) + 1);
      out.insert_once(Permutation::from_values_unchecked(w.data(), n));
      return;
    }
    for (int cell = 0; cell < a; ++cell) {
      states[k + 1] = detail::insert_point(g, states[k], k, cell);
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Direct membership predicates
// ---------------------------------------------------------------------------

/// u_i = + iff i is a descent of p^{-1}; p lies in the one-column class of v
/// iff v is not a subsequence of u.
inline bool in_one_column(const SignVector& v, const Permutation& p) {
  Permutation inv = inverse(p);
  std::size_t matched = 0;
  for (int i = 1; i < p.size() && matched < v.size(); ++i) {
    int u = inv(i) > inv(i + 1) ? 1 : -1;
    if (u == v[matched]) ++matched;
  }
  return matched < v.size();
}

/// G^{+^k}: des(p^{-1}) <= k - 1.
inline bool in_plus_k(int k, const Permutation& p) { return des(inverse(p)) <= k - 1; }
/// G^{-^k}: des(p^{-1}) >= n - k.
inline bool in_minus_k(int k, const Permutation& p) { return des(inverse(p)) >= p.size() - k; }
/// G(M_k): cdes(p^{-1}) <= k.
inline bool in_cyclic_descent_class(int k, const Permutation& p) { return cdes(inverse(p)) <= k; }

/// At most k blocks, each an increasing run of consecutive values, with every
/// block below the previous one.
inline bool in_colayered(int k, const Permutation& p) {
  int blocks = 1;
  int block_min = p(1);
  int prev_block_min = p.size() + 1;
  for (int i = 2; i <= p.size(); ++i) {
    if (p(i) == p(i - 1) + 1) continue;
    if (p(i - 1) >= prev_block_min) return false;
    prev_block_min = block_min;
    block_min = p(i);
    ++blocks;
  }
  if (p(p.size()) >= prev_block_min) return false;
  return blocks <= k;
}

/// Every prefix is an interval of values.
inline bool in_left_unimodal(const Permutation& p) {
  int lo = p(1);
  int hi = p(1);
  for (int i = 2; i <= p.size(); ++i) {
    int v = p(i);
    if (v == lo - 1) {
      lo = v;
    } else if (v == hi + 1) {
      hi = v;
    } else {
      return false;
    }
  }
  return true;
}

/// Every prefix is an interval in Z_n.
inline bool is_arc(const Permutation& p) {
  int n = p.size();
  // the prefix is the cyclic interval lo, lo+1, ..., lo+len-1 (mod n)
  int lo = p(1);
  int len = 1;
  for (int i = 2; i <= n; ++i) {
    int v = p(i);
    int below = (lo - 2 + n) % n + 1;
    int above = (lo - 1 + len) % n + 1;
    if (v == below) {
      lo = v;
    } else if (v != above) {
      return false;
    }
    ++len;
  }
  return true;
}

}  // namespace finesets

#endif  // FINESETS_GRID_HPP
