#ifndef FINESETS_PARTITION_HPP
#define FINESETS_PARTITION_HPP

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "finesets/error.hpp"

namespace finesets {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops zero parts; the remaining parts must be weakly decreasing.
  static Partition trimmed(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return Partition(std::move(parts));
  }

  /// (a, 1^k)
  static Partition hook(int arm, int leg) {
    std::vector<int> parts{arm};
    parts.insert(parts.end(), leg, 1);
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// lambda_i with 0-based row index; 0 beyond the last row.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> out;
    for (int c = 1; !parts_.empty() && c <= parts_[0]; ++c) {
      int len = 0;
      for (int p : parts_) len += p >= c ? 1 : 0;
      out.push_back(len);
    }
    return Partition(std::move(out));
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
      if (inner[i] > (*this)[i]) return false;
    }
    return true;
  }

  /// Partitions obtained by adding one box.
  std::vector<Partition> add_box() const {
    std::vector<Partition> out;
    for (int r = 0; r <= length(); ++r) {
      if (r == 0 || (*this)[r] < (*this)[r - 1]) {
        std::vector<int> p = parts_;
        if (r == length()) {
          p.push_back(1);
        } else {
          ++p[r];
        }
        out.emplace_back(std::move(p));
      }
    }
    return out;
  }

  /// Partitions obtained by removing one corner box.
  std::vector<Partition> remove_box() const {
    std::vector<Partition> out;
    for (int r = 0; r < length(); ++r) {
      if ((*this)[r] > (*this)[r + 1]) {
        std::vector<int> p = parts_;
        --p[r];
        if (p[r] == 0) p.pop_back();
        out.emplace_back(std::move(p));
      }
    }
    return out;
  }

  /// z_rho = prod_i i^{m_i} m_i!, the centralizer order of cycle type rho.
  mpz_class centralizer_order() const {
    mpz_class z = 1;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      int mult = static_cast<int>(j - i);
      for (int k = 1; k <= mult; ++k) z *= parts_[i] * k;
      i = j;
    }
    return z;
  }

  /// (-1)^{n - length}: the sign of a permutation of this cycle type.
  int sign() const { return ((size() - length()) % 2 == 0) ? 1 : -1; }

  /// Number of standard Young tableaux, by the hook length formula.
  mpz_class num_syt() const {
    mpz_class num = 1;
    for (int k = 2; k <= size(); ++k) num *= k;
    Partition conj = conjugate();
    mpz_class den = 1;
    for (int r = 0; r < length(); ++r) {
      for (int c = 0; c < parts_[r]; ++c) den *= (parts_[r] - c - 1) + (conj[c] - r - 1) + 1;
    }
    return num / den;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "5,4,1"
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  /// Parses "3,2,1" or "321" (single digits) or "" for the empty partition.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    if (text.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(start, end - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
          throw DomainError("bad partition '" + text + "'");
        }
        parts.push_back(std::stoi(tok));
        start = end + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw DomainError("bad partition '" + text + "'");
        parts.push_back(ch - '0');
      }
    }
    std::vector<int> sorted = parts;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted != parts) throw DomainError("partition parts must be weakly decreasing: '" + text + "'");
    return Partition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

/// Ordering used for all serializations: descending lexicographic.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};

/// All partitions of n, in descending lexicographic order ((n) first, (1^n) last).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Straightening of a Schur index that need not be a partition:
/// s_alpha = sign * s_lambda, or 0. Follows the Jacobi-Trudi determinant
/// (alpha + delta sorted; repeated entries give zero).
struct StraightenedIndex {
  int sign = 0;  // 0 means the term vanishes
  Partition shape;
};

inline StraightenedIndex straighten(const std::vector<int>& alpha) {
  int len = static_cast<int>(alpha.size());
  std::vector<int> shifted(len);
  for (int i = 0; i < len; ++i) shifted[i] = alpha[i] + (len - 1 - i);
  for (int v : shifted) {
    if (v < 0) return {};
  }
  // bubble sort descending, tracking the sign of the permutation
  int sign = 1;
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j + 1 < len - i; ++j) {
      if (shifted[j] < shifted[j + 1]) {
        std::swap(shifted[j], shifted[j + 1]);
        sign = -sign;
      } else if (shifted[j] == shifted[j + 1]) {
        return {};
      }
    }
  }
  for (int i = 0; i + 1 < len; ++i) {
    if (shifted[i] == shifted[i + 1]) return {};
  }
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = shifted[i] - (len - 1 - i);
  return {sign, Partition::trimmed(std::move(parts))};
}

}  // namespace finesets

#endif  // FINESETS_PARTITION_HPP
