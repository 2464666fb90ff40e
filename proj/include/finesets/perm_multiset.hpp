#ifndef FINESETS_PERM_MULTISET_HPP
#define FINESETS_PERM_MULTISET_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "finesets/permutation.hpp"

namespace finesets {

using Count = mpz_class;

/// Multiset of permutations of a fixed degree n. Multiplicities are positive
/// arbitrary-precision integers; iteration is in lexicographic order.
class PermMultiset {
 public:
  using Map = std::map<Permutation, Count>;
  using const_iterator = Map::const_iterator;

  explicit PermMultiset(int n = 1) : n_(n) {
    if (n < 1 || n > kMaxDegree) throw DomainError("PermMultiset: degree out of range");
  }

  template <class Range>
  static PermMultiset from_set(int n, const Range& perms) {
    PermMultiset out(n);
    for (const Permutation& p : perms) out.insert_once(p);
    return out;
  }

  static PermMultiset parse_list(int n, std::initializer_list<const char*> words) {
    PermMultiset out(n);
    for (const char* w : words) out.add(Permutation::parse(w));
    return out;
  }

  int degree() const { return n_; }

  void add(const Permutation& p, const Count& m = 1) {
    check(p);
    if (m <= 0) throw DomainError("multiplicity must be positive");
    elems_[p] += m;
  }

  /// Insert with multiplicity one; no effect when already present.
  void insert_once(const Permutation& p) {
    check(p);
    elems_.emplace(p, Count(1));
  }

  Count multiplicity(const Permutation& p) const {
    auto it = elems_.find(p);
    return it == elems_.end() ? Count(0) : it->second;
  }
  bool contains(const Permutation& p) const { return elems_.count(p) != 0; }

  /// Number of distinct elements.
  std::size_t distinct_size() const { return elems_.size(); }
  /// Total number of elements counted with multiplicity.
  Count cardinality() const {
    Count total = 0;
    for (const auto& [p, m] : elems_) total += m;
    return total;
  }
  bool empty() const { return elems_.empty(); }

  bool is_set() const {
    for (const auto& [p, m] : elems_) {
      if (m != 1) return false;
    }
    return true;
  }

  PermMultiset underlying_set() const {
    PermMultiset out(n_);
    for (const auto& [p, m] : elems_) out.elems_.emplace(p, Count(1));
    return out;
  }

  const_iterator begin() const { return elems_.begin(); }
  const_iterator end() const { return elems_.end(); }
  const Map& elements() const { return elems_; }

  friend bool operator==(const PermMultiset& a, const PermMultiset& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

  /// "{{312,312,132}}"-style listing, elements repeated by multiplicity.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [p, m] : elems_) {
      for (Count k = 0; k < m; ++k) {
        if (!first) out += ",";
        out += p.to_string();
        first = false;
      }
    }
    return out + "}";
  }

 private:
  void check(const Permutation& p) const {
    if (p.size() != n_) throw DegreeMismatch(n_, p.size());
  }

  int n_;
  Map elems_;
};

/// Accumulates multiplicities in a hash map, then freezes into a PermMultiset.
class MultisetBuilder {
 public:
  explicit MultisetBuilder(int n) : n_(n) {}
  void add(const Permutation& p, const Count& m = 1) { acc_[p] += m; }
  PermMultiset build() && {
    PermMultiset out(n_);
    for (auto& [p, m] : acc_) out.add(p, m);
    return out;
  }

 private:
  int n_;
  std::unordered_map<Permutation, Count, PermutationHash> acc_;
};

}  // namespace finesets

#endif  // FINESETS_PERM_MULTISET_HPP
