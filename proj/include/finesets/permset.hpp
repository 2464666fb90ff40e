#ifndef FINESETS_PERMSET_HPP
#define FINESETS_PERMSET_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finesets/perm_multiset.hpp"
#include "finesets/permutation.hpp"
#include "finesets/qsym.hpp"
#include "finesets/tableau.hpp"

namespace finesets {

/// Every permutation of [n] satisfying pred, as a set.
template <class Pred>
PermMultiset filter_sn(int n, Pred&& pred) {
  PermMultiset out(n);
  for_each_permutation(n, [&](const Permutation& p) {
    if (pred(p)) out.insert_once(p);
  });
  return out;
}

inline PermMultiset symmetric_group(int n) {
  return filter_sn(n, [](const Permutation&) { return true; });
}

/// C_n: the n vertical rotations of the identity.
inline PermMultiset cyclic_group(int n) {
  PermMultiset out(n);
  for (int k = 0; k < n; ++k) out.insert_once(cycle_power(n, k));
  return out;
}

enum class DescentKind { D, Dinv, R, Rinv };

/// D_{n,J} (Des = J), R_{n,J} (Des contained in J), optionally inverted elementwise.
inline PermMultiset descent_class(int n, const DescSet& j, DescentKind kind) {
  if (j.degree() != n) throw DegreeMismatch(n, j.degree());
  bool exact = kind == DescentKind::D || kind == DescentKind::Dinv;
  bool inv = kind == DescentKind::Dinv || kind == DescentKind::Rinv;
  PermMultiset out(n);
  for_each_permutation(n, [&](const Permutation& p) {
    std::uint32_t d = des_bits(p.values());
    if (exact ? d == j.bits() : (d & ~j.bits()) == 0) out.insert_once(inv ? inverse(p) : p);
  });
  return out;
}

/// Elementwise inverse, multiplicities kept.
inline PermMultiset inverse_multiset(const PermMultiset& a) {
  PermMultiset out(a.degree());
  for (const auto& [p, m] : a) out.add(inverse(p), m);
  return out;
}

/// Additive union of multisets.
inline PermMultiset multiset_union(const PermMultiset& a, const PermMultiset& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  PermMultiset out = a;
  for (const auto& [p, m] : b) out.add(p, m);
  return out;
}

enum class ProductMode { multiset, set };

/// AB = {{pi sigma}} with multiplicities multiplied (multiset) or collapsed (set).
inline PermMultiset product(const PermMultiset& a, const PermMultiset& b, ProductMode mode = ProductMode::multiset) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  MultisetBuilder out(a.degree());
  for (const auto& [p, mp] : a) {
    for (const auto& [q, mq] : b) out.add(compose(p, q), mode == ProductMode::set ? Count(1) : Count(mp * mq));
  }
  PermMultiset r = std::move(out).build();
  return mode == ProductMode::set ? r.underlying_set() : r;
}

/// Q(AB) of the multiset product without materializing AB.
inline QSym product_qsym(const PermMultiset& a, const PermMultiset& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  int n = a.degree();
  bool unit = a.is_set() && b.is_set();
  QSymAccumulator acc(n);
  std::array<std::uint8_t, kMaxDegree> w{};
  for (const auto& [p, mp] : a) {
    auto pv = p.values();
    for (const auto& [q, mq] : b) {
      auto qv = q.values();
      for (int i = 0; i < n; ++i) w[i] = pv[qv[i] - 1];
      std::uint32_t bits = des_bits(std::span<const std::uint8_t>(w.data(), n));
      if (unit) {
        acc.add_bits(bits);
      } else {
        acc.add(Permutation::from_values_unchecked(w.data(), n), Count(mp * mq));
      }
    }
  }
  return std::move(acc).finish();
}

/// Append the fixed point n to every element of a degree n-1 multiset.
inline PermMultiset embed(const PermMultiset& a, int n) {
  if (a.degree() != n - 1) throw DegreeMismatch(n - 1, a.degree());
  PermMultiset out(n);
  for (const auto& [p, m] : a) {
    std::vector<int> w = p.word();
    w.push_back(n);
    out.add(Permutation::from_word(w), m);
  }
  return out;
}

inline PermMultiset vertical_rotate(const PermMultiset& a, int k) {
  PermMultiset out(a.degree());
  for (const auto& [p, m] : a) out.add(vertical_rotate(p, k), m);
  return out;
}

inline PermMultiset horizontal_rotate(const PermMultiset& a, int k) {
  PermMultiset out(a.degree());
  for (const auto& [p, m] : a) out.add(horizontal_rotate(p, k), m);
  return out;
}

/// Applies f to every element, keeping multiplicities.
inline PermMultiset map_elements(const PermMultiset& a, const std::function<Permutation(const Permutation&)>& f) {
  PermMultiset out(a.degree());
  for (const auto& [p, m] : a) out.add(f(p), m);
  return out;
}

// ---------------------------------------------------------------------------
// Classical families
// ---------------------------------------------------------------------------

/// Cycle type of p as a partition.
inline Partition cycle_type(const Permutation& p) {
  int n = p.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

inline PermMultiset fixed_inversions(int n, int k) {
  return filter_sn(n, [&](const Permutation& p) { return inversions(p) == k; });
}

/// B_{n,k}: Coxeter length at most k.
inline PermMultiset length_ball(int n, int k) {
  return filter_sn(n, [&](const Permutation& p) { return inversions(p) <= k; });
}

inline PermMultiset conjugacy_class(const Partition& type) {
  return filter_sn(type.size(), [&](const Permutation& p) { return cycle_type(p) == type; });
}

/// {p : des(p^{-1}) = k}
inline PermMultiset fixed_inverse_descents(int n, int k) {
  return filter_sn(n, [&](const Permutation& p) { return des(inverse(p)) == k; });
}

/// {p : cdes(p^{-1}) = k}
inline PermMultiset fixed_inverse_cyclic_descents(int n, int k) {
  return filter_sn(n, [&](const Permutation& p) { return cdes(inverse(p)) == k; });
}

/// Every Knuth class of S_n, keyed by insertion tableau (row reading word order).
inline std::vector<std::pair<StandardTableau, PermMultiset>> all_knuth_classes(int n) {
  std::vector<std::pair<StandardTableau, PermMultiset>> out;
  for (const Partition& lambda : partitions_of(n)) {
    for (const StandardTableau& t : enumerate_syt(SkewShape(lambda))) out.emplace_back(t, knuth_class(t));
  }
  return out;
}

}  // namespace finesets

#endif  // FINESETS_PERMSET_HPP
