#ifndef FINESETS_PERMUTATION_HPP
#define FINESETS_PERMUTATION_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finesets/error.hpp"

namespace finesets {

/// Largest supported degree. Descent sets are stored as 32-bit masks.
inline constexpr int kMaxDegree = 16;

// ---------------------------------------------------------------------------
// DescSet: a subset of [n-1], the possible descent positions of a word of
// length n. Bit i of the mask is set iff i is a member.
// ---------------------------------------------------------------------------
class DescSet {
 public:
  DescSet() = default;

  DescSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxDegree) throw DomainError("DescSet: degree out of range");
    std::uint32_t allowed = full_mask(n);
    if ((bits & ~allowed) != 0) {
      throw DomainError("DescSet: member outside [1," + std::to_string(n - 1) + "]");
    }
  }

  static DescSet from_members(int n, std::span<const int> members) {
    std::uint32_t bits = 0;
    for (int i : members) {
      if (i < 1 || i > n - 1) {
        throw DomainError("DescSet: member " + std::to_string(i) + " outside [1," +
                          std::to_string(n - 1) + "]");
      }
      bits |= std::uint32_t{1} << i;
    }
    return DescSet(n, bits);
  }
  static DescSet from_members(int n, std::initializer_list<int> members) {
    return from_members(n, std::span<const int>(members.begin(), members.size()));
  }

  /// {1, ..., k}
  static DescSet prefix(int n, int k) {
    std::uint32_t bits = 0;
    for (int i = 1; i <= k; ++i) bits |= std::uint32_t{1} << i;
    return DescSet(n, bits);
  }
  static DescSet full(int n) { return DescSet(n, full_mask(n)); }

  /// Mask of all admissible positions 1..n-1.
  static constexpr std::uint32_t full_mask(int n) {
    if (n <= 1) return 0;
    return ((std::uint32_t{1} << n) - 1) & ~std::uint32_t{1};
  }

  int degree() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  /// Index into dense arrays of length 2^(n-1).
  std::size_t index() const { return bits_ >> 1; }
  static DescSet from_index(int n, std::size_t index) {
    return DescSet(n, static_cast<std::uint32_t>(index) << 1);
  }

  bool contains(int i) const { return i >= 1 && i < 32 && ((bits_ >> i) & 1u) != 0; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const DescSet& other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  /// n - D = {n - i : i in D}.
  DescSet reflected() const {
    std::uint32_t out = 0;
    for (int i = 1; i < n_; ++i) {
      if (contains(i)) out |= std::uint32_t{1} << (n_ - i);
    }
    return DescSet(n_, out);
  }

  friend bool operator==(const DescSet&, const DescSet&) = default;

  /// Canonical order: lexicographic on the ascending member lists.
  friend bool canonical_less(const DescSet& a, const DescSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  /// "{1,4,7}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : members()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// All subsets of [n-1] in canonical order.
inline std::vector<DescSet> all_desc_sets(int n) {
  std::vector<DescSet> out;
  std::size_t count = n >= 1 ? std::size_t{1} << (n - 1) : 1;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(DescSet::from_index(std::max(n, 0), i));
  std::sort(out.begin(), out.end(), [](const DescSet& a, const DescSet& b) { return canonical_less(a, b); });
  return out;
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw DomainError("Composition: parts must be positive");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }

  /// S(mu) = {mu_1, mu_1 + mu_2, ..., mu_1 + ... + mu_{t-1}} as a subset of [n-1].
  DescSet partial_sums() const {
    int n = size();
    std::uint32_t bits = 0;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
      acc += parts_[i];
      bits |= std::uint32_t{1} << acc;
    }
    return DescSet(n, bits);
  }

  /// The composition whose partial sums are the members of d.
  static Composition from_desc_set(const DescSet& d) {
    std::vector<int> parts;
    int prev = 0;
    for (int i : d.members()) {
      parts.push_back(i - prev);
      prev = i;
    }
    if (d.degree() > 0) parts.push_back(d.degree() - prev);
    return Composition(std::move(parts));
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// All compositions of n, in lexicographic order of their part lists.
inline std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (const DescSet& d : all_desc_sets(n)) out.push_back(Composition::from_desc_set(d));
  std::sort(out.begin(), out.end(),
            [](const Composition& a, const Composition& b) { return a.parts() < b.parts(); });
  return out;
}

// ---------------------------------------------------------------------------
// Permutation: one-line word pi(1) ... pi(n) on [n].
// ---------------------------------------------------------------------------
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.w_[i] = static_cast<std::uint8_t>(i + 1);
    return p;
  }

  static Permutation from_word(std::span<const int> word) {
    int n = static_cast<int>(word.size());
    check_degree(n);
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
      int v = word[i];
      if (v < 1 || v > n || ((seen >> v) & 1u)) {
        throw DomainError("not a permutation of [" + std::to_string(n) + "]");
      }
      seen |= std::uint32_t{1} << v;
      p.w_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
  }
  static Permutation from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  /// Digits for n <= 9 ("2413"), comma-separated otherwise ("10,2,3,...").
  /// Commas are accepted for any n.
  static Permutation parse(std::string_view text) {
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(start, end - start);
        if (tok.empty()) throw DomainError("empty entry in permutation '" + std::string(text) + "'");
        int v = 0;
        for (char ch : tok) {
          if (ch < '0' || ch > '9') throw DomainError("bad character in permutation '" + std::string(text) + "'");
          v = v * 10 + (ch - '0');
          if (v > 1000) throw DomainError("entry too large in permutation");
        }
        word.push_back(v);
        start = end + 1;
      }
    } else {
      for (char ch : text) {
        if (ch < '1' || ch > '9') throw DomainError("bad character in permutation '" + std::string(text) + "'");
        word.push_back(ch - '0');
      }
    }
    return from_word(word);
  }

  int size() const { return n_; }
  /// pi(i), 1-based.
  int operator()(int i) const { return w_[i - 1]; }
  /// Values in one-line order.
  std::span<const std::uint8_t> values() const { return {w_.data(), n_}; }
  std::vector<int> word() const { return std::vector<int>(w_.begin(), w_.begin() + n_); }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      if (n_ > 9 && i > 0) out += ',';
      out += std::to_string(w_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ n_) * 1099511628211ull;
    for (int i = 0; i < n_; ++i) h = (h ^ w_[i]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }

  // Raw builder used by hot loops that already guarantee bijectivity.
  static Permutation from_values_unchecked(const std::uint8_t* values, int n) {
    Permutation p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::copy(values, values + n, p.w_.begin());
    return p;
  }

 private:
  static void check_degree(int n) {
    if (n < 1 || n > kMaxDegree) {
      throw DomainError("permutation degree must be in [1," + std::to_string(kMaxDegree) + "]");
    }
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> w_{};
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// ---------------------------------------------------------------------------
// Descent statistics
// ---------------------------------------------------------------------------
inline std::uint32_t des_bits(std::span<const std::uint8_t> w) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) bits |= std::uint32_t{1} << (i + 1);
  }
  return bits;
}

inline DescSet des_set(const Permutation& p) { return DescSet(p.size(), des_bits(p.values())); }
inline int des(const Permutation& p) { return std::popcount(des_bits(p.values())); }

/// Des(p), plus n when p(n) > p(1).
inline std::vector<int> cdes_set(const Permutation& p) {
  std::vector<int> out = des_set(p).members();
  int n = p.size();
  if (p(n) > p(1)) out.push_back(n);
  return out;
}
inline int cdes(const Permutation& p) {
  int n = p.size();
  return des(p) + (p(n) > p(1) ? 1 : 0);
}

inline int inversions(const Permutation& p) {
  int n = p.size();
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) > p(j)) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// Group operations
// ---------------------------------------------------------------------------
inline Permutation inverse(const Permutation& p) {
  int n = p.size();
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 1; i <= n; ++i) out[p(i) - 1] = static_cast<std::uint8_t>(i);
  return Permutation::from_values_unchecked(out.data(), n);
}

/// (p q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DegreeMismatch(p.size(), q.size());
  int n = p.size();
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 1; i <= n; ++i) out[i - 1] = static_cast<std::uint8_t>(p(q(i)));
  return Permutation::from_values_unchecked(out.data(), n);
}

/// w0 = n (n-1) ... 1
inline Permutation longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation::from_word(w);
}

/// The n-cycle c = (1, 2, ..., n), i.e. c(i) = i + 1 mod n.
inline Permutation long_cycle(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = (i + 1) % n + 1;
  return Permutation::from_word(w);
}

/// c^k for any integer k.
inline Permutation cycle_power(int n, int k) {
  int s = ((k % n) + n) % n;
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = (i + s) % n + 1;
  return Permutation::from_word(w);
}

/// c^k p: every value v replaced by v + k mod n (in 1..n).
inline Permutation vertical_rotate(const Permutation& p, int k) {
  int n = p.size();
  int s = ((k % n) + n) % n;
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>((p(i + 1) - 1 + s) % n + 1);
  return Permutation::from_values_unchecked(out.data(), n);
}

/// p c^k: positions shifted left by k, (p c^k)(i) = p(i + k mod n).
inline Permutation horizontal_rotate(const Permutation& p, int k) {
  int n = p.size();
  int s = ((k % n) + n) % n;
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(p((i + s) % n + 1));
  return Permutation::from_values_unchecked(out.data(), n);
}

/// p w0: the word read backwards.
inline Permutation reverse(const Permutation& p) {
  int n = p.size();
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(p(n - i));
  return Permutation::from_values_unchecked(out.data(), n);
}

/// w0 p: every value v replaced by n + 1 - v.
inline Permutation complement(const Permutation& p) {
  int n = p.size();
  std::array<std::uint8_t, kMaxDegree> out{};
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(n + 1 - p(i + 1));
  return Permutation::from_values_unchecked(out.data(), n);
}

/// Order-isomorphic permutation of a sequence of distinct integers.
inline Permutation standardize(std::span<const int> seq) {
  std::vector<int> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("standardize: entries must be distinct");
  }
  std::vector<int> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
  }
  return Permutation::from_word(out);
}
inline Permutation standardize(std::initializer_list<int> seq) {
  return standardize(std::span<const int>(seq.begin(), seq.size()));
}

/// Every permutation of [n] in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_word(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Visit every permutation of [n] in lexicographic order without materializing S_n.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::array<std::uint8_t, kMaxDegree> w{};
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>(i + 1);
  do {
    fn(Permutation::from_values_unchecked(w.data(), n));
  } while (std::next_permutation(w.begin(), w.begin() + n));
}

// ---------------------------------------------------------------------------
// Modality
// ---------------------------------------------------------------------------

/// Whether some mu-modal permutation has descent set d. Inside each mu-block
/// the descents of a co-unimodal word form a run starting at the block's first
/// position; positions in S(mu) are unconstrained.
inline bool is_mu_modal_desset(const DescSet& d, const Composition& mu) {
  if (mu.size() != d.degree()) {
    throw DomainError("composition of " + std::to_string(mu.size()) + " does not match degree " +
                      std::to_string(d.degree()));
  }
  int start = 0;
  for (int part : mu.parts()) {
    // interior positions start+1 .. start+part-1
    bool in_run = true;
    for (int i = start + 1; i <= start + part - 1; ++i) {
      if (d.contains(i)) {
        if (!in_run) return false;
      } else {
        in_run = false;
      }
    }
    start += part;
  }
  return true;
}

}  // namespace finesets

template <>
struct std::hash<finesets::Permutation> {
  std::size_t operator()(const finesets::Permutation& p) const { return p.hash(); }
};

#endif  // FINESETS_PERMUTATION_HPP
