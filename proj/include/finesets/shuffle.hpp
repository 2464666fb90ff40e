#ifndef FINESETS_SHUFFLE_HPP
#define FINESETS_SHUFFLE_HPP

#include <algorithm>
#include <vector>

#include "finesets/perm_multiset.hpp"
#include "finesets/permutation.hpp"

namespace finesets {

/// A multiset of permutations of an arbitrary letter set, stored as the sorted
/// letters plus standardized patterns.
class LetteredMultiset {
 public:
  LetteredMultiset(std::vector<int> letters, PermMultiset patterns)
      : letters_(std::move(letters)), patterns_(std::move(patterns)) {
    std::sort(letters_.begin(), letters_.end());
    if (std::adjacent_find(letters_.begin(), letters_.end()) != letters_.end()) {
      throw DomainError("letters must be distinct");
    }
    if (static_cast<int>(letters_.size()) != patterns_.degree()) {
      throw DegreeMismatch(static_cast<int>(letters_.size()), patterns_.degree());
    }
  }

  /// Words given literally on their letters, e.g. {"43"} on letters {3,4}.
  static LetteredMultiset from_words(const std::vector<std::vector<int>>& words) {
    if (words.empty()) throw DomainError("empty lettered multiset needs explicit letters");
    std::vector<int> letters = words.front();
    std::sort(letters.begin(), letters.end());
    PermMultiset patterns(static_cast<int>(letters.size()));
    for (const auto& w : words) {
      std::vector<int> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != letters) throw DomainError("words use different letter sets");
      patterns.add(standardize(w));
    }
    return LetteredMultiset(std::move(letters), std::move(patterns));
  }

  /// A permutation of [n] viewed on letters 1..n shifted by `offset`.
  static LetteredMultiset shifted(const PermMultiset& patterns, int offset) {
    std::vector<int> letters(patterns.degree());
    for (int i = 0; i < patterns.degree(); ++i) letters[i] = offset + i + 1;
    return LetteredMultiset(std::move(letters), patterns);
  }

  const std::vector<int>& letters() const { return letters_; }
  const PermMultiset& patterns() const { return patterns_; }

  std::vector<int> word_of(const Permutation& pattern) const {
    std::vector<int> w(pattern.size());
    for (int i = 1; i <= pattern.size(); ++i) w[i - 1] = letters_[pattern(i) - 1];
    return w;
  }

 private:
  std::vector<int> letters_;
  PermMultiset patterns_;
};

namespace detail {

template <class Fn>
void interleave(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& buf, std::size_t i,
                std::size_t j, Fn& fn) {
  if (i == a.size() && j == b.size()) {
    fn(buf);
    return;
  }
  if (i < a.size()) {
    buf.push_back(a[i]);
    interleave(a, b, buf, i + 1, j, fn);
    buf.pop_back();
  }
  if (j < b.size()) {
    buf.push_back(b[j]);
    interleave(a, b, buf, i, j + 1, fn);
    buf.pop_back();
  }
}

}  // namespace detail

/// Calls fn(word) for each of the binom(|a|+|b|, |a|) interleavings of a and b.
template <class Fn>
void for_each_interleaving(const std::vector<int>& a, const std::vector<int>& b, Fn&& fn) {
  std::vector<int> buf;
  buf.reserve(a.size() + b.size());
  detail::interleave(a, b, buf, 0, 0, fn);
}

/// A shuffle B: every interleaving of a word of A with a word of B, with
/// multiplicities multiplied. The result is standardized onto [|U|+|V|].
inline PermMultiset shuffles(const LetteredMultiset& a, const LetteredMultiset& b) {
  std::vector<int> all = a.letters();
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw DomainError("shuffle: letter sets overlap");
  }
  MultisetBuilder out(static_cast<int>(all.size()));
  for (const auto& [pa, ma] : a.patterns()) {
    std::vector<int> wa = a.word_of(pa);
    for (const auto& [pb, mb] : b.patterns()) {
      std::vector<int> wb = b.word_of(pb);
      Count m = ma * mb;
      for_each_interleaving(wa, wb, [&](const std::vector<int>& w) { out.add(standardize(w), m); });
    }
  }
  return std::move(out).build();
}

}  // namespace finesets

#endif  // FINESETS_SHUFFLE_HPP
