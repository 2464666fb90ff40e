// Independent reference computations used only by the tests. None of these
// reuse the library's algorithms for the quantity they check.
#ifndef FINESETS_TESTS_ORACLES_HPP
#define FINESETS_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "finesets/partition.hpp"
#include "finesets/permutation.hpp"
#include "finesets/qsym.hpp"

namespace oracle {

using finesets::Partition;
using finesets::Permutation;

/// f^lambda by the branching recursion over removable corners.
inline mpz_class syt_count(const std::vector<int>& lambda) {
  static std::map<std::vector<int>, mpz_class> memo;
  int total = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (total <= 1) return 1;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  mpz_class sum = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    bool corner = r + 1 == lambda.size() || lambda[r + 1] < lambda[r];
    if (!corner) continue;
    std::vector<int> mu = lambda;
    --mu[r];
    if (mu[r] == 0) mu.pop_back();
    sum += syt_count(mu);
  }
  memo[lambda] = sum;
  return sum;
}

/// Kostka number: semistandard fillings of shape lambda with content mu, by brute force.
inline long kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  // fill values 1..len(mu) one at a time as horizontal strips
  long count = 0;
  std::vector<int> shape(lambda.size(), 0);
  auto rec = [&](auto&& self, std::size_t value) -> void {
    if (value == mu.size()) {
      if (shape == lambda) ++count;
      return;
    }
    // distribute mu[value] boxes as a horizontal strip on top of `shape`
    std::vector<int> add(lambda.size(), 0);
    auto place = [&](auto&& place_self, std::size_t row, int left) -> void {
      if (row == lambda.size()) {
        if (left == 0) {
          std::vector<int> saved = shape;
          for (std::size_t r = 0; r < shape.size(); ++r) shape[r] += add[r];
          self(self, value + 1);
          shape = saved;
        }
        return;
      }
      int cap = lambda[row] - shape[row];
      if (row > 0) cap = std::min(cap, shape[row - 1] - shape[row]);  // strip condition
      for (int a = 0; a <= std::min(cap, left); ++a) {
        add[row] = a;
        place_self(place_self, row + 1, left - a);
      }
      add[row] = 0;
    };
    place(place, 0, mu[value]);
  };
  rec(rec, 0);
  return count;
}

/// Monomial-basis coefficient of x^alpha (alpha a composition) in sum q_D F_D:
/// the number of ways alpha refines, computed from the definition of F as a
/// sum over weakly increasing index sequences.
inline mpz_class monomial_coefficient(const finesets::QSym& q, const std::vector<int>& alpha) {
  int n = q.degree();
  // the index sequence i_1 <= ... <= i_n with multiplicities alpha; F_D requires
  // strict increase at positions of D; it contributes iff D is inside the set
  // of positions where the index jumps.
  std::uint32_t jumps = 0;
  int acc = 0;
  for (std::size_t k = 0; k + 1 < alpha.size(); ++k) {
    acc += alpha[k];
    jumps |= std::uint32_t{1} << acc;
  }
  mpz_class total = 0;
  for (std::size_t i = 0; i < q.num_slots(); ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(i) << 1;
    if ((d & ~jumps) == 0) total += q.coeff_at(i);
  }
  (void)n;
  return total;
}

inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

/// Symmetric iff the monomial coefficient is constant on rearrangements.
inline bool is_symmetric(const finesets::QSym& q) {
  std::map<std::vector<int>, mpz_class> by_sorted;
  for (const auto& alpha : compositions(q.degree())) {
    std::vector<int> key = alpha;
    std::sort(key.rbegin(), key.rend());
    mpz_class v = monomial_coefficient(q, alpha);
    auto [it, inserted] = by_sorted.emplace(key, v);
    if (!inserted && it->second != v) return false;
  }
  return true;
}

/// Schur coefficients of a symmetric q from brute-force Kostka numbers.
inline std::map<std::vector<int>, mpz_class> schur_coefficients(const finesets::QSym& q) {
  std::vector<Partition> parts = finesets::partitions_of(q.degree());  // descending lex
  std::map<std::vector<int>, mpz_class> c;
  for (const Partition& lam : parts) {
    mpz_class v = monomial_coefficient(q, lam.parts());
    for (const auto& [mu, cm] : c) v -= cm * kostka(mu, lam.parts());
    c[lam.parts()] = v;
  }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

/// Is the word p(start..start+len-1) decreasing then increasing?
inline bool co_unimodal(const std::vector<int>& w, int start, int len) {
  int i = start;
  while (i + 1 < start + len && w[i] > w[i + 1]) ++i;
  while (i + 1 < start + len && w[i] < w[i + 1]) ++i;
  return i == start + len - 1;
}

inline bool is_mu_modal(const Permutation& p, const std::vector<int>& mu) {
  std::vector<int> w = p.word();
  int start = 0;
  for (int part : mu) {
    if (!co_unimodal(w, start, part)) return false;
    start += part;
  }
  return true;
}

/// Knuth-equivalence class of p by closure under elementary Knuth moves.
inline std::set<std::vector<int>> knuth_closure(const std::vector<int>& start) {
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> todo{start};
  while (!todo.empty()) {
    std::vector<int> w = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      int x = w[i], y = w[i + 1], z = w[i + 2];
      std::vector<std::vector<int>> nexts;
      // acb <-> cab with a < b < c ; bac <-> bca with a < b < c
      if (x < z && z < y) {  // x y z = a c b -> c a b
        std::vector<int> v = w;
        std::swap(v[i], v[i + 1]);
        nexts.push_back(v);
      }
      if (y < z && z < x) {  // c a b -> a c b
        std::vector<int> v = w;
        std::swap(v[i], v[i + 1]);
        nexts.push_back(v);
      }
      if (y < x && x < z) {  // b a c -> b c a
        std::vector<int> v = w;
        std::swap(v[i + 1], v[i + 2]);
        nexts.push_back(v);
      }
      if (z < x && x < y) {  // b c a -> b a c
        std::vector<int> v = w;
        std::swap(v[i + 1], v[i + 2]);
        nexts.push_back(v);
      }
      for (auto& v : nexts) {
        if (seen.insert(v).second) todo.push_back(v);
      }
    }
  }
  return seen;
}

/// chi^lambda(rho) from the Frobenius formula: the coefficient of
/// x^{lambda + delta} in a_delta * p_rho, in l = len(lambda) variables.
inline long frobenius_character(const Partition& lambda, const Partition& rho) {
  int l = std::max(lambda.length(), 1);
  using Poly = std::map<std::vector<int>, long>;
  Poly poly;
  // Vandermonde a_delta = sum over permutations of sign * x^{sigma(delta)}
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> e(l);
    for (int i = 0; i < l; ++i) e[i] = l - 1 - perm[i];
    int inv = 0;
    for (int i = 0; i < l; ++i) {
      for (int j = i + 1; j < l; ++j) inv += perm[i] > perm[j] ? 1 : 0;
    }
    poly[e] += inv % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int k : rho.parts()) {
    Poly next;
    for (const auto& [e, c] : poly) {
      for (int v = 0; v < l; ++v) {
        std::vector<int> f = e;
        f[v] += k;
        next[f] += c;
      }
    }
    poly.swap(next);
  }
  std::vector<int> target(l);
  for (int i = 0; i < l; ++i) target[i] = lambda[i] + (l - 1 - i);
  auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

/// Uniform random permutation from a seeded engine.
inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return Permutation::from_word(w);
}

}  // namespace oracle

#endif  // FINESETS_TESTS_ORACLES_HPP
