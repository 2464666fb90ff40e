#ifndef FINESETS_QSYM_HPP
#define FINESETS_QSYM_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finesets/perm_multiset.hpp"
#include "finesets/permutation.hpp"
#include "finesets/tableau.hpp"

namespace finesets {

/// Degree-n quasisymmetric function in the fundamental basis: an integer
/// coefficient for every subset D of [n-1], stored densely by D.index().
class QSym {
 public:
  explicit QSym(int n = 0) : n_(n), c_(slots(n)) {}

  static QSym fundamental(const DescSet& d, const mpz_class& coeff = 1) {
    QSym q(d.degree());
    q.c_[d.index()] = coeff;
    return q;
  }

  int degree() const { return n_; }
  std::size_t num_slots() const { return c_.size(); }

  const mpz_class& coeff(const DescSet& d) const {
    check(d);
    return c_[d.index()];
  }
  const mpz_class& coeff_at(std::size_t index) const { return c_[index]; }
  mpz_class& coeff_at(std::size_t index) { return c_[index]; }
  void add(const DescSet& d, const mpz_class& m) {
    check(d);
    c_[d.index()] += m;
  }

  bool is_zero() const {
    for (const auto& v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  /// Monomial coefficients: M_E = sum over D contained in E of q_D.
  std::vector<mpz_class> monomial_coeffs() const {
    std::vector<mpz_class> m = c_;
    int bits = n_ >= 1 ? n_ - 1 : 0;
    for (int b = 0; b < bits; ++b) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if ((i >> b) & 1u) m[i] += m[i ^ (std::size_t{1} << b)];
      }
    }
    return m;
  }

  /// D -> n - D on every index.
  QSym reflected() const {
    QSym out(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) out.c_[DescSet::from_index(n_, i).reflected().index()] = c_[i];
    }
    return out;
  }

  QSym& operator+=(const QSym& o) {
    same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  QSym& operator-=(const QSym& o) {
    same_degree(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  QSym& operator*=(const mpz_class& k) {
    for (auto& v : c_) v *= k;
    return *this;
  }
  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  friend QSym operator*(const mpz_class& k, QSym a) { return a *= k; }
  friend bool operator==(const QSym&, const QSym&) = default;

  /// "F{} + 2*F{1} + F{1,2}" in canonical descent-set order; "0" when zero.
  std::string to_string() const {
    std::string out;
    for (const DescSet& d : all_desc_sets(n_)) {
      const mpz_class& v = c_[d.index()];
      if (v == 0) continue;
      bool neg = v < 0;
      mpz_class a = abs(v);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (a != 1) out += a.get_str() + "*";
      out += "F" + d.to_string();
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::size_t slots(int n) {
    if (n < 0 || n > kMaxDegree) throw DomainError("QSym: degree out of range");
    return n >= 1 ? std::size_t{1} << (n - 1) : 1;
  }
  void check(const DescSet& d) const {
    if (d.degree() != n_) throw DegreeMismatch(n_, d.degree());
  }
  void same_degree(const QSym& o) const {
    if (o.n_ != n_) throw DegreeMismatch(n_, o.n_);
  }

  int n_;
  std::vector<mpz_class> c_;
};

/// Streaming tally of descent sets with 64-bit counters, spilled into
/// arbitrary precision before they can overflow.
class QSymAccumulator {
 public:
  explicit QSymAccumulator(int n) : result_(n), fast_(result_.num_slots(), 0) {}

  void add_bits(std::uint32_t des_bits, std::uint64_t mult = 1) {
    std::size_t i = des_bits >> 1;
    if (fast_[i] > UINT64_MAX / 2 || mult > UINT64_MAX / 2) spill(i);
    if (mult > UINT64_MAX / 2) {
      result_.coeff_at(i) += mpz_from(mult);
      return;
    }
    fast_[i] += mult;
  }
  void add(const Permutation& p, std::uint64_t mult = 1) { add_bits(des_bits(p.values()), mult); }
  void add(const Permutation& p, const mpz_class& mult) { result_.coeff_at(des_bits(p.values()) >> 1) += mult; }

  QSym finish() && {
    for (std::size_t i = 0; i < fast_.size(); ++i) spill(i);
    return std::move(result_);
  }

 private:
  static mpz_class mpz_from(std::uint64_t v) {
    mpz_class out(static_cast<unsigned long>(v >> 32));
    out <<= 32;
    out += static_cast<unsigned long>(v & 0xffffffffu);
    return out;
  }
  void spill(std::size_t i) {
    if (fast_[i] == 0) return;
    result_.coeff_at(i) += mpz_from(fast_[i]);
    fast_[i] = 0;
  }

  QSym result_;
  std::vector<std::uint64_t> fast_;
};

/// Q(B) = sum over b of m(b, B) F_{n, Des(b)}.
inline QSym qsym_of(const PermMultiset& b) {
  QSym q(b.degree());
  for (const auto& [p, m] : b) q.coeff_at(des_bits(p.values()) >> 1) += m;
  return q;
}

/// Sum of F_{Des(T)} over SYT(shape).
inline QSym qsym_of_tableaux(const SkewShape& s) {
  QSymAccumulator acc(s.size());
  for_each_syt(s, [&](const std::vector<std::vector<int>>&, std::uint32_t bits) { acc.add_bits(bits); });
  return std::move(acc).finish();
}

namespace detail {

/// A permutation with descent set exactly d: blocks of the composition of d
/// receive decreasing ranges of values, each block written increasingly.
inline std::vector<int> descent_representative(const DescSet& d, int offset) {
  Composition comp = Composition::from_desc_set(d);
  std::vector<int> w;
  int hi = d.degree();
  for (int part : comp.parts()) {
    for (int t = hi - part + 1; t <= hi; ++t) w.push_back(t + offset);
    hi -= part;
  }
  return w;
}

template <class Fn>
void interleave_des(const std::vector<int>& a, const std::vector<int>& b, std::size_t i, std::size_t j, int last,
                    int pos, std::uint32_t bits, Fn& fn) {
  if (i == a.size() && j == b.size()) {
    fn(bits);
    return;
  }
  if (i < a.size()) {
    std::uint32_t nb = (pos > 0 && last > a[i]) ? bits | (std::uint32_t{1} << pos) : bits;
    interleave_des(a, b, i + 1, j, a[i], pos + 1, nb, fn);
  }
  if (j < b.size()) {
    std::uint32_t nb = (pos > 0 && last > b[j]) ? bits | (std::uint32_t{1} << pos) : bits;
    interleave_des(a, b, i, j + 1, b[j], pos + 1, nb, fn);
  }
}

}  // namespace detail

/// F_D * F_E via the shuffles of one representative pair on disjoint alphabets.
/// `rep` picks the representatives (exposed for the representative-independence test).
inline QSym fundamental_product(const DescSet& d, const DescSet& e, const std::vector<int>& rep_d,
                                const std::vector<int>& rep_e) {
  QSymAccumulator acc(d.degree() + e.degree());
  auto fn = [&](std::uint32_t bits) { acc.add_bits(bits); };
  detail::interleave_des(rep_d, rep_e, 0, 0, 0, 0, 0, fn);
  return std::move(acc).finish();
}

inline QSym fundamental_product(const DescSet& d, const DescSet& e) {
  return fundamental_product(d, e, detail::descent_representative(d, 0),
                             detail::descent_representative(e, d.degree()));
}

/// Ordinary product in QSym.
inline QSym qsym_mul(const QSym& a, const QSym& b) {
  if (a.degree() == 0) {
    QSym out = b;
    out *= a.coeff_at(0);
    return out;
  }
  if (b.degree() == 0) {
    QSym out = a;
    out *= b.coeff_at(0);
    return out;
  }
  QSym out(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.num_slots(); ++i) {
    if (a.coeff_at(i) == 0) continue;
    for (std::size_t j = 0; j < b.num_slots(); ++j) {
      if (b.coeff_at(j) == 0) continue;
      QSym f = fundamental_product(DescSet::from_index(a.degree(), i), DescSet::from_index(b.degree(), j));
      mpz_class k = a.coeff_at(i) * b.coeff_at(j);
      for (std::size_t t = 0; t < f.num_slots(); ++t) {
        if (f.coeff_at(t) != 0) out.coeff_at(t) += k * f.coeff_at(t);
      }
    }
  }
  return out;
}

/// Coefficients of x^alpha for weak compositions alpha in `vars` variables:
/// coefficient = sum of q_D over D contained in the partial sums of the
/// nonzero parts of alpha. Keys are the exponent vectors.
inline std::map<std::vector<int>, mpz_class> monomial_expansion(const QSym& q, int vars) {
  if (vars < 1) throw DomainError("number of variables must be positive");
  std::map<std::vector<int>, mpz_class> out;
  std::vector<mpz_class> mono = q.monomial_coeffs();
  int n = q.degree();
  std::vector<int> alpha(vars, 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == vars - 1) {
      alpha[idx] = remaining;
      std::vector<int> parts;
      for (int a : alpha) {
        if (a > 0) parts.push_back(a);
      }
      DescSet s = Composition(parts).partial_sums();
      const mpz_class& v = mono[n >= 1 ? s.index() : 0];
      if (v != 0) out[alpha] = v;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      alpha[idx] = a;
      self(self, idx + 1, remaining - a);
    }
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace finesets

#endif  // FINESETS_QSYM_HPP
