#ifndef FINESETS_SCHUR_HPP
#define FINESETS_SCHUR_HPP

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "finesets/dtable.hpp"
#include "finesets/partition.hpp"
#include "finesets/perm_multiset.hpp"
#include "finesets/qsym.hpp"

namespace finesets {

/// Degree-n symmetric function in the Schur basis with exact rational coefficients.
class SchurExpansion {
 public:
  using Map = std::map<Partition, mpq_class, DescendingLex>;

  explicit SchurExpansion(int n = 0) : n_(n) {}

  static SchurExpansion single(const Partition& lambda, const mpq_class& c = 1) {
    SchurExpansion e(lambda.size());
    e.add(lambda, c);
    return e;
  }

  int degree() const { return n_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  void add(const Partition& lambda, const mpq_class& c) {
    if (lambda.size() != n_) throw DegreeMismatch(n_, lambda.size());
    mpq_class& slot = terms_[lambda];
    slot += c;
    slot.canonicalize();
    if (slot == 0) terms_.erase(lambda);
  }

  /// Adds c * s_alpha for an arbitrary integer sequence alpha, straightening it first.
  void add_straightened(const std::vector<int>& alpha, const mpq_class& c) {
    StraightenedIndex s = straighten(alpha);
    if (s.sign != 0) add(s.shape, c * s.sign);
  }

  SchurExpansion& operator+=(const SchurExpansion& o) {
    same_degree(o);
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  SchurExpansion& operator-=(const SchurExpansion& o) {
    same_degree(o);
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  SchurExpansion& operator*=(const mpq_class& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, c] : terms_) c *= k;
    return *this;
  }
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
  friend SchurExpansion operator*(const mpq_class& k, SchurExpansion a) { return a *= k; }
  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  bool is_integral() const {
    for (const auto& [l, c] : terms_) {
      if (c.get_den() != 1) return false;
    }
    return true;
  }

  /// "s[5] + s[4,1]", "-s[3] + 2*s[2,1]", "3/2*s[2]"; "0" when empty.
  std::string to_string() const {
    std::string out;
    for (const auto& [l, c] : terms_) {
      bool neg = c < 0;
      mpq_class a = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (a != 1) out += a.get_str() + "*";
      out += "s[" + l.to_string() + "]";
    }
    return out.empty() ? "0" : out;
  }

  /// Parses the to_string() form; `n` fixes the degree of "0".
  static SchurExpansion parse(const std::string& text, int n) {
    SchurExpansion e(n);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "0") return e;
    int sign = 1;
    bool first = true;
    while (i < text.size()) {
      skip();
      if (!first || text[i] == '-') {
        if (text[i] == '+') {
          sign = 1;
        } else if (text[i] == '-') {
          sign = -1;
        } else {
          throw ParseError("expected sign", i, {"'+'", "'-'"});
        }
        ++i;
        skip();
      }
      first = false;
      mpq_class c = 1;
      std::size_t star = text.find('*', i);
      std::size_t s = text.find('s', i);
      if (star != std::string::npos && star < s) {
        c = mpq_class(text.substr(i, star - i));
        c.canonicalize();
        i = star + 1;
      }
      if (text.compare(i, 2, "s[") != 0) throw ParseError("expected Schur term", i, {"'s['"});
      std::size_t close = text.find(']', i);
      if (close == std::string::npos) throw ParseError("unterminated partition", i, {"']'"});
      Partition lambda = Partition::parse(text.substr(i + 2, close - i - 2));
      if (lambda.size() != n) throw DegreeMismatch(n, lambda.size());
      e.add(lambda, sign * c);
      i = close + 1;
      skip();
    }
    return e;
  }

 private:
  void same_degree(const SchurExpansion& o) const {
    if (o.n_ != n_) throw DegreeMismatch(n_, o.n_);
  }

  int n_;
  Map terms_;
};

inline bool is_schur_positive(const SchurExpansion& e) {
  for (const auto& [l, c] : e.terms()) {
    if (c < 0) return false;
  }
  return true;
}

/// Certificate that a QSym is not symmetric: two descent sets whose
/// compositions are rearrangements of each other, with different monomial coefficients.
struct NotSymmetric {
  DescSet first;
  DescSet second;
  mpz_class first_value;
  mpz_class second_value;

  std::string to_string() const {
    return "not symmetric: monomial coefficients at " + first.to_string() + " and " + second.to_string() +
           " differ (" + first_value.get_str() + " vs " + second_value.get_str() + ")";
  }
};

using SchurResult = std::variant<SchurExpansion, NotSymmetric>;

/// Witness search on monomial coefficients; nullopt when q is symmetric.
inline std::optional<NotSymmetric> symmetry_witness(const QSym& q) {
  int n = q.degree();
  std::vector<mpz_class> mono = q.monomial_coeffs();
  std::map<std::vector<int>, DescSet> seen;
  for (const DescSet& e : all_desc_sets(n)) {
    std::vector<int> key = Composition::from_desc_set(e).parts();
    std::sort(key.rbegin(), key.rend());
    auto [it, inserted] = seen.emplace(key, e);
    if (!inserted && mono[it->second.index()] != mono[e.index()]) {
      return NotSymmetric{it->second, e, mono[it->second.index()], mono[e.index()]};
    }
  }
  return std::nullopt;
}

/// F-vector of a Schur expansion; requires integral coefficients.
inline QSym to_qsym(const SchurExpansion& e) {
  int n = e.degree();
  if (!e.is_integral()) throw IntegralityError("to_qsym: non-integral Schur coefficients");
  QSym q(n);
  if (n == 0) {
    if (!e.is_zero()) q.coeff_at(0) = e.terms().begin()->second.get_num();
    return q;
  }
  auto basis = DescentTableStore::global().basis(n);
  for (const auto& [l, c] : e.terms()) {
    const auto& row = basis->table.counts[basis->table.partition_index(l)];
    mpz_class k = c.get_num();
    for (std::size_t d = 0; d < row.size(); ++d) {
      if (row[d] != 0) q.coeff_at(d) += k * static_cast<unsigned long>(row[d]);
    }
  }
  return q;
}

/// Expansion of q in the Schur basis, or a NotSymmetric certificate. The
/// coefficients come from back-substitution in the unitriangular Kostka
/// system on monomial coefficients; the result is then checked against all of q.
inline SchurResult schur_expand(const QSym& q) {
  int n = q.degree();
  SchurExpansion out(n);
  if (n == 0) {
    if (q.coeff_at(0) != 0) out.add(Partition(), q.coeff_at(0));
    return out;
  }
  auto basis = DescentTableStore::global().basis(n);
  const auto& parts = basis->table.partitions;
  std::vector<mpz_class> mono = q.monomial_coeffs();
  std::vector<mpz_class> c(parts.size());
  for (std::size_t lam = 0; lam < parts.size(); ++lam) {
    mpz_class v = mono[basis->row_of[lam]];
    for (std::size_t mu = 0; mu < lam; ++mu) {
      if (c[mu] != 0 && basis->kostka[mu][lam] != 0) v -= c[mu] * static_cast<unsigned long>(basis->kostka[mu][lam]);
    }
    c[lam] = v;
    if (v != 0) out.add(parts[lam], v);
  }
  if (to_qsym(out) != q) {
    if (auto w = symmetry_witness(q)) return *w;
    throw Error("schur_expand: inconsistent system without a symmetry witness");
  }
  return out;
}

inline bool is_symmetric(const QSym& q) { return std::holds_alternative<SchurExpansion>(schur_expand(q)); }

/// Symmetric and Schur-positive.
inline bool is_fine(const QSym& q) {
  SchurResult r = schur_expand(q);
  return std::holds_alternative<SchurExpansion>(r) && is_schur_positive(std::get<SchurExpansion>(r));
}

/// Schur expansion of a QSym that must be symmetric; throws otherwise.
inline SchurExpansion expect_symmetric(const QSym& q) {
  SchurResult r = schur_expand(q);
  if (auto* ns = std::get_if<NotSymmetric>(&r)) throw DomainError(ns->to_string());
  return std::get<SchurExpansion>(std::move(r));
}

/// s_1 * e: add a corner box in every possible way.
inline SchurExpansion pieri_up(const SchurExpansion& e) {
  SchurExpansion out(e.degree() + 1);
  for (const auto& [l, c] : e.terms()) {
    for (const Partition& p : l.add_box()) out.add(p, c);
  }
  return out;
}

/// Restriction: remove a corner box in every possible way.
inline SchurExpansion pieri_down(const SchurExpansion& e) {
  if (e.degree() == 0) throw DomainError("pieri_down: degree 0 has no restriction");
  SchurExpansion out(e.degree() - 1);
  for (const auto& [l, c] : e.terms()) {
    for (const Partition& p : l.remove_box()) out.add(p, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b - r; the sign counts the beads jumped over.
class MnEvaluator {
 public:
  long eval(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t k) {
    if (k == rho.size()) return 1;
    auto key = std::make_pair(beta, std::vector<int>(rho.begin() + static_cast<long>(k), rho.end()));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int r = rho[k];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      int b = beta[i];
      int target = b - r;
      if (target < 0) continue;
      if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int x : beta) {
        if (x > target && x < b) ++jumped;
      }
      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.rbegin(), nb.rend());
      long v = eval(nb, rho, k + 1);
      total += (jumped % 2 == 0) ? v : -v;
    }
    memo_[key] = total;
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo_;
};

inline std::vector<int> beta_set(const Partition& lambda) {
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return beta;
}

}  // namespace detail

/// chi^lambda(rho) by the Murnaghan-Nakayama rule.
inline long mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw DegreeMismatch(lambda.size(), rho.size());
  detail::MnEvaluator ev;
  return ev.eval(detail::beta_set(lambda), rho.parts(), 0);
}

/// Full character table for degree n: [lambda][rho], both in descending lex order.
struct CharacterTable {
  std::vector<Partition> partitions;
  std::vector<std::vector<long>> values;
  std::vector<mpz_class> centralizer;  // z_rho per class

  explicit CharacterTable(int n) : partitions(partitions_of(n)) {
    for (const Partition& lambda : partitions) {
      detail::MnEvaluator ev;
      std::vector<long> row;
      for (const Partition& rho : partitions) row.push_back(ev.eval(detail::beta_set(lambda), rho.parts(), 0));
      values.push_back(std::move(row));
    }
    for (const Partition& rho : partitions) centralizer.push_back(rho.centralizer_order());
  }

  static const CharacterTable& of(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CharacterTable>(n);
    return *slot;
  }

  int index(const Partition& p) const {
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      if (partitions[i] == p) return static_cast<int>(i);
    }
    throw DomainError("not a partition of the table's degree: " + p.to_string());
  }
};

/// Character values of the representation with Frobenius image e, one per class.
inline std::vector<mpq_class> character_vector(const SchurExpansion& e) {
  const CharacterTable& t = CharacterTable::of(e.degree());
  std::vector<mpq_class> out(t.partitions.size(), 0);
  for (const auto& [l, c] : e.terms()) {
    const auto& row = t.values[t.index(l)];
    for (std::size_t r = 0; r < row.size(); ++r) out[r] += c * row[r];
  }
  return out;
}

inline mpq_class character_value(const SchurExpansion& e, const Partition& rho) {
  return character_vector(e)[CharacterTable::of(e.degree()).index(rho)];
}

/// Inverse Frobenius map: sum over lambda of <chi, chi^lambda> s_lambda.
inline SchurExpansion from_character_vector(int n, const std::vector<mpq_class>& chi) {
  const CharacterTable& t = CharacterTable::of(n);
  SchurExpansion out(n);
  for (std::size_t l = 0; l < t.partitions.size(); ++l) {
    mpq_class v = 0;
    for (std::size_t r = 0; r < t.partitions.size(); ++r) {
      if (chi[r] != 0) v += chi[r] * t.values[l][r] / mpq_class(t.centralizer[r]);
    }
    v.canonicalize();
    if (v != 0) out.add(t.partitions[l], v);
  }
  return out;
}

/// Kronecker (internal) product via pointwise multiplication of characters.
inline SchurExpansion kronecker(const SchurExpansion& a, const SchurExpansion& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  std::vector<mpq_class> ca = character_vector(a);
  std::vector<mpq_class> cb = character_vector(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] *= cb[i];
  SchurExpansion out = from_character_vector(a.degree(), ca);
  if (a.is_integral() && b.is_integral() && !out.is_integral()) {
    throw IntegralityError("kronecker: non-integral coefficient in product of integral expansions");
  }
  return out;
}

/// Signed count over mu-modal elements: sum of m(b) (-1)^{|Des(b) \ S(mu)|}.
inline mpz_class char_from_signed_formula(const PermMultiset& b, const Composition& mu) {
  if (mu.size() != b.degree()) throw DomainError("composition size does not match degree");
  std::uint32_t smu = mu.partial_sums().bits();
  mpz_class total = 0;
  for (const auto& [p, m] : b) {
    DescSet d = des_set(p);
    if (!is_mu_modal_desset(d, mu)) continue;
    int extra = std::popcount(d.bits() & ~smu);
    if (extra % 2 == 0) {
      total += m;
    } else {
      total -= m;
    }
  }
  return total;
}

/// s_{lambda/mu} (or any skew shape) via its tableaux.
inline SchurExpansion schur_of_shape(const SkewShape& s) { return expect_symmetric(qsym_of_tableaux(s)); }

/// h_mu = h_{mu_1} h_{mu_2} ..., through F-products of single-row functions.
inline SchurExpansion complete_homogeneous(const Composition& mu) {
  QSym prod(0);
  prod.coeff_at(0) = 1;
  for (int part : mu.parts()) prod = qsym_mul(prod, QSym::fundamental(DescSet(part, 0)));
  return expect_symmetric(prod);
}

/// The Schur function of the ribbon Z_{n,J}.
inline SchurExpansion ribbon_schur(int n, const DescSet& j) { return schur_of_shape(ribbon_shape(n, j)); }

}  // namespace finesets

#endif  // FINESETS_SCHUR_HPP
