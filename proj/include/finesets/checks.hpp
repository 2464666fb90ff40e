#ifndef FINESETS_CHECKS_HPP
#define FINESETS_CHECKS_HPP

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "finesets/grid.hpp"
#include "finesets/permset.hpp"
#include "finesets/report.hpp"
#include "finesets/schur.hpp"
#include "finesets/tableau.hpp"

namespace finesets {

struct NamedSet {
  std::string label;
  PermMultiset set;
};

namespace checks_detail {

inline std::string schur_text(const QSym& q) {
  SchurResult r = schur_expand(q);
  if (auto* e = std::get_if<SchurExpansion>(&r)) return e->to_string();
  return std::get<NotSymmetric>(r).to_string();
}

inline std::string verdict(const QSym& q) {
  SchurResult r = schur_expand(q);
  if (auto* e = std::get_if<SchurExpansion>(&r)) return is_schur_positive(*e) ? "fine" : "symmetric, not Schur-positive";
  return "not symmetric";
}

inline SchurExpansion hook(int n, int legs) { return SchurExpansion::single(Partition::hook(n - legs, legs)); }

inline SchurExpansion term(const std::vector<int>& alpha, long c = 1) {
  int n = 0;
  for (int a : alpha) n += a;
  SchurExpansion e(n);
  e.add_straightened(alpha, c);
  return e;
}

inline std::vector<int> with_ones(std::vector<int> head, int ones) {
  head.insert(head.end(), ones, 1);
  return head;
}

inline std::vector<DescSet> sets_of_size(int n, int k) {
  std::vector<DescSet> out;
  for (const DescSet& d : all_desc_sets(n)) {
    if (d.size() == k) out.push_back(d);
  }
  return out;
}

inline std::vector<SignVector> sign_vectors_up_to(int len) {
  std::vector<SignVector> out;
  for (int l = 1; l <= len; ++l) {
    for (int mask = 0; mask < (1 << l); ++mask) {
      SignVector v;
      for (int i = 0; i < l; ++i) v.push_back(((mask >> i) & 1) ? -1 : 1);
      out.push_back(v);
    }
  }
  return out;
}

/// Lehmer rank of a permutation, used for set products stored as bitmaps over S_n.
inline std::size_t perm_rank(const std::uint8_t* w, int n) {
  std::size_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = std::popcount(~used & ((std::uint32_t{1} << w[i]) - 2));
    r = r * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
    used |= std::uint32_t{1} << w[i];
  }
  return r;
}

inline std::vector<bool> rank_mask(const PermMultiset& a) {
  int n = a.degree();
  std::size_t total = 1;
  for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
  std::vector<bool> mask(total, false);
  for (const auto& [p, m] : a) mask[perm_rank(p.values().data(), n)] = true;
  return mask;
}

/// Bitmap of the set product {pq}.
inline std::vector<bool> set_product_mask(const PermMultiset& a, const PermMultiset& b) {
  int n = a.degree();
  if (b.degree() != n) throw DegreeMismatch(n, b.degree());
  std::size_t total = 1;
  for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
  std::vector<bool> mask(total, false);
  std::array<std::uint8_t, kMaxDegree> w{};
  for (const auto& [p, mp] : a) {
    auto pv = p.values();
    for (const auto& [q, mq] : b) {
      auto qv = q.values();
      for (int i = 0; i < n; ++i) w[i] = pv[qv[i] - 1];
      mask[perm_rank(w.data(), n)] = true;
    }
  }
  return mask;
}

inline std::string mask_text(const std::vector<bool>& mask) {
  std::size_t count = 0;
  std::string bits;
  bits.reserve(mask.size());
  for (bool b : mask) {
    bits.push_back(b ? '1' : '0');
    count += b ? 1 : 0;
  }
  return std::to_string(count) + " elements, sha256:" + sha256_hex(bits).substr(0, 16);
}

/// G_n(M_k) from the inverse cyclic descent predicate.
inline PermMultiset cyclic_descent_class(int k, int n) {
  return filter_sn(n, [k](const Permutation& p) { return in_cyclic_descent_class(k, p); });
}

/// G^v_n from the subsequence predicate.
inline PermMultiset one_column_class(const SignVector& v, int n) {
  return filter_sn(n, [&v](const Permutation& p) { return in_one_column(v, p); });
}

}  // namespace checks_detail

/// Knuth classes, conjugacy classes, fixed inversion number sets and colayered classes of S_n.
inline std::vector<NamedSet> fine_battery(int n) {
  std::vector<NamedSet> out;
  for (auto& [t, cls] : all_knuth_classes(n)) out.push_back({"knuth " + cls.begin()->first.to_string(), cls});
  for (const Partition& type : partitions_of(n)) out.push_back({"conj " + type.to_string(), conjugacy_class(type)});
  for (int k = 0; k <= n * (n - 1) / 2; ++k) out.push_back({"inv " + std::to_string(k), fixed_inversions(n, k)});
  for (int k = 1; k <= n; ++k) out.push_back({"colayer " + std::to_string(k), enumerate_grid(identity_matrix(k), n)});
  return out;
}

/// Grids used by the reflection and rotation checks.
inline std::vector<GridMatrix> sample_grids() {
  std::vector<GridMatrix> out;
  for (const SignVector& v : checks_detail::sign_vectors_up_to(3)) out.push_back(one_column_matrix(v));
  for (int k = 2; k <= 3; ++k) out.push_back(identity_matrix(k));
  out.push_back(cyclic_descent_matrix(2));
  out.push_back(named_grids::arc_first());
  out.push_back(named_grids::arc_second());
  out.push_back(named_grids::j_class());
  out.push_back(named_grids::k_class());
  out.push_back(named_grids::figure_one());
  out.push_back(GridMatrix::parse("+-"));
  out.push_back(GridMatrix::parse("-+"));
  out.push_back(GridMatrix::parse("++/+0"));
  return out;
}

/// Expected Schur expansions of named families.
namespace closed_forms {

inline SchurExpansion cyclic(int n) {
  SchurExpansion e = checks_detail::hook(n, 0);
  if (n >= 2) e += checks_detail::hook(n, 1);
  return e;
}

inline SchurExpansion colayered(int n, int k) {
  SchurExpansion e(n);
  for (int i = 1; i <= std::min(k, n); ++i) e += checks_detail::hook(n, i - 1);
  return e;
}

inline SchurExpansion plus_plus(int n) {
  SchurExpansion e = checks_detail::hook(n, 0);
  for (int a = 1; a <= n / 2; ++a) e += checks_detail::term({n - a, a}, n - 2 * a + 1);
  return e;
}

inline SchurExpansion left_unimodal(int n) { return colayered(n, n); }

inline SchurExpansion arc(int n) {
  using checks_detail::term;
  using checks_detail::with_ones;
  SchurExpansion e = checks_detail::hook(n, 0) + checks_detail::hook(n, n - 1);
  for (int k = 2; k <= n - 2; ++k) e += term(with_ones({n - k, 2}, k - 2));
  for (int k = 1; k <= n - 2; ++k) e += 2 * checks_detail::hook(n, k);
  return e;
}

inline SchurExpansion two_cyclic(int n) {
  using checks_detail::term;
  SchurExpansion e = checks_detail::hook(n, 0);
  if (n >= 2) e += mpq_class(n - 1) * checks_detail::hook(n, 1);
  for (int a = 2; a <= n / 2 - 1; ++a) e += term({n - a, a}, 2 * n - 4 * a + 2);
  for (int a = 1; a <= (n - 1) / 2; ++a) e += term({n - a - 1, a, 1}, n - 2 * a);
  if (n >= 4 && n % 2 == 0) e += term({n / 2, n / 2}, 2);
  if (n >= 5 && n % 2 == 1) e += term({(n + 1) / 2, (n - 1) / 2}, 4);
  return e;
}

inline SchurExpansion j_class(int n) {
  using checks_detail::term;
  SchurExpansion e = checks_detail::hook(n, 0);
  for (int a = 1; a <= n / 2; ++a) e += term({n - a, a}, n - 2 * a + 1);
  for (int a = 1; a <= (n - 1) / 2; ++a) e += term({n - a - 1, a, 1}, n - 2 * a);
  return e;
}

inline SchurExpansion k_class(int n) {
  using checks_detail::term;
  using checks_detail::with_ones;
  SchurExpansion e = checks_detail::hook(n, 0) + checks_detail::hook(n, n - 1);
  for (int k = 1; k <= n - 2; ++k) e += 2 * checks_detail::hook(n, k);
  for (int k = 1; k <= n - 3; ++k) e += term(with_ones({n - k - 1, 2}, k - 1), 2);
  return e;
}

/// Rotation of the k-th colayer difference of degree n-1.
inline SchurExpansion rotated_colayer_layer(int n, int k) {
  using checks_detail::term;
  using checks_detail::with_ones;
  return term(with_ones({n - k}, k)) + term(with_ones({n - k + 1}, k - 1)) + term(with_ones({n - k, 2}, k - 2));
}

inline SchurExpansion one_column(int n, const SignVector& v) {
  SchurExpansion e(n);
  for (const DescSet& d : all_desc_sets(n)) {
    SignVector u;
    for (int i = 1; i < n; ++i) u.push_back(d.contains(i) ? 1 : -1);
    std::size_t at = 0;
    for (std::size_t i = 0; i < u.size() && at < v.size(); ++i) {
      if (u[i] == v[at]) ++at;
    }
    if (at < v.size()) e += ribbon_schur(n, d);
  }
  return e;
}

inline mpz_class kj_cardinality(int n) { return mpz_class(mpz_class(n - 2) * (mpz_class(1) << (n - 1)) + 2); }

}  // namespace closed_forms

using CheckFn = std::function<CheckReport(int)>;

struct CheckInfo {
  std::string id;
  std::string summary;
  int min_n;
  int max_n;
  int default_n;
  CheckFn fn;
};

namespace checks_detail {

inline Tally tally(const std::string& id, int n) { return Tally(id, n); }

inline CheckReport descent_class_products(int n, bool rinv) {
  std::string id = rinv ? "thm-main-1" : "thm-main-2";
  Tally t(id, n);
  std::vector<NamedSet> battery = fine_battery(n);
  std::vector<DescSet> js = all_desc_sets(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < battery.size(); ++b) {
    for (std::size_t j = 0; j < js.size(); ++j) pairs.emplace_back(b, j);
  }
  if (!rinv && n >= 6) {
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(pairs.size(), 64));
    std::sort(pairs.begin(), pairs.end());
    t.note("deterministic sample of " + std::to_string(pairs.size()) + " pairs");
  }
  std::vector<std::optional<SchurExpansion>> qb(battery.size());
  for (auto [b, j] : pairs) {
    if (!qb[b]) qb[b] = expect_symmetric(qsym_of(battery[b].set));
    DescentKind kind = rinv ? DescentKind::Rinv : DescentKind::Dinv;
    QSym lhs = product_qsym(battery[b].set, descent_class(n, js[j], kind));
    SchurExpansion other = rinv ? complete_homogeneous(Composition::from_desc_set(js[j])) : ribbon_schur(n, js[j]);
    t.compare(battery[b].label + " J=" + js[j].to_string(), schur_text(lhs), kronecker(*qb[b], other).to_string());
  }
  return t.finish();
}

inline CheckReport vertical_rotation(int n) {
  Tally t("cor-vertical", n);
  for (const DescSet& j : all_desc_sets(n)) {
    QSym lhs = product_qsym(cyclic_group(n), descent_class(n, j, DescentKind::Dinv));
    t.compare("J=" + j.to_string(), schur_text(lhs), pieri_up(pieri_down(ribbon_schur(n, j))).to_string());
  }
  return t.finish();
}

inline CheckReport horizontal_rotation(int n) {
  Tally t("thm-horizontal1", n);
  for (const DescSet& j : all_desc_sets(n - 1)) {
    PermMultiset rotated = product(embed(descent_class(n - 1, j, DescentKind::Dinv), n), cyclic_group(n));
    t.compare("J=" + j.to_string(), schur_text(qsym_of(rotated)), pieri_up(ribbon_schur(n - 1, j)).to_string());
    t.compare("J=" + j.to_string() + " multiplicity-free", rotated.is_set() ? "set" : "multiset", "set");

    PermMultiset domain =
        product(embed(descent_class(n - 1, j, DescentKind::Rinv), n), cyclic_group(n), ProductMode::set);
    SkewShape shape = strip_chain_shape(n, j);
    std::set<std::vector<int>> images;
    std::size_t bad = 0;
    for (const auto& [p, m] : domain) {
      StandardTableau tab = rotation_bijection(p, j);
      if (!(tab.shape() == shape) || syt_des(tab) != des_set(p) || tab.top_right() != inverse(p)(n)) ++bad;
      images.insert(tab.row_reading_word());
    }
    std::size_t syt = enumerate_syt(shape).size();
    t.compare("audit J=" + j.to_string(),
              std::to_string(domain.distinct_size()) + " inputs, " + std::to_string(images.size()) +
                  " distinct images, " + std::to_string(bad) + " bad",
              std::to_string(syt) + " inputs, " + std::to_string(syt) + " distinct images, 0 bad");
  }
  return t.finish();
}

inline CheckReport two_cyclic_formula(int n) {
  Tally t("prop-R2", n);
  t.compare("", schur_text(qsym_of(enumerate_grid(cyclic_descent_matrix(2), n))),
            closed_forms::two_cyclic(n).to_string());
  return t.finish();
}

inline CheckReport cyclic_recurrence(int n) {
  Tally t("eq-recurrence", n);
  PermMultiset prev = cyclic_descent_class(1, n);
  for (int k = 2; k <= n; ++k) {
    PermMultiset cur = cyclic_descent_class(k, n);
    QSym lhs = qsym_of(cur);
    lhs *= mpz_class(k);
    QSym rhs = product_qsym(cyclic_group(n), one_column_class(SignVector(k, 1), n));
    QSym tail = qsym_of(prev);
    tail *= mpz_class(n - k);
    rhs -= tail;
    t.compare("k=" + std::to_string(k), lhs.to_string(), rhs.to_string());
    prev = std::move(cur);
  }
  return t.finish();
}

inline CheckReport rotated_two_shuffles(int n) {
  Tally t("cor-rotated-shuffles2", n);
  for (int k = 1; k <= n; ++k) {
    t.compare("k=" + std::to_string(k), verdict(qsym_of(cyclic_descent_class(k, n))), "fine");
  }
  return t.finish();
}

inline CheckReport cyclic_descent_layers(int n) {
  Tally t("cor-cyc-fine", n);
  for (int k = 1; k <= n - 1; ++k) {
    SchurExpansion want(n);
    for (const DescSet& j : sets_of_size(n - 1, k - 1)) want += pieri_up(ribbon_schur(n - 1, j));
    t.compare("k=" + std::to_string(k), schur_text(qsym_of(fixed_inverse_cyclic_descents(n, k))), want.to_string());
  }
  return t.finish();
}

inline CheckReport left_unimodal_rotation(int n) {
  Tally t("cor-LC-CL", n);
  PermMultiset lc = product(embed(enumerate_grid(named_grids::left_unimodal(), n - 1), n), cyclic_group(n));
  t.compare("", schur_text(qsym_of(lc)), schur_text(qsym_of(filter_sn(n, is_arc))));
  return t.finish();
}

inline CheckReport rotated_colayers(int n) {
  Tally t("cor-hrc", n);
  PermMultiset prev = enumerate_grid(identity_matrix(1), n - 1);
  for (int k = 2; k <= n - 1; ++k) {
    PermMultiset cur = enumerate_grid(identity_matrix(k), n - 1);
    PermMultiset layer(n - 1);
    for (const auto& [p, m] : cur) {
      if (!prev.contains(p)) layer.add(p, m);
    }
    t.compare("k=" + std::to_string(k), schur_text(product_qsym(embed(layer, n), cyclic_group(n))),
              closed_forms::rotated_colayer_layer(n, k).to_string());
    prev = std::move(cur);
  }
  return t.finish();
}

inline CheckReport reflections(int n) {
  Tally t("prop-reflections", n);
  SchurExpansion sign = SchurExpansion::single(Partition(std::vector<int>(n, 1)));
  int skipped = 0;
  for (const GridMatrix& m : sample_grids()) {
    PermMultiset g = enumerate_grid(m, n);
    QSym q = qsym_of(g);
    if (!is_fine(q)) {
      ++skipped;
      continue;
    }
    std::string want = kronecker(sign, expect_symmetric(q)).to_string();
    t.compare(m.to_string() + " reverse", schur_text(qsym_of(enumerate_grid(grid_reverse(m), n))), want);
    t.compare(m.to_string() + " complement", schur_text(qsym_of(enumerate_grid(grid_complement(m), n))), want);
    PermMultiset right = map_elements(g, [&](const Permutation& p) { return compose(p, longest(n)); });
    t.compare(m.to_string() + " times longest", schur_text(qsym_of(right)), want);
  }
  t.note(std::to_string(skipped) + " grids not fine at this degree");
  return t.finish();
}

inline CheckReport rotation_equidistribution(int n) {
  Tally t("cor-equid-rotation", n);
  int skipped = 0;
  for (const GridMatrix& m : sample_grids()) {
    QSym q = qsym_of(enumerate_grid(m, n));
    if (!is_fine(q)) {
      ++skipped;
      continue;
    }
    t.compare(m.to_string(), schur_text(qsym_of(enumerate_grid(grid_rotate180(m), n))), schur_text(q));
  }
  GridMatrix mp = GridMatrix::parse("-+");
  t.compare("-+ at 3", qsym_of(enumerate_grid(mp, 3)).to_string(), "F{} + 2*F{1} + F{1,2}");
  t.compare("-+ rotated at 3", qsym_of(enumerate_grid(grid_rotate180(mp), 3)).to_string(), "F{} + F{1,2} + 2*F{2}");
  t.note(std::to_string(skipped) + " grids not fine at this degree");
  return t.finish();
}

inline CheckReport kj_cardinality(int n) {
  Tally t("kj-cardinality", n);
  std::string want = closed_forms::kj_cardinality(n).get_str();
  t.compare("J", enumerate_grid(named_grids::j_class(), n).cardinality().get_str(), want);
  t.compare("K", enumerate_grid(named_grids::k_class(), n).cardinality().get_str(), want);
  return t.finish();
}

inline CheckReport family_cardinality(int n) {
  Tally t("ll-sh-cardinality", n);
  t.compare("left unimodal", enumerate_grid(named_grids::left_unimodal(), n).cardinality().get_str(),
            mpz_class(mpz_class(1) << (n - 1)).get_str());
  t.compare("++", enumerate_grid(one_column_matrix({1, 1}), n).cardinality().get_str(),
            mpz_class((mpz_class(1) << n) - n).get_str());
  return t.finish();
}

inline CheckReport grid_formula(const std::string& id, int n, const GridMatrix& m, const SchurExpansion& want) {
  Tally t(id, n);
  t.compare("", schur_text(qsym_of(enumerate_grid(m, n))), want.to_string());
  return t.finish();
}

inline CheckReport colayer_hooks(int n) {
  Tally t("colayer-hooks", n);
  PermMultiset prev(n);
  for (int k = 1; k <= n; ++k) {
    PermMultiset cur = enumerate_grid(identity_matrix(k), n);
    t.compare("k=" + std::to_string(k), schur_text(qsym_of(cur)), closed_forms::colayered(n, k).to_string());
    PermMultiset layer(n);
    for (const auto& [p, m] : cur) {
      if (!prev.contains(p)) layer.add(p, m);
    }
    t.compare("layer k=" + std::to_string(k), schur_text(qsym_of(layer)), hook(n, k - 1).to_string());
    prev = std::move(cur);
  }
  t.compare("cycles", schur_text(qsym_of(cyclic_group(n))), closed_forms::cyclic(n).to_string());
  return t.finish();
}

inline CheckReport one_column_zigzags(int n) {
  Tally t("onecol-zigzags", n);
  for (const SignVector& v : sign_vectors_up_to(std::min(n, 4))) {
    t.compare(sign_vector_to_string(v), schur_text(qsym_of(enumerate_grid(one_column_matrix(v), n))),
              closed_forms::one_column(n, v).to_string());
  }
  return t.finish();
}

inline CheckReport one_column_products(int n) {
  Tally t("prop-prod-onecol", n);
  std::vector<GridMatrix> ms = {identity_matrix(2), cyclic_descent_matrix(2), named_grids::figure_one(),
                                GridMatrix::parse("+-"), GridMatrix::parse("-+"), named_grids::arc_first(),
                                one_column_matrix({1, 1, -1, -1})};
  for (const SignVector& v : sign_vectors_up_to(2)) {
    PermMultiset gv = enumerate_grid(one_column_matrix(v), n);
    for (const GridMatrix& m : ms) {
      std::vector<bool> prod = set_product_mask(gv, enumerate_grid(m, n));
      std::vector<bool> stacked = rank_mask(enumerate_grid(stack_matrix(v, m), n));
      t.compare(sign_vector_to_string(v) + " on " + m.to_string(), mask_text(prod), mask_text(stacked));
    }
  }
  return t.finish();
}

inline CheckReport star_products(int n) {
  Tally t("cor-star", n);
  std::vector<SignVector> vs = sign_vectors_up_to(3);
  std::vector<PermMultiset> gs;
  for (const SignVector& v : vs) gs.push_back(one_column_class(v, n));
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = 0; b < vs.size(); ++b) {
      std::vector<bool> prod = set_product_mask(gs[a], gs[b]);
      std::vector<bool> star = rank_mask(one_column_class(star_product(vs[a], vs[b]), n));
      t.compare(sign_vector_to_string(vs[a]) + " * " + sign_vector_to_string(vs[b]), mask_text(prod),
                mask_text(star));
    }
  }
  return t.finish();
}

inline CheckReport horizontal_induction(int n) {
  Tally t("thm-horiz-induction", n);
  for (const NamedSet& b : fine_battery(n - 1)) {
    t.compare(b.label, schur_text(product_qsym(embed(b.set, n), cyclic_group(n))),
              pieri_up(expect_symmetric(qsym_of(b.set))).to_string());
  }
  return t.finish();
}

inline CheckReport arc_grid_alone(int n) {
  Tally t("neg-arc-grid", n);
  QSym q = qsym_of(enumerate_grid(named_grids::arc_first(), n));
  t.compare("", verdict(q), "not symmetric");
  if (auto w = symmetry_witness(q)) t.note(w->to_string());
  return t.finish();
}

inline CheckReport rotated_knuth_pair(int n) {
  Tally t("neg-knuth-rot", n);
  PermMultiset pair = PermMultiset::parse_list(4, {"2143", "2413"});
  t.compare("pair", verdict(qsym_of(pair)), "fine");
  QSym q = product_qsym(cyclic_group(5), embed(pair, 5));
  t.compare("rotated", verdict(q) == "fine" ? "fine" : "not fine", "not fine");
  t.note("rotated pair: " + schur_text(q));
  return t.finish();
}

inline CheckReport negative_stack(int n) {
  Tally t("neg-stack", n);
  GridMatrix m = GridMatrix::parse("+0/0+/0-/-0");
  t.compare("matrix", stack_matrix({-1, 1}, identity_matrix(2)).to_string(), m.to_string());
  PermMultiset g = enumerate_grid(m, n);
  t.compare("set product",
            mask_text(set_product_mask(enumerate_grid(one_column_matrix({-1, 1}), n),
                                       enumerate_grid(identity_matrix(2), n))),
            mask_text(rank_mask(g)));
  QSym q = qsym_of(g);
  t.compare("verdict", verdict(q), "not symmetric");
  if (auto w = symmetry_witness(q)) t.note(w->to_string());
  return t.finish();
}

inline CheckReport small_products(int) {
  Tally t("neg-product", 4);
  PermMultiset a = PermMultiset::parse_list(4, {"2134", "3412", "1243"});
  PermMultiset b = PermMultiset::parse_list(4, {"2143", "3412"});
  t.compare("A", verdict(qsym_of(a)), "fine");
  t.compare("B", verdict(qsym_of(b)), "fine");
  PermMultiset ab = product(a, b);
  t.compare("AB is a set", ab.is_set() ? "yes" : "no", "yes");
  t.compare("AB", verdict(qsym_of(ab)), "symmetric, not Schur-positive");
  t.note("AB: " + schur_text(qsym_of(ab)));
  PermMultiset ball = length_ball(4, 1);
  t.compare("ball", verdict(qsym_of(ball)), "fine");
  t.compare("ball squared", verdict(product_qsym(ball, ball)) == "fine" ? "fine" : "not fine", "not fine");
  PermMultiset ball5 = length_ball(5, 2);
  t.note("S_5 length <= 2 ball: " + verdict(qsym_of(ball5)) + ", squared: " + verdict(product_qsym(ball5, ball5)));
  return t.finish();
}

}  // namespace checks_detail

inline const std::vector<CheckInfo>& check_registry() {
  using namespace checks_detail;
  static const std::vector<CheckInfo> registry = {
      {"thm-main-1", "B times inverse descent classes: Kronecker product with complete homogeneous", 1, 6, 5,
       [](int n) { return descent_class_products(n, true); }},
      {"thm-main-2", "B times exact inverse descent classes: Kronecker product with ribbon", 1, 7, 5,
       [](int n) { return descent_class_products(n, false); }},
      {"cor-vertical", "vertical rotation of inverse descent classes", 1, 9, 6, vertical_rotation},
      {"thm-horizontal1", "horizontal rotation of inverse descent classes, with bijection audit", 2, 8, 7,
       horizontal_rotation},
      {"prop-R2", "closed form for the 2-cyclic descent class", 1, 9, 7, two_cyclic_formula},
      {"eq-recurrence", "recurrence for cyclic descent classes", 2, 9, 7, cyclic_recurrence},
      {"cor-rotated-shuffles2", "every cyclic descent class is fine", 1, 9, 7, rotated_two_shuffles},
      {"cor-cyc-fine", "exact cyclic descent layers as rotated ribbons", 2, 8, 7, cyclic_descent_layers},
      {"cor-LC-CL", "rotated left unimodal permutations equal arc permutations", 2, 9, 7, left_unimodal_rotation},
      {"cor-hrc", "rotated colayered layers", 3, 9, 7, rotated_colayers},
      {"prop-reflections", "reversal and complement twist by the sign character", 1, 7, 6, reflections},
      {"cor-equid-rotation", "rotating a fine grid keeps the distribution", 1, 7, 6, rotation_equidistribution},
      {"kj-cardinality", "sizes of the J and K classes", 2, 12, 8, kj_cardinality},
      {"ll-sh-cardinality", "sizes of left unimodal and ++ classes", 1, 12, 10, family_cardinality},
      {"arc-formula", "closed form for arc permutations", 2, 9, 7,
       [](int n) {
         Tally t("arc-formula", n);
         PermMultiset arcs = multiset_union(enumerate_grid(named_grids::arc_first(), n),
                                            enumerate_grid(named_grids::arc_second(), n))
                                 .underlying_set();
         t.compare("two grids", mask_text(rank_mask(arcs)), mask_text(rank_mask(filter_sn(n, is_arc))));
         t.compare("", schur_text(qsym_of(arcs)), closed_forms::arc(n).to_string());
         return t.finish();
       }},
      {"j-formula", "closed form for the J class", 2, 9, 7,
       [](int n) { return grid_formula("j-formula", n, named_grids::j_class(), closed_forms::j_class(n)); }},
      {"k-formula", "closed form for the K class", 2, 9, 7,
       [](int n) { return grid_formula("k-formula", n, named_grids::k_class(), closed_forms::k_class(n)); }},
      {"qsh-formula", "closed form for the ++ class", 1, 10, 8,
       [](int n) { return grid_formula("qsh-formula", n, one_column_matrix({1, 1}), closed_forms::plus_plus(n)); }},
      {"ll-formula", "closed form for left unimodal permutations", 1, 10, 8,
       [](int n) {
         return grid_formula("ll-formula", n, named_grids::left_unimodal(), closed_forms::left_unimodal(n));
       }},
      {"colayer-hooks", "colayered classes and their layers are hooks", 1, 9, 7, colayer_hooks},
      {"onecol-zigzags", "one-column classes as sums of ribbons", 1, 8, 7, one_column_zigzags},
      {"prop-prod-onecol", "one-column class times a grid class is the stacked grid", 1, 7, 6, one_column_products},
      {"cor-star", "products of one-column classes follow the star product", 1, 7, 6, star_products},
      {"thm-horiz-induction", "horizontal rotation acts as Pieri on the fine battery", 2, 7, 6,
       horizontal_induction},
      {"neg-arc-grid", "a single arc grid is not symmetric", 4, 7, 4, arc_grid_alone},
      {"neg-knuth-rot", "rotating a Knuth class need not stay fine", 5, 5, 5, rotated_knuth_pair},
      {"neg-stack", "stacked grid with a negative column is not symmetric", 6, 7, 6, negative_stack},
      {"neg-product", "products of fine sets need not be fine", 4, 4, 4, small_products},
      {"arc-rotation", "arc permutations are rotated left unimodal permutations", 1, 8, 7,
       [](int n) {
         Tally t("arc-rotation", n);
         std::vector<bool> prod =
             set_product_mask(cyclic_group(n), enumerate_grid(named_grids::left_unimodal(), n));
         t.compare("", mask_text(prod), mask_text(rank_mask(filter_sn(n, is_arc))));
         return t.finish();
       }},
  };
  return registry;
}

inline const CheckInfo& find_check(const std::string& id) {
  for (const CheckInfo& c : check_registry()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown check '" + id + "'");
}

/// Runs a named check. Degrees above the declared budget give a resource-skipped report.
inline CheckReport run_check(const std::string& id, int n) {
  const CheckInfo& c = find_check(id);
  if (n < c.min_n) {
    throw DomainError("check " + id + " needs n >= " + std::to_string(c.min_n));
  }
  CheckReport skipped{id, n, CheckStatus::resource_skipped, "", "", 0, ""};
  if (n > c.max_n) {
    skipped.notes = "n=" + std::to_string(n) + " exceeds the budget of this check (max " + std::to_string(c.max_n) + ")";
    return skipped;
  }
  try {
    return c.fn(n);
  } catch (const ResourceError& e) {
    skipped.notes = e.what();
    return skipped;
  }
}

}  // namespace finesets

#endif  // FINESETS_CHECKS_HPP
