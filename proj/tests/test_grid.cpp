#include <gtest/gtest.h>

#include <random>

#include "finesets/grid.hpp"
#include "finesets/permset.hpp"
#include "finesets/qsym.hpp"
#include "oracles.hpp"

using namespace finesets;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

PermMultiset filtered(int n, const std::function<bool(const Permutation&)>& pred) { return filter_sn(n, pred); }

std::vector<SignVector> sign_vectors_up_to(int len) {
  std::vector<SignVector> out;
  for (int l = 1; l <= len; ++l) {
    for (int mask = 0; mask < (1 << l); ++mask) {
      SignVector v;
      for (int i = 0; i < l; ++i) v.push_back((mask >> i) & 1 ? 1 : -1);
      out.push_back(v);
    }
  }
  return out;
}

GridMatrix random_matrix(std::mt19937_64& rng, int max_rows, int max_cols) {
  for (;;) {
    int r = 1 + static_cast<int>(rng() % max_rows);
    int c = 1 + static_cast<int>(rng() % max_cols);
    std::vector<int> e(r * c);
    bool nonzero = false;
    for (int& x : e) {
      x = static_cast<int>(rng() % 3) - 1;
      nonzero = nonzero || x != 0;
    }
    if (nonzero) return GridMatrix(r, c, e);
  }
}

Permutation delete_point(const Permutation& p, int i) {
  std::vector<int> w = p.word();
  w.erase(w.begin() + i);
  return standardize(w);
}

const std::vector<GridMatrix>& sample_matrices() {
  static const std::vector<GridMatrix> v = [] {
    std::vector<GridMatrix> out{named_grids::figure_one(), named_grids::arc_first(), named_grids::arc_second(),
                                named_grids::j_class(),    named_grids::k_class(),   named_grids::left_unimodal(),
                                GridMatrix::parse("++/+-"), GridMatrix::parse("-+"), cyclic_descent_matrix(2),
                                identity_matrix(3)};
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 12; ++i) out.push_back(random_matrix(rng, 3, 3));
    return out;
  }();
  return v;
}

}  // namespace

TEST(GridMatrix, ParseAndPrint) {
  GridMatrix m = GridMatrix::parse("0+/-0/+-");
  EXPECT_EQ(m.rows(), 3);
  EXPECT_EQ(m.cols(), 2);
  EXPECT_EQ(m.at(0, 1), 1);
  EXPECT_EQ(m.at(1, 0), -1);
  EXPECT_EQ(m.to_string(), "0+/-0/+-");
  EXPECT_THROW(GridMatrix::parse("0+/-"), DomainError);
  EXPECT_THROW(GridMatrix::parse("00/00"), DomainError);
  try {
    GridMatrix::parse("0+/x0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(GridMatrix, NamedAndBuiltMatrices) {
  EXPECT_EQ(identity_matrix(2).to_string(), "+0/0+");
  EXPECT_EQ(cyclic_descent_matrix(1).to_string(), "+0/0+");
  EXPECT_EQ(cyclic_descent_matrix(2).to_string(), "+0/0+/+0/0+");
  EXPECT_EQ(one_column_matrix(parse_sign_vector("-+")).to_string(), "+/-");
  EXPECT_EQ(one_column_matrix(parse_sign_vector("-+")), named_grids::left_unimodal());
  EXPECT_EQ(sign_vector_to_string(parse_sign_vector("+--")), "+--");
}

TEST(EnumerateGrid, ColayeredExample) {
  EXPECT_EQ(enumerate_grid(identity_matrix(2), 5),
            PermMultiset::parse_list(5, {"12345", "51234", "45123", "34512", "23451"}));
}

TEST(EnumerateGrid, FigureOneContainsExample) {
  PermMultiset g = enumerate_grid(named_grids::figure_one(), 8);
  EXPECT_TRUE(g.contains(P("62354781")));
  EXPECT_TRUE(g.is_set());
}

TEST(EnumerateGrid, FirstCyclicDescentClassIsCyclicGroup) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(enumerate_grid(cyclic_descent_matrix(1), n), cyclic_group(n)) << n;
}

TEST(Membership, ArcExamples) {
  EXPECT_TRUE(is_arc(P("12543")));
  EXPECT_FALSE(is_arc(P("125436")));
}

TEST(Membership, OneColumnExample) {
  PermMultiset removed(5);
  for (std::vector<int> j : std::vector<std::vector<int>>{{2, 3}, {2, 4}, {3, 4}, {1, 3, 4}, {2, 3, 4}}) {
    removed = multiset_union(removed, descent_class(5, DescSet::from_members(5, j), DescentKind::Dinv));
  }
  EXPECT_TRUE(removed.is_set());
  PermMultiset g = enumerate_grid(one_column_matrix(parse_sign_vector("-++")), 5);
  EXPECT_EQ(g.cardinality() + removed.cardinality(), 120);
  for (const Permutation& p : all_permutations(5)) {
    ASSERT_NE(g.contains(p), removed.contains(p)) << p.to_string();
  }
}

TEST(Membership, EnumerationAgreesWithOneColumnPredicate) {
  for (const SignVector& v : sign_vectors_up_to(4)) {
    int max_n = v.size() <= 2 ? 9 : 7;
    for (int n = 1; n <= max_n; ++n) {
      ASSERT_EQ(enumerate_grid(one_column_matrix(v), n), filtered(n, [&](const Permutation& p) {
                  return in_one_column(v, p);
                })) << sign_vector_to_string(v) << " n=" << n;
    }
  }
}

TEST(Membership, EnumerationAgreesWithNamedPredicates) {
  for (int k = 1; k <= 3; ++k) {
    SignVector plus(k, 1), minus(k, -1);
    for (int n = 1; n <= 7; ++n) {
      ASSERT_EQ(enumerate_grid(one_column_matrix(plus), n),
                filtered(n, [&](const Permutation& p) { return in_plus_k(k, p); }));
      ASSERT_EQ(enumerate_grid(one_column_matrix(minus), n),
                filtered(n, [&](const Permutation& p) { return in_minus_k(k, p); }));
      ASSERT_EQ(enumerate_grid(cyclic_descent_matrix(k), n),
                filtered(n, [&](const Permutation& p) { return in_cyclic_descent_class(k, p); }))
          << "k=" << k << " n=" << n;
      ASSERT_EQ(enumerate_grid(identity_matrix(k), n),
                filtered(n, [&](const Permutation& p) { return in_colayered(k, p); }))
          << "k=" << k << " n=" << n;
    }
  }
  for (int n = 1; n <= 9; ++n) {
    ASSERT_EQ(enumerate_grid(named_grids::left_unimodal(), n), filtered(n, in_left_unimodal));
  }
  for (int n = 1; n <= 7; ++n) {
    PermMultiset arc = multiset_union(enumerate_grid(named_grids::arc_first(), n),
                                      enumerate_grid(named_grids::arc_second(), n))
                           .underlying_set();
    ASSERT_EQ(arc, filtered(n, is_arc)) << n;
  }
}

TEST(EnumerateGrid, BlowupAndWordEnumerationAgree) {
  for (const GridMatrix& m : sample_matrices()) {
    for (int n = 1; n <= 5; ++n) {
      PermMultiset g = enumerate_grid(m, n);
      ASSERT_EQ(enumerate_grid(m, n, GridOptions{true}), g) << m.to_string() << " n=" << n;
      if (n <= 4) {
        ASSERT_EQ(enumerate_grid_words(m, n), g) << m.to_string() << " n=" << n;
        ASSERT_EQ(enumerate_grid_words(m, n, true), g) << m.to_string() << " n=" << n;
      }
    }
  }
}

TEST(EnumerateGrid, PatternClosed) {
  for (const GridMatrix& m : sample_matrices()) {
    PermMultiset big = enumerate_grid(m, 6);
    PermMultiset small = enumerate_grid(m, 5);
    for (const auto& [p, mult] : big) {
      for (int i = 0; i < 6; ++i) ASSERT_TRUE(small.contains(delete_point(p, i))) << m.to_string() << " " << p.to_string();
    }
  }
}

TEST(EnumerateGrid, CyclicDescentInclusionChain) {
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= 7; ++n) {
      PermMultiset lower = enumerate_grid(cyclic_descent_matrix(k - 1), n);
      PermMultiset mid = enumerate_grid(one_column_matrix(SignVector(k, 1)), n);
      PermMultiset upper = enumerate_grid(cyclic_descent_matrix(k), n);
      for (const auto& [p, m] : lower) ASSERT_TRUE(mid.contains(p));
      for (const auto& [p, m] : mid) ASSERT_TRUE(upper.contains(p));
    }
  }
}

TEST(EnumerateGrid, Cardinalities) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(enumerate_grid(named_grids::left_unimodal(), n).cardinality(), mpz_class(1) << (n - 1));
    EXPECT_EQ(enumerate_grid(one_column_matrix({1, 1}), n).cardinality(), (mpz_class(1) << n) - n);
  }
  for (int n = 2; n <= 8; ++n) {
    mpz_class want = mpz_class(n - 2) * (mpz_class(1) << (n - 1)) + 2;
    EXPECT_EQ(enumerate_grid(named_grids::j_class(), n).cardinality(), want) << n;
    EXPECT_EQ(enumerate_grid(named_grids::k_class(), n).cardinality(), want) << n;
  }
}

TEST(EnumerateGrid, OneColumnIsUnionOfInverseDescentClasses) {
  for (const SignVector& v : sign_vectors_up_to(4)) {
    for (int n = 2; n <= 7; ++n) {
      PermMultiset g = enumerate_grid(one_column_matrix(v), n);
      PermMultiset complement(n);
      for (const DescSet& j : all_desc_sets(n)) {
        // u_i = + exactly on J; does u contain v as a subsequence?
        std::size_t matched = 0;
        for (int i = 1; i < n && matched < v.size(); ++i) {
          if ((j.contains(i) ? 1 : -1) == v[matched]) ++matched;
        }
        if (matched == v.size()) complement = multiset_union(complement, descent_class(n, j, DescentKind::Dinv));
      }
      ASSERT_TRUE(complement.is_set());
      for (const Permutation& p : all_permutations(n)) ASSERT_NE(g.contains(p), complement.contains(p));
    }
  }
}

TEST(EnumerateGrid, ResourceGuards) {
  EXPECT_THROW(enumerate_grid(named_grids::figure_one(), 8, GridOptions{false, 100}), ResourceError);
  EXPECT_THROW(enumerate_grid_words(named_grids::figure_one(), 14), ResourceError);
  EXPECT_THROW(enumerate_grid(named_grids::figure_one(), 0), DomainError);
  EXPECT_THROW(enumerate_grid(named_grids::figure_one(), kMaxDegree + 1), DomainError);
}

TEST(Transforms, Involutive) {
  for (const GridMatrix& m : sample_matrices()) {
    EXPECT_EQ(grid_complement(grid_complement(m)), m);
    EXPECT_EQ(grid_reverse(grid_reverse(m)), m);
    EXPECT_EQ(grid_rotate180(grid_rotate180(m)), m);
    EXPECT_EQ(grid_inverse(grid_inverse(m)), m);
  }
}

TEST(Transforms, ClassesOfTransformedMatrices) {
  for (const GridMatrix& m : sample_matrices()) {
    for (int n = 1; n <= 5; ++n) {
      PermMultiset g = enumerate_grid(m, n);
      Permutation w0 = longest(n);
      ASSERT_EQ(enumerate_grid(grid_complement(m), n), map_elements(g, [&](const Permutation& p) {
                  return compose(w0, p);
                })) << m.to_string();
      ASSERT_EQ(enumerate_grid(grid_reverse(m), n), map_elements(g, [&](const Permutation& p) {
                  return compose(p, w0);
                })) << m.to_string();
      ASSERT_EQ(enumerate_grid(grid_rotate180(m), n), map_elements(g, [&](const Permutation& p) {
                  return compose(compose(w0, p), w0);
                })) << m.to_string();
      ASSERT_EQ(enumerate_grid(grid_inverse(m), n), inverse_multiset(g)) << m.to_string();
    }
  }
}

TEST(Transforms, RotatedSingleRowDiffersAtThree) {
  GridMatrix m = GridMatrix::parse("-+");
  EXPECT_EQ(grid_rotate180(m).to_string(), "+-");
  QSym a = qsym_of(enumerate_grid(m, 3));
  QSym b = qsym_of(enumerate_grid(grid_rotate180(m), 3));
  EXPECT_EQ(a.to_string(), "F{} + 2*F{1} + F{1,2}");
  EXPECT_NE(a, b);
}

TEST(Stack, Examples) {
  GridMatrix m = named_grids::figure_one();
  EXPECT_EQ(stack_matrix({1}, m), m);
  EXPECT_EQ(stack_matrix({-1}, m), grid_complement(m));
  EXPECT_EQ(stack_matrix({-1, 1}, GridMatrix::parse("+")), one_column_matrix({-1, 1}));
  EXPECT_EQ(stack_matrix({1, -1}, identity_matrix(2)).to_string(), "0-/-0/+0/0+");
}

TEST(Stack, StarProductExamples) {
  EXPECT_EQ(sign_vector_to_string(star_product(parse_sign_vector("-+"), parse_sign_vector("+--"))), "++-+--");
  for (const SignVector& v : sign_vectors_up_to(4)) {
    EXPECT_EQ(star_product(v, {1}), v);
    EXPECT_EQ(star_product({1}, v), v);
  }
}

TEST(Stack, ProductWithOneColumnIsStackedGrid) {
  std::vector<std::pair<SignVector, GridMatrix>> cases{
      {{-1, 1}, identity_matrix(2)},       {{1, -1}, named_grids::figure_one()}, {{-1}, GridMatrix::parse("+-")},
      {{1, 1, -1}, GridMatrix::parse("+")}, {{-1, 1}, cyclic_descent_matrix(1)}};
  std::mt19937_64 rng(12);
  for (int i = 0; i < 4; ++i) {
    SignVector v;
    int len = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < len; ++t) v.push_back(rng() % 2 ? 1 : -1);
    cases.emplace_back(v, random_matrix(rng, 2, 2));
  }
  for (const auto& [v, m] : cases) {
    for (int n = 1; n <= 6; ++n) {
      PermMultiset lhs = product(enumerate_grid(one_column_matrix(v), n), enumerate_grid(m, n), ProductMode::set);
      ASSERT_EQ(lhs, enumerate_grid(stack_matrix(v, m), n)) << sign_vector_to_string(v) << " " << m.to_string();
    }
  }
}

TEST(Stack, OneColumnProductExample) {
  PermMultiset lhs = product(enumerate_grid(one_column_matrix(parse_sign_vector("-+")), 7),
                             enumerate_grid(one_column_matrix(parse_sign_vector("+--")), 7), ProductMode::set);
  EXPECT_EQ(lhs, enumerate_grid(one_column_matrix(parse_sign_vector("++-+--")), 7));
}
