#include <gtest/gtest.h>

#include <map>
#include <set>

#include "finesets/permset.hpp"
#include "finesets/shuffle.hpp"
#include "finesets/tableau.hpp"
#include "oracles.hpp"

using namespace finesets;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<int> row_lengths_bottom_up(const SkewShape& s) {
  std::vector<int> out;
  for (int r = s.rows() - 1; r >= 0; --r) out.push_back(s.row_length(r));
  return out;
}

}  // namespace

TEST(Partition, BasicsAndOrder) {
  std::vector<std::string> got;
  for (const Partition& p : partitions_of(4)) got.push_back(p.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"}));
  EXPECT_EQ(partitions_of(10).size(), 42u);
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition({2, 2, 1}).centralizer_order(), 8);
  EXPECT_EQ(Partition({1, 1, 1}).centralizer_order(), 6);
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_EQ(Partition::parse("3,2,1"), Partition({3, 2, 1}));
  EXPECT_EQ(Partition::parse("321"), Partition({3, 2, 1}));
}

TEST(Partition, HookLengthAgreesWithBranching) {
  for (int n = 1; n <= 10; ++n) {
    for (const Partition& p : partitions_of(n)) ASSERT_EQ(p.num_syt(), oracle::syt_count(p.parts()));
  }
}

TEST(Partition, Straighten) {
  // (1,2) = s_{1,2} vanishes; (1,3) = -s_{2,2}; (3,1) unchanged
  EXPECT_EQ(straighten({1, 2}).sign, 0);
  auto s = straighten({1, 3});
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.shape, Partition({2, 2}));
  EXPECT_EQ(straighten({3, 1}).shape, Partition({3, 1}));
  EXPECT_EQ(straighten({3, 1}).sign, 1);
  EXPECT_EQ(straighten({1, 2, 1, 1}).sign, 0);
  EXPECT_EQ(straighten({2, 0}).shape, Partition({2}));
}

TEST(RibbonShape, Examples) {
  SkewShape z = ribbon_shape(9, DescSet::from_members(9, {1, 3, 5, 6}));
  EXPECT_EQ(row_lengths_bottom_up(z), (std::vector<int>{1, 2, 2, 1, 3}));
  EXPECT_EQ(z.size(), 9);
  EXPECT_EQ(ribbon_shape(5, DescSet(5, 0)), SkewShape(Partition({5})));
  EXPECT_EQ(ribbon_shape(4, DescSet::full(4)), SkewShape(Partition({1, 1, 1, 1})));
}

TEST(StripChainShape, Examples) {
  SkewShape l = strip_chain_shape(5, DescSet::from_members(4, {1}));
  EXPECT_EQ(l.outer(), Partition({5, 4, 1}));
  EXPECT_EQ(l.inner(), Partition({4, 1}));
  EXPECT_EQ(row_lengths_bottom_up(l), (std::vector<int>{1, 3, 1}));
  EXPECT_EQ(row_lengths_bottom_up(strip_chain_shape(6, DescSet(5, 0))), (std::vector<int>{5, 1}));
  SkewShape stair = strip_chain_shape(5, DescSet::full(4));
  EXPECT_EQ(row_lengths_bottom_up(stair), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(stair.outer(), Partition({5, 4, 3, 2, 1}));
}

TEST(Syt, CountsAndOrder) {
  EXPECT_EQ(enumerate_syt(SkewShape(Partition({5}))).size(), 1u);
  EXPECT_EQ(enumerate_syt(SkewShape(Partition({2, 2}))).size(), 2u);
  auto t32 = enumerate_syt(SkewShape(Partition({3, 2})));
  ASSERT_EQ(t32.size(), 5u);
  EXPECT_EQ(t32.front().to_string(), "1 2 3 / 4 5");
  EXPECT_EQ(t32.back().to_string(), "1 3 5 / 2 4");
  for (int n = 1; n <= 8; ++n) {
    for (const Partition& p : partitions_of(n)) {
      ASSERT_EQ(mpz_class(enumerate_syt(SkewShape(p)).size()), p.num_syt());
    }
  }
}

TEST(Syt, DescentSets) {
  StandardTableau t = StandardTableau::from_rows({{1, 3, 5, 8}, {2, 4, 7}, {6}});
  EXPECT_EQ(syt_des(t).members(), (std::vector<int>{1, 3, 5}));
  EXPECT_TRUE(syt_des(StandardTableau::from_rows({{1, 2, 3}})).empty());
  EXPECT_EQ(syt_des(StandardTableau::from_rows({{1}, {2}, {3}})), DescSet::full(3));
  EXPECT_THROW(StandardTableau::from_rows({{2, 1}}), DomainError);
  EXPECT_THROW(StandardTableau::from_rows({{1, 2}, {3, 4}, {5, 6, 7}}), DomainError);
}

TEST(Syt, RibbonReadingWordsAreDescentClasses) {
  for (int n = 1; n <= 7; ++n) {
    for (const DescSet& j : all_desc_sets(n)) {
      std::set<Permutation> words;
      std::map<std::uint32_t, int> tab_des;
      for (const StandardTableau& t : enumerate_syt(ribbon_shape(n, j))) {
        Permutation w = Permutation::from_word(t.southwest_reading_word());
        words.insert(w);
        ASSERT_EQ(des_set(w), j);
        ASSERT_EQ(syt_des(t), des_set(inverse(w)));
      }
      std::size_t count = 0;
      for_each_permutation(n, [&](const Permutation& p) { count += des_set(p) == j ? 1 : 0; });
      ASSERT_EQ(words.size(), count);
    }
  }
}

TEST(Rsk, Examples) {
  auto [p, q] = rsk(P("231"));
  EXPECT_EQ(p.to_string(), "1 3 / 2");
  EXPECT_EQ(q.to_string(), "1 2 / 3");
  EXPECT_EQ(rsk(Permutation::identity(4)).first.to_string(), "1 2 3 4");
  EXPECT_EQ(rsk(P("2143")).first, rsk(P("2413")).first);
  EXPECT_EQ(rsk(P("2143")).first.to_string(), "1 3 / 2 4");
}

TEST(Rsk, BijectionAndDescentIdentities) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<std::string, std::string>> pairs;
    for_each_permutation(n, [&](const Permutation& w) {
      auto [p, q] = rsk(w);
      ASSERT_EQ(p.shape(), q.shape());
      ASSERT_EQ(syt_des(q), des_set(w));
      ASSERT_EQ(syt_des(p), des_set(inverse(w)));
      ASSERT_EQ(rsk_inverse(p, q), w);
      pairs.emplace(p.to_string(), q.to_string());
    });
    mpz_class total = 0;
    for (const Partition& l : partitions_of(n)) total += l.num_syt() * l.num_syt();
    ASSERT_EQ(mpz_class(pairs.size()), total);
  }
}

TEST(KnuthClass, Examples) {
  EXPECT_EQ(knuth_class(StandardTableau::from_rows({{1, 3}, {2, 4}})), PermMultiset::parse_list(4, {"2143", "2413"}));
  EXPECT_EQ(knuth_class(StandardTableau::from_rows({{1, 2, 3, 4}})), PermMultiset::parse_list(4, {"1234"}));
  PermMultiset five = knuth_class(StandardTableau::from_rows({{1, 2, 4}, {3, 5}}));
  EXPECT_EQ(five.distinct_size(), 5u);
  EXPECT_EQ(five, filter_sn(5, [](const Permutation& p) {
              return rsk(p).first == StandardTableau::from_rows({{1, 2, 4}, {3, 5}});
            }));
  SkewShape skew(Partition({2, 1}), Partition({1}));
  EXPECT_THROW(knuth_class(StandardTableau(skew, {{1}, {2}})), DomainError);
}

TEST(KnuthClass, AgreesWithMoveClosure) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [t, cls] : all_knuth_classes(n)) {
      auto closure = oracle::knuth_closure(cls.begin()->first.word());
      ASSERT_EQ(closure.size(), cls.distinct_size());
      for (const auto& w : closure) ASSERT_TRUE(cls.contains(Permutation::from_word(w)));
    }
  }
}

TEST(ShuffleRecordingMap, WorkedExample) {
  StandardTableau f = shuffle_recording_map(P("16783245"), 3);
  EXPECT_EQ(f.to_string(), "· · 2 3 4 / · · 7 8 / 1 5 / 6");
  EXPECT_EQ(syt_des(f), des_set(P("16783245")));
}

TEST(ShuffleRecordingMap, DegenerateSplits) {
  Permutation p = P("31524");
  EXPECT_EQ(shuffle_recording_map(p, 0).rows(), rsk(p).second.rows());
  EXPECT_EQ(shuffle_recording_map(p, 5).rows(), rsk(p).second.rows());
}

// Shuffles of Knuth classes are Knuth-closed, and their descent distribution
// is that of the two-component shape.
TEST(ShuffleRecordingMap, KnuthClassShufflesMatchTwoComponentShapes) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const Partition& mu : partitions_of(k)) {
        for (const Partition& nu : partitions_of(n - k)) {
          StandardTableau ta = enumerate_syt(SkewShape(mu)).front();
          StandardTableau tb = enumerate_syt(SkewShape(nu)).back();
          PermMultiset a = knuth_class(ta);
          PermMultiset b = knuth_class(tb);
          PermMultiset s = shuffles(LetteredMultiset::shifted(a, 0), LetteredMultiset::shifted(b, k));
          std::map<std::uint32_t, long> lhs, rhs;
          std::set<std::vector<int>> images;
          for (const auto& [p, m] : s) {
            lhs[des_set(p).bits()] += m.get_si();
            StandardTableau f = shuffle_recording_map(p, k);
            ASSERT_EQ(syt_des(f), des_set(p));
            images.insert(f.row_reading_word());
          }
          for (const StandardTableau& t : enumerate_syt(two_component_shape(mu, nu))) rhs[syt_des(t).bits()] += 1;
          ASSERT_EQ(lhs, rhs) << "mu=" << mu.to_string() << " nu=" << nu.to_string();
          if (n <= 6) {
            // Knuth closure of a sample element stays inside the shuffle set
            auto closure = oracle::knuth_closure(s.begin()->first.word());
            for (const auto& w : closure) ASSERT_TRUE(s.contains(Permutation::from_word(w)));
          }
        }
      }
    }
  }
}

TEST(RotationBijection, WorkedExamples) {
  DescSet j = DescSet::from_members(4, {1});
  StandardTableau t = rotation_bijection(P("23145"), j);
  EXPECT_EQ(t.to_string(), "· · · · 5 / · 1 2 4 / 3");
  EXPECT_EQ(syt_des(t).members(), (std::vector<int>{2}));
  StandardTableau t2 = rotation_bijection(P("52314"), j);
  EXPECT_EQ(t2.top_right(), 1);
  EXPECT_EQ(syt_des(t2).members(), (std::vector<int>{1, 3}));
  StandardTableau t3 = rotation_bijection(P("31452"), j);
  EXPECT_EQ(t3.to_string(), "· · · · 4 / · 1 3 5 / 2");
  EXPECT_EQ(syt_des(t3).members(), (std::vector<int>{1, 4}));
  EXPECT_EQ(rotation_bijection(P("45231"), j).to_string(), "· · · · 2 / · 1 3 4 / 5");
  EXPECT_EQ(rotation_bijection(P("14523"), j).to_string(), "· · · · 3 / · 2 4 5 / 1");
  EXPECT_THROW(rotation_bijection(P("32145"), j), DomainError);
}

TEST(RotationBijection, AuditExhaustive) {
  for (int n = 2; n <= 7; ++n) {
    for (const DescSet& j : all_desc_sets(n - 1)) {
      PermMultiset domain = product(embed(descent_class(n - 1, j, DescentKind::Rinv), n), cyclic_group(n),
                                    ProductMode::set);
      std::set<std::vector<int>> images;
      for (const auto& [p, m] : domain) {
        StandardTableau t = rotation_bijection(p, j);
        ASSERT_EQ(t.shape(), strip_chain_shape(n, j));
        ASSERT_EQ(syt_des(t), des_set(p));
        ASSERT_EQ(t.top_right(), inverse(p)(n));
        images.insert(t.row_reading_word());
      }
      ASSERT_EQ(images.size(), domain.distinct_size());
      ASSERT_EQ(images.size(), enumerate_syt(strip_chain_shape(n, j)).size());
    }
  }
}
