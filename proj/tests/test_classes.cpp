#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "redword/classes.hpp"

using namespace redword;

namespace {

std::vector<std::vector<std::string>> class_texts(const ClassPartition& p, const WordSet& words) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : p.classes) {
    std::vector<std::string> members;
    for (auto k : c)
      members.push_back(words.text(k));
    out.push_back(members);
  }
  return out;
}

using Classes = std::vector<std::vector<std::string>>;

} // namespace

TEST(Partition, CommutationClassesOf25314) {
  const auto words = enumerate(Permutation::parse("[25314]"));
  EXPECT_EQ(class_texts(partition(words, MoveKind::commutation), words),
            (Classes{{"12432", "14232", "41232"}, {"14323", "41323", "43123"}}));
}

TEST(Partition, BraidClassesOf25314) {
  const auto words = enumerate(Permutation::parse("[25314]"));
  const auto p = partition(words, MoveKind::braid);
  EXPECT_EQ(class_texts(p, words),
            (Classes{{"12432"}, {"14232", "14323"}, {"41232", "41323"}, {"43123"}}));
  EXPECT_EQ(p.representatives, (std::vector<std::uint32_t>{0, 1, 3, 5}));
  EXPECT_EQ(p.class_of, (std::vector<std::uint32_t>{0, 1, 1, 2, 2, 3}));
}

TEST(Partition, FullyCommutativeAndSingleBraidClass) {
  const auto fc = enumerate(Permutation::parse("[241563]"));
  EXPECT_EQ(class_texts(partition(fc, MoveKind::commutation), fc),
            (Classes{{"13245", "13425", "13452", "31245", "31425", "31452", "34125", "34152", "34512"}}));
  const auto one = enumerate(Permutation::parse("[124563]"));
  EXPECT_EQ(class_texts(partition(one, MoveKind::braid), one), (Classes{{"345"}}));
}

TEST(Partition, Identity) {
  const auto words = enumerate(Permutation::identity(3));
  for (auto kind : {MoveKind::braid, MoveKind::commutation}) {
    const auto p = partition(words, kind);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.classes[0], (std::vector<std::uint32_t>{0}));
  }
}

TEST(Partition, IndependentOfInputOrder) {
  std::mt19937 rng(7);
  for (const char* text : {"[25314]", "[3421]", "[152463]", "[54321]"}) {
    const Permutation w = Permutation::parse(text);
    const auto words = enumerate(w);
    std::vector<Word> shuffled;
    for (std::size_t k = 0; k < words.size(); ++k)
      shuffled.emplace_back(words[k].begin(), words[k].end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto rebuilt = WordSet::from_words(w, shuffled);
    for (auto kind : {MoveKind::braid, MoveKind::commutation}) {
      EXPECT_EQ(class_texts(partition(rebuilt, kind), rebuilt),
                class_texts(partition(words, kind), words))
          << text;
    }
  }
}

TEST(Partition, ClassesAreMoveClosures) {
  // Each braid class equals the braid-move closure of its representative.
  for_each_permutation(5, [](const Permutation& w) {
    const auto words = enumerate(w);
    const auto p = partition(words, MoveKind::braid);
    for (const auto& c : p.classes) {
      const WordView rep = words[c.front()];
      const auto closure = oracle::braid_closure(oracle::Letters(rep.begin(), rep.end()));
      ASSERT_EQ(closure.size(), c.size()) << w.to_string();
    }
  });
}

TEST(Partition, BraidAndCommutationMeetInAtMostOneWord) {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      const auto words = enumerate(w);
      const auto bp = partition(words, MoveKind::braid);
      const auto cp = partition(words, MoveKind::commutation);
      std::set<std::pair<std::uint32_t, std::uint32_t>> cells;
      for (std::size_t k = 0; k < words.size(); ++k)
        ASSERT_TRUE(cells.emplace(bp.class_of[k], cp.class_of[k]).second) << w.to_string();
    });
}

TEST(Partition, SingleClassCharacterizations) {
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      const auto words = enumerate(w);
      EXPECT_EQ(partition(words, MoveKind::commutation).size() == 1, is_321_avoiding(w))
          << w.to_string();
      EXPECT_EQ(partition(words, MoveKind::braid).size() == 1,
                inversions_pairwise_share_letter(w))
          << w.to_string();
    });
}

TEST(BraidShape, Examples) {
  EXPECT_EQ(braid_class_shape(1, 5), (BraidClassShape{0, 0}));
  EXPECT_EQ(braid_class_shape(2, 5), (BraidClassShape{1, 0}));
  EXPECT_EQ(braid_class_shape(12, 11), (BraidClassShape{2, 1}));
  EXPECT_THROW(braid_class_shape(5, 9), theorem_violation);
  EXPECT_THROW(braid_class_shape(12, 10), theorem_violation);  // 3*2 + 5*1 = 11 > 10
}

TEST(BraidShape, EdgeCountFormulaMatchesProductConstruction) {
  for (std::size_t x = 0; x <= 3; ++x)
    for (std::size_t y = 0; y <= 2; ++y) {
      std::vector<int> paths(x, 2);
      paths.insert(paths.end(), y, 3);
      EXPECT_EQ(BraidClassShape(x, y).product_edge_count(), oracle::product_of_paths_edges(paths))
          << x << "," << y;
    }
  // x = 2, y = 1: 2*2*3 + 2*4*1 = 20.
  EXPECT_EQ(BraidClassShape(2, 1).product_edge_count(), 20u);
}

TEST(BraidShape, TwelveElementClass) {
  const Permutation w = Permutation::parse("[32547861]");
  const Word start = parse_word("12143465676");
  ASSERT_EQ(evaluate(start, 8), w);
  const auto words = enumerate(w);
  const auto p = partition(words, MoveKind::braid);
  const auto idx = words.index_of(start);
  ASSERT_TRUE(idx.has_value());
  const auto& members = p.classes[p.class_of[*idx]];
  EXPECT_EQ(members.size(), 12u);
  EXPECT_EQ(oracle::braid_closure(oracle::Letters(start.begin(), start.end())).size(), 12u);
  EXPECT_EQ(braid_class_shape(members.size(), w.length()), (BraidClassShape{2, 1}));
  EXPECT_TRUE(verify_braid_class_graph(words, members));
}

TEST(BraidShape, SmallClassGraphs) {
  const auto words = enumerate(Permutation::parse("[25314]"));
  const auto p = partition(words, MoveKind::braid);
  for (const auto& c : p.classes)
    EXPECT_TRUE(verify_braid_class_graph(words, c));
}

// Chains of braid moves can create further braid moves; such classes are
// paths rather than products of 2- and 3-paths.
TEST(BraidShape, ChainedClassesAreNotProducts) {
  const auto w5 = Permutation::parse("[34521]");
  const auto words5 = enumerate(w5);
  const auto p5 = partition(words5, MoveKind::braid);
  const auto& chain4 = p5.classes[p5.class_of[*words5.index_of(parse_word("1213243"))]];
  EXPECT_EQ(chain4.size(), 4u);
  EXPECT_FALSE(verify_braid_class_graph(words5, chain4));

  const auto start = parse_word("121324354");
  const auto w6 = evaluate(start, 6);
  EXPECT_EQ(w6, Permutation::parse("[345621]"));
  EXPECT_EQ(oracle::braid_closure(oracle::Letters(start.begin(), start.end())).size(), 5u);
  const auto words6 = enumerate(w6);
  const auto p6 = partition(words6, MoveKind::braid);
  const auto& chain5 = p6.classes[p6.class_of[*words6.index_of(start)]];
  EXPECT_EQ(chain5.size(), 5u);
  EXPECT_THROW(braid_class_shape(chain5.size(), w6.length()), theorem_violation);
}
