#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace udpolar;
using udpolar::testing::source_path;

using udpolar::testing::rows_checksum;
using udpolar::testing::slurp;

TEST(HierarchyFile, MatchesBuiltInTable) {
  auto h = RelationHierarchy::load(source_path("data/hierarchy.tsv"));
  EXPECT_EQ(h, RelationHierarchy::defaults());
  EXPECT_EQ(h.entries().size(), 44u);
  EXPECT_EQ(h.unknown_level(), 45);
  for (const auto& e : kDefaultHierarchy) EXPECT_EQ(h.level(e.label), e.level) << e.label;
}

TEST(HierarchyFile, Checksum) {
  EXPECT_EQ(rows_checksum(slurp(source_path("data/hierarchy.tsv"))),
            udpolar::testing::kHierarchyChecksum)
      << std::hex << rows_checksum(slurp(source_path("data/hierarchy.tsv")));
}

TEST(QuantifierFile, FifteenRows) {
  auto lex = Lexicon::defaults();
  Lexicon loaded;
  loaded.merge(LexiconKind::Quantifiers, slurp(source_path("data/lexicon/quantifiers.tsv")),
               "quantifiers.tsv");
  EXPECT_EQ(loaded.quantifiers(), lex.quantifiers());
}

TEST(MiniCorpus, ParsesAndAligns) {
  auto graphs = parse_conllu(slurp(source_path("tests/data/mini_corpus.conllu")));
  auto gold = load_gold(source_path("tests/data/mini_corpus.gold.tsv"));
  ASSERT_EQ(graphs.size(), gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    EXPECT_EQ(graphs[i].sent_id(), gold[i].id);
    ASSERT_EQ(graphs[i].size(), gold[i].tokens.size());
    for (std::size_t k = 0; k < gold[i].tokens.size(); ++k) {
      EXPECT_EQ(graphs[i].tokens()[k].form, gold[i].tokens[k].form);
      EXPECT_EQ(graphs[i].tokens()[k].upos, gold[i].tokens[k].upos);
    }
  }
}

TEST(MiniCorpus, ExclusionsPointAtRealTokens) {
  auto gold = load_gold(source_path("tests/data/mini_corpus.gold.tsv"));
  auto ex = Exclusions::load(source_path("tests/data/expected_failures.tsv"));
  EXPECT_EQ(ex.size(), 2u);
  std::size_t found = 0;
  for (const auto& s : gold)
    for (std::size_t k = 0; k < s.tokens.size(); ++k)
      if (const auto* form = ex.form(s.id, k + 1)) {
        EXPECT_EQ(*form, s.tokens[k].form);
        ++found;
      }
  EXPECT_EQ(found, ex.size());
}
