#include "idcap/tuples.h"

#include <gtest/gtest.h>

#include "idcap/error.h"

namespace idcap {
namespace {

TupleSet Extract(const std::vector<std::string>& captions) {
  return ExtractTuples(NormalizeIdentities(MakeCaptionset("v", captions)), BundledLexicon());
}

TupleSet T(const std::vector<std::vector<std::string>>& records) { return LoadTuples(records); }

TEST(ExtractTuplesTest, CarryExample) {
  EXPECT_EQ(Extract({"P1 carries P2. P2 is unconscious"}),
            T({{"p1"}, {"p2"}, {"p1", "carry", "p2"}, {"p2", "unconscious"}}));
}

TEST(ExtractTuplesTest, PrepositionFoldsIntoRelation) {
  EXPECT_EQ(Extract({"P1 walks towards P2"}),
            T({{"p1"}, {"p2"}, {"p1", "walk_towards", "p2"}}));
}

TEST(ExtractTuplesTest, EmptyCaption) {
  EXPECT_TRUE(Extract({""}).empty());
  EXPECT_TRUE(Extract({"...", ""}).empty());
}

TEST(ExtractTuplesTest, AttributeAttachesToFollowingHead) {
  EXPECT_EQ(Extract({"The unconscious man"}), T({{"man"}, {"man", "unconscious"}}));
}

TEST(ExtractTuplesTest, NoSubjectNoRelation) {
  EXPECT_EQ(Extract({"Someone knocks on the door."}), T({{"door"}}));
}

TEST(ExtractTuplesTest, SentencesAreIndependent) {
  // The second sentence has no subject, so "p2" does not leak into it.
  EXPECT_EQ(Extract({"P1 sees P2. Then leaves."}),
            T({{"p1"}, {"p2"}, {"p1", "see", "p2"}}));
}

TEST(ExtractTuplesTest, CaptionsUnionWithSetSemantics) {
  EXPECT_EQ(Extract({"P1 smiles.", "P1 smiles!"}), T({{"p1"}, {"p1", "smile"}}));
}

TEST(ExtractTuplesTest, Deterministic) {
  std::vector<std::string> text = {"The young woman watches P1 from the car.",
                                   "P2 runs down the wet street."};
  EXPECT_EQ(Extract(text), Extract(text));
}

TEST(ExtractTuplesTest, InvariantUnderRelabeling) {
  EXPECT_EQ(Extract({"P1 carries P2. P2 is unconscious"}),
            Extract({"P7 carries P3. P3 is unconscious"}));
}

TEST(SceneGraphTupleTest, IdentitySlots) {
  SceneGraphTuple t({"p1", "carry", "p2"});
  EXPECT_EQ(t.arity(), TupleArity::kRelation);
  EXPECT_EQ(t.identity_slots(), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(t.has_identity());
  EXPECT_EQ(t.ToString(), "(p1, carry, p2)");
  EXPECT_FALSE(SceneGraphTuple({"man", "tall"}).has_identity());
  EXPECT_FALSE(SceneGraphTuple({"p0"}).has_identity());
}

TEST(LoadTuplesTest, SingleRecord) {
  TupleSet ts = T({{"p1", "carry", "p2"}});
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts.begin()->identity_slots(), (std::vector<std::size_t>{0, 2}));
}

TEST(LoadTuplesTest, Deduplicates) {
  EXPECT_EQ(T({{"p1"}, {"p1"}}).size(), 1u);
  EXPECT_EQ(T({{"P01", "Carry", "P2"}, {"p1", "carry", "p2"}}).size(), 1u);
}

TEST(LoadTuplesTest, MalformedRecordsNameTheIndex) {
  auto message = [](const std::vector<std::vector<std::string>>& records) {
    try {
      LoadTuples(records);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedTuple);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message({{"", "x"}}).find("record 0"), std::string::npos);
  EXPECT_NE(message({{"a"}, {}}).find("record 1"), std::string::npos);
  EXPECT_NE(message({{"a"}, {"b"}, {"a", "b", "c", "d"}}).find("record 2"), std::string::npos);
}

TEST(LoadTuplesTest, RecordsRoundTrip) {
  TupleSet ts = Extract({"P1 pulls P2 into a tight embrace."});
  EXPECT_EQ(LoadTuples(TupleRecords(ts)), ts);
}

TEST(FilterIdentityTuplesTest, CarryExample) {
  Captionset cs = NormalizeIdentities(MakeCaptionset("v", {"P1 carries P2. P2 is unconscious"}));
  FilteredTuples f = FilterIdentityTuples(ExtractTuples(cs, BundledLexicon()), cs);
  EXPECT_EQ(f.p2plus, T({{"p1", "carry", "p2"}, {"p2", "unconscious"}}));
  EXPECT_EQ(f.p1, (std::set<int>{1, 2}));
  EXPECT_EQ(f.p1_counts, (std::map<int, int>{{1, 1}, {2, 2}}));
}

TEST(FilterIdentityTuplesTest, NoIdentities) {
  Captionset cs = MakeCaptionset("v", {"The tall man opens the door."});
  FilteredTuples f = FilterIdentityTuples(ExtractTuples(cs, BundledLexicon()), cs);
  EXPECT_TRUE(f.p2plus.empty());
  EXPECT_TRUE(f.p1.empty());
}

TEST(FilterIdentityTuplesTest, SingletonsNeverEnter) {
  Captionset cs = MakeCaptionset("v", {"P1"});
  FilteredTuples f = FilterIdentityTuples(T({{"p1"}, {"p1", "tall"}}), cs);
  EXPECT_EQ(f.p2plus, T({{"p1", "tall"}}));
}

TEST(FilterIdentityTuplesTest, LabelsComeFromCaptionset) {
  // p3 is mentioned but never reaches a tuple.
  Captionset cs = MakeCaptionset("v", {"P1 sees P2 and P3"});
  FilteredTuples f = FilterIdentityTuples(T({{"p1", "see", "p2"}}), cs);
  EXPECT_EQ(f.p1, (std::set<int>{1, 2, 3}));
}

TEST(RelabelTuplesTest, MapsIdentitySlotsOnly) {
  TupleSet ts = T({{"p1", "carry", "p2"}, {"man", "tall"}});
  EXPECT_EQ(RelabelTuples(ts, {{1, 2}, {2, 1}}), T({{"p2", "carry", "p1"}, {"man", "tall"}}));
}

}  // namespace
}  // namespace idcap
