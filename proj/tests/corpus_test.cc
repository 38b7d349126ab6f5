#include "idcap/corpus.h"

#include <gtest/gtest.h>

#include "idcap/error.h"

namespace idcap {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvariantViolation;
}

TEST(ParseCorpusTest, NormalizesEachReference) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["P4 carries P3.", "P3 sleeps."]})"
                         "\n");
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(Detokenize(c.entries[0].reference.captions[0]), "P1 carries P2 .");
  EXPECT_EQ(c.entries[0].reference_mapping, (IdentityMapping{{4, 1}, {3, 2}}));
  ASSERT_TRUE(c.entries[0].fitb);
  EXPECT_EQ(c.entries[0].fitb->blanks.size(), 3u);
}

TEST(ParseCorpusTest, NoIdentitiesIsADiagnosticNotAnError) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["The door opens."]})");
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_FALSE(c.entries[0].fitb);
  ASSERT_EQ(c.diagnostics.size(), 1u);
  EXPECT_NE(c.diagnostics[0].find("'a'"), std::string::npos);
}

TEST(ParseCorpusTest, FitbRecordsAreFilled) {
  Corpus c = ParseCorpus(
      R"({"videoset_id": "f", "captions": ["[...] carries [...].", "[...] sleeps."], "gt_labels": ["P2", "P1", "P1"]})");
  EXPECT_EQ(Detokenize(c.entries[0].reference.captions[0]), "P1 carries P2 .");
  EXPECT_EQ(Detokenize(c.entries[0].reference.captions[1]), "P2 sleeps .");
}

TEST(ParseCorpusTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseCorpus(""); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(CodeOf([] { ParseCorpus("\n\n"); }), ErrorCode::kEmptyCorpus);
  EXPECT_EQ(CodeOf([] {
              ParseCorpus(R"({"videoset_id": "a", "captions": ["x"]})"
                          "\n"
                          R"({"videoset_id": "a", "captions": ["y"]})");
            }),
            ErrorCode::kDuplicateVideosetId);
  EXPECT_EQ(CodeOf([] { ParseCorpus(R"({"videoset_id": "a"})"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseCorpus("{not json"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              ParseCorpus(R"({"videoset_id": "a", "captions": ["[...]"], "gt_labels": []})");
            }),
            ErrorCode::kLengthMismatch);
}

TEST(ParseCorpusTest, ErrorNamesTheLine) {
  try {
    ParseCorpus(R"({"videoset_id": "a", "captions": ["x"]})"
                "\n\n{oops}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ConvertTsvTest, GroupsRowsIntoVideosets) {
  std::string tsv = "clip1\tP1 waves.\nclip2\tP2 waves back.\nclip3\tThey leave.\n";
  Corpus c = ParseCorpus(ConvertTsv(tsv, 3));
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0].reference.videoset_id, "clip1");
  EXPECT_EQ(c.entries[0].reference.captions.size(), 3u);
  EXPECT_THROW(ConvertTsv("clip1 no tab\n", 1), Error);
}

TEST(SerializeCorpusTest, RoundTrips) {
  Corpus c = ParseCorpus(R"({"videoset_id": "b", "captions": ["P2 smiles at P1.", "Rain."]})"
                         "\n"
                         R"({"videoset_id": "a", "captions": ["A dog barks."]})");
  std::string text = SerializeCorpus(c);
  Corpus again = ParseCorpus(text);
  ASSERT_EQ(again.entries.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(again.entries[i].reference, c.entries[i].reference);
  }
  EXPECT_EQ(SerializeCorpus(again), text);
}

TEST(AttachCandidatesTest, JoinsById) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["P1 waves.", "P2 nods."]})");
  AttachCandidates(c, R"({"videoset_id": "a", "captions": ["P8 nods.", "P8 waves."]})");
  ASSERT_TRUE(c.entries[0].candidate);
  EXPECT_EQ(Detokenize(c.entries[0].candidate->captions[0]), "P1 nods .");
  EXPECT_EQ(c.entries[0].candidate_mapping, (IdentityMapping{{8, 1}}));
}

TEST(AttachCandidatesTest, Errors) {
  const char* ref = R"({"videoset_id": "a", "captions": ["P1 waves.", "P2 nods."]})";
  EXPECT_EQ(CodeOf([&] {
              Corpus c = ParseCorpus(ref);
              AttachCandidates(c, R"({"videoset_id": "a", "captions": ["P1 waves."]})");
            }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([&] {
              Corpus c = ParseCorpus(ref);
              AttachCandidates(c, R"({"videoset_id": "z", "captions": ["x", "y"]})");
            }),
            ErrorCode::kParseError);
}

TEST(AttachPredictionsTest, JoinsById) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["P1 waves at P2."]})");
  AttachPredictions(c, R"({"videoset_id": "a", "pred_labels": ["P2", "P2"]})");
  ASSERT_TRUE(c.entries[0].fitb->pred_labels);
  EXPECT_EQ(c.entries[0].fitb->pred_labels->size(), 2u);
  EXPECT_EQ(CodeOf([&] {
              AttachPredictions(c, R"({"videoset_id": "a", "pred_labels": ["P1", "P1"]})");
            }),
            ErrorCode::kDuplicateVideosetId);
  EXPECT_EQ(CodeOf([] {
              Corpus fresh = ParseCorpus(R"({"videoset_id": "a", "captions": ["P1 waves at P2."]})");
              AttachPredictions(fresh, R"({"videoset_id": "a", "pred_labels": ["Q2", "P1"]})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              Corpus fresh = ParseCorpus(R"({"videoset_id": "a", "captions": ["P1 waves at P2."]})");
              AttachPredictions(fresh, R"({"videoset_id": "a", "pred_labels": ["P1"]})");
            }),
            ErrorCode::kLengthMismatch);
}

TEST(AttachExternalTuplesTest, RelabelsThroughNormalization) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["P5 carries P2."]})");
  AttachExternalTuples(c, R"({"videoset_id": "a", "tuples": [["p5", "carry", "p2"], ["p5"]]})");
  ASSERT_TRUE(c.entries[0].reference_tuples);
  EXPECT_EQ(*c.entries[0].reference_tuples, LoadTuples({{"p1", "carry", "p2"}, {"p1"}}));
  EXPECT_FALSE(c.entries[0].candidate_tuples);
  EXPECT_EQ(CodeOf([&] {
              AttachExternalTuples(c, R"({"videoset_id": "a", "tuples": [["", "x"]]})");
            }),
            ErrorCode::kMalformedTuple);
}

TEST(DumpTuplesTest, ExternalTuplesPassThrough) {
  Corpus c = ParseCorpus(R"({"videoset_id": "a", "captions": ["P5 carries P2."]})");
  std::string extracted = DumpTuples(c, BundledLexicon());
  EXPECT_NE(extracted.find(R"(["p5","carry","p2"])"), std::string::npos) << extracted;
  AttachExternalTuples(c, extracted);
  EXPECT_EQ(*c.entries[0].reference_tuples, LoadTuples({{"p1"}, {"p2"}, {"p1", "carry", "p2"}}));
  EXPECT_EQ(DumpTuples(c, BundledLexicon()), extracted);
}

}  // namespace
}  // namespace idcap
