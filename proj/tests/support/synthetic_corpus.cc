#include "synthetic_corpus.h"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "idcap/random.h"

namespace idcap::testing {

namespace {

// {A} and {B} are replaced by distinct identity labels.
constexpr const char* kRelationTemplates[] = {
    "{A} walks slowly across the crowded room towards {B}.",
    "{A} looks up at {B} with a worried expression on the face.",
    "{A} follows {B} down the long dark corridor of the hotel.",
    "{A} smiles warmly at {B} from across the kitchen table.",
    "{A} kisses {B} gently on the cheek and leaves the house.",
    "{A} pulls {B} into a tight embrace in the rain.",
    "{A} stares at {B} in silence for a long moment.",
    "{A} hands {B} a small white envelope without a word.",
    "{A} pushes {B} against the brick wall of the alley.",
    "{A} watches {B} through the dusty window of the shop.",
};

constexpr const char* kSingleTemplates[] = {
    "{A} is unconscious on the cold tile floor of the bathroom.",
    "{A} sits alone at the bar with a glass of whisky.",
    "{A} is tired and leans against the old wooden door.",
    "Later, {A} drives the black car through the busy streets.",
    "{A} opens the front door and steps into the dim hallway.",
    "{A} is nervous and checks the watch on the wrist again.",
    "{A} runs down the wet street past the parked trucks.",
    "{A} climbs the narrow staircase to the top floor.",
};

std::string Fill(std::string text, int a, int b) {
  auto replace = [&text](const std::string& key, int label) {
    std::size_t pos;
    while ((pos = text.find(key)) != std::string::npos) {
      text.replace(pos, key.size(), "P" + std::to_string(label));
    }
  };
  replace("{A}", a);
  replace("{B}", b);
  return text;
}

template <std::size_t N>
const char* Pick(Rng& rng, const char* const (&templates)[N]) {
  return templates[rng.UniformIndex(N)];
}

}  // namespace

std::vector<std::string> SyntheticCaptionTexts(std::uint64_t seed) {
  Rng rng(seed);
  bool third = rng.UniformIndex(2) == 1;
  // Labels 1..3 are assigned to characters through a random permutation.
  std::vector<int> label{1, 2, 3};
  for (std::size_t i = 0; i < 2; ++i) {
    std::swap(label[i], label[i + rng.UniformIndex(3 - i)]);
  }
  const int p = label[0], q = label[1], r = label[2];

  std::vector<std::string> captions;
  bool forward = rng.UniformIndex(2) == 0;
  captions.push_back(Fill(Pick(rng, kRelationTemplates), forward ? p : q, forward ? q : p));
  captions.push_back(Fill(Pick(rng, kSingleTemplates), q, 0));
  captions.push_back(Fill(Pick(rng, kSingleTemplates), p, 0));
  if (third) {
    captions.push_back(Fill(Pick(rng, kRelationTemplates), r, rng.UniformIndex(2) ? p : q));
  } else {
    captions.push_back(Fill(Pick(rng, kRelationTemplates), q, p));
  }
  captions.push_back(Fill(Pick(rng, kSingleTemplates), rng.UniformIndex(2) ? p : q, 0));

  for (std::size_t i = captions.size() - 1; i > 0; --i) {
    std::swap(captions[i], captions[rng.UniformIndex(i + 1)]);
  }
  return captions;
}

std::vector<Captionset> SyntheticCorpus(std::size_t count, std::uint64_t seed) {
  std::vector<Captionset> corpus;
  for (std::size_t i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "syn%04zu", i);
    corpus.push_back(MakeCaptionset(id, SyntheticCaptionTexts(SplitMix64(seed + i))));
  }
  return corpus;
}

std::string SyntheticCorpusJsonl(std::size_t count, std::uint64_t seed) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "syn%04zu", i);
    nlohmann::ordered_json record;
    record["videoset_id"] = id;
    record["captions"] = SyntheticCaptionTexts(SplitMix64(seed + i));
    out += record.dump() + "\n";
  }
  return out;
}

}  // namespace idcap::testing
