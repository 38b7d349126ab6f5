#ifndef IDCAP_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
#define IDCAP_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "idcap/caption.h"

namespace idcap::testing {

// Raw caption text of one synthetic videoset: five movie-style sentences
// over two or three characters. P1 and P2 always recur; when a third
// character is present it is mentioned exactly once. Labels are shuffled,
// so the text is generally not in normalized order.
std::vector<std::string> SyntheticCaptionTexts(std::uint64_t seed);

// `count` tokenized captionsets with ids "syn0000", "syn0001", ...
std::vector<Captionset> SyntheticCorpus(std::size_t count, std::uint64_t seed);

// Same corpus as line-delimited JSON.
std::string SyntheticCorpusJsonl(std::size_t count, std::uint64_t seed);

}  // namespace idcap::testing

#endif  // IDCAP_TESTS_SUPPORT_SYNTHETIC_CORPUS_H_
