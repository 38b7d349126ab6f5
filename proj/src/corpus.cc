#include "idcap/corpus.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "idcap/error.h"

namespace idcap {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void FailAt(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + reason);
}

// Calls fn(line_number, record) for every non-blank line.
template <typename Fn>
void ForEachRecord(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      FailAt(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) FailAt(line_no, "record is not an object");
    fn(line_no, record);
  }
}

std::string RequireId(std::size_t line, const json& record) {
  auto it = record.find("videoset_id");
  if (it == record.end() || !it->is_string()) {
    FailAt(line, "missing string field 'videoset_id'");
  }
  std::string id = it->get<std::string>();
  if (id.empty()) FailAt(line, "empty videoset_id");
  return id;
}

std::vector<std::string> RequireStringList(std::size_t line, const json& record,
                                           const char* field) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_array()) {
    FailAt(line, std::string("missing list field '") + field + "'");
  }
  std::vector<std::string> out;
  for (const json& item : *it) {
    if (!item.is_string()) FailAt(line, std::string("non-string entry in '") + field + "'");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<IdentityLabel> ParseLabels(std::size_t line,
                                       const std::vector<std::string>& texts) {
  std::vector<IdentityLabel> labels;
  for (const std::string& text : texts) {
    auto label = ParseIdentityLabel(text);
    if (!label) FailAt(line, "'" + text + "' is not a person-id label");
    labels.push_back(*label);
  }
  return labels;
}

Captionset ParseCaptionRecord(std::size_t line, const json& record) {
  Captionset cs;
  cs.videoset_id = RequireId(line, record);
  std::vector<std::string> captions = RequireStringList(line, record, "captions");
  if (captions.empty()) FailAt(line, "captionset has no captions");

  if (!record.contains("gt_labels")) {
    for (const std::string& caption : captions) cs.captions.push_back(Tokenize(caption));
    return cs;
  }

  FitbInstance blanks;
  for (std::size_t c = 0; c < captions.size(); ++c) {
    TokenSequence tokens = TokenizeWithBlanks(captions[c]);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (IsBlank(tokens[t])) blanks.blanks.push_back({c, t});
    }
    blanks.captionset_with_blanks.captions.push_back(std::move(tokens));
  }
  blanks.captionset_with_blanks.videoset_id = cs.videoset_id;
  std::vector<IdentityLabel> labels =
      ParseLabels(line, RequireStringList(line, record, "gt_labels"));
  if (labels.size() != blanks.blanks.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "line " + std::to_string(line) + ": " + std::to_string(blanks.blanks.size()) +
                    " blanks but " + std::to_string(labels.size()) + " gt_labels");
  }
  return FillBlanks(blanks, labels);
}

std::map<std::string, std::size_t> IndexById(const Corpus& corpus) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    index.emplace(corpus.entries[i].reference.videoset_id, i);
  }
  return index;
}

std::size_t RequireEntry(const std::map<std::string, std::size_t>& index,
                         const std::string& id, std::size_t line) {
  auto it = index.find(id);
  if (it == index.end()) FailAt(line, "unknown videoset_id '" + id + "'");
  return it->second;
}

std::vector<std::vector<std::string>> ParseTupleRecords(std::size_t line,
                                                        const json& list) {
  if (!list.is_array()) FailAt(line, "tuples must be a list");
  std::vector<std::vector<std::string>> records;
  for (const json& tuple : list) {
    if (!tuple.is_array()) FailAt(line, "each tuple must be a list of strings");
    std::vector<std::string> slots;
    for (const json& slot : tuple) {
      if (!slot.is_string()) FailAt(line, "tuple slots must be strings");
      slots.push_back(slot.get<std::string>());
    }
    records.push_back(std::move(slots));
  }
  return records;
}

}  // namespace

std::vector<Captionset> Corpus::References() const {
  std::vector<Captionset> out;
  out.reserve(entries.size());
  for (const CorpusEntry& e : entries) out.push_back(e.reference);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Corpus ParseCorpus(std::string_view text) {
  Corpus corpus;
  std::set<std::string> seen;
  ForEachRecord(text, [&](std::size_t line, const json& record) {
    Captionset raw = ParseCaptionRecord(line, record);
    if (!seen.insert(raw.videoset_id).second) {
      throw Error(ErrorCode::kDuplicateVideosetId,
                  "line " + std::to_string(line) + ": '" + raw.videoset_id + "'");
    }
    CorpusEntry entry;
    entry.reference = NormalizeIdentities(raw, &entry.reference_mapping);
    if (entry.reference_mapping.empty()) {
      corpus.diagnostics.push_back("line " + std::to_string(line) + ": videoset '" +
                                   raw.videoset_id + "' has no identity tokens");
    } else {
      entry.fitb = MakeFitb(entry.reference);
    }
    corpus.entries.push_back(std::move(entry));
  });
  if (corpus.entries.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no records");
  return corpus;
}

Corpus LoadCorpus(const std::string& path) {
  std::string text = ReadFile(path);
  if (path.ends_with(".tsv")) text = ConvertTsv(text);
  return ParseCorpus(text);
}

std::string ConvertTsv(std::string_view text, std::size_t group_size) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      FailAt(line_no, "expected 'videoset_id<TAB>caption'");
    }
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  if (group_size == 0 || rows.size() % group_size != 0) {
    throw Error(ErrorCode::kParseError,
                std::to_string(rows.size()) + " TSV rows do not form groups of " +
                    std::to_string(group_size));
  }
  std::string out;
  for (std::size_t start = 0; start < rows.size(); start += group_size) {
    json record;
    record["videoset_id"] = rows[start].first;
    json captions = json::array();
    for (std::size_t i = start; i < start + group_size; ++i) captions.push_back(rows[i].second);
    record["captions"] = std::move(captions);
    out += record.dump() + "\n";
  }
  return out;
}

std::string SerializeCorpus(const Corpus& corpus) {
  std::string out;
  for (const CorpusEntry& e : corpus.entries) {
    json captions = json::array();
    for (const TokenSequence& caption : e.reference.captions) {
      captions.push_back(Detokenize(caption));
    }
    json record;
    record["videoset_id"] = e.reference.videoset_id;
    record["captions"] = std::move(captions);
    out += record.dump() + "\n";
  }
  return out;
}

void AttachCandidates(Corpus& corpus, std::string_view candidates_text) {
  auto index = IndexById(corpus);
  std::set<std::string> seen;
  ForEachRecord(candidates_text, [&](std::size_t line, const json& record) {
    Captionset raw = ParseCaptionRecord(line, record);
    if (!seen.insert(raw.videoset_id).second) {
      throw Error(ErrorCode::kDuplicateVideosetId,
                  "candidates line " + std::to_string(line) + ": '" + raw.videoset_id + "'");
    }
    CorpusEntry& entry = corpus.entries[RequireEntry(index, raw.videoset_id, line)];
    if (raw.captions.size() != entry.reference.captions.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "candidates line " + std::to_string(line) + ": '" + raw.videoset_id +
                      "' has " + std::to_string(raw.captions.size()) +
                      " captions, reference has " +
                      std::to_string(entry.reference.captions.size()));
    }
    entry.candidate = NormalizeIdentities(raw, &entry.candidate_mapping);
  });
  for (const CorpusEntry& e : corpus.entries) {
    if (!e.candidate) {
      throw Error(ErrorCode::kParseError,
                  "no candidate for videoset '" + e.reference.videoset_id + "'");
    }
  }
}

void AttachPredictions(Corpus& corpus, std::string_view predictions_text) {
  auto index = IndexById(corpus);
  ForEachRecord(predictions_text, [&](std::size_t line, const json& record) {
    std::string id = RequireId(line, record);
    CorpusEntry& entry = corpus.entries[RequireEntry(index, id, line)];
    if (!entry.fitb) FailAt(line, "videoset '" + id + "' has no blanks to predict");
    if (entry.fitb->pred_labels) {
      throw Error(ErrorCode::kDuplicateVideosetId,
                  "predictions line " + std::to_string(line) + ": '" + id + "'");
    }
    std::vector<IdentityLabel> labels =
        ParseLabels(line, RequireStringList(line, record, "pred_labels"));
    if (labels.size() != entry.fitb->blanks.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "predictions line " + std::to_string(line) + ": '" + id + "' has " +
                      std::to_string(entry.fitb->blanks.size()) + " blanks but " +
                      std::to_string(labels.size()) + " predictions");
    }
    entry.fitb->pred_labels = std::move(labels);
  });
}

void AttachExternalTuples(Corpus& corpus, std::string_view tuples_text) {
  auto index = IndexById(corpus);
  ForEachRecord(tuples_text, [&](std::size_t line, const json& record) {
    std::string id = RequireId(line, record);
    CorpusEntry& entry = corpus.entries[RequireEntry(index, id, line)];
    if (!record.contains("tuples")) FailAt(line, "missing field 'tuples'");
    try {
      entry.reference_tuples = RelabelTuples(
          LoadTuples(ParseTupleRecords(line, record["tuples"])), entry.reference_mapping);
      if (record.contains("candidate_tuples")) {
        entry.candidate_tuples =
            RelabelTuples(LoadTuples(ParseTupleRecords(line, record["candidate_tuples"])),
                          entry.candidate_mapping);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMalformedTuple) throw;
      throw Error(ErrorCode::kMalformedTuple,
                  "tuples line " + std::to_string(line) + ": " + e.what());
    }
  });
}

std::string DumpTuples(const Corpus& corpus, const Lexicon& lex) {
  std::string out;
  for (const CorpusEntry& e : corpus.entries) {
    TupleSet tuples = e.reference_tuples ? *e.reference_tuples : ExtractTuples(e.reference, lex);
    IdentityMapping original;
    for (const auto& [from, to] : e.reference_mapping) original[to] = from;
    tuples = RelabelTuples(tuples, original);
    json record;
    record["videoset_id"] = e.reference.videoset_id;
    record["tuples"] = TupleRecords(tuples);
    out += record.dump() + "\n";
  }
  return out;
}

}  // namespace idcap
