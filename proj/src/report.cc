#include "idcap/report.h"

#include <algorithm>
#include <cstdio>
#include <memory>

#include <json.hpp>

#include "idcap/error.h"
#include "idcap/ngram_metrics.h"

namespace idcap {

namespace {

using nlohmann::ordered_json;

ordered_json OptionalNumber(const std::optional<double>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

std::string Fixed(double value, int digits = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string Fixed(const std::optional<double>& value, int digits = 4) {
  return value ? Fixed(*value, digits) : "null";
}

// Left-aligned first column, right-aligned rest, two spaces between columns.
std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      std::string pad(widths[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

MetricReport Evaluate(const Corpus& corpus, const Lexicon& lex,
                      const SpiceOptions& options, std::uint64_t seed) {
  MetricReport report;
  report.lexicon_hash = lex.hash();
  report.seed = seed;

  std::vector<Captionset> references = corpus.References();
  IdfTable idf = BuildIdf(references);

  for (const CorpusEntry& e : corpus.entries) {
    if (!e.candidate) {
      throw Error(ErrorCode::kParseError,
                  "no candidate for videoset '" + e.reference.videoset_id + "'");
    }
    const Captionset& ref = e.reference;
    const Captionset& cand = *e.candidate;
    TupleSet ref_tuples = e.reference_tuples ? *e.reference_tuples : ExtractTuples(ref, lex);
    TupleSet cand_tuples = e.candidate_tuples ? *e.candidate_tuples : ExtractTuples(cand, lex);

    EntryScores s;
    s.videoset_id = ref.videoset_id;
    s.spice = ScoreTuples(ref_tuples, ref, cand_tuples, cand, options);
    s.bleu4 = Bleu4(ref, cand);
    s.rouge_l = RougeL(ref, cand);
    s.cider = Cider(ref, cand, idf);
    s.meteor_lite = MeteorLite(ref, cand);
    if (!s.spice.ispice) ++report.ispice_undefined;
    report.entries.push_back(std::move(s));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const EntryScores& a, const EntryScores& b) {
              return a.videoset_id < b.videoset_id;
            });
  report.aggregate = Aggregate(report.entries);
  return report;
}

AggregateScores Aggregate(const std::vector<EntryScores>& entries) {
  AggregateScores agg;
  if (entries.empty()) return agg;
  double ispice = 0.0, p2 = 0.0, p1 = 0.0;
  std::size_t defined = 0;
  for (const EntryScores& e : entries) {
    agg.spice += e.spice.spice;
    agg.bleu4 += e.bleu4;
    agg.rouge_l += e.rouge_l;
    agg.cider += e.cider;
    agg.meteor_lite += e.meteor_lite;
    if (e.spice.ispice) {
      ispice += *e.spice.ispice;
      p2 += e.spice.term_p2plus;
      p1 += e.spice.term_p1;
      ++defined;
    }
  }
  double n = static_cast<double>(entries.size());
  agg.spice /= n;
  agg.bleu4 /= n;
  agg.rouge_l /= n;
  agg.cider /= n;
  agg.meteor_lite /= n;
  if (defined > 0) {
    double d = static_cast<double>(defined);
    agg.ispice = ispice / d;
    agg.term_p2plus = p2 / d;
    agg.term_p1 = p1 / d;
  }
  return agg;
}

std::string RenderJson(const MetricReport& report) {
  ordered_json j;
  j["toolkit_version"] = report.toolkit_version;
  j["lexicon_hash"] = report.lexicon_hash;
  j["seed"] = report.seed;
  j["entry_count"] = report.entries.size();
  j["ispice_undefined"] = report.ispice_undefined;

  const AggregateScores& a = report.aggregate;
  ordered_json agg;
  agg["ispice"] = OptionalNumber(a.ispice);
  agg["ispice_term_p2plus"] = OptionalNumber(a.term_p2plus);
  agg["ispice_term_p1"] = OptionalNumber(a.term_p1);
  agg["spice"] = a.spice;
  agg["bleu4"] = a.bleu4;
  agg["cider"] = a.cider;
  agg["meteor_lite"] = a.meteor_lite;
  agg["rouge_l"] = a.rouge_l;
  j["aggregate"] = std::move(agg);

  ordered_json entries = ordered_json::array();
  for (const EntryScores& e : report.entries) {
    ordered_json row;
    row["videoset_id"] = e.videoset_id;
    row["ispice"] = OptionalNumber(e.spice.ispice);
    row["ispice_term_p2plus"] = e.spice.term_p2plus;
    row["ispice_term_p1"] = e.spice.term_p1;
    row["spice"] = e.spice.spice;
    row["bleu4"] = e.bleu4;
    row["cider"] = e.cider;
    row["meteor_lite"] = e.meteor_lite;
    row["rouge_l"] = e.rouge_l;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return Dump(j);
}

std::string RenderText(const MetricReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"videoset_id", "iS", "S", "B4", "C", "M", "R"});
  for (const EntryScores& e : report.entries) {
    rows.push_back({e.videoset_id, Fixed(e.spice.ispice), Fixed(e.spice.spice),
                    Fixed(e.bleu4), Fixed(e.cider), Fixed(e.meteor_lite), Fixed(e.rouge_l)});
  }
  const AggregateScores& a = report.aggregate;
  rows.push_back({"MEAN", Fixed(a.ispice), Fixed(a.spice), Fixed(a.bleu4), Fixed(a.cider),
                  Fixed(a.meteor_lite), Fixed(a.rouge_l)});
  std::string out = Table(rows);
  out += "entries: " + std::to_string(report.entries.size()) +
         "  ispice undefined: " + std::to_string(report.ispice_undefined) +
         "  lexicon: " + report.lexicon_hash + "  version: " + report.toolkit_version + "\n";
  return out;
}

std::string RenderJson(const SensitivityReport& report) {
  ordered_json j;
  j["toolkit_version"] = report.toolkit_version;
  j["lexicon_hash"] = report.lexicon_hash;
  j["seed"] = report.seed;
  j["samples_per_kind"] = report.samples_per_kind;
  j["captionsets"] = report.captionsets;
  ordered_json rows = ordered_json::array();
  for (const SensitivityRow& r : report.rows) {
    ordered_json row;
    row["kind"] = PerturbationKindName(r.kind);
    row["metric"] = r.metric;
    row["mean_ratio"] = r.mean_ratio;
    row["n_samples"] = r.samples;
    row["n_skipped"] = r.skipped;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return Dump(j);
}

std::string RenderText(const SensitivityReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"kind", "metric", "mean_ratio", "n_samples", "n_skipped"});
  for (const SensitivityRow& r : report.rows) {
    rows.push_back({PerturbationKindName(r.kind), r.metric, Fixed(r.mean_ratio),
                    std::to_string(r.samples), std::to_string(r.skipped)});
  }
  return Table(rows) + "captionsets: " + std::to_string(report.captionsets) +
         "  samples per kind: " + std::to_string(report.samples_per_kind) +
         "  seed: " + std::to_string(report.seed) + "\n";
}

std::string RenderJson(const FitbReport& report) {
  const PairwiseScores& s = report.scores;
  ordered_json j;
  j["toolkit_version"] = report.toolkit_version;
  j["same_acc"] = s.same_acc;
  j["diff_acc"] = s.diff_acc;
  j["inst_acc"] = s.inst_acc;
  j["class_acc"] = s.class_acc;
  j["same_pairs"] = s.same_pairs;
  j["diff_pairs"] = s.diff_pairs;
  j["correct_same"] = s.correct_same;
  j["correct_diff"] = s.correct_diff;
  j["instances"] = s.instances;
  j["single_blank_instances"] = s.single_blank_instances;
  j["blanks"] = s.blanks;
  j["per_blank_acc"] = s.per_blank_acc;
  return Dump(j);
}

std::string RenderText(const FitbReport& report) {
  const PairwiseScores& s = report.scores;
  auto pct = [](double v) { return Fixed(100.0 * v, 1); };
  std::string out = Table({{"", "Same-acc", "Diff-acc", "Inst-acc", "Class-acc"},
                           {"accuracy %", pct(s.same_acc), pct(s.diff_acc), pct(s.inst_acc),
                            pct(s.class_acc)}});
  out += "same pairs: " + std::to_string(s.same_pairs) +
         "  diff pairs: " + std::to_string(s.diff_pairs) +
         "  instances: " + std::to_string(s.instances) +
         "  single-blank: " + std::to_string(s.single_blank_instances) +
         "  per-blank acc: " + pct(s.per_blank_acc) + "\n";
  return out;
}

}  // namespace idcap
