#include "idcap/cli.h"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "idcap/corpus.h"
#include "idcap/error.h"
#include "idcap/fitb_metrics.h"
#include "idcap/lexicon.h"
#include "idcap/perturbation.h"
#include "idcap/report.h"
#include "idcap/spice.h"

namespace idcap {

namespace {

struct CommonOptions {
  std::string corpus;
  std::string out;
  std::string format = "text";
  std::string lexicon;
  std::string synonyms;
  bool multiset_ids = false;
};

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write " + path);
  file << contents;
}

// With --out, the structured report goes to PATH and the text table to
// PATH.txt. Without it, stdout receives the --format rendering.
template <typename Report>
void Emit(const Report& report, const CommonOptions& opts, std::ostream& out) {
  if (!opts.out.empty()) {
    WriteFile(opts.out, RenderJson(report));
    WriteFile(opts.out + ".txt", RenderText(report));
    return;
  }
  out << (opts.format == "json" ? RenderJson(report) : RenderText(report));
}

class Environment {
 public:
  explicit Environment(const CommonOptions& opts) {
    if (!opts.lexicon.empty()) owned_lexicon_ = Lexicon::LoadFile(opts.lexicon);
    if (!opts.synonyms.empty()) {
      synonyms_ = SynonymTable::LoadFile(opts.synonyms);
      spice_options_.synonyms = &*synonyms_;
    }
    spice_options_.multiset_identities = opts.multiset_ids;
  }
  Environment(const Environment&) = delete;
  Environment& operator=(const Environment&) = delete;

  const Lexicon& lexicon() const {
    return owned_lexicon_ ? *owned_lexicon_ : BundledLexicon();
  }
  const SpiceOptions& spice_options() const { return spice_options_; }

 private:
  std::optional<Lexicon> owned_lexicon_;
  std::optional<SynonymTable> synonyms_;
  SpiceOptions spice_options_;
};

Corpus LoadCorpusReporting(const std::string& path, std::ostream& err) {
  Corpus corpus = LoadCorpus(path);
  for (const std::string& d : corpus.diagnostics) err << "note: " << d << "\n";
  return corpus;
}

void AddCommon(CLI::App* cmd, CommonOptions& opts, bool metrics) {
  cmd->add_option("--corpus", opts.corpus, "Reference corpus (JSON lines or .tsv)")
      ->required();
  cmd->add_option("--out", opts.out, "Write the JSON report here and a text table to OUT.txt");
  cmd->add_option("--format", opts.format, "Stdout format when --out is absent")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--lexicon", opts.lexicon, "Tagger lexicon file (default: bundled)");
  if (metrics) {
    cmd->add_option("--synonyms", opts.synonyms, "Tab-separated lemma synonym classes");
    cmd->add_flag("--multiset-ids", opts.multiset_ids,
                  "Score the iSPICE identity term over label counts instead of sets");
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identity-aware caption evaluation toolkit", "idcap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolkitVersion);

  CommonOptions eval_opts;
  std::string candidates;
  std::string tuples_from;
  std::uint64_t eval_seed = 0;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score candidate captionsets");
  AddCommon(evaluate, eval_opts, true);
  evaluate->add_option("--candidates", candidates, "Candidate corpus")->required();
  evaluate->add_option("--tuples-from", tuples_from,
                       "External tuples replacing the built-in extractor");
  evaluate->add_option("--seed", eval_seed, "Recorded in the report");

  CommonOptions sens_opts;
  std::uint64_t sens_seed = 0;
  int samples = 3;
  std::vector<std::string> kind_names{"swap", "add", "remove"};
  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "Identity-perturbation sensitivity of each metric");
  AddCommon(sensitivity, sens_opts, true);
  sensitivity->add_option("--seed", sens_seed, "Root seed");
  sensitivity->add_option("--samples", samples, "Perturbed samples per kind")
      ->check(CLI::PositiveNumber);
  sensitivity->add_option("--kinds", kind_names, "Perturbation kinds")
      ->delimiter(',')
      ->check(CLI::IsMember({"identity", "swap", "add", "remove"}));

  CommonOptions fitb_opts;
  std::string predictions;
  CLI::App* fitb = app.add_subcommand("fitb-score", "Pairwise fill-in-the-blanks accuracy");
  AddCommon(fitb, fitb_opts, false);
  fitb->add_option("--predictions", predictions, "Predicted labels")->required();

  CommonOptions parse_opts;
  std::string parse_tuples_from;
  CLI::App* parse = app.add_subcommand("parse-tuples", "Dump extracted scene-graph tuples");
  AddCommon(parse, parse_opts, false);
  parse->add_option("--tuples-from", parse_tuples_from, "External tuples to pass through");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (evaluate->parsed()) {
      Environment env(eval_opts);
      Corpus corpus = LoadCorpusReporting(eval_opts.corpus, err);
      AttachCandidates(corpus, ReadFile(candidates));
      if (!tuples_from.empty()) AttachExternalTuples(corpus, ReadFile(tuples_from));
      Emit(Evaluate(corpus, env.lexicon(), env.spice_options(), eval_seed), eval_opts, out);
    } else if (sensitivity->parsed()) {
      Environment env(sens_opts);
      Corpus corpus = LoadCorpusReporting(sens_opts.corpus, err);
      std::vector<Captionset> references = corpus.References();
      std::vector<PerturbationKind> kinds;
      for (const std::string& name : kind_names) kinds.push_back(*ParsePerturbationKind(name));
      auto idf = std::make_shared<const IdfTable>(BuildIdf(references));
      MetricSuite suite = DefaultMetricSuite(env.lexicon(), idf, env.spice_options());

      SensitivityReport report;
      report.rows = RunSensitivity(references, suite, kinds, samples, sens_seed);
      report.captionsets = references.size();
      report.samples_per_kind = samples;
      report.seed = sens_seed;
      report.lexicon_hash = env.lexicon().hash();
      Emit(report, sens_opts, out);
    } else if (fitb->parsed()) {
      Corpus corpus = LoadCorpusReporting(fitb_opts.corpus, err);
      AttachPredictions(corpus, ReadFile(predictions));
      std::vector<FitbInstance> instances;
      for (const CorpusEntry& e : corpus.entries) {
        if (e.fitb) instances.push_back(*e.fitb);
      }
      Emit(FitbReport{ScorePairwise(instances)}, fitb_opts, out);
    } else if (parse->parsed()) {
      Environment env(parse_opts);
      Corpus corpus = LoadCorpusReporting(parse_opts.corpus, err);
      if (!parse_tuples_from.empty()) AttachExternalTuples(corpus, ReadFile(parse_tuples_from));
      std::string dump = DumpTuples(corpus, env.lexicon());
      if (parse_opts.out.empty()) {
        out << dump;
      } else {
        WriteFile(parse_opts.out, dump);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitInputError : kExitInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace idcap
