// Copyright 2026 The dsent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsent/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsent/corpus.h"
#include "dsent/errors.h"
#include "dsent/labeler.h"
#include "dsent/lexicon.h"
#include "dsent/model_io.h"
#include "dsent/pipeline.h"
#include "dsent/utf8.h"

namespace dsent {
namespace {

using Json = nlohmann::ordered_json;

// Flag combination the parser cannot express; reported like a parse error.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct BuildCorpusFlags {
  std::string input;
  std::string output;
  std::string lexicon;
  bool dedup = false;
  unsigned threads = 1;
};

struct TrainFlags {
  std::string corpus;
  std::string repr = "tfidf";
  std::string embeddings;
  std::string model_out;
  uint32_t epochs = 5;
  uint32_t batch_size = 64;
  double learning_rate = 0.1;
  double l2 = 1e-5;
  uint64_t min_df = 2;
  uint64_t seed = 42;
  unsigned threads = 1;
};

struct EvaluateFlags {
  std::string model;
  std::vector<std::string> datasets;
  std::vector<std::string> dataset_names;
  std::string method;
  bool hybrid = false;
  std::string sent_lexicon;
  std::string embeddings;
  std::string records = "eval_report.jsonl";
  double threshold = 0.5;
  size_t window = 3;
  size_t window_after = 0;
  std::string tie = "pos";
  unsigned threads = 1;
};

struct PredictFlags {
  std::string model;
  std::string text;
  bool use_stdin = false;
  std::string embeddings;
};

struct StatsFlags {
  std::string corpus;
};

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", p);
  return buf;
}

void warn_malformed(const LabeledCorpus& corpus, const std::string& path,
                    std::ostream& err) {
  for (const auto& m : corpus.malformed) {
    err << "warning: " << path << ":" << m.line << ": " << m.reason << '\n';
  }
}

std::optional<EmbeddingTable> maybe_load_embeddings(const std::string& path,
                                                    std::ostream& err) {
  if (path.empty()) return std::nullopt;
  std::vector<std::string> warnings;
  auto table = load_embeddings(path, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return table;
}

int cmd_build_corpus(const BuildCorpusFlags& f, std::ostream& out,
                     std::ostream& err) {
  const MarkerLexicon lex =
      f.lexicon.empty() ? default_marker_lexicon() : load_marker_lexicon(f.lexicon);
  BuildOptions options;
  options.dedup = f.dedup;
  options.threads = f.threads;

  Json config;
  config["command"] = "build-corpus";
  config["input"] = f.input;
  config["output"] = f.output;
  config["lexicon"] = f.lexicon.empty() ? "builtin" : f.lexicon;
  config["dedup"] = f.dedup;
  out << "# config " << config.dump() << '\n';

  const CorpusStats stats = build_corpus_file(f.input, f.output, lex, options);
  out << "total_seen\t" << stats.total_seen << '\n'
      << "kept_positive\t" << stats.kept_positive << '\n'
      << "kept_negative\t" << stats.kept_negative << '\n';
  for (size_t r = 0; r < kNumDiscardReasons; ++r) {
    out << "discarded_" << discard_reason_name(static_cast<DiscardReason>(r))
        << '\t' << stats.discarded[r] << '\n';
  }
  out << "malformed\t" << stats.malformed << '\n'
      << "duplicates\t" << stats.duplicates << '\n';
  if (stats.malformed) {
    err << "warning: skipped " << stats.malformed << " malformed input lines\n";
  }
  if (!stats.conserved()) {
    err << "error: corpus statistics do not add up\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_train(const TrainFlags& f, std::ostream& out, std::ostream& err) {
  TrainConfig config;
  config.representation =
      f.repr == "w2v" ? Representation::kEmbeddingAverage : Representation::kTfIdf;
  if (config.representation == Representation::kEmbeddingAverage &&
      f.embeddings.empty()) {
    throw UsageError("--repr w2v requires --embeddings");
  }
  config.min_df = f.min_df;
  config.threads = f.threads;
  config.sgd.seed = f.seed;
  config.sgd.epochs = f.epochs;
  config.sgd.batch_size = f.batch_size;
  config.sgd.learning_rate = f.learning_rate;
  config.sgd.l2_strength = f.l2;

  Json provenance;
  provenance["command"] = "train";
  provenance["corpus"] = f.corpus;
  provenance["repr"] = f.repr;
  provenance["embeddings"] = f.embeddings;
  provenance["epochs"] = f.epochs;
  provenance["batch_size"] = f.batch_size;
  provenance["learning_rate"] = f.learning_rate;
  provenance["l2"] = f.l2;
  provenance["min_df"] = f.min_df;
  provenance["seed"] = f.seed;
  err << "# config " << provenance.dump() << '\n';

  const LabeledCorpus corpus = read_labeled_corpus(f.corpus);
  warn_malformed(corpus, f.corpus, err);
  if (corpus.records.empty()) throw UsageError("corpus " + f.corpus + " is empty");

  const auto embeddings = maybe_load_embeddings(f.embeddings, err);
  ModelBundle bundle = train_model(
      corpus.records, config, embeddings ? &*embeddings : nullptr,
      [&err](uint32_t epoch, double loss) {
        err << "epoch " << epoch << " loss " << loss << '\n';
      });
  bundle.provenance = provenance.dump();
  save_model_file(bundle, f.model_out);
  err << "wrote " << f.model_out << " (" << bundle.classifier.dimension()
      << " features, " << corpus.records.size() << " documents)\n";
  (void)out;
  return kExitOk;
}

int cmd_evaluate(const EvaluateFlags& f, std::ostream& out, std::ostream& err) {
  if (f.hybrid && f.sent_lexicon.empty()) {
    throw UsageError("--hybrid requires --sent-lexicon");
  }
  if (!f.dataset_names.empty() && f.dataset_names.size() != f.datasets.size()) {
    throw UsageError("--dataset-name must be given once per --dataset");
  }
  if (f.tie != "pos" && f.tie != "neg") throw UsageError("--tie must be pos or neg");

  PolarityClassifier classifier(load_model_file(f.model),
                                maybe_load_embeddings(f.embeddings, err));
  if (f.hybrid) {
    SentimentLexicon lexicon = f.sent_lexicon == "builtin"
                                   ? default_sentiment_lexicon()
                                   : load_sentiment_lexicon(f.sent_lexicon);
    LexicalRuleConfig rules;
    rules.window = f.window;
    rules.window_after = f.window_after;
    rules.tie_label = *parse_polarity_label(f.tie);
    classifier.enable_hybrid(std::move(lexicon), HybridConfig{f.threshold}, rules);
  }
  const std::string method = f.method.empty() ? classifier.method_name() : f.method;

  Json config;
  config["command"] = "evaluate";
  config["model"] = f.model;
  config["datasets"] = f.datasets;
  config["method"] = method;
  config["hybrid"] = f.hybrid;
  if (f.hybrid) {
    config["sent_lexicon"] = f.sent_lexicon;
    config["threshold"] = f.threshold;
    config["window"] = f.window;
    config["window_after"] = f.window_after;
    config["tie"] = f.tie;
  }
  out << "# config " << config.dump() << '\n';

  std::vector<EvalReport> reports;
  for (size_t i = 0; i < f.datasets.size(); ++i) {
    const LabeledCorpus data = read_labeled_corpus(f.datasets[i]);
    warn_malformed(data, f.datasets[i], err);
    if (data.records.empty()) {
      throw UsageError("dataset " + f.datasets[i] + " is empty");
    }
    const std::string name =
        f.dataset_names.empty()
            ? std::filesystem::path(f.datasets[i]).stem().string()
            : f.dataset_names[i];
    reports.push_back(
        evaluate_dataset(classifier, data.records, name, method, f.threads));
  }
  out << render_report(reports);

  std::ofstream records(f.records, std::ios::binary | std::ios::trunc);
  if (!records) throw IoError("cannot write " + f.records);
  write_report_records(reports, records);
  records.close();
  if (!records) throw IoError("write error on " + f.records);
  return kExitOk;
}

int cmd_predict(const PredictFlags& f, std::istream& in, std::ostream& out,
                std::ostream& err) {
  if (f.text.empty() == !f.use_stdin) {
    throw UsageError("exactly one of --text or --stdin is required");
  }
  PolarityClassifier classifier(load_model_file(f.model),
                                maybe_load_embeddings(f.embeddings, err));
  Json config;
  config["command"] = "predict";
  config["model"] = f.model;
  config["method"] = classifier.method_name();
  err << "# config " << config.dump() << '\n';

  size_t decode_errors = 0;
  const auto emit = [&](std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!is_valid_utf8(line)) {
      ++decode_errors;
      out << "invalid\t-\n";
      return;
    }
    const Prediction p = classifier.classify(line);
    out << polarity_label(p.label) << '\t' << format_prob(p.probability.value_or(0.5))
        << '\n';
  };
  if (f.use_stdin) {
    std::string line;
    while (std::getline(in, line)) emit(line);
  } else {
    emit(f.text);
  }
  if (decode_errors) {
    err << "error: " << decode_errors << " input lines are not valid UTF-8\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_stats(const StatsFlags& f, std::ostream& out, std::ostream& err) {
  const LabeledCorpus corpus = read_labeled_corpus(f.corpus);
  warn_malformed(corpus, f.corpus, err);
  const size_t pos = corpus.count(Polarity::kPositive);
  const size_t neg = corpus.count(Polarity::kNegative);
  out << "pos " << pos << ", neg " << neg << '\n';
  out << "lines " << corpus.lines_read << ", malformed " << corpus.malformed.size()
      << '\n';

  std::map<size_t, size_t> histogram;
  for (const auto& r : corpus.records) ++histogram[tokenize(r.text).size()];
  out << "tokens\tdocuments\n";
  for (const auto& [length, count] : histogram) {
    out << length << '\t' << count << '\n';
  }
  if (pos + neg + corpus.malformed.size() != corpus.lines_read) {
    err << "error: line counts do not add up\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Distant-supervision sentiment corpus builder and classifier", "dsent"};
  app.require_subcommand(1);

  BuildCorpusFlags build;
  auto* build_cmd = app.add_subcommand(
      "build-corpus", "Label raw messages by emoticon/emoji markers");
  build_cmd->add_option("--input", build.input, "Raw messages, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--output", build.output, "Labeled corpus to write")
      ->required();
  build_cmd->add_option("--lexicon", build.lexicon, "Marker lexicon file")
      ->envname("DSENT_MARKER_LEXICON")
      ->check(CLI::ExistingFile);
  build_cmd->add_flag("--dedup", build.dedup, "Drop exact duplicate messages");
  build_cmd->add_option("--threads", build.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  TrainFlags train;
  auto* train_cmd = app.add_subcommand("train", "Train a logistic-regression model");
  train_cmd->add_option("--corpus", train.corpus, "Labeled training corpus")
      ->required()
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--repr", train.repr, "Document representation")
      ->check(CLI::IsMember({"tfidf", "w2v"}));
  train_cmd->add_option("--embeddings", train.embeddings, "Pretrained word vectors")
      ->envname("DSENT_EMBEDDINGS")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--model-out", train.model_out, "Model file to write")
      ->required();
  train_cmd->add_option("--epochs", train.epochs)->check(CLI::Range(1u, 100000u));
  train_cmd->add_option("--batch-size", train.batch_size)->check(CLI::Range(1u, 1u << 24));
  train_cmd->add_option("--learning-rate", train.learning_rate)
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--l2", train.l2)->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--min-df", train.min_df)->check(CLI::Range(uint64_t{1}, ~uint64_t{0}));
  train_cmd->add_option("--seed", train.seed);
  train_cmd->add_option("--threads", train.threads, "Feature-extraction threads")
      ->check(CLI::Range(1u, 256u));

  EvaluateFlags eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a model on labeled datasets");
  eval_cmd->add_option("--model", eval.model)
      ->required()
      ->envname("DSENT_MODEL")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--dataset", eval.datasets, "Labeled dataset (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--dataset-name", eval.dataset_names, "Display names");
  eval_cmd->add_option("--method", eval.method, "Method name in the report");
  eval_cmd->add_flag("--hybrid", eval.hybrid, "Defer low-margin documents to lexical rules");
  eval_cmd->add_option("--sent-lexicon", eval.sent_lexicon,
                       "Sentiment lexicon file, or 'builtin'")
      ->envname("DSENT_SENT_LEXICON");
  eval_cmd->add_option("--embeddings", eval.embeddings)
      ->envname("DSENT_EMBEDDINGS")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--records", eval.records, "Machine-readable report file")
      ->envname("DSENT_RECORDS");
  eval_cmd->add_option("--threshold", eval.threshold, "Hybrid margin threshold")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--window", eval.window, "Lexical window before a word")
      ->check(CLI::Range(size_t{1}, size_t{1000}));
  eval_cmd->add_option("--window-after", eval.window_after,
                       "Lexical window after a word");
  eval_cmd->add_option("--tie", eval.tie, "Label for a zero lexical score");
  eval_cmd->add_option("--threads", eval.threads)->check(CLI::Range(1u, 256u));

  PredictFlags predict;
  auto* predict_cmd = app.add_subcommand("predict", "Classify text");
  predict_cmd->add_option("--model", predict.model)
      ->required()
      ->envname("DSENT_MODEL")
      ->check(CLI::ExistingFile);
  auto* text_opt = predict_cmd->add_option("--text", predict.text, "A single message");
  auto* stdin_opt =
      predict_cmd->add_flag("--stdin", predict.use_stdin, "Read messages from stdin");
  text_opt->excludes(stdin_opt);
  predict_cmd->add_option("--embeddings", predict.embeddings)
      ->envname("DSENT_EMBEDDINGS")
      ->check(CLI::ExistingFile);

  StatsFlags stats;
  auto* stats_cmd = app.add_subcommand("stats", "Class counts and length histogram");
  stats_cmd->add_option("--corpus", stats.corpus)->required()->check(CLI::ExistingFile);

  std::vector<const char*> argv{"dsent"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands()[0];
    err << sub->help();
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands()[0];
  try {
    if (active == build_cmd) return cmd_build_corpus(build, out, err);
    if (active == train_cmd) return cmd_train(train, out, err);
    if (active == eval_cmd) return cmd_evaluate(eval, out, err);
    if (active == predict_cmd) return cmd_predict(predict, in, out, err);
    if (active == stats_cmd) return cmd_stats(stats, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << active->help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dsent
