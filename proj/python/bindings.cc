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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsent/corpus.h"
#include "dsent/eval.h"
#include "dsent/features.h"
#include "dsent/hybrid.h"
#include "dsent/labeler.h"
#include "dsent/lexical.h"
#include "dsent/lexicon.h"
#include "dsent/model_io.h"
#include "dsent/pipeline.h"
#include "dsent/tokenizer.h"

namespace py = pybind11;

namespace {

dsent::TokenizedDocument to_document(const std::vector<dsent::Token>& tokens,
                                     const std::string& id) {
  return dsent::TokenizedDocument{id, tokens};
}

py::object label_outcome(const dsent::LabelOutcome& outcome) {
  if (const auto* reason = std::get_if<dsent::DiscardReason>(&outcome)) {
    return py::cast(*reason);
  }
  return py::cast(std::get<dsent::LabeledDocument>(outcome));
}

}  // namespace

PYBIND11_MODULE(_dsent, m) {
  m.doc() = "Distant-supervision sentiment toolkit";

  py::register_exception<dsent::Error>(m, "Error", PyExc_RuntimeError);

  py::enum_<dsent::Polarity>(m, "Polarity")
      .value("Positive", dsent::Polarity::kPositive)
      .value("Negative", dsent::Polarity::kNegative);

  py::enum_<dsent::TokenKind>(m, "TokenKind")
      .value("Word", dsent::TokenKind::kWord)
      .value("Emoticon", dsent::TokenKind::kEmoticon)
      .value("Emoji", dsent::TokenKind::kEmoji)
      .value("Placeholder", dsent::TokenKind::kPlaceholder);

  py::class_<dsent::Token>(m, "Token")
      .def_readonly("surface", &dsent::Token::surface)
      .def_readonly("kind", &dsent::Token::kind)
      .def_readonly("canonical", &dsent::Token::canonical)
      .def("__eq__", [](const dsent::Token& a, const dsent::Token& b) { return a == b; })
      .def("__repr__", [](const dsent::Token& t) { return "<Token " + t.surface + ">"; });

  m.def("tokenize", [](const std::string& raw) { return dsent::tokenize(raw); },
        py::arg("raw"));
  m.def("detokenize",
        [](const std::vector<dsent::Token>& tokens) { return dsent::detokenize(tokens); },
        py::arg("tokens"));

  py::class_<dsent::MarkerLexicon>(m, "MarkerLexicon")
      .def_property_readonly("positive_emoticons", &dsent::MarkerLexicon::positive_emoticons)
      .def_property_readonly("negative_emoticons", &dsent::MarkerLexicon::negative_emoticons)
      .def_property_readonly("positive_emojis",
                             [](const dsent::MarkerLexicon& l) {
                               std::vector<uint32_t> out(l.positive_emojis().begin(),
                                                         l.positive_emojis().end());
                               return out;
                             })
      .def_property_readonly("negative_emojis", [](const dsent::MarkerLexicon& l) {
        std::vector<uint32_t> out(l.negative_emojis().begin(), l.negative_emojis().end());
        return out;
      });
  m.def("default_marker_lexicon", &dsent::default_marker_lexicon,
        py::return_value_policy::reference);
  m.def("classify_marker", &dsent::classify_marker, py::arg("token"),
        py::arg("lexicon") = dsent::default_marker_lexicon());

  py::enum_<dsent::DiscardReason>(m, "DiscardReason")
      .value("Mixed", dsent::DiscardReason::kMixed)
      .value("NoMarker", dsent::DiscardReason::kNoMarker)
      .value("TooShort", dsent::DiscardReason::kTooShort);

  py::class_<dsent::LabeledDocument>(m, "LabeledDocument")
      .def_readonly("id", &dsent::LabeledDocument::id)
      .def_readonly("tokens", &dsent::LabeledDocument::tokens)
      .def_readonly("polarity", &dsent::LabeledDocument::polarity);

  m.def(
      "label_document",
      [](const std::vector<dsent::Token>& tokens, const std::string& id,
         const dsent::MarkerLexicon& lex) {
        return label_outcome(dsent::label_document(to_document(tokens, id), lex));
      },
      py::arg("tokens"), py::arg("id") = "",
      py::arg("lexicon") = dsent::default_marker_lexicon(),
      "Returns a LabeledDocument, or the DiscardReason when the document is dropped.");

  py::class_<dsent::CorpusStats>(m, "CorpusStats")
      .def_readonly("kept_positive", &dsent::CorpusStats::kept_positive)
      .def_readonly("kept_negative", &dsent::CorpusStats::kept_negative)
      .def_readonly("total_seen", &dsent::CorpusStats::total_seen)
      .def_readonly("malformed", &dsent::CorpusStats::malformed)
      .def_readonly("duplicates", &dsent::CorpusStats::duplicates)
      .def("discarded", &dsent::CorpusStats::discarded_for)
      .def("conserved", &dsent::CorpusStats::conserved);

  m.def(
      "build_corpus",
      [](const std::string& input, const std::string& output, bool dedup,
         unsigned threads) {
        dsent::BuildOptions options;
        options.dedup = dedup;
        options.threads = threads;
        py::gil_scoped_release release;
        return dsent::build_corpus_file(input, output, dsent::default_marker_lexicon(),
                                        options);
      },
      py::arg("input"), py::arg("output"), py::arg("dedup") = false,
      py::arg("threads") = 1);

  py::class_<dsent::TfIdfModel>(m, "TfIdfModel")
      .def_property_readonly("terms",
                             [](const dsent::TfIdfModel& t) { return t.vocabulary.terms(); })
      .def_property_readonly(
          "document_frequency",
          [](const dsent::TfIdfModel& t) { return t.vocabulary.document_frequency(); })
      .def_readonly("idf", &dsent::TfIdfModel::idf)
      .def_property_readonly("dimension", &dsent::TfIdfModel::dimension);
  m.def("fit_tfidf", &dsent::fit_tfidf, py::arg("corpus"), py::arg("min_df") = 2);
  m.def(
      "transform_tfidf",
      [](const dsent::TfIdfModel& model, const std::vector<std::string>& doc) {
        const auto v = dsent::transform_tfidf(model, doc);
        return py::make_tuple(v.indices, v.values);
      },
      py::arg("model"), py::arg("doc"), "Returns (indices, values).");

  py::class_<dsent::SentimentLexicon>(m, "SentimentLexicon")
      .def_readonly("word_values", &dsent::SentimentLexicon::word_values)
      .def_readonly("intensifiers", &dsent::SentimentLexicon::intensifiers)
      .def_readonly("downtoners", &dsent::SentimentLexicon::downtoners)
      .def_readonly("negations", &dsent::SentimentLexicon::negations);
  m.def("default_sentiment_lexicon", &dsent::default_sentiment_lexicon,
        py::return_value_policy::reference);
  m.def("load_sentiment_lexicon", &dsent::load_sentiment_lexicon, py::arg("path"));
  m.def(
      "lexical_score",
      [](const std::vector<std::string>& words, const dsent::SentimentLexicon& lex,
         size_t window) {
        dsent::LexicalRuleConfig cfg;
        cfg.window = window;
        return dsent::lexical_score(words, lex, cfg);
      },
      py::arg("words"), py::arg("lexicon") = dsent::default_sentiment_lexicon(),
      py::arg("window") = 3);

  py::class_<dsent::Prediction>(m, "Prediction")
      .def(py::init([](dsent::Polarity label, double confidence,
                       std::optional<double> probability) {
             return dsent::Prediction{label, confidence, probability};
           }),
           py::arg("label"), py::arg("confidence"), py::arg("probability") = py::none())
      .def_readonly("label", &dsent::Prediction::label)
      .def_readonly("confidence", &dsent::Prediction::confidence)
      .def_readonly("probability", &dsent::Prediction::probability);
  m.def(
      "lexical_classify",
      [](const std::vector<std::string>& words, const dsent::SentimentLexicon& lex) {
        return dsent::lexical_classify(words, lex);
      },
      py::arg("words"), py::arg("lexicon") = dsent::default_sentiment_lexicon());
  m.def(
      "hybrid_classify",
      [](const dsent::Prediction& base, const dsent::Prediction& lexical,
         double threshold) {
        return dsent::hybrid_classify(
            base, [&] { return lexical; }, dsent::HybridConfig{threshold});
      },
      py::arg("base"), py::arg("lexical"), py::arg("threshold") = 0.5);

  py::class_<dsent::EvalReport>(m, "EvalReport")
      .def_readonly("dataset", &dsent::EvalReport::dataset)
      .def_readonly("method", &dsent::EvalReport::method)
      .def_readonly("f1_macro", &dsent::EvalReport::f1_macro)
      .def_readonly("recall_macro", &dsent::EvalReport::recall_macro)
      .def_readonly("accuracy", &dsent::EvalReport::accuracy)
      .def_property_readonly("confusion", [](const dsent::EvalReport& r) {
        const auto& c = r.confusion;
        return py::dict(py::arg("tp") = c.tp, py::arg("fp") = c.fp,
                        py::arg("tn") = c.tn, py::arg("fn") = c.fn);
      });
  m.def(
      "confusion",
      [](const std::vector<dsent::Polarity>& predicted,
         const std::vector<dsent::Polarity>& gold) {
        const auto c = dsent::confusion(predicted, gold);
        return py::dict(py::arg("tp") = c.tp, py::arg("fp") = c.fp,
                        py::arg("tn") = c.tn, py::arg("fn") = c.fn);
      },
      py::arg("predicted"), py::arg("gold"));
  m.def(
      "metrics",
      [](uint64_t tp, uint64_t fp, uint64_t tn, uint64_t fn, std::string dataset,
         std::string method) {
        return dsent::metrics({tp, fp, tn, fn}, std::move(dataset), std::move(method));
      },
      py::arg("tp"), py::arg("fp"), py::arg("tn"), py::arg("fn"),
      py::arg("dataset") = "", py::arg("method") = "");
  m.def(
      "render_report",
      [](const std::vector<dsent::EvalReport>& reports) {
        return dsent::render_report(reports);
      },
      py::arg("reports"));

  py::class_<dsent::PolarityClassifier>(m, "PolarityClassifier")
      .def("classify", &dsent::PolarityClassifier::classify, py::arg("text"))
      .def("enable_hybrid",
           [](dsent::PolarityClassifier& c, const dsent::SentimentLexicon& lex,
              double threshold) {
             c.enable_hybrid(lex, dsent::HybridConfig{threshold});
           },
           py::arg("lexicon") = dsent::default_sentiment_lexicon(),
           py::arg("threshold") = 0.5)
      .def_property_readonly("method_name", &dsent::PolarityClassifier::method_name)
      .def(
          "evaluate",
          [](const dsent::PolarityClassifier& c, const std::string& path,
             const std::string& name) {
            const auto data = dsent::read_labeled_corpus(path);
            return dsent::evaluate_dataset(c, data.records, name, c.method_name());
          },
          py::arg("path"), py::arg("name") = "dataset");

  m.def(
      "train",
      [](const std::string& corpus_path, const std::string& model_out, uint64_t seed,
         uint32_t epochs, uint64_t min_df) {
        const auto corpus = dsent::read_labeled_corpus(corpus_path);
        dsent::TrainConfig config;
        config.sgd.seed = seed;
        config.sgd.epochs = epochs;
        config.min_df = min_df;
        py::gil_scoped_release release;
        const auto bundle = dsent::train_model(corpus.records, config);
        dsent::save_model_file(bundle, model_out);
      },
      py::arg("corpus"), py::arg("model_out"), py::arg("seed") = 42,
      py::arg("epochs") = 5, py::arg("min_df") = 2,
      "Trains an LR + tfidf model on a labeled corpus and writes it to model_out.");
  m.def(
      "load_model",
      [](const std::string& path) {
        return dsent::PolarityClassifier(dsent::load_model_file(path));
      },
      py::arg("path"));
}
