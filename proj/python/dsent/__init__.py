# Copyright 2026 The dsent Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Distant-supervision sentiment corpus builder and polarity classifiers."""

from ._dsent import (
    CorpusStats,
    DiscardReason,
    Error,
    EvalReport,
    LabeledDocument,
    MarkerLexicon,
    PolarityClassifier,
    Polarity,
    Prediction,
    SentimentLexicon,
    TfIdfModel,
    Token,
    TokenKind,
    build_corpus,
    classify_marker,
    confusion,
    default_marker_lexicon,
    default_sentiment_lexicon,
    detokenize,
    fit_tfidf,
    hybrid_classify,
    label_document,
    lexical_classify,
    lexical_score,
    load_model,
    load_sentiment_lexicon,
    metrics,
    render_report,
    tokenize,
    train,
    transform_tfidf,
)

__all__ = [name for name in dir() if not name.startswith("_")]
