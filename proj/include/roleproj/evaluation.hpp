#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/projection_json.hpp"

namespace roleproj {

// Non-negative rational kept in lowest terms; 0/0 is normalised to 0/1.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Fraction of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Fraction&) const = default;
};

enum class EvalLevel { Word, Phrase };

std::string to_string(EvalLevel level);

struct EvalReport {
  EvalLevel level = EvalLevel::Word;
  std::int64_t correct = 0;
  std::int64_t predicted = 0;
  std::int64_t gold = 0;

  Fraction precision() const { return Fraction::of(correct, predicted); }
  Fraction recall() const { return Fraction::of(correct, gold); }
  // 2PR/(P+R), which reduces to 2c/(predicted+gold).
  Fraction f1() const { return Fraction::of(2 * correct, predicted + gold); }
};

// One labelled target token of one frame. Frames are keyed by their source
// predicate index.
struct LabeledToken {
  int frame = 0;
  int tgt = 0;
  std::string label;
};

struct LabeledSpan {
  int frame = 0;
  std::string role;
  int start = 0;
  int end = 0;
};

template <typename T>
struct EvalSentence {
  std::string id;
  std::vector<T> items;
};

using WordSentence = EvalSentence<LabeledToken>;
using SpanSentence = EvalSentence<LabeledSpan>;

// Correct iff (sentence, frame, target index, role) matches gold, B-/I-
// prefixes ignored. Sentences are paired by position; differing counts or ids
// raise CorpusMismatchError.
EvalReport eval_word_level(const std::vector<WordSentence>& pred,
                           const std::vector<WordSentence>& gold);

// Correct iff role and exact target span match a gold span of the same frame.
EvalReport eval_phrase_level(const std::vector<SpanSentence>& pred,
                             const std::vector<SpanSentence>& gold);

WordSentence word_items(const ProjectionRecord& record);
// Spans are decoded from the frame's labels laid over the target sentence.
SpanSentence span_items(const ProjectionRecord& record);

struct TableRow {
  std::string model;
  std::string language;
  EvalReport report;
};

// Plain-text table with columns Model, Language, Level, P, R, F1; scores as
// percentages with one decimal.
std::string render_eval_table(const std::vector<TableRow>& rows);
std::string eval_report_json(const EvalReport& report);

struct MisalignmentReport {
  struct Sentence {
    int src_misaligned = 0;
    int tgt_misaligned = 0;
    int src_len = 0;
    int tgt_len = 0;

    bool operator==(const Sentence&) const = default;
  };
  std::vector<Sentence> per_sentence;

  double avg_src_misaligned() const;
  double avg_tgt_misaligned() const;
  double avg_src_len() const;
  double avg_tgt_len() const;
  // Average misaligned count over average sentence length, times 100.
  double src_percent() const;
  double tgt_percent() const;

  bool operator==(const MisalignmentReport&) const = default;
};

// A token is misaligned when its degree is not exactly 1.
MisalignmentReport::Sentence count_misaligned(const AlignmentSet& set);
MisalignmentReport misalignment_metric(const std::vector<AlignmentSet>& sets);
MisalignmentReport misalignment_metric_serial(const std::vector<AlignmentSet>& sets);

std::string misalignment_json(const MisalignmentReport& report);

}  // namespace roleproj
