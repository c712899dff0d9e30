#include "roleproj/evaluation.hpp"

#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

#include "roleproj/bio.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

Fraction Fraction::of(std::int64_t num, std::int64_t den) {
  if (den == 0 || num == 0) return {0, 1};
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string to_string(EvalLevel level) { return level == EvalLevel::Word ? "word" : "phrase"; }

namespace {

template <typename T, typename Key>
EvalReport score(const std::vector<EvalSentence<T>>& pred,
                 const std::vector<EvalSentence<T>>& gold, EvalLevel level, Key key) {
  if (pred.size() != gold.size()) {
    throw CorpusMismatchError("prediction has " + std::to_string(pred.size()) +
                              " sentences, gold has " + std::to_string(gold.size()));
  }
  EvalReport r;
  r.level = level;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i].id != gold[i].id) {
      throw CorpusMismatchError("sentence " + std::to_string(i + 1) + ": prediction id '" +
                                pred[i].id + "' but gold id '" + gold[i].id + "'");
    }
    using K = decltype(key(pred[i].items.front()));
    std::set<K> p;
    std::set<K> g;
    for (const auto& item : pred[i].items) p.insert(key(item));
    for (const auto& item : gold[i].items) g.insert(key(item));
    r.predicted += static_cast<std::int64_t>(p.size());
    r.gold += static_cast<std::int64_t>(g.size());
    for (const auto& k : p) r.correct += static_cast<std::int64_t>(g.count(k));
  }
  return r;
}

}  // namespace

EvalReport eval_word_level(const std::vector<WordSentence>& pred,
                           const std::vector<WordSentence>& gold) {
  return score(pred, gold, EvalLevel::Word, [](const LabeledToken& t) {
    return std::make_tuple(t.frame, t.tgt, bio_role(t.label));
  });
}

EvalReport eval_phrase_level(const std::vector<SpanSentence>& pred,
                             const std::vector<SpanSentence>& gold) {
  return score(pred, gold, EvalLevel::Phrase, [](const LabeledSpan& s) {
    return std::make_tuple(s.frame, s.role, s.start, s.end);
  });
}

WordSentence word_items(const ProjectionRecord& record) {
  WordSentence out{record.id, {}};
  for (const auto& f : record.frames) {
    for (const auto& r : f.roles) out.items.push_back({f.predicate_src, r.tgt, r.label});
  }
  return out;
}

SpanSentence span_items(const ProjectionRecord& record) {
  SpanSentence out{record.id, {}};
  for (const auto& f : record.frames) {
    std::vector<std::string> tags(record.tgt_tokens.size(), "O");
    for (const auto& r : f.roles) {
      if (r.tgt < 0 || static_cast<std::size_t>(r.tgt) >= tags.size()) {
        throw RangeError("sentence '" + record.id + "': role target " + std::to_string(r.tgt) +
                         " outside a sentence of " + std::to_string(tags.size()) + " tokens");
      }
      tags[r.tgt] = r.label;
    }
    for (const auto& run : decode_bio_runs(tags)) {
      out.items.push_back({f.predicate_src, run.role, run.start, run.end});
    }
  }
  return out;
}

std::string render_eval_table(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"Model", "Language", "Level", "P", "R", "F1"}};
  auto pct = [](Fraction f) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", 100.0 * f.value());
    return std::string(buf);
  };
  for (const auto& row : rows) {
    cells.push_back({row.model, row.language, to_string(row.report.level),
                     pct(row.report.precision()), pct(row.report.recall()),
                     pct(row.report.f1())});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : cells) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) line += "  ";
      // Text columns are left aligned, scores right aligned.
      const std::string pad(width[c] - r[c].size(), ' ');
      line += c < 3 ? r[c] + pad : pad + r[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string eval_report_json(const EvalReport& report) {
  using json = nlohmann::ordered_json;
  auto frac = [](Fraction f) { return json{{"num", f.num}, {"den", f.den}, {"value", f.value()}}; };
  json j;
  j["level"] = to_string(report.level);
  j["correct"] = report.correct;
  j["predicted"] = report.predicted;
  j["gold"] = report.gold;
  j["precision"] = frac(report.precision());
  j["recall"] = frac(report.recall());
  j["f1"] = frac(report.f1());
  return j.dump(2);
}

namespace {

double mean(const std::vector<MisalignmentReport::Sentence>& v,
            int MisalignmentReport::Sentence::*field) {
  if (v.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : v) sum += s.*field;
  return sum / static_cast<double>(v.size());
}

double percent(double count, double length) { return length > 0.0 ? 100.0 * count / length : 0.0; }

}  // namespace

double MisalignmentReport::avg_src_misaligned() const {
  return mean(per_sentence, &Sentence::src_misaligned);
}
double MisalignmentReport::avg_tgt_misaligned() const {
  return mean(per_sentence, &Sentence::tgt_misaligned);
}
double MisalignmentReport::avg_src_len() const { return mean(per_sentence, &Sentence::src_len); }
double MisalignmentReport::avg_tgt_len() const { return mean(per_sentence, &Sentence::tgt_len); }
double MisalignmentReport::src_percent() const {
  return percent(avg_src_misaligned(), avg_src_len());
}
double MisalignmentReport::tgt_percent() const {
  return percent(avg_tgt_misaligned(), avg_tgt_len());
}

MisalignmentReport::Sentence count_misaligned(const AlignmentSet& set) {
  const Degrees d = degrees(set);
  MisalignmentReport::Sentence s;
  s.src_len = set.src_len();
  s.tgt_len = set.tgt_len();
  for (int deg : d.src) s.src_misaligned += deg != 1;
  for (int deg : d.tgt) s.tgt_misaligned += deg != 1;
  return s;
}

MisalignmentReport misalignment_metric_serial(const std::vector<AlignmentSet>& sets) {
  MisalignmentReport r;
  r.per_sentence.reserve(sets.size());
  for (const auto& s : sets) r.per_sentence.push_back(count_misaligned(s));
  return r;
}

MisalignmentReport misalignment_metric(const std::vector<AlignmentSet>& sets) {
  MisalignmentReport r;
  r.per_sentence.resize(sets.size());
  const long n = static_cast<long>(sets.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) r.per_sentence[i] = count_misaligned(sets[i]);
  return r;
}

std::string misalignment_json(const MisalignmentReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["sentences"] = report.per_sentence.size();
  j["src_misaligned_avg"] = report.avg_src_misaligned();
  j["tgt_misaligned_avg"] = report.avg_tgt_misaligned();
  j["src_length_avg"] = report.avg_src_len();
  j["tgt_length_avg"] = report.avg_tgt_len();
  j["src_percent"] = report.src_percent();
  j["tgt_percent"] = report.tgt_percent();
  json per = json::array();
  for (const auto& s : report.per_sentence) {
    per.push_back({{"src_misaligned", s.src_misaligned}, {"tgt_misaligned", s.tgt_misaligned},
                   {"src_len", s.src_len}, {"tgt_len", s.tgt_len}});
  }
  j["per_sentence"] = std::move(per);
  return j.dump(2);
}

}  // namespace roleproj
