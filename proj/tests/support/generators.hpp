#pragma once

// Seeded random inputs for property tests, the oracle comparison and the
// benchmarks.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/conll2009.hpp"
#include "roleproj/pipeline.hpp"
#include "roleproj/projection_json.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

// Random alignment over fixed lengths. Each cell is linked with probability
// density; unlinked tokens get an eps link with probability eps_rate.
inline roleproj::AlignmentSet alignment(Rng& rng, int src_len, int tgt_len, double density,
                                        double eps_rate = 0.3) {
  roleproj::AlignmentSet set(src_len, tgt_len);
  std::vector<bool> src_used(src_len, false), tgt_used(tgt_len, false);
  for (int s = 0; s < src_len; ++s) {
    for (int t = 0; t < tgt_len; ++t) {
      if (coin(rng, density)) {
        set.add({s, t});
        src_used[s] = tgt_used[t] = true;
      }
    }
  }
  for (int s = 0; s < src_len; ++s) {
    if (!src_used[s] && coin(rng, eps_rate)) set.add({s, roleproj::kEps});
  }
  for (int t = 0; t < tgt_len; ++t) {
    if (!tgt_used[t] && coin(rng, eps_rate)) set.add({roleproj::kEps, t});
  }
  return set;
}

// Lengths in [1, max_len], density drawn per set so sparse and dense cases
// both appear.
inline roleproj::AlignmentSet alignment(Rng& rng, int max_len) {
  const int sl = uniform(rng, 1, max_len);
  const int tl = uniform(rng, 1, max_len);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  return alignment(rng, sl, tl, density);
}

// Mostly diagonal alignment with occasional extra links, like aligner output.
inline roleproj::AlignmentSet near_diagonal(Rng& rng, int src_len, int tgt_len) {
  roleproj::AlignmentSet set(src_len, tgt_len);
  for (int s = 0; s < src_len; ++s) {
    const int t = std::min(tgt_len - 1, s * tgt_len / std::max(1, src_len));
    set.add({s, t});
    if (coin(rng, 0.15)) set.add({s, uniform(rng, 0, tgt_len - 1)});
  }
  return set;
}

inline const std::vector<std::string>& roles() {
  static const std::vector<std::string> r{"ARG0", "ARG1", "ARG2", "ARGM-TMP", "ARGM-LOC"};
  return r;
}

inline const std::vector<std::string>& words() {
  static const std::vector<std::string> w{"the", "a",  "of",   "deal", "fell", "crash",
                                          "in",  "to", "they", "saw",  "red",  "car"};
  return w;
}

inline std::vector<roleproj::Token> tokens(Rng& rng, int len) {
  static const std::vector<std::string> pos{"DT", "NN", "IN", "VBD", "JJ", "TO", "NNS"};
  std::vector<roleproj::Token> out;
  for (int i = 0; i < len; ++i) {
    roleproj::Token t;
    t.index = i;
    t.surface = pick(rng, words());
    t.pos = pick(rng, pos);
    out.push_back(std::move(t));
  }
  return out;
}

// Valid BIO frame: one B-V at predicate, random non-overlapping role spans
// elsewhere.
inline roleproj::SRLFrame frame(Rng& rng, int len) {
  roleproj::SRLFrame f;
  f.predicate_index = uniform(rng, 0, len - 1);
  f.tags.assign(len, "O");
  f.tags[f.predicate_index] = "B-V";
  int i = 0;
  while (i < len) {
    if (i == f.predicate_index || !coin(rng, 0.5)) {
      ++i;
      continue;
    }
    const std::string& role = pick(rng, roles());
    int end = i;
    const int want = uniform(rng, 0, 3);
    while (end + 1 < len && end + 1 != f.predicate_index && end - i < want) ++end;
    f.tags[i] = "B-" + role;
    for (int k = i + 1; k <= end; ++k) f.tags[k] = "I-" + role;
    i = end + 1;
  }
  return f;
}

inline roleproj::SentenceInput sentence(Rng& rng, int max_len, int max_frames, std::string id) {
  roleproj::SentenceInput in;
  in.id = std::move(id);
  const int sl = uniform(rng, 1, max_len);
  const int tl = uniform(rng, 1, max_len);
  in.src = tokens(rng, sl);
  in.tgt = tokens(rng, tl);
  const int nf = uniform(rng, 0, max_frames);
  for (int k = 0; k < nf; ++k) in.frames.push_back(frame(rng, sl));
  in.alignment = coin(rng, 0.5) ? near_diagonal(rng, sl, tl)
                                : alignment(rng, sl, tl, 0.25);
  return in;
}

inline std::vector<roleproj::SentenceInput> corpus(Rng& rng, int sentences, int max_len,
                                                   int max_frames) {
  std::vector<roleproj::SentenceInput> out;
  for (int i = 0; i < sentences; ++i) {
    out.push_back(sentence(rng, max_len, max_frames, "s" + std::to_string(i)));
  }
  return out;
}

// CoNLL-2009 sentence with the given number of FILLPRED=Y rows. POS of a
// predicate row is a verb tag unless it is picked as spurious.
inline roleproj::Conll2009Sentence conll_sentence(Rng& rng, int len, int predicates,
                                                  int spurious, std::size_t ordinal) {
  using namespace roleproj;
  Conll2009Sentence s;
  s.ordinal = ordinal;
  std::vector<int> rows(len);
  for (int i = 0; i < len; ++i) rows[i] = i;
  std::shuffle(rows.begin(), rows.end(), rng);
  rows.resize(predicates);
  std::sort(rows.begin(), rows.end());
  std::vector<bool> is_pred(len, false), is_spurious(len, false);
  for (int r : rows) is_pred[r] = true;
  std::vector<int> shuffled = rows;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (int k = 0; k < spurious; ++k) is_spurious[shuffled[k]] = true;

  static const std::vector<std::string> verb_pos{"VB", "VBD", "VBZ", "VBN"};
  static const std::vector<std::string> other_pos{"NN", "JJ", "IN", "DT", "NNS"};
  static const std::vector<std::string> labels{"A0", "A1", "A2", "AM-TMP"};
  for (int i = 0; i < len; ++i) {
    const std::string form = pick(rng, words());
    std::string pos = is_pred[i] ? (is_spurious[i] ? pick(rng, other_pos) : pick(rng, verb_pos))
                                 : pick(rng, other_pos);
    // Some rows carry the tag only in PPOS.
    const bool ppos_only = coin(rng, 0.2);
    Conll2009Row row{std::to_string(i + 1), form, form, form, ppos_only ? "_" : pos, pos, "_", "_",
                     std::to_string(uniform(rng, 0, len)), "_", "DEP", "_",
                     is_pred[i] ? "Y" : "_", is_pred[i] ? form + ".01" : "_"};
    for (int k = 0; k < predicates; ++k) row.push_back(coin(rng, 0.3) ? pick(rng, labels) : "_");
    s.rows.push_back(std::move(row));
  }
  s.apred_count = static_cast<std::size_t>(predicates);
  return s;
}

inline std::vector<roleproj::Conll2009Sentence> conll_document(Rng& rng, int sentences) {
  std::vector<roleproj::Conll2009Sentence> doc;
  for (int i = 0; i < sentences; ++i) {
    const int len = uniform(rng, 1, 10);
    const int preds = uniform(rng, 0, len);
    const int spurious = uniform(rng, 0, preds);
    doc.push_back(conll_sentence(rng, len, preds, spurious, static_cast<std::size_t>(i + 1)));
  }
  return doc;
}

inline roleproj::RemediationEntry log_entry(Rng& rng) {
  using namespace roleproj;
  RemediationEntry e;
  e.action = static_cast<RemediationAction>(uniform(rng, 0, 2));
  e.reason = static_cast<RemediationReason>(uniform(rng, 0, 4));
  e.level = static_cast<RemediationLevel>(uniform(rng, 0, 1));
  e.link = {uniform(rng, 0, 9), coin(rng, 0.1) ? kEps : uniform(rng, 0, 9)};
  return e;
}

// Unicode, quotes and backslashes exercise JSON escaping.
inline std::string json_word(Rng& rng) {
  static const std::vector<std::string> w{"écrasement", "d'", "\"quoted\"", "back\\slash",
                                          "tab\there", "ε", "1987", "l'", "a"};
  return pick(rng, w);
}

inline roleproj::ProjectionRecord projection_record(Rng& rng) {
  using namespace roleproj;
  ProjectionRecord r;
  r.id = "id-" + json_word(rng);
  const int sl = uniform(rng, 0, 8);
  const int tl = uniform(rng, 0, 8);
  for (int i = 0; i < sl; ++i) r.src_tokens.push_back(json_word(rng));
  for (int i = 0; i < tl; ++i) r.tgt_tokens.push_back(json_word(rng));
  const int nf = uniform(rng, 0, 3);
  for (int k = 0; k < nf; ++k) {
    ProjectedFrame f;
    f.predicate_src = uniform(rng, 0, 9);
    if (coin(rng, 0.7)) f.predicate_tgt = uniform(rng, 0, 9);
    const int nr = uniform(rng, 0, 4);
    for (int i = 0; i < nr; ++i) {
      f.roles.push_back({uniform(rng, 0, 9), (coin(rng, 0.5) ? "B-" : "I-") + pick(rng, roles()),
                         uniform(rng, 0, 9)});
    }
    r.frames.push_back(std::move(f));
  }
  const int nl = uniform(rng, 0, 5);
  for (int i = 0; i < nl; ++i) r.remediation_log.push_back(log_entry(rng));
  return r;
}

}  // namespace gen
