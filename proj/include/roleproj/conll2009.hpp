#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roleproj/types.hpp"

namespace roleproj {

// Fixed CoNLL-2009 columns; APRED columns follow PRED.
namespace conll {
inline constexpr std::size_t kId = 0;
inline constexpr std::size_t kForm = 1;
inline constexpr std::size_t kLemma = 2;
inline constexpr std::size_t kPlemma = 3;
inline constexpr std::size_t kPos = 4;
inline constexpr std::size_t kPpos = 5;
inline constexpr std::size_t kFillpred = 12;
inline constexpr std::size_t kPred = 13;
inline constexpr std::size_t kFixedColumns = 14;
}  // namespace conll

using Conll2009Row = std::vector<std::string>;

struct Conll2009Sentence {
  std::size_t ordinal = 0;  // 1-based position in the document
  std::vector<Conll2009Row> rows;
  std::size_t apred_count = 0;

  std::size_t predicate_count() const;
  // Row indices (0-based) whose FILLPRED is "Y", in order.
  std::vector<std::size_t> predicate_rows() const;
  const std::string& apred(std::size_t row, std::size_t k) const {
    return rows[row][conll::kFixedColumns + k];
  }

  bool operator==(const Conll2009Sentence&) const = default;
};

struct Conll2009Document {
  std::vector<Conll2009Sentence> sentences;
  // Non-fatal findings, e.g. FILLPRED=Y count differing from APRED count.
  std::vector<std::string> warnings;
};

// Sentences are blank-line separated; fields are tab separated. Column-count
// inconsistencies and non-contiguous IDs raise StructuralError naming the
// sentence ordinal.
Conll2009Document parse_conll2009(std::string_view document);

// Canonical layout: rows joined by '\n', each sentence followed by one blank
// line. Well-formed input in that layout round-trips byte for byte.
std::string write_conll2009(const std::vector<Conll2009Sentence>& sentences);

// Source tokens plus one headword frame per predicate: the predicate row is
// tagged "B-V", every APRED label X becomes "B-X", "_" becomes "O".
struct HeadwordSentence {
  std::vector<Token> tokens;
  std::vector<SRLFrame> frames;
};

HeadwordSentence headword_frames(const Conll2009Sentence& sentence);

}  // namespace roleproj
