#include "roleproj/conll2009.hpp"

#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

std::size_t Conll2009Sentence::predicate_count() const { return predicate_rows().size(); }

std::vector<std::size_t> Conll2009Sentence::predicate_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() > conll::kFillpred && rows[r][conll::kFillpred] == "Y") out.push_back(r);
  }
  return out;
}

namespace {

Conll2009Row split_tabs(const std::string& line) {
  Conll2009Row fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

void finish_sentence(Conll2009Document& doc, Conll2009Sentence& s, std::size_t first_line) {
  const std::string name = "sentence " + std::to_string(s.ordinal) + " (line " +
                           std::to_string(first_line) + ")";
  const std::size_t columns = s.rows.front().size();
  if (columns < conll::kFixedColumns) {
    throw StructuralError(name + ": " + std::to_string(columns) + " columns, need at least " +
                          std::to_string(conll::kFixedColumns));
  }
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    if (s.rows[r].size() != columns) {
      throw StructuralError(name + ": row " + std::to_string(r + 1) + " has " +
                            std::to_string(s.rows[r].size()) + " columns, expected " +
                            std::to_string(columns));
    }
    if (s.rows[r][conll::kId] != std::to_string(r + 1)) {
      throw StructuralError(name + ": row " + std::to_string(r + 1) + " has ID '" +
                            s.rows[r][conll::kId] + "'");
    }
  }
  s.apred_count = columns - conll::kFixedColumns;
  if (s.predicate_count() != s.apred_count) {
    doc.warnings.push_back(name + ": " + std::to_string(s.predicate_count()) +
                           " FILLPRED=Y rows but " + std::to_string(s.apred_count) +
                           " APRED columns");
  }
  doc.sentences.push_back(std::move(s));
}

}  // namespace

Conll2009Document parse_conll2009(std::string_view document) {
  Conll2009Document doc;
  Conll2009Sentence current;
  std::size_t first_line = 0;
  const auto lines = split_lines(document);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].empty()) {
      if (!current.rows.empty()) {
        finish_sentence(doc, current, first_line);
        current = Conll2009Sentence{};
      }
      continue;
    }
    if (current.rows.empty()) {
      current.ordinal = doc.sentences.size() + 1;
      first_line = n + 1;
    }
    current.rows.push_back(split_tabs(lines[n]));
  }
  if (!current.rows.empty()) finish_sentence(doc, current, first_line);
  return doc;
}

std::string write_conll2009(const std::vector<Conll2009Sentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (const auto& row : s.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += '\t';
        out += row[c];
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

HeadwordSentence headword_frames(const Conll2009Sentence& sentence) {
  HeadwordSentence out;
  for (std::size_t r = 0; r < sentence.rows.size(); ++r) {
    const auto& row = sentence.rows[r];
    Token t;
    t.index = static_cast<int>(r);
    t.surface = row[conll::kForm];
    t.lemma = row[conll::kLemma];
    t.pos = row[conll::kPos] == "_" ? row[conll::kPpos] : row[conll::kPos];
    t.is_predicate = row[conll::kFillpred] == "Y";
    out.tokens.push_back(std::move(t));
  }
  const auto preds = sentence.predicate_rows();
  for (std::size_t k = 0; k < preds.size() && k < sentence.apred_count; ++k) {
    SRLFrame frame;
    frame.predicate_index = static_cast<int>(preds[k]);
    for (std::size_t r = 0; r < sentence.rows.size(); ++r) {
      const std::string& label = sentence.apred(r, k);
      frame.tags.push_back(label == "_" ? "O" : "B-" + label);
    }
    frame.tags[preds[k]] = "B-V";
    out.frames.push_back(std::move(frame));
  }
  return out;
}

}  // namespace roleproj
