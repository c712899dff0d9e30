#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roleproj/conll2009.hpp"

namespace roleproj {

// POS patterns: "V*" matches any tag starting with "V", anything else is an
// exact match.
class PosWhitelist {
 public:
  PosWhitelist() : patterns_{"V*"} {}
  explicit PosWhitelist(std::vector<std::string> patterns);

  // Comma-separated list, e.g. "V*,NN".
  static PosWhitelist parse(std::string_view list);

  bool matches(std::string_view pos) const;
  const std::vector<std::string>& patterns() const { return patterns_; }

 private:
  std::vector<std::string> patterns_;
};

struct SpuriousPredicate {
  std::size_t sentence = 0;  // 1-based sentence ordinal
  std::string token_id;      // ID column
  std::string surface;
  std::string pos;

  bool operator==(const SpuriousPredicate&) const = default;
};

// An argument label lost because its APRED column was deleted.
struct DroppedLabel {
  std::size_t sentence = 0;
  std::string predicate_id;
  std::string token_id;
  std::string label;

  bool operator==(const DroppedLabel&) const = default;
};

struct PredicateAudit {
  std::size_t total_predicates = 0;
  std::vector<SpuriousPredicate> spurious;
  std::size_t removed = 0;
  std::vector<DroppedLabel> dropped_labels;

  bool operator==(const PredicateAudit&) const = default;
};

// A row is spurious when FILLPRED is "Y" and its POS (PPOS when POS is "_")
// matches no whitelist pattern.
PredicateAudit audit_predicates(const std::vector<Conll2009Sentence>& doc,
                                const PosWhitelist& whitelist);

struct FilterResult {
  std::vector<Conll2009Sentence> sentences;
  PredicateAudit audit;
};

// Clears FILLPRED and PRED of every spurious row and deletes the APRED column
// belonging to it. Throws StructuralError naming the sentence when its
// FILLPRED=Y count differs from its APRED column count.
FilterResult filter_spurious_predicates(const std::vector<Conll2009Sentence>& doc,
                                        const PosWhitelist& whitelist);
FilterResult filter_spurious_predicates_serial(const std::vector<Conll2009Sentence>& doc,
                                               const PosWhitelist& whitelist);

std::string audit_to_json(const PredicateAudit& audit);

}  // namespace roleproj
