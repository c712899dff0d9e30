#include "roleproj/diagnostics.hpp"

#include <exception>
#include <json.hpp>

#include "roleproj/errors.hpp"

namespace roleproj {

PosWhitelist::PosWhitelist(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw InputError("POS whitelist must not be empty");
}

PosWhitelist PosWhitelist::parse(std::string_view list) {
  std::vector<std::string> patterns;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) patterns.emplace_back(item);
    start = comma + 1;
  }
  return PosWhitelist(std::move(patterns));
}

bool PosWhitelist::matches(std::string_view pos) const {
  for (const auto& p : patterns_) {
    if (!p.empty() && p.back() == '*') {
      if (pos.substr(0, p.size() - 1) == std::string_view(p).substr(0, p.size() - 1)) return true;
    } else if (pos == p) {
      return true;
    }
  }
  return false;
}

namespace {

const std::string& row_pos(const Conll2009Row& row) {
  return row[conll::kPos] == "_" ? row[conll::kPpos] : row[conll::kPos];
}

struct SentenceAudit {
  std::size_t predicates = 0;
  std::vector<std::size_t> spurious_ordinals;  // among FILLPRED=Y rows
  std::vector<SpuriousPredicate> spurious;
};

SentenceAudit audit_sentence(const Conll2009Sentence& s, const PosWhitelist& whitelist) {
  SentenceAudit out;
  const auto preds = s.predicate_rows();
  out.predicates = preds.size();
  for (std::size_t k = 0; k < preds.size(); ++k) {
    const auto& row = s.rows[preds[k]];
    if (whitelist.matches(row_pos(row))) continue;
    out.spurious_ordinals.push_back(k);
    out.spurious.push_back({s.ordinal, row[conll::kId], row[conll::kForm], row_pos(row)});
  }
  return out;
}

struct SentenceFilter {
  Conll2009Sentence sentence;
  SentenceAudit audit;
  std::vector<DroppedLabel> dropped;
};

SentenceFilter filter_sentence(const Conll2009Sentence& s, const PosWhitelist& whitelist) {
  SentenceFilter out{s, audit_sentence(s, whitelist), {}};
  if (out.audit.predicates != s.apred_count) {
    throw StructuralError("sentence " + std::to_string(s.ordinal) + ": " +
                          std::to_string(out.audit.predicates) + " FILLPRED=Y rows but " +
                          std::to_string(s.apred_count) + " APRED columns");
  }
  if (out.audit.spurious_ordinals.empty()) return out;

  const auto preds = s.predicate_rows();
  std::vector<bool> drop(s.apred_count, false);
  for (std::size_t k : out.audit.spurious_ordinals) {
    drop[k] = true;
    for (const auto& row : s.rows) {
      const std::string& label = row[conll::kFixedColumns + k];
      if (label != "_") {
        out.dropped.push_back({s.ordinal, s.rows[preds[k]][conll::kId], row[conll::kId], label});
      }
    }
  }
  for (std::size_t k : out.audit.spurious_ordinals) {
    auto& row = out.sentence.rows[preds[k]];
    row[conll::kFillpred] = "_";
    row[conll::kPred] = "_";
  }
  for (auto& row : out.sentence.rows) {
    Conll2009Row kept(row.begin(), row.begin() + conll::kFixedColumns);
    for (std::size_t k = 0; k < s.apred_count; ++k) {
      if (!drop[k]) kept.push_back(std::move(row[conll::kFixedColumns + k]));
    }
    row = std::move(kept);
  }
  out.sentence.apred_count -= out.audit.spurious_ordinals.size();
  return out;
}

FilterResult merge(std::vector<SentenceFilter>& parts) {
  FilterResult out;
  for (auto& p : parts) {
    out.audit.total_predicates += p.audit.predicates;
    out.audit.removed += p.audit.spurious.size();
    for (auto& sp : p.audit.spurious) out.audit.spurious.push_back(std::move(sp));
    for (auto& d : p.dropped) out.audit.dropped_labels.push_back(std::move(d));
    out.sentences.push_back(std::move(p.sentence));
  }
  return out;
}

}  // namespace

PredicateAudit audit_predicates(const std::vector<Conll2009Sentence>& doc,
                                const PosWhitelist& whitelist) {
  PredicateAudit audit;
  for (const auto& s : doc) {
    auto a = audit_sentence(s, whitelist);
    audit.total_predicates += a.predicates;
    for (auto& sp : a.spurious) audit.spurious.push_back(std::move(sp));
  }
  return audit;
}

FilterResult filter_spurious_predicates_serial(const std::vector<Conll2009Sentence>& doc,
                                               const PosWhitelist& whitelist) {
  std::vector<SentenceFilter> parts;
  parts.reserve(doc.size());
  for (const auto& s : doc) parts.push_back(filter_sentence(s, whitelist));
  return merge(parts);
}

FilterResult filter_spurious_predicates(const std::vector<Conll2009Sentence>& doc,
                                        const PosWhitelist& whitelist) {
  const long n = static_cast<long>(doc.size());
  std::vector<SentenceFilter> parts(doc.size());
  // Exceptions cannot cross the parallel region; keep the first by index.
  std::vector<std::exception_ptr> errors(doc.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      parts[i] = filter_sentence(doc[i], whitelist);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return merge(parts);
}

std::string audit_to_json(const PredicateAudit& audit) {
  using json = nlohmann::ordered_json;
  json j;
  j["total_predicates"] = audit.total_predicates;
  j["removed"] = audit.removed;
  json spurious = json::array();
  for (const auto& s : audit.spurious) {
    spurious.push_back({{"sentence", s.sentence}, {"token_id", s.token_id},
                        {"surface", s.surface}, {"pos", s.pos}});
  }
  j["spurious"] = std::move(spurious);
  json dropped = json::array();
  for (const auto& d : audit.dropped_labels) {
    dropped.push_back({{"sentence", d.sentence}, {"predicate_id", d.predicate_id},
                       {"token_id", d.token_id}, {"label", d.label}});
  }
  j["dropped_labels"] = std::move(dropped);
  return j.dump(2);
}

}  // namespace roleproj
