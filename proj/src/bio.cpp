#include "roleproj/bio.hpp"

#include "roleproj/errors.hpp"

namespace roleproj {

std::vector<Token> make_tokens(const std::vector<std::string>& surfaces) {
  std::vector<Token> tokens;
  tokens.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    Token t;
    t.index = static_cast<int>(i);
    t.surface = surfaces[i];
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

BioPrefix bio_prefix(std::string_view tag) {
  if (tag.size() >= 2 && tag[1] == '-') {
    if (tag[0] == 'B') return BioPrefix::Begin;
    if (tag[0] == 'I') return BioPrefix::Inside;
  }
  return BioPrefix::Outside;
}

std::string bio_role(std::string_view tag) {
  if (bio_prefix(tag) != BioPrefix::Outside) return std::string(tag.substr(2));
  return std::string(tag);
}

bool is_outside(std::string_view tag) { return tag.empty() || tag == "O"; }

bool is_verb_tag(std::string_view tag) { return bio_role(tag) == "V"; }

std::vector<TagRun> decode_bio_runs(const std::vector<std::string>& tags) {
  std::vector<TagRun> runs;
  bool open = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string& tag = tags[i];
    const int pos = static_cast<int>(i);
    if (is_outside(tag)) {
      open = false;
      continue;
    }
    const BioPrefix prefix = bio_prefix(tag);
    std::string role = bio_role(tag);
    if (prefix == BioPrefix::Inside && open && runs.back().role == role) {
      runs.back().end = pos;
      continue;
    }
    runs.push_back({std::move(role), pos, pos});
    open = true;
  }
  return runs;
}

std::vector<BioViolation> find_orphan_inside_tags(const std::vector<std::string>& tags) {
  std::vector<BioViolation> out;
  std::string previous_role;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string& tag = tags[i];
    const std::string role = is_outside(tag) ? "" : bio_role(tag);
    if (bio_prefix(tag) == BioPrefix::Inside && role != previous_role) {
      out.push_back({static_cast<int>(i), tag});
    }
    previous_role = role;
  }
  return out;
}

std::vector<BioViolation> repair_orphan_inside_tags(std::vector<std::string>& tags) {
  // Repairing position i turns it into B-X, which legitimizes a following
  // I-X of the same role, so a single left-to-right pass is enough.
  std::vector<BioViolation> fixed;
  std::string previous_role;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    std::string& tag = tags[i];
    const std::string role = is_outside(tag) ? "" : bio_role(tag);
    if (bio_prefix(tag) == BioPrefix::Inside && role != previous_role) {
      fixed.push_back({static_cast<int>(i), tag});
      tag = "B-" + role;
    }
    previous_role = role;
  }
  return fixed;
}

void validate_frame(const SRLFrame& frame, std::size_t sentence_length) {
  if (frame.tags.size() != sentence_length) {
    throw StructuralError("frame has " + std::to_string(frame.tags.size()) +
                          " tags for a sentence of " +
                          std::to_string(sentence_length) + " tokens");
  }
  if (auto orphans = find_orphan_inside_tags(frame.tags); !orphans.empty()) {
    throw BioSequenceError("tag '" + orphans.front().tag + "' at token " +
                           std::to_string(orphans.front().token) +
                           " has no preceding B-/I- tag of the same role");
  }
  int verb_spans = 0;
  bool predicate_in_verb = false;
  for (const auto& run : decode_bio_runs(frame.tags)) {
    if (run.role != "V") continue;
    ++verb_spans;
    if (frame.predicate_index >= run.start && frame.predicate_index <= run.end) {
      predicate_in_verb = true;
    }
  }
  if (verb_spans != 1) {
    throw BioSequenceError("frame must contain exactly one V span, found " +
                           std::to_string(verb_spans));
  }
  if (!predicate_in_verb) {
    throw BioSequenceError("predicate index " + std::to_string(frame.predicate_index) +
                           " lies outside the V span");
  }
}

}  // namespace roleproj
