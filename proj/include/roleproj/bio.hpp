#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roleproj/types.hpp"

namespace roleproj {

enum class BioPrefix { Begin, Inside, Outside };

BioPrefix bio_prefix(std::string_view tag);

// Role name without the B-/I- prefix; "O" for outside tags. Tags that carry
// no prefix at all (headword-style "ARG1") are returned unchanged.
std::string bio_role(std::string_view tag);

bool is_outside(std::string_view tag);
bool is_verb_tag(std::string_view tag);

// Inclusive run of tags sharing one role, as produced by BIO decoding.
struct TagRun {
  std::string role;
  int start = 0;
  int end = 0;
};

// Decodes BIO spans. A span starts at every B-X; an I-X that does not
// continue a run of the same role also starts one (lenient decoding).
std::vector<TagRun> decode_bio_runs(const std::vector<std::string>& tags);

struct BioViolation {
  int token = 0;
  std::string tag;
};

// Positions of "I-X" tags not preceded by "B-X" or "I-X".
std::vector<BioViolation> find_orphan_inside_tags(const std::vector<std::string>& tags);

// Rewrites each orphan "I-X" to "B-X" and returns the positions touched.
std::vector<BioViolation> repair_orphan_inside_tags(std::vector<std::string>& tags);

// Checks every SRLFrame invariant against a sentence of the given length.
// Throws StructuralError or BioSequenceError.
void validate_frame(const SRLFrame& frame, std::size_t sentence_length);

}  // namespace roleproj
