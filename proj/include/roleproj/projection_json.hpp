#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roleproj/projection.hpp"
#include "roleproj/remediation.hpp"

namespace roleproj {

// Sentence-level projection output, one JSON object per line.
struct ProjectionRecord {
  std::string id;
  std::vector<std::string> src_tokens;
  std::vector<std::string> tgt_tokens;
  std::vector<ProjectedFrame> frames;
  std::vector<RemediationEntry> remediation_log;

  bool operator==(const ProjectionRecord&) const = default;
};

// Keys are emitted in schema order: id, src_tokens, tgt_tokens, frames,
// remediation_log. Output is a single line without a trailing newline.
std::string write_projection_json(const ProjectionRecord& record);
ProjectionRecord parse_projection_json(std::string_view text, std::size_t line = 0);

// Remediated alignment of one sentence: the token-level links, the sentence
// log that goes into the projection record, and the per-frame alignments.
struct RemediationRecord {
  struct Frame {
    int predicate_src = 0;
    RemediatedAlignment alignment;

    bool operator==(const Frame&) const = default;
  };

  std::string id;
  RemediatedAlignment token_level;
  std::vector<RemediationEntry> log;
  std::vector<Frame> frames;

  bool operator==(const RemediationRecord&) const = default;
};

std::string write_remediation_json(const RemediationRecord& record);
RemediationRecord parse_remediation_json(std::string_view text, std::size_t line = 0);

}  // namespace roleproj
