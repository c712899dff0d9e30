#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roleproj/projection.hpp"
#include "roleproj/projection_json.hpp"
#include "roleproj/remediation.hpp"
#include "roleproj/types.hpp"

namespace roleproj {

enum class LabelStyle {
  Tag,   // "[B-ARG1]"
  Role,  // "[ARG1]"
};

struct ViewOptions {
  bool show_positions = true;
  LabelStyle labels = LabelStyle::Tag;
  // "ε" instead of "eps" and combining strike-through instead of "~~".
  bool unicode = false;
};

// One line per kept link, per removed link (from the log) and per token that
// appears in neither. Lines look like "[TAG] surface --- [TAG] surface ; s-t";
// removed links are prefixed with "~~" and show the bare target surface.
// Without a frame, cells carry surfaces only.
std::string render_alignment_view(const SentencePair& pair, const RemediatedAlignment& rem,
                                  const SRLFrame* frame, const std::vector<TargetTag>* tags,
                                  const ViewOptions& options = {});

std::string render_projection_json(const ProjectionRecord& record);

// "<id>.<frame>.align.txt", or "<id>.align.txt" when frame is empty. Characters
// outside [A-Za-z0-9._-] in the id become '_'.
std::string view_file_name(const std::string& id, std::optional<std::size_t> frame);

}  // namespace roleproj
