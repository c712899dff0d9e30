#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roleproj/remediation.hpp"
#include "roleproj/types.hpp"

namespace roleproj {

struct ProjectedRole {
  int tgt = 0;
  std::string label;
  int src = 0;

  bool operator==(const ProjectedRole&) const = default;
};

struct ProjectedFrame {
  int predicate_src = 0;
  std::optional<int> predicate_tgt;
  std::vector<ProjectedRole> roles;  // assignment order, "O" excluded

  bool operator==(const ProjectedFrame&) const = default;
};

// A single target assignment, "O" included.
struct TargetTag {
  int tgt = 0;
  std::string tag;
  int src = 0;

  bool operator==(const TargetTag&) const = default;
};

struct Projection {
  ProjectedFrame frame;
  std::vector<TargetTag> tags;     // every assignment, in assignment order
  std::vector<int> eps_sources;    // sources whose eps link assigned nothing
};

enum class ProjectionMode {
  Phrase,
  // Only links whose source tag is not "O" assign a label.
  Headword,
};

// First-come first-assign: walk the links in order, copy the source tag to
// the target unless the target already holds one. Throws StructuralError when
// a link's source is outside the frame.
Projection fcfa_project(const RemediatedAlignment& rem, const SRLFrame& frame,
                        ProjectionMode mode = ProjectionMode::Phrase);

// Within each maximal same-role run (ordered by target index, "O" breaking
// runs) the first tag becomes B-, the rest I-.
std::vector<TargetTag> renormalize_bio(std::vector<TargetTag> tags);

// Applies renormalize_bio to a projection and rewrites its role labels.
void renormalize_projection(Projection& projection);

}  // namespace roleproj
