#include "roleproj/projection.hpp"

#include <algorithm>
#include <map>

#include "roleproj/bio.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

namespace {

std::optional<int> find_predicate_target(const std::vector<ProjectedRole>& roles,
                                         int predicate_src) {
  std::optional<int> first_verb;
  for (const auto& r : roles) {
    if (!is_verb_tag(r.label)) continue;
    if (r.src == predicate_src) return r.tgt;
    if (!first_verb) first_verb = r.tgt;
  }
  return first_verb;
}

}  // namespace

Projection fcfa_project(const RemediatedAlignment& rem, const SRLFrame& frame,
                        ProjectionMode mode) {
  Projection out;
  out.frame.predicate_src = frame.predicate_index;
  std::map<int, bool> assigned;
  for (const Link& l : rem.links) {
    if (l.src < 0 || static_cast<std::size_t>(l.src) >= frame.tags.size()) {
      throw StructuralError("link " + std::to_string(l.src) + "-" +
                            (l.tgt == kEps ? std::string("eps") : std::to_string(l.tgt)) +
                            " has a source outside the frame (" +
                            std::to_string(frame.tags.size()) + " tags)");
    }
    const std::string& tag = frame.tags[l.src];
    if (l.tgt == kEps) {
      out.eps_sources.push_back(l.src);
      continue;
    }
    if (mode == ProjectionMode::Headword && is_outside(tag)) continue;
    if (assigned[l.tgt]) continue;
    assigned[l.tgt] = true;
    out.tags.push_back({l.tgt, tag, l.src});
    if (!is_outside(tag)) out.frame.roles.push_back({l.tgt, tag, l.src});
  }
  out.frame.predicate_tgt = find_predicate_target(out.frame.roles, frame.predicate_index);
  return out;
}

std::vector<TargetTag> renormalize_bio(std::vector<TargetTag> tags) {
  std::vector<std::size_t> order(tags.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tags[a].tgt < tags[b].tgt; });
  std::string previous;
  for (std::size_t i : order) {
    TargetTag& t = tags[i];
    if (is_outside(t.tag)) {
      previous.clear();
      continue;
    }
    std::string role = bio_role(t.tag);
    t.tag = (role == previous ? "I-" : "B-") + role;
    previous = std::move(role);
  }
  return tags;
}

void renormalize_projection(Projection& projection) {
  projection.tags = renormalize_bio(std::move(projection.tags));
  std::map<int, const std::string*> by_target;
  for (const auto& t : projection.tags) by_target[t.tgt] = &t.tag;
  for (auto& r : projection.frame.roles) r.label = *by_target.at(r.tgt);
}

}  // namespace roleproj
