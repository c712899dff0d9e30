#include "roleproj/alignment_graph.hpp"

#include <algorithm>
#include <map>

#include "roleproj/errors.hpp"

namespace roleproj {

AlignmentSet::AlignmentSet(int src_len, int tgt_len) : src_len_(src_len), tgt_len_(tgt_len) {
  if (src_len < 0 || tgt_len < 0) throw RangeError("negative sentence length");
}

void AlignmentSet::add(Link link) {
  if (!link.aligned() && link.src == kEps && link.tgt == kEps) {
    throw RangeError("link (eps, eps) is not allowed");
  }
  if (link.src != kEps && (link.src < 0 || link.src >= src_len_)) {
    throw RangeError("source index " + std::to_string(link.src) +
                     " out of range for source length " + std::to_string(src_len_));
  }
  if (link.tgt != kEps && (link.tgt < 0 || link.tgt >= tgt_len_)) {
    throw RangeError("target index " + std::to_string(link.tgt) +
                     " out of range for target length " + std::to_string(tgt_len_));
  }
  links_.insert(link);
}

std::vector<Link> AlignmentSet::aligned_links() const {
  std::vector<Link> out;
  for (const Link& l : links_) {
    if (l.aligned()) out.push_back(l);
  }
  return out;
}

Degrees degrees(const AlignmentSet& set) {
  Degrees d{std::vector<int>(set.src_len(), 0), std::vector<int>(set.tgt_len(), 0)};
  for (const Link& l : set.links()) {
    if (!l.aligned()) continue;
    ++d.src[l.src];
    ++d.tgt[l.tgt];
  }
  return d;
}

LinkPartition partition(const AlignmentSet& set) {
  const Degrees deg = degrees(set);
  LinkPartition p;
  // std::map keeps groups in ascending key order; links() iterates in
  // (src, tgt) order, so member lists come out ascending as well.
  std::map<int, std::vector<int>> by_src;
  std::map<int, std::vector<int>> by_tgt;
  for (const Link& l : set.links()) {
    if (l.src == kEps) {
      p.tgt_unaligned.push_back(l.tgt);
      continue;
    }
    if (l.tgt == kEps) {
      p.src_unaligned.push_back(l.src);
      continue;
    }
    const bool multi_src = deg.src[l.src] > 1;
    const bool multi_tgt = deg.tgt[l.tgt] > 1;
    if (!multi_src && !multi_tgt) p.one_to_one.push_back(l);
    if (multi_src) by_src[l.src].push_back(l.tgt);
    if (multi_tgt) by_tgt[l.tgt].push_back(l.src);
  }
  for (auto& [src, tgts] : by_src) p.one_to_many.push_back({src, std::move(tgts)});
  for (auto& [tgt, srcs] : by_tgt) p.many_to_one.push_back({std::move(srcs), tgt});
  std::sort(p.tgt_unaligned.begin(), p.tgt_unaligned.end());
  return p;
}

DivergenceReport detect_divergences(const AlignmentSet& set) {
  const Degrees deg = degrees(set);
  DivergenceReport r;
  for (int d : deg.src) r.one_to_many_groups += d > 1 ? 1 : 0;
  for (int d : deg.tgt) r.many_to_one_groups += d > 1 ? 1 : 0;
  for (const Link& l : set.links()) {
    if (l.aligned()) {
      if (deg.src[l.src] > 1 && deg.tgt[l.tgt] > 1) r.ordering_links.push_back(l);
    } else if (l.src == kEps) {
      if (deg.tgt[l.tgt] > 0) r.tgt_eps_conflicts.push_back(l.tgt);
    } else if (deg.src[l.src] > 0) {
      r.src_eps_conflicts.push_back(l.src);
    }
  }
  std::sort(r.tgt_eps_conflicts.begin(), r.tgt_eps_conflicts.end());
  return r;
}

}  // namespace roleproj
