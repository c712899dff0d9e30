#pragma once

#include <set>
#include <string>
#include <vector>

#include "roleproj/types.hpp"

namespace roleproj {

// Bipartite alignment between one source and one target sentence.
// Links are a set: inserting a duplicate is a no-op.
class AlignmentSet {
 public:
  AlignmentSet() = default;
  AlignmentSet(int src_len, int tgt_len);

  // Throws RangeError for out-of-range indices or an (eps, eps) link.
  void add(Link link);
  bool contains(Link link) const { return links_.count(link) > 0; }

  const std::set<Link>& links() const { return links_; }
  // Links with both endpoints set, in (src, tgt) order.
  std::vector<Link> aligned_links() const;

  int src_len() const { return src_len_; }
  int tgt_len() const { return tgt_len_; }
  bool empty() const { return links_.empty(); }
  std::size_t size() const { return links_.size(); }

  bool operator==(const AlignmentSet&) const = default;

 private:
  int src_len_ = 0;
  int tgt_len_ = 0;
  std::set<Link> links_;
};

// Per-token alignment degree, counting only links with both endpoints set.
struct Degrees {
  std::vector<int> src;
  std::vector<int> tgt;
};

Degrees degrees(const AlignmentSet& set);

struct OneToManyGroup {
  int src = 0;
  std::vector<int> tgts;  // ascending

  bool operator==(const OneToManyGroup&) const = default;
};

struct ManyToOneGroup {
  std::vector<int> srcs;  // ascending
  int tgt = 0;

  bool operator==(const ManyToOneGroup&) const = default;
};

// Degree-based grouping of the links of one sentence pair. A link whose
// endpoints both have degree > 1 sits in the one-to-many group of its source
// and in the many-to-one group of its target.
struct LinkPartition {
  std::vector<Link> one_to_one;
  std::vector<OneToManyGroup> one_to_many;
  std::vector<ManyToOneGroup> many_to_one;
  std::vector<int> src_unaligned;  // sources of (s, eps) links
  std::vector<int> tgt_unaligned;  // targets of (eps, t) links

  bool operator==(const LinkPartition&) const = default;
};

LinkPartition partition(const AlignmentSet& set);

struct DivergenceReport {
  std::size_t one_to_many_groups = 0;
  std::size_t many_to_one_groups = 0;
  std::vector<Link> ordering_links;
  // Tokens carrying an eps link and a real link at the same time.
  std::vector<int> src_eps_conflicts;
  std::vector<int> tgt_eps_conflicts;
};

// ordering_links = { (s,t) : deg(s) > 1 and deg(t) > 1 }
DivergenceReport detect_divergences(const AlignmentSet& set);

}  // namespace roleproj
