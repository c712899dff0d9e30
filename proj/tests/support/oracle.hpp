#pragma once

// Exhaustive matrix-based re-implementation of token-level remediation and
// divergence detection. It works on a dense adjacency matrix and recomputes
// every degree by scanning rows and columns, sharing no code with the library.

#include <set>
#include <utility>
#include <vector>

#include "roleproj/alignment_graph.hpp"

namespace oracle {

using Pair = std::pair<int, int>;

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<bool>> cell;

  Matrix(int r, int c) : rows(r), cols(c), cell(r, std::vector<bool>(c, false)) {}

  int row_sum(int s) const {
    int n = 0;
    for (int t = 0; t < cols; ++t) n += cell[s][t];
    return n;
  }
  int col_sum(int t) const {
    int n = 0;
    for (int s = 0; s < rows; ++s) n += cell[s][t];
    return n;
  }
};

inline Matrix to_matrix(const roleproj::AlignmentSet& set) {
  Matrix m(set.src_len(), set.tgt_len());
  for (const auto& l : set.links()) {
    if (l.src >= 0 && l.tgt >= 0) m.cell[l.src][l.tgt] = true;
  }
  return m;
}

struct TokenRemediation {
  std::vector<Pair> links;  // sorted, eps target as -1
  std::set<Pair> removed;
};

// Rules:
//  (a) a link whose source and target both have degree 1 is kept;
//  (b) a link whose endpoints both have degree > 1 is dropped if, at that
//      moment, its row and its column each still hold another link
//      (links visited in row-major order);
//  (c) a surviving link from a multi-target source to a degree-1 target is kept;
//  (d) for each multi-source target (ascending), the sources still linked to it
//      compete: a lone contender wins outright; otherwise contenders that
//      already won a link in (a) or (c) drop out, and the first (head-initial)
//      or second (head-final) of the rest wins, or the only one left.
// (s, eps) links are copied through.
inline TokenRemediation token_remediation(const roleproj::AlignmentSet& set, bool head_initial) {
  const Matrix initial = to_matrix(set);
  Matrix live = initial;
  const int S = initial.rows, T = initial.cols;
  std::vector<int> ds(S), dt(T);
  for (int s = 0; s < S; ++s) ds[s] = initial.row_sum(s);
  for (int t = 0; t < T; ++t) dt[t] = initial.col_sum(t);

  TokenRemediation out;
  std::set<Pair> kept;
  for (int s = 0; s < S; ++s) {
    for (int t = 0; t < T; ++t) {
      if (!initial.cell[s][t] || ds[s] < 2 || dt[t] < 2) continue;
      if (live.row_sum(s) >= 2 && live.col_sum(t) >= 2) {
        live.cell[s][t] = false;
        out.removed.insert({s, t});
      }
    }
  }
  for (int s = 0; s < S; ++s) {
    for (int t = 0; t < T; ++t) {
      if (initial.cell[s][t] && ds[s] == 1 && dt[t] == 1) kept.insert({s, t});
      if (live.cell[s][t] && ds[s] > 1 && dt[t] == 1) kept.insert({s, t});
    }
  }
  std::vector<bool> won(S, false);
  for (const auto& [s, t] : kept) won[s] = true;

  for (int t = 0; t < T; ++t) {
    if (dt[t] < 2) continue;
    std::vector<int> contenders;
    for (int s = 0; s < S; ++s) {
      if (live.cell[s][t]) contenders.push_back(s);
    }
    if (contenders.size() == 1) {
      kept.insert({contenders[0], t});
      continue;
    }
    std::vector<int> rest;
    for (int s : contenders) {
      if (won[s]) out.removed.insert({s, t});
      else rest.push_back(s);
    }
    if (rest.empty()) continue;
    const std::size_t choice = (head_initial || rest.size() == 1) ? 0 : 1;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == choice) kept.insert({rest[i], t});
      else out.removed.insert({rest[i], t});
    }
  }
  for (const auto& l : set.links()) {
    if (l.src >= 0 && l.tgt < 0) kept.insert({l.src, -1});
  }
  out.links.assign(kept.begin(), kept.end());
  return out;
}

// Ordering links by pairwise scan: (s, t) qualifies when some other target
// shares s and some other source shares t.
inline std::set<Pair> ordering_links(const roleproj::AlignmentSet& set) {
  std::vector<Pair> links;
  for (const auto& l : set.links()) {
    if (l.src >= 0 && l.tgt >= 0) links.push_back({l.src, l.tgt});
  }
  std::set<Pair> out;
  for (const auto& a : links) {
    bool shares_src = false, shares_tgt = false;
    for (const auto& b : links) {
      if (a == b) continue;
      shares_src = shares_src || b.first == a.first;
      shares_tgt = shares_tgt || b.second == a.second;
    }
    if (shares_src && shares_tgt) out.insert(a);
  }
  return out;
}

}  // namespace oracle
