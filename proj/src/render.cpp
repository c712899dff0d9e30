#include "roleproj/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "roleproj/bio.hpp"

namespace roleproj {

namespace {

struct Line {
  std::tuple<int, int, int> key;
  std::string text;
  std::optional<Link> position;
  bool struck = false;
};

// Appends U+0336 after every code point.
std::string strike_through(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t len = 1;
    const auto c = static_cast<unsigned char>(s[i]);
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    out.append(s, i, len);
    if (s[i] != ' ') out += "\xCC\xB6";
    i += len;
  }
  return out;
}

}  // namespace

std::string render_alignment_view(const SentencePair& pair, const RemediatedAlignment& rem,
                                  const SRLFrame* frame, const std::vector<TargetTag>* tags,
                                  const ViewOptions& options) {
  const std::string eps = options.unicode ? "\xCE\xB5" : "eps";
  auto label = [&](const std::string& tag) {
    return "[" + (options.labels == LabelStyle::Role ? bio_role(tag) : tag) + "] ";
  };
  std::map<int, std::string> tgt_tag;
  if (tags) {
    for (const auto& t : *tags) tgt_tag.emplace(t.tgt, t.tag);
  }
  auto left = [&](int s) {
    if (s == kEps) return eps;
    std::string cell;
    if (frame && static_cast<std::size_t>(s) < frame->tags.size()) cell = label(frame->tags[s]);
    return cell + pair.src[s].surface;
  };
  auto right = [&](int t, bool with_label) {
    if (t == kEps) return eps;
    std::string cell;
    auto it = tgt_tag.find(t);
    if (with_label && it != tgt_tag.end()) cell = label(it->second);
    return cell + pair.tgt[t].surface;
  };

  const std::set<Link> kept(rem.links.begin(), rem.links.end());
  std::set<Link> removed;
  for (const auto& e : rem.log) {
    if (e.action == RemediationAction::Remove && !kept.count(e.link)) removed.insert(e.link);
  }

  std::vector<Line> lines;
  std::set<int> seen_src;
  std::map<int, int> src_of_tgt;  // target -> smallest source among its lines
  auto add_link = [&](Link l, bool struck) {
    if (l.src != kEps) seen_src.insert(l.src);
    if (l.tgt != kEps) {
      auto [it, fresh] = src_of_tgt.emplace(l.tgt, l.src);
      if (!fresh) it->second = std::min(it->second, l.src);
    }
    lines.push_back({{l.src, 0, l.tgt}, left(l.src) + " --- " + right(l.tgt, !struck), l, struck});
  };
  for (const Link& l : kept) {
    if (l.src != kEps) add_link(l, false);
  }
  for (const Link& l : removed) add_link(l, true);

  for (int s = 0; s < static_cast<int>(pair.src.size()); ++s) {
    if (!seen_src.count(s)) lines.push_back({{s, 0, -1}, left(s) + " --- " + eps, std::nullopt, false});
  }
  for (int t = 0; t < static_cast<int>(pair.tgt.size()); ++t) {
    if (src_of_tgt.count(t)) continue;
    auto it = src_of_tgt.lower_bound(t);
    const int anchor = it == src_of_tgt.begin() ? -1 : std::prev(it)->second;
    lines.push_back({{anchor, 1, t}, eps + " --- " + right(t, true), Link{kEps, t}, false});
  }
  std::stable_sort(lines.begin(), lines.end(),
                   [](const Line& a, const Line& b) { return a.key < b.key; });

  auto endpoint = [&](int i) { return i == kEps ? eps : std::to_string(i); };
  std::string out;
  for (const auto& line : lines) {
    std::string text = line.text;
    if (line.struck) text = options.unicode ? strike_through(text) : "~~" + text;
    if (options.show_positions) {
      const Link p = line.position.value_or(Link{std::get<0>(line.key), kEps});
      text += " ; " + endpoint(p.src) + "-" + endpoint(p.tgt);
    }
    out += text + '\n';
  }
  return out;
}

std::string render_projection_json(const ProjectionRecord& record) {
  return write_projection_json(record);
}

std::string view_file_name(const std::string& id, std::optional<std::size_t> frame) {
  std::string safe = id.empty() ? "_" : id;
  for (char& c : safe) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  if (frame) return safe + "." + std::to_string(*frame) + ".align.txt";
  return safe + ".align.txt";
}

}  // namespace roleproj
