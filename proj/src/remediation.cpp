#include "roleproj/remediation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "roleproj/bio.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

std::set<std::string> default_function_word_pos() {
  return {"CC", "DT", "EX", "IN", "PDT", "POS", "RP", "TO", "WDT"};
}

std::string to_string(RemediationAction action) {
  switch (action) {
    case RemediationAction::Remove: return "remove";
    case RemediationAction::SelectHead: return "select_head";
    case RemediationAction::Keep: return "keep";
  }
  return "remove";
}

std::string to_string(RemediationReason reason) {
  switch (reason) {
    case RemediationReason::Ordering: return "ordering";
    case RemediationReason::ManyToOneHead: return "many-to-one-head";
    case RemediationReason::OutOfRange: return "out-of-range";
    case RemediationReason::FunctionWord: return "function-word";
    case RemediationReason::AlreadyOneToOne: return "already-one-to-one";
  }
  return "ordering";
}

std::string to_string(RemediationLevel level) {
  return level == RemediationLevel::Token ? "token" : "phrase";
}

RemediationAction parse_action(std::string_view text) {
  if (text == "remove") return RemediationAction::Remove;
  if (text == "select_head") return RemediationAction::SelectHead;
  if (text == "keep") return RemediationAction::Keep;
  throw ParseError("unknown remediation action '" + std::string(text) + "'", 0, 0);
}

RemediationReason parse_reason(std::string_view text) {
  for (auto r : {RemediationReason::Ordering, RemediationReason::ManyToOneHead,
                 RemediationReason::OutOfRange, RemediationReason::FunctionWord,
                 RemediationReason::AlreadyOneToOne}) {
    if (text == to_string(r)) return r;
  }
  throw ParseError("unknown remediation reason '" + std::string(text) + "'", 0, 0);
}

RemediationLevel parse_level(std::string_view text) {
  if (text == "token") return RemediationLevel::Token;
  if (text == "phrase") return RemediationLevel::Phrase;
  throw ParseError("unknown remediation level '" + std::string(text) + "'", 0, 0);
}

bool is_function_word(const Token& token, const RemediationConfig& cfg) {
  if (!token.pos.empty() && cfg.function_word_pos.count(token.pos)) return true;
  if (cfg.function_word_surface.empty()) return false;
  std::string lower = token.surface;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return cfg.function_word_surface.count(lower) > 0;
}

namespace {

// Shared resolution pass for both levels. Phrase level adds a range test and
// the function-word filter; token level passes neither.
struct PhraseChecks {
  std::function<bool(Link)> in_range;
  std::span<const Token> tokens;
};

RemediatedAlignment resolve(const LinkPartition& p, const RemediationConfig& cfg,
                            RemediationLevel level, const PhraseChecks* phrase) {
  RemediatedAlignment out;
  auto log = [&](RemediationAction a, Link l, RemediationReason r) {
    out.log.push_back({a, l, r, level});
  };

  std::set<Link> current;
  std::map<int, int> deg_src;
  std::map<int, int> deg_tgt;
  for (const Link& l : p.one_to_one) current.insert(l);
  for (const auto& g : p.one_to_many) {
    for (int t : g.tgts) current.insert({g.src, t});
  }
  for (const auto& g : p.many_to_one) {
    for (int s : g.srcs) current.insert({s, g.tgt});
  }
  for (const Link& l : current) {
    ++deg_src[l.src];
    ++deg_tgt[l.tgt];
  }

  // Links in any divergence group that fall outside their phrase range.
  if (phrase) {
    std::vector<Link> outside;
    for (const Link& l : current) {
      if ((deg_src[l.src] > 1 || deg_tgt[l.tgt] > 1) && !phrase->in_range(l)) outside.push_back(l);
    }
    for (const Link& l : outside) {
      current.erase(l);
      log(RemediationAction::Remove, l, RemediationReason::OutOfRange);
    }
  }

  // Single pass over ordering candidates, judged by the initial degrees.
  std::map<int, int> cur_src;
  std::map<int, int> cur_tgt;
  for (const Link& l : current) {
    ++cur_src[l.src];
    ++cur_tgt[l.tgt];
  }
  const RemediationReason ordering_reason = level == RemediationLevel::Token
                                                ? RemediationReason::Ordering
                                                : RemediationReason::AlreadyOneToOne;
  std::vector<Link> candidates;
  for (const Link& l : current) {
    if (deg_src[l.src] > 1 && deg_tgt[l.tgt] > 1) candidates.push_back(l);
  }
  for (const Link& l : candidates) {
    if (cur_src[l.src] >= 2 && cur_tgt[l.tgt] >= 2) {
      current.erase(l);
      --cur_src[l.src];
      --cur_tgt[l.tgt];
      log(RemediationAction::Remove, l, ordering_reason);
    } else {
      log(RemediationAction::Keep, l, RemediationReason::Ordering);
    }
  }

  std::set<Link> emitted(p.one_to_one.begin(), p.one_to_one.end());
  for (const auto& g : p.one_to_many) {
    for (int t : g.tgts) {
      const Link l{g.src, t};
      if (current.count(l) && deg_tgt[t] == 1) emitted.insert(l);
    }
  }
  std::set<int> owners;
  for (const Link& l : emitted) owners.insert(l.src);

  for (const auto& g : p.many_to_one) {
    std::vector<int> present;
    for (int s : g.srcs) {
      if (current.count({s, g.tgt})) present.push_back(s);
    }
    // Earlier removals may leave a single source: nothing left to resolve.
    if (present.size() == 1) {
      const Link l{present.front(), g.tgt};
      emitted.insert(l);
      log(RemediationAction::SelectHead, l, RemediationReason::ManyToOneHead);
      continue;
    }
    std::vector<int> survivors;
    for (int s : present) {
      const Link l{s, g.tgt};
      if (owners.count(s)) {
        log(RemediationAction::Remove, l, RemediationReason::AlreadyOneToOne);
        continue;
      }
      if (phrase && s >= 0 && static_cast<std::size_t>(s) < phrase->tokens.size() &&
          is_function_word(phrase->tokens[s], cfg)) {
        log(RemediationAction::Remove, l, RemediationReason::FunctionWord);
        continue;
      }
      survivors.push_back(s);
    }
    if (survivors.empty()) continue;
    const std::size_t pick = (cfg.head_initial || survivors.size() == 1) ? 0 : 1;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      const Link l{survivors[i], g.tgt};
      if (i == pick) {
        emitted.insert(l);
        log(RemediationAction::SelectHead, l, RemediationReason::ManyToOneHead);
      } else {
        log(RemediationAction::Remove, l, RemediationReason::ManyToOneHead);
      }
    }
  }

  for (int s : p.src_unaligned) emitted.insert({s, kEps});
  out.links.assign(emitted.begin(), emitted.end());
  return out;
}

}  // namespace

RemediatedAlignment remediate_token_level(const LinkPartition& partition,
                                          const RemediationConfig& cfg) {
  return resolve(partition, cfg, RemediationLevel::Token, nullptr);
}

std::vector<PhraseSpan> source_phrase_spans(const SRLFrame& frame) {
  std::vector<PhraseSpan> spans;
  for (auto& run : decode_bio_runs(frame.tags)) {
    spans.push_back({std::move(run.role), run.start, run.end, Side::Source, -1});
  }
  return spans;
}

TargetSpanProjection project_target_spans(const std::vector<PhraseSpan>& spans,
                                          const AlignmentSet& set) {
  TargetSpanProjection out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    int lo = -1;
    int hi = -1;
    for (const Link& l : set.links()) {
      if (!l.aligned() || !spans[i].contains(l.src)) continue;
      lo = lo < 0 ? l.tgt : std::min(lo, l.tgt);
      hi = std::max(hi, l.tgt);
    }
    if (lo < 0) {
      out.omitted.push_back(i);
      continue;
    }
    out.spans.push_back({spans[i].role, lo, hi, Side::Target, static_cast<int>(i)});
  }
  return out;
}

AlignmentSet restrict_to_spans(const AlignmentSet& set, const std::vector<PhraseSpan>& spans) {
  AlignmentSet out(set.src_len(), set.tgt_len());
  for (const Link& l : set.links()) {
    if (l.src == kEps) continue;
    for (const auto& span : spans) {
      if (span.contains(l.src)) {
        out.add(l);
        break;
      }
    }
  }
  return out;
}

RemediatedAlignment remediate_phrase_level(const LinkPartition& partition,
                                           const std::vector<PhraseSpan>& src_spans,
                                           const std::vector<PhraseSpan>& tgt_spans,
                                           const RemediationConfig& cfg,
                                           std::span<const Token> src_tokens) {
  if (partition.one_to_many.empty() && partition.many_to_one.empty()) {
    RemediatedAlignment out;
    std::set<Link> links(partition.one_to_one.begin(), partition.one_to_one.end());
    for (int s : partition.src_unaligned) links.insert({s, kEps});
    out.links.assign(links.begin(), links.end());
    return out;
  }

  PhraseChecks checks;
  checks.tokens = src_tokens;
  checks.in_range = [&](Link l) {
    for (std::size_t i = 0; i < src_spans.size(); ++i) {
      if (!src_spans[i].contains(l.src)) continue;
      for (const auto& t : tgt_spans) {
        if (t.origin == static_cast<int>(i) && t.contains(l.tgt)) return true;
      }
      return false;
    }
    return false;
  };
  return resolve(partition, cfg, RemediationLevel::Phrase, &checks);
}

RemediatedAlignment remediate_frame(const AlignmentSet& set,
                                    const RemediatedAlignment& token_level,
                                    const SRLFrame& frame, const RemediationConfig& cfg,
                                    std::span<const Token> src_tokens) {
  const auto spans = source_phrase_spans(frame);
  auto in_span = [&](int s) {
    return std::any_of(spans.begin(), spans.end(), [s](const PhraseSpan& sp) { return sp.contains(s); });
  };
  const AlignmentSet restricted = restrict_to_spans(set, spans);
  const auto targets = project_target_spans(spans, set);
  RemediatedAlignment phrase =
      remediate_phrase_level(partition(restricted), spans, targets.spans, cfg, src_tokens);

  std::set<int> taken;
  for (const Link& l : phrase.links) {
    if (l.tgt != kEps) taken.insert(l.tgt);
  }

  RemediatedAlignment out;
  for (const auto& e : token_level.log) {
    if (!in_span(e.link.src)) out.log.push_back(e);
  }
  out.log.insert(out.log.end(), phrase.log.begin(), phrase.log.end());

  std::set<Link> links(phrase.links.begin(), phrase.links.end());
  for (const Link& l : token_level.links) {
    if (in_span(l.src)) continue;
    if (l.tgt != kEps && taken.count(l.tgt)) {
      out.log.push_back({RemediationAction::Remove, l, RemediationReason::AlreadyOneToOne,
                         RemediationLevel::Phrase});
      continue;
    }
    links.insert(l);
  }
  out.links.assign(links.begin(), links.end());
  return out;
}

}  // namespace roleproj
