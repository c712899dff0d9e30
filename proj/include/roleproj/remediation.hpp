#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/types.hpp"

namespace roleproj {

// Closed-class Penn Treebank tags used when no function-word POS set is given.
std::set<std::string> default_function_word_pos();

struct RemediationConfig {
  bool head_initial = true;
  // POS tags treated as function words (checked first), then surface forms
  // (compared case-insensitively).
  std::set<std::string> function_word_pos = default_function_word_pos();
  std::set<std::string> function_word_surface;
};

enum class RemediationAction { Remove, SelectHead, Keep };

enum class RemediationReason {
  Ordering,
  ManyToOneHead,
  OutOfRange,
  FunctionWord,
  AlreadyOneToOne,
};

enum class RemediationLevel { Token, Phrase };

struct RemediationEntry {
  RemediationAction action = RemediationAction::Remove;
  Link link;
  RemediationReason reason = RemediationReason::Ordering;
  RemediationLevel level = RemediationLevel::Token;

  bool operator==(const RemediationEntry&) const = default;
};

std::string to_string(RemediationAction action);
std::string to_string(RemediationReason reason);
std::string to_string(RemediationLevel level);
RemediationAction parse_action(std::string_view text);
RemediationReason parse_reason(std::string_view text);
RemediationLevel parse_level(std::string_view text);

// Remediated links, sorted by (src, tgt). Every target index appears at most
// once; (s, eps) links are carried through from the input.
struct RemediatedAlignment {
  std::vector<Link> links;
  std::vector<RemediationEntry> log;

  bool operator==(const RemediatedAlignment&) const = default;
};

// Token-level remediation:
//  - one-to-one links are kept;
//  - a link whose endpoints both have degree > 1 is removed ("ordering") when
//    both endpoints still hold another link at that point of the pass;
//    otherwise it is kept, logged, and resolved with its many-to-one group;
//  - surviving one-to-many targets of degree 1 are linked to their source;
//  - in each many-to-one group, sources that already own an emitted link are
//    dropped; of the rest, the first (head-initial) or second (head-final)
//    wins. A single survivor wins under either setting.
RemediatedAlignment remediate_token_level(const LinkPartition& partition,
                                          const RemediationConfig& cfg);

enum class Side { Source, Target };

struct PhraseSpan {
  std::string role;
  int start = 0;  // inclusive
  int end = 0;    // inclusive
  Side side = Side::Source;
  // For target spans: index of the source span they were projected from.
  int origin = -1;

  bool contains(int index) const { return index >= start && index <= end; }
  bool operator==(const PhraseSpan&) const = default;
};

// One span per maximal B-then-I run; "O" tokens belong to no span.
std::vector<PhraseSpan> source_phrase_spans(const SRLFrame& frame);

struct TargetSpanProjection {
  std::vector<PhraseSpan> spans;
  // Source spans (by index) with no linked target; they get no target span.
  std::vector<std::size_t> omitted;
};

// Target span = [min, max] of the targets linked to any source in the span.
TargetSpanProjection project_target_spans(const std::vector<PhraseSpan>& spans,
                                          const AlignmentSet& set);

// Links whose source lies inside one of the spans (eps targets included).
AlignmentSet restrict_to_spans(const AlignmentSet& set, const std::vector<PhraseSpan>& spans);

// Phrase-level remediation of one frame. The partition must already be
// restricted to the frame's spans. A link (s, t) is in range when t lies in the
// target span projected from the source span containing s.
RemediatedAlignment remediate_phrase_level(const LinkPartition& partition,
                                           const std::vector<PhraseSpan>& src_spans,
                                           const std::vector<PhraseSpan>& tgt_spans,
                                           const RemediationConfig& cfg,
                                           std::span<const Token> src_tokens);

bool is_function_word(const Token& token, const RemediationConfig& cfg);

// Phrase-mode alignment for one frame: phrase-level remediation of the links
// inside the frame's spans, plus token-level links for sources outside every
// span. A token-level link whose target is already taken by the phrase-level
// result is dropped and logged.
RemediatedAlignment remediate_frame(const AlignmentSet& set,
                                    const RemediatedAlignment& token_level,
                                    const SRLFrame& frame, const RemediationConfig& cfg,
                                    std::span<const Token> src_tokens);

}  // namespace roleproj
