#pragma once

#include <string>
#include <utility>
#include <vector>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/projection.hpp"
#include "roleproj/projection_json.hpp"
#include "roleproj/remediation.hpp"
#include "roleproj/render.hpp"

namespace roleproj {

enum class Mode {
  // BIO frames; phrase-level remediation per frame, FCFA over every tag.
  Phrase,
  // CoNLL-2009 frames; token-level remediation, labels only on role heads.
  Headword,
};

struct PipelineOptions {
  Mode mode = Mode::Phrase;
  RemediationConfig remediation;
  bool renormalize_bio = true;
};

struct SentenceInput {
  std::string id;
  std::vector<Token> src;
  std::vector<Token> tgt;
  std::vector<SRLFrame> frames;
  AlignmentSet alignment;
};

struct FrameResult {
  RemediatedAlignment alignment;
  Projection projection;
};

struct SentenceResult {
  RemediationRecord remediation;
  std::vector<FrameResult> frames;
  DivergenceReport divergences;
  // Set when the sentence was skipped; the message names the problem.
  std::string error;
};

// Remediation only: token-level links plus one alignment per frame.
RemediationRecord remediate_sentence(const SentenceInput& input, const PipelineOptions& options);

// FCFA over an existing remediation. Throws StructuralError when the record
// does not describe the input's frames.
SentenceResult project_sentence(const SentenceInput& input, const RemediationRecord& remediation,
                                const PipelineOptions& options);

// remediate_sentence then project_sentence. Input errors are caught and
// reported through SentenceResult::error.
SentenceResult process_sentence(const SentenceInput& input, const PipelineOptions& options);

std::vector<SentenceResult> project_corpus_serial(const std::vector<SentenceInput>& inputs,
                                                  const PipelineOptions& options);
// Same output as the serial version; jobs <= 0 uses every available thread.
std::vector<SentenceResult> project_corpus(const std::vector<SentenceInput>& inputs,
                                           const PipelineOptions& options, int jobs = 0);

ProjectionRecord to_projection_record(const SentenceInput& input, const SentenceResult& result);

// (file name, contents) pairs, one per frame or one token-only listing.
std::vector<std::pair<std::string, std::string>> render_views(const SentenceInput& input,
                                                              const SentenceResult& result,
                                                              const ViewOptions& options);

}  // namespace roleproj
