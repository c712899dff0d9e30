#include "roleproj/pipeline.hpp"

#include <algorithm>
#include <omp.h>

#include "roleproj/errors.hpp"

namespace roleproj {

namespace {

void check_frame(const SentenceInput& input, std::size_t k) {
  const SRLFrame& frame = input.frames[k];
  if (frame.tags.size() != input.src.size()) {
    throw StructuralError("sentence '" + input.id + "', frame " + std::to_string(k) + ": " +
                          std::to_string(frame.tags.size()) + " tags for " +
                          std::to_string(input.src.size()) + " tokens");
  }
  if (frame.predicate_index < 0 || frame.predicate_index >= static_cast<int>(input.src.size())) {
    throw RangeError("sentence '" + input.id + "', frame " + std::to_string(k) + ": predicate " +
                     std::to_string(frame.predicate_index) + " outside the sentence");
  }
}

}  // namespace

RemediationRecord remediate_sentence(const SentenceInput& input, const PipelineOptions& options) {
  RemediationRecord out;
  out.id = input.id;
  out.token_level = remediate_token_level(partition(input.alignment), options.remediation);
  out.log = out.token_level.log;
  for (std::size_t k = 0; k < input.frames.size(); ++k) {
    check_frame(input, k);
    const SRLFrame& frame = input.frames[k];
    RemediationRecord::Frame f;
    f.predicate_src = frame.predicate_index;
    if (options.mode == Mode::Headword) {
      f.alignment = out.token_level;
    } else {
      f.alignment =
          remediate_frame(input.alignment, out.token_level, frame, options.remediation, input.src);
      for (const auto& e : f.alignment.log) {
        if (std::find(out.log.begin(), out.log.end(), e) == out.log.end()) out.log.push_back(e);
      }
    }
    out.frames.push_back(std::move(f));
  }
  return out;
}

SentenceResult project_sentence(const SentenceInput& input, const RemediationRecord& remediation,
                                const PipelineOptions& options) {
  if (remediation.id != input.id) {
    throw CorpusMismatchError("remediation record '" + remediation.id + "' does not match sentence '" +
                              input.id + "'");
  }
  if (remediation.frames.size() != input.frames.size()) {
    throw StructuralError("sentence '" + input.id + "': remediation has " +
                          std::to_string(remediation.frames.size()) + " frames, input has " +
                          std::to_string(input.frames.size()));
  }
  SentenceResult out;
  out.remediation = remediation;
  out.divergences = detect_divergences(input.alignment);
  const ProjectionMode mode =
      options.mode == Mode::Headword ? ProjectionMode::Headword : ProjectionMode::Phrase;
  for (std::size_t k = 0; k < input.frames.size(); ++k) {
    check_frame(input, k);
    const auto& rf = remediation.frames[k];
    if (rf.predicate_src != input.frames[k].predicate_index) {
      throw StructuralError("sentence '" + input.id + "', frame " + std::to_string(k) +
                            ": remediation predicate " + std::to_string(rf.predicate_src) +
                            " differs from " + std::to_string(input.frames[k].predicate_index));
    }
    for (const Link& l : rf.alignment.links) {
      if (l.tgt >= static_cast<int>(input.tgt.size())) {
        throw RangeError("sentence '" + input.id + "': remediated target " + std::to_string(l.tgt) +
                         " outside a sentence of " + std::to_string(input.tgt.size()) + " tokens");
      }
    }
    FrameResult fr{rf.alignment, fcfa_project(rf.alignment, input.frames[k], mode)};
    if (options.renormalize_bio) renormalize_projection(fr.projection);
    out.frames.push_back(std::move(fr));
  }
  return out;
}

SentenceResult process_sentence(const SentenceInput& input, const PipelineOptions& options) {
  try {
    return project_sentence(input, remediate_sentence(input, options), options);
  } catch (const InputError& e) {
    SentenceResult failed;
    failed.remediation.id = input.id;
    failed.error = e.what();
    return failed;
  }
}

std::vector<SentenceResult> project_corpus_serial(const std::vector<SentenceInput>& inputs,
                                                  const PipelineOptions& options) {
  std::vector<SentenceResult> out;
  out.reserve(inputs.size());
  for (const auto& in : inputs) out.push_back(process_sentence(in, options));
  return out;
}

std::vector<SentenceResult> project_corpus(const std::vector<SentenceInput>& inputs,
                                           const PipelineOptions& options, int jobs) {
  std::vector<SentenceResult> out(inputs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long n = static_cast<long>(inputs.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) out[i] = process_sentence(inputs[i], options);
  return out;
}

ProjectionRecord to_projection_record(const SentenceInput& input, const SentenceResult& result) {
  ProjectionRecord r;
  r.id = input.id;
  r.src_tokens = surfaces(input.src);
  r.tgt_tokens = surfaces(input.tgt);
  for (const auto& f : result.frames) r.frames.push_back(f.projection.frame);
  r.remediation_log = result.remediation.log;
  return r;
}

std::vector<std::pair<std::string, std::string>> render_views(const SentenceInput& input,
                                                              const SentenceResult& result,
                                                              const ViewOptions& options) {
  std::vector<std::pair<std::string, std::string>> views;
  const SentencePair pair{input.id, input.src, input.tgt};
  if (input.frames.empty()) {
    views.emplace_back(view_file_name(input.id, std::nullopt),
                       render_alignment_view(pair, result.remediation.token_level, nullptr,
                                             nullptr, options));
    return views;
  }
  for (std::size_t k = 0; k < result.frames.size(); ++k) {
    const auto& f = result.frames[k];
    views.emplace_back(view_file_name(input.id, k),
                       render_alignment_view(pair, f.alignment, &input.frames[k],
                                             &f.projection.tags, options));
  }
  return views;
}

}  // namespace roleproj
