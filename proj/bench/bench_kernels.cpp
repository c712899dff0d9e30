#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "roleproj/diagnostics.hpp"
#include "roleproj/evaluation.hpp"
#include "roleproj/pipeline.hpp"

using namespace roleproj;

namespace {

const std::vector<SentenceInput>& corpus() {
  static const auto c = [] {
    gen::Rng rng(1);
    return gen::corpus(rng, 2000, 30, 3);
  }();
  return c;
}

const std::vector<AlignmentSet>& alignments() {
  static const auto sets = [] {
    std::vector<AlignmentSet> out;
    for (const auto& in : corpus()) out.push_back(in.alignment);
    return out;
  }();
  return sets;
}

const std::vector<Conll2009Sentence>& conll() {
  static const auto doc = [] {
    gen::Rng rng(2);
    return gen::conll_document(rng, 5000);
  }();
  return doc;
}

void BM_project_corpus_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(project_corpus_serial(corpus(), PipelineOptions{}));
}

void BM_project_corpus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_corpus(corpus(), PipelineOptions{}, static_cast<int>(state.range(0))));
  }
}

void BM_misalignment_metric_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(misalignment_metric_serial(alignments()));
}

void BM_misalignment_metric(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(misalignment_metric(alignments()));
}

void BM_filter_spurious_predicates_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(filter_spurious_predicates_serial(conll(), PosWhitelist{}));
}

void BM_filter_spurious_predicates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(filter_spurious_predicates(conll(), PosWhitelist{}));
}

}  // namespace

BENCHMARK(BM_project_corpus_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_project_corpus)->Arg(1)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_misalignment_metric_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_misalignment_metric)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_filter_spurious_predicates_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_filter_spurious_predicates)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
