#include "roleproj/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <omp.h>
#include <optional>
#include <sstream>

#include "roleproj/conll2009.hpp"
#include "roleproj/corpus_io.hpp"
#include "roleproj/diagnostics.hpp"
#include "roleproj/errors.hpp"
#include "roleproj/evaluation.hpp"
#include "roleproj/pipeline.hpp"

namespace roleproj::cli {

namespace fs = std::filesystem;

namespace {

struct Settings {
  std::string mode = "phrase";
  bool head_initial = true;
  std::string func_pos;
  std::string func_words;
  bool bio_repair = false;
  bool renormalize_bio = true;
  bool renormalize_given = false;
  std::string pos_whitelist = "V*";
  int jobs = 0;
  std::string out_dir;

  std::string frames;
  std::string conll;
  std::string src;
  std::string tgt;
  std::string align;
  std::string remediated;

  bool show_positions = true;
  std::string labels = "tag";
  bool unicode = false;

  std::string pred;
  std::string gold;
  std::string level = "both";
  std::string model = "roleproj";
  std::string language = "-";
};

std::set<std::string> split_list(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.insert(item);
  }
  return out;
}

// Re-raises an input error with the file path in front.
template <typename Fn>
auto in_file(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  } catch (const CorpusMismatchError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require(const std::string& value, const char* flag, const char* command) {
  if (value.empty()) throw InputError(std::string(command) + " requires " + flag);
}

Mode parse_mode(const std::string& mode) {
  if (mode == "phrase") return Mode::Phrase;
  if (mode == "headword") return Mode::Headword;
  throw InputError("unknown mode '" + mode + "' (expected phrase or headword)");
}

PipelineOptions pipeline_options(const Settings& s) {
  PipelineOptions o;
  o.mode = parse_mode(s.mode);
  o.remediation.head_initial = s.head_initial;
  if (!s.func_pos.empty()) o.remediation.function_word_pos = split_list(s.func_pos);
  for (std::string w : split_list(s.func_words)) {
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    o.remediation.function_word_surface.insert(w);
  }
  // Headword frames are single tokens, so renormalising would only rewrite
  // adjacent same-role heads; it is opt-in there.
  o.renormalize_bio = s.renormalize_given ? s.renormalize_bio : o.mode == Mode::Phrase;
  return o;
}

ViewOptions view_options(const Settings& s) {
  ViewOptions v;
  v.show_positions = s.show_positions;
  if (s.labels == "tag") v.labels = LabelStyle::Tag;
  else if (s.labels == "role") v.labels = LabelStyle::Role;
  else throw InputError("unknown label style '" + s.labels + "' (expected tag or role)");
  v.unicode = s.unicode;
  return v;
}

struct Corpus {
  std::vector<SentenceInput> sentences;
  // Per-sentence load failures; such sentences are skipped.
  std::vector<std::string> errors;
  std::size_t bio_repairs = 0;
};

Corpus load_corpus(const Settings& s, Mode mode, std::ostream& err) {
  Corpus corpus;
  std::string source_path;
  if (mode == Mode::Phrase) {
    require(s.frames, "--frames", "phrase mode");
    source_path = s.frames;
    FrameDocument doc = in_file(s.frames, [&] {
      return parse_bio_frames(read_file(s.frames), s.bio_repair);
    });
    for (const auto& r : doc.repairs) {
      err << "warning: " << s.frames << ": sentence '" << r.sentence_id << "' frame " << r.frame
          << " token " << r.token << ": " << r.original << " -> " << r.repaired << '\n';
    }
    corpus.bio_repairs = doc.repairs.size();
    for (auto& fs_ : doc.sentences) {
      SentenceInput in;
      in.id = fs_.id;
      in.src = std::move(fs_.tokens);
      in.frames = std::move(fs_.frames);
      corpus.sentences.push_back(std::move(in));
    }
  } else {
    require(s.conll, "--conll", "headword mode");
    source_path = s.conll;
    Conll2009Document doc = in_file(s.conll, [&] { return parse_conll2009(read_file(s.conll)); });
    for (const auto& w : doc.warnings) err << "warning: " << s.conll << ": " << w << '\n';
    for (const auto& sentence : doc.sentences) {
      HeadwordSentence hw = headword_frames(sentence);
      SentenceInput in;
      in.id = std::to_string(sentence.ordinal);
      in.src = std::move(hw.tokens);
      in.frames = std::move(hw.frames);
      corpus.sentences.push_back(std::move(in));
    }
  }

  require(s.tgt, "--tgt", "projection");
  require(s.align, "--align", "projection");
  const auto tgt = in_file(s.tgt, [&] { return parse_token_lines(read_file(s.tgt)); });
  const auto align = split_lines(read_file(s.align));
  const std::size_t n = corpus.sentences.size();
  if (tgt.size() != n || align.size() != n) {
    throw CorpusMismatchError("sentence counts differ: " + source_path + " has " +
                              std::to_string(n) + ", " + s.tgt + " has " +
                              std::to_string(tgt.size()) + ", " + s.align + " has " +
                              std::to_string(align.size()));
  }
  corpus.errors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    SentenceInput& in = corpus.sentences[i];
    if (tgt[i].id && *tgt[i].id != in.id) {
      throw CorpusMismatchError(s.tgt + ": line " + std::to_string(i + 1) + " has id '" +
                                *tgt[i].id + "' but " + source_path + " has '" + in.id + "'");
    }
    in.tgt = make_tokens(tgt[i].tokens);
    try {
      in.alignment = parse_alignment_line(align[i], static_cast<int>(in.src.size()),
                                          static_cast<int>(in.tgt.size()), i + 1);
    } catch (const InputError& e) {
      corpus.errors[i] = s.align + ": " + e.what();
      in.alignment = AlignmentSet(static_cast<int>(in.src.size()), static_cast<int>(in.tgt.size()));
    }
  }
  return corpus;
}

std::vector<RemediationRecord> load_remediation(const std::string& path, std::size_t expected) {
  const auto lines = split_lines(read_file(path));
  if (lines.size() != expected) {
    throw CorpusMismatchError(path + " has " + std::to_string(lines.size()) +
                              " records for " + std::to_string(expected) + " sentences");
  }
  std::vector<RemediationRecord> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.push_back(in_file(path, [&] { return parse_remediation_json(lines[i], i + 1); }));
  }
  return out;
}

std::vector<SentenceResult> run_pipeline(const Settings& s, const Corpus& corpus,
                                         const PipelineOptions& options) {
  std::vector<SentenceResult> results;
  if (s.remediated.empty()) {
    results = project_corpus(corpus.sentences, options, s.jobs);
  } else {
    const auto records = load_remediation(s.remediated, corpus.sentences.size());
    results.resize(records.size());
    const long n = static_cast<long>(records.size());
    const int threads = s.jobs > 0 ? s.jobs : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      try {
        results[i] = project_sentence(corpus.sentences[i], records[i], options);
      } catch (const InputError& e) {
        results[i].remediation.id = corpus.sentences[i].id;
        results[i].error = s.remediated + ": " + e.what();
      }
    }
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!corpus.errors[i].empty()) {
      results[i] = SentenceResult{};
      results[i].remediation.id = corpus.sentences[i].id;
      results[i].error = corpus.errors[i];
    }
  }
  return results;
}

fs::path prepare_out_dir(const Settings& s) {
  const fs::path dir = s.out_dir.empty() ? fs::path(".") : fs::path(s.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

int report_errors(const std::vector<SentenceResult>& results, std::ostream& err) {
  int failed = 0;
  for (const auto& r : results) {
    if (r.error.empty()) continue;
    ++failed;
    err << "error: sentence '" << r.remediation.id << "': " << r.error << '\n';
  }
  return failed;
}

void write_remediation_file(const fs::path& path, const std::vector<SentenceResult>& results) {
  std::string text;
  for (const auto& r : results) {
    if (r.error.empty()) text += write_remediation_json(r.remediation) + '\n';
  }
  write_file(path.string(), text);
}

void write_projection_file(const fs::path& path, const Corpus& corpus,
                           const std::vector<SentenceResult>& results) {
  std::string text;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].error.empty()) continue;
    text += render_projection_json(to_projection_record(corpus.sentences[i], results[i])) + '\n';
  }
  write_file(path.string(), text);
}

void write_views(const fs::path& dir, const Corpus& corpus,
                 const std::vector<SentenceResult>& results, const ViewOptions& view) {
  const fs::path views = dir / "views";
  fs::create_directories(views);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].error.empty()) continue;
    for (const auto& [name, text] : render_views(corpus.sentences[i], results[i], view)) {
      write_file((views / name).string(), text);
    }
  }
}

void print_summary(std::ostream& out, const Corpus& corpus,
                   const std::vector<SentenceResult>& results, int failed) {
  std::size_t frames = 0, roles = 0, links = 0, removed = 0, one_to_many = 0, many_to_one = 0,
              ordering = 0, eps_sources = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.error.empty()) continue;
    links += corpus.sentences[i].alignment.size();
    frames += r.frames.size();
    for (const auto& f : r.frames) {
      roles += f.projection.frame.roles.size();
      eps_sources += f.projection.eps_sources.size();
    }
    for (const auto& e : r.remediation.log) removed += e.action == RemediationAction::Remove;
    one_to_many += r.divergences.one_to_many_groups;
    many_to_one += r.divergences.many_to_one_groups;
    ordering += r.divergences.ordering_links.size();
  }
  out << "sentences: " << results.size() << '\n'
      << "skipped: " << failed << '\n'
      << "frames: " << frames << '\n'
      << "input links: " << links << '\n'
      << "removed links: " << removed << '\n'
      << "one-to-many groups: " << one_to_many << '\n'
      << "many-to-one groups: " << many_to_one << '\n'
      << "ordering links: " << ordering << '\n'
      << "projected roles: " << roles << '\n'
      << "unassigned eps sources: " << eps_sources << '\n';
  if (corpus.bio_repairs > 0) out << "bio repairs: " << corpus.bio_repairs << '\n';
}

int cmd_project(const Settings& s, std::ostream& out, std::ostream& err) {
  const PipelineOptions options = pipeline_options(s);
  const ViewOptions view = view_options(s);
  const Corpus corpus = load_corpus(s, options.mode, err);
  const auto results = run_pipeline(s, corpus, options);
  const int failed = report_errors(results, err);
  const fs::path dir = prepare_out_dir(s);
  write_projection_file(dir / "projection.jsonl", corpus, results);
  write_remediation_file(dir / "remediation.jsonl", results);
  write_views(dir, corpus, results, view);
  print_summary(out, corpus, results, failed);
  return failed > 0 ? kExitInputError : kExitOk;
}

int cmd_remediate(const Settings& s, std::ostream& out, std::ostream& err) {
  if (!s.remediated.empty()) throw InputError("remediate does not take --remediated");
  const PipelineOptions options = pipeline_options(s);
  const Corpus corpus = load_corpus(s, options.mode, err);
  const auto results = run_pipeline(s, corpus, options);
  const int failed = report_errors(results, err);
  const fs::path dir = prepare_out_dir(s);
  write_remediation_file(dir / "remediation.jsonl", results);
  std::size_t removed = 0;
  for (const auto& r : results) {
    for (const auto& e : r.remediation.log) removed += e.action == RemediationAction::Remove;
  }
  out << "sentences: " << results.size() << '\n'
      << "skipped: " << failed << '\n'
      << "removed links: " << removed << '\n';
  return failed > 0 ? kExitInputError : kExitOk;
}

int cmd_render(const Settings& s, std::ostream& out, std::ostream& err) {
  require(s.remediated, "--remediated", "render");
  const PipelineOptions options = pipeline_options(s);
  const ViewOptions view = view_options(s);
  const Corpus corpus = load_corpus(s, options.mode, err);
  const auto results = run_pipeline(s, corpus, options);
  const int failed = report_errors(results, err);
  const fs::path dir = prepare_out_dir(s);
  write_views(dir, corpus, results, view);
  out << "sentences: " << results.size() << '\n' << "skipped: " << failed << '\n';
  return failed > 0 ? kExitInputError : kExitOk;
}

int cmd_diagnose(const Settings& s, std::ostream& out, std::ostream&) {
  require(s.conll, "--conll", "diagnose");
  const PosWhitelist whitelist = PosWhitelist::parse(s.pos_whitelist);
  const Conll2009Document doc = in_file(s.conll, [&] { return parse_conll2009(read_file(s.conll)); });
  const FilterResult result =
      in_file(s.conll, [&] { return filter_spurious_predicates(doc.sentences, whitelist); });
  const std::string audit = audit_to_json(result.audit);
  if (!s.out_dir.empty()) {
    const fs::path dir = prepare_out_dir(s);
    write_file((dir / "filtered.conll").string(), write_conll2009(result.sentences));
    write_file((dir / "audit.json").string(), audit + '\n');
  }
  out << audit << '\n';
  return result.audit.spurious.empty() ? kExitOk : kExitFindings;
}

std::vector<ProjectionRecord> load_projection(const std::string& path) {
  const auto lines = split_lines(read_file(path));
  std::vector<ProjectionRecord> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.push_back(in_file(path, [&] { return parse_projection_json(lines[i], i + 1); }));
  }
  return out;
}

int cmd_evaluate(const Settings& s, std::ostream& out, std::ostream&) {
  require(s.pred, "--pred", "evaluate");
  require(s.gold, "--gold", "evaluate");
  if (s.level != "word" && s.level != "phrase" && s.level != "both") {
    throw InputError("unknown level '" + s.level + "' (expected word, phrase or both)");
  }
  const auto pred = load_projection(s.pred);
  const auto gold = load_projection(s.gold);
  std::vector<TableRow> rows;
  if (s.level != "phrase") {
    std::vector<WordSentence> p, g;
    for (const auto& r : pred) p.push_back(word_items(r));
    for (const auto& r : gold) g.push_back(word_items(r));
    rows.push_back({s.model, s.language, eval_word_level(p, g)});
  }
  if (s.level != "word") {
    std::vector<SpanSentence> p, g;
    for (const auto& r : pred) p.push_back(span_items(r));
    for (const auto& r : gold) g.push_back(span_items(r));
    rows.push_back({s.model, s.language, eval_phrase_level(p, g)});
  }
  if (!s.out_dir.empty()) {
    const fs::path dir = prepare_out_dir(s);
    for (const auto& row : rows) {
      write_file((dir / ("eval." + to_string(row.report.level) + ".json")).string(),
                 eval_report_json(row.report) + '\n');
    }
  }
  out << render_eval_table(rows);
  return kExitOk;
}

std::vector<int> token_counts(const std::string& path) {
  std::vector<int> out;
  for (const auto& line : in_file(path, [&] { return parse_token_lines(read_file(path)); })) {
    out.push_back(static_cast<int>(line.tokens.size()));
  }
  return out;
}

int cmd_metrics(const Settings& s, std::ostream& out, std::ostream&) {
  require(s.align, "--align", "metrics");
  const auto lines = split_lines(read_file(s.align));
  std::optional<std::vector<int>> src_len, tgt_len;
  if (!s.src.empty()) src_len = token_counts(s.src);
  if (!s.tgt.empty()) tgt_len = token_counts(s.tgt);
  for (const auto* counts : {&src_len, &tgt_len}) {
    if (*counts && (*counts)->size() != lines.size()) {
      throw CorpusMismatchError(s.align + " has " + std::to_string(lines.size()) +
                                " sentences, token file has " + std::to_string((*counts)->size()));
    }
  }
  constexpr int kUnbounded = 1 << 30;
  std::vector<AlignmentSet> sets;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int sl = src_len ? (*src_len)[i] : kUnbounded;
    const int tl = tgt_len ? (*tgt_len)[i] : kUnbounded;
    AlignmentSet parsed = in_file(s.align, [&] { return parse_alignment_line(lines[i], sl, tl, i + 1); });
    if (src_len && tgt_len) {
      sets.push_back(std::move(parsed));
      continue;
    }
    // Without token files a side's length is one past its largest index.
    int max_s = -1, max_t = -1;
    for (const Link& l : parsed.links()) {
      max_s = std::max(max_s, l.src);
      max_t = std::max(max_t, l.tgt);
    }
    AlignmentSet sized(src_len ? sl : max_s + 1, tgt_len ? tl : max_t + 1);
    for (const Link& l : parsed.links()) sized.add(l);
    sets.push_back(std::move(sized));
  }
  const MisalignmentReport report = misalignment_metric(sets);
  const std::string json = misalignment_json(report);
  if (!s.out_dir.empty()) {
    write_file((prepare_out_dir(s) / "metrics.json").string(), json + '\n');
  }
  out << json << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Cross-lingual semantic role projection with alignment remediation", "roleproj"};
  app.set_config("--config", "", "INI/TOML configuration file; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--mode", s.mode, "phrase (BIO frames) or headword (CoNLL-2009)")
      ->check(CLI::IsMember({"phrase", "headword"}));
  app.add_flag("--head-initial,!--head-final", s.head_initial,
               "which merged source donates its label in many-to-one groups");
  app.add_option("--func-pos", s.func_pos, "comma-separated function-word POS tags");
  app.add_option("--func-words", s.func_words, "comma-separated function-word surfaces");
  app.add_flag("--bio-repair", s.bio_repair, "rewrite orphan I-X tags to B-X instead of failing");
  auto* renorm = app.add_flag("--renormalize-bio,!--no-renormalize-bio", s.renormalize_bio,
                              "recompute B-/I- prefixes on the target side");
  app.add_option("--pos-whitelist", s.pos_whitelist, "comma-separated predicate POS patterns");
  app.add_option("--jobs", s.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--out-dir", s.out_dir, "output directory");

  app.add_option("--frames", s.frames, "source BIO frames (JSON lines)");
  app.add_option("--conll", s.conll, "CoNLL-2009 file");
  app.add_option("--src", s.src, "source token file (metrics)");
  app.add_option("--tgt", s.tgt, "target token file");
  app.add_option("--align", s.align, "alignment file, one sentence per line");
  app.add_option("--remediated", s.remediated, "remediation.jsonl from an earlier run");
  app.add_flag("--show-positions,!--no-positions", s.show_positions, "annotate view lines with s-t");
  app.add_option("--labels", s.labels, "view label style: tag or role")
      ->check(CLI::IsMember({"tag", "role"}));
  app.add_flag("--unicode", s.unicode, "use the epsilon sign and combining strike-through");
  app.add_option("--pred", s.pred, "predicted projection.jsonl");
  app.add_option("--gold", s.gold, "gold projection.jsonl");
  app.add_option("--level", s.level, "word, phrase or both")
      ->check(CLI::IsMember({"word", "phrase", "both"}));
  app.add_option("--model", s.model, "model name for the report table");
  app.add_option("--language", s.language, "language pair for the report table");

  auto* project = app.add_subcommand("project", "remediate, project and render a corpus");
  auto* remediate = app.add_subcommand("remediate", "write remediated alignments only");
  auto* render = app.add_subcommand("render", "write alignment views from remediation.jsonl");
  auto* diagnose = app.add_subcommand("diagnose", "find and strip spurious CoNLL-2009 predicates");
  auto* evaluate = app.add_subcommand("evaluate", "word/phrase-level P, R, F1");
  auto* metrics = app.add_subcommand("metrics", "per-side misalignment statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  s.renormalize_given = renorm->count() > 0;

  try {
    if (project->parsed()) return cmd_project(s, out, err);
    if (remediate->parsed()) return cmd_remediate(s, out, err);
    if (render->parsed()) return cmd_render(s, out, err);
    if (diagnose->parsed()) return cmd_diagnose(s, out, err);
    if (evaluate->parsed()) return cmd_evaluate(s, out, err);
    if (metrics->parsed()) return cmd_metrics(s, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace roleproj::cli
