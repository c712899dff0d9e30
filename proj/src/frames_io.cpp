#include <json.hpp>

#include "roleproj/bio.hpp"
#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> string_array(const json& value, const char* field, std::size_t line) {
  if (!value.is_array()) throw ParseError(std::string("'") + field + "' must be an array", line, 0);
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& v : value) {
    if (!v.is_string()) {
      throw ParseError(std::string("'") + field + "' must hold strings", line, 0);
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

FrameDocument parse_bio_frames(std::string_view document, bool repair_bio) {
  FrameDocument doc;
  const auto lines = split_lines(document);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    json record;
    try {
      record = json::parse(lines[n]);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no, 0);
    }
    if (!record.is_object()) throw ParseError("record must be a JSON object", line_no, 0);
    for (const char* key : {"id", "tokens", "frames"}) {
      if (!record.contains(key)) throw ParseError(std::string("missing '") + key + "'", line_no, 0);
    }
    if (!record["id"].is_string()) throw ParseError("'id' must be a string", line_no, 0);

    FrameSentence sentence;
    sentence.id = record["id"].get<std::string>();
    auto words = string_array(record["tokens"], "tokens", line_no);
    if (words.empty()) throw StructuralError("line " + std::to_string(line_no) + ": sentence has no tokens");
    sentence.tokens = make_tokens(words);
    if (record.contains("pos")) {
      auto pos = string_array(record["pos"], "pos", line_no);
      if (pos.size() != words.size()) {
        throw StructuralError("line " + std::to_string(line_no) + ": " +
                              std::to_string(pos.size()) + " POS tags for " +
                              std::to_string(words.size()) + " tokens");
      }
      for (std::size_t i = 0; i < pos.size(); ++i) sentence.tokens[i].pos = pos[i];
    }

    const json& frames = record["frames"];
    if (!frames.is_array()) throw ParseError("'frames' must be an array", line_no, 0);
    for (std::size_t f = 0; f < frames.size(); ++f) {
      const json& fr = frames[f];
      if (!fr.is_object() || !fr.contains("predicate_index") || !fr.contains("tags") ||
          !fr["predicate_index"].is_number_integer()) {
        throw ParseError("frame " + std::to_string(f) + " needs integer 'predicate_index' and 'tags'",
                         line_no, 0);
      }
      SRLFrame frame;
      frame.predicate_index = fr["predicate_index"].get<int>();
      frame.tags = string_array(fr["tags"], "tags", line_no);
      if (frame.tags.size() != words.size()) {
        throw StructuralError("line " + std::to_string(line_no) + ", frame " + std::to_string(f) +
                              ": " + std::to_string(frame.tags.size()) + " tags for " +
                              std::to_string(words.size()) + " tokens");
      }
      if (repair_bio) {
        for (const auto& fix : repair_orphan_inside_tags(frame.tags)) {
          doc.repairs.push_back({sentence.id, f, fix.token, fix.tag, frame.tags[fix.token]});
        }
      }
      try {
        validate_frame(frame, words.size());
      } catch (const BioSequenceError& e) {
        throw BioSequenceError("line " + std::to_string(line_no) + ", frame " + std::to_string(f) +
                               ": " + e.what());
      }
      if (frame.predicate_index >= 0 && frame.predicate_index < static_cast<int>(words.size())) {
        sentence.tokens[frame.predicate_index].is_predicate = true;
      }
      sentence.frames.push_back(std::move(frame));
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

std::string write_frame_sentence(const FrameSentence& sentence) {
  json record;
  record["id"] = sentence.id;
  record["tokens"] = surfaces(sentence.tokens);
  bool any_pos = false;
  for (const auto& t : sentence.tokens) any_pos = any_pos || !t.pos.empty();
  if (any_pos) {
    json pos = json::array();
    for (const auto& t : sentence.tokens) pos.push_back(t.pos);
    record["pos"] = std::move(pos);
  }
  json frames = json::array();
  for (const auto& f : sentence.frames) {
    frames.push_back({{"predicate_index", f.predicate_index}, {"tags", f.tags}});
  }
  record["frames"] = std::move(frames);
  return record.dump();
}

}  // namespace roleproj
