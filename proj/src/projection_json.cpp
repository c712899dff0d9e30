#include "roleproj/projection_json.hpp"

#include <json.hpp>

#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

using json = nlohmann::ordered_json;

namespace {

json endpoint(int index) { return index == kEps ? json("eps") : json(index); }

int read_endpoint(const json& value, std::size_t line) {
  if (value.is_string() && value.get<std::string>() == "eps") return kEps;
  if (value.is_number_integer()) return value.get<int>();
  throw ParseError("endpoint must be an integer or \"eps\"", line, 0);
}

json entry_json(const RemediationEntry& e) {
  json j;
  j["action"] = to_string(e.action);
  j["src"] = endpoint(e.link.src);
  j["tgt"] = endpoint(e.link.tgt);
  j["reason"] = to_string(e.reason);
  j["level"] = to_string(e.level);
  return j;
}

RemediationEntry read_entry(const json& j, std::size_t line) {
  try {
    RemediationEntry e;
    e.action = parse_action(j.at("action").get<std::string>());
    e.link = {read_endpoint(j.at("src"), line), read_endpoint(j.at("tgt"), line)};
    e.reason = parse_reason(j.at("reason").get<std::string>());
    e.level = parse_level(j.at("level").get<std::string>());
    return e;
  } catch (const ParseError& err) {
    throw ParseError(err.what(), line, 0);
  }
}

json log_json(const std::vector<RemediationEntry>& log) {
  json arr = json::array();
  for (const auto& e : log) arr.push_back(entry_json(e));
  return arr;
}

std::vector<RemediationEntry> read_log(const json& arr, std::size_t line) {
  std::vector<RemediationEntry> out;
  for (const auto& j : arr) out.push_back(read_entry(j, line));
  return out;
}

json links_json(const std::vector<Link>& links) {
  std::string s;
  for (const Link& l : links) {
    if (!s.empty()) s += ' ';
    s += format_link(l);
  }
  return s;
}

std::vector<Link> read_links(const json& value, std::size_t line) {
  const AlignmentSet set = parse_alignment_line(value.get<std::string>(), 1 << 30, 1 << 30, line);
  return {set.links().begin(), set.links().end()};
}

template <typename Fn>
auto guarded(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad record: ") + e.what(), line, 0);
  }
}

json parse_object(std::string_view text, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, 0);
  }
  if (!j.is_object()) throw ParseError("record must be a JSON object", line, 0);
  return j;
}

}  // namespace

std::string write_projection_json(const ProjectionRecord& record) {
  json j;
  j["id"] = record.id;
  j["src_tokens"] = record.src_tokens;
  j["tgt_tokens"] = record.tgt_tokens;
  json frames = json::array();
  for (const auto& f : record.frames) {
    json fj;
    fj["predicate_src"] = f.predicate_src;
    fj["predicate_tgt"] = f.predicate_tgt ? json(*f.predicate_tgt) : json(nullptr);
    json roles = json::array();
    for (const auto& r : f.roles) {
      json rj;
      rj["tgt_index"] = r.tgt;
      rj["label"] = r.label;
      rj["src_index"] = r.src;
      roles.push_back(std::move(rj));
    }
    fj["roles"] = std::move(roles);
    frames.push_back(std::move(fj));
  }
  j["frames"] = std::move(frames);
  j["remediation_log"] = log_json(record.remediation_log);
  return j.dump();
}

ProjectionRecord parse_projection_json(std::string_view text, std::size_t line) {
  const json j = parse_object(text, line);
  return guarded(line, [&] {
    ProjectionRecord r;
    r.id = j.at("id").get<std::string>();
    r.src_tokens = j.at("src_tokens").get<std::vector<std::string>>();
    r.tgt_tokens = j.at("tgt_tokens").get<std::vector<std::string>>();
    for (const auto& fj : j.at("frames")) {
      ProjectedFrame f;
      f.predicate_src = fj.at("predicate_src").get<int>();
      if (!fj.at("predicate_tgt").is_null()) f.predicate_tgt = fj.at("predicate_tgt").get<int>();
      for (const auto& rj : fj.at("roles")) {
        f.roles.push_back({rj.at("tgt_index").get<int>(), rj.at("label").get<std::string>(),
                           rj.at("src_index").get<int>()});
      }
      r.frames.push_back(std::move(f));
    }
    r.remediation_log = read_log(j.at("remediation_log"), line);
    return r;
  });
}

std::string write_remediation_json(const RemediationRecord& record) {
  json j;
  j["id"] = record.id;
  j["links"] = links_json(record.token_level.links);
  j["token_log"] = log_json(record.token_level.log);
  j["log"] = log_json(record.log);
  json frames = json::array();
  for (const auto& f : record.frames) {
    json fj;
    fj["predicate_src"] = f.predicate_src;
    fj["links"] = links_json(f.alignment.links);
    fj["log"] = log_json(f.alignment.log);
    frames.push_back(std::move(fj));
  }
  j["frames"] = std::move(frames);
  return j.dump();
}

RemediationRecord parse_remediation_json(std::string_view text, std::size_t line) {
  const json j = parse_object(text, line);
  return guarded(line, [&] {
    RemediationRecord r;
    r.id = j.at("id").get<std::string>();
    r.token_level.links = read_links(j.at("links"), line);
    r.token_level.log = read_log(j.at("token_log"), line);
    r.log = read_log(j.at("log"), line);
    for (const auto& fj : j.at("frames")) {
      RemediationRecord::Frame f;
      f.predicate_src = fj.at("predicate_src").get<int>();
      f.alignment.links = read_links(fj.at("links"), line);
      f.alignment.log = read_log(fj.at("log"), line);
      r.frames.push_back(std::move(f));
    }
    return r;
  });
}

}  // namespace roleproj
