#include <charconv>
#include <fstream>
#include <sstream>

#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

namespace roleproj {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

namespace {

int parse_endpoint(std::string_view text, std::size_t line, std::size_t column) {
  if (text == "eps") return kEps;
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw ParseError("invalid alignment index '" + std::string(text) + "'", line, column);
  }
  return value;
}

}  // namespace

AlignmentSet parse_alignment_line(std::string_view line, int src_len, int tgt_len,
                                  std::size_t line_number) {
  AlignmentSet set(src_len, tgt_len);
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    const std::string_view entry = line.substr(i, end - i);
    const std::size_t column = i + 1;
    const std::size_t dash = entry.find('-');
    if (dash == std::string_view::npos) {
      throw ParseError("alignment entry '" + std::string(entry) + "' has no hyphen",
                       line_number, column);
    }
    const int src = parse_endpoint(entry.substr(0, dash), line_number, column);
    const int tgt = parse_endpoint(entry.substr(dash + 1), line_number, column + dash + 1);
    if (src == kEps && tgt == kEps) {
      throw ParseError("alignment entry 'eps-eps' links nothing", line_number, column);
    }
    try {
      set.add({src, tgt});
    } catch (const RangeError& e) {
      std::string where = line_number > 0 ? "line " + std::to_string(line_number) + ", " : "";
      throw RangeError(where + "column " + std::to_string(column) + ": " + e.what());
    }
    i = end;
  }
  return set;
}

std::string format_link(Link link) {
  std::string out = link.src == kEps ? "eps" : std::to_string(link.src);
  out += '-';
  out += link.tgt == kEps ? "eps" : std::to_string(link.tgt);
  return out;
}

std::string serialize_alignment(const AlignmentSet& set) {
  std::string out;
  for (const Link& l : set.links()) {
    if (!out.empty()) out += ' ';
    out += format_link(l);
  }
  return out;
}

std::vector<TokenLine> parse_token_lines(std::string_view document) {
  std::vector<TokenLine> out;
  for (const std::string& raw : split_lines(document)) {
    TokenLine tl;
    std::string_view rest = raw;
    if (auto tab = rest.find('\t'); tab != std::string_view::npos) {
      tl.id = std::string(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    std::istringstream ss{std::string(rest)};
    std::string tok;
    while (ss >> tok) tl.tokens.push_back(tok);
    out.push_back(std::move(tl));
  }
  return out;
}

}  // namespace roleproj
