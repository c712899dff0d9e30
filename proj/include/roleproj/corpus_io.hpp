#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/types.hpp"

namespace roleproj {

// Splits a document into lines. A trailing newline does not produce an
// extra empty line; "\r\n" endings are accepted.
std::vector<std::string> split_lines(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// --- Alignment files ("i-j" entries, "eps" for unaligned endpoints) -------

// line_number is only used to annotate errors.
AlignmentSet parse_alignment_line(std::string_view line, int src_len, int tgt_len,
                                  std::size_t line_number = 0);

// Entries in (src, tgt) order, single-space separated, "eps" for kEps.
std::string serialize_alignment(const AlignmentSet& set);
std::string format_link(Link link);

// --- Target token files ----------------------------------------------------

// One sentence per line, whitespace separated tokens. An optional sentence id
// may precede the tokens, separated by a tab.
struct TokenLine {
  std::optional<std::string> id;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> parse_token_lines(std::string_view document);

// --- SRL frame files (one JSON object per line) ---------------------------

struct FrameSentence {
  std::string id;
  std::vector<Token> tokens;
  std::vector<SRLFrame> frames;
};

struct BioRepair {
  std::string sentence_id;
  std::size_t frame = 0;
  int token = 0;
  std::string original;
  std::string repaired;
};

struct FrameDocument {
  std::vector<FrameSentence> sentences;
  std::vector<BioRepair> repairs;
};

// Each line: {"id": str, "tokens": [str], "frames": [{"predicate_index": int,
// "tags": [str]}]}, plus an optional "pos": [str] aligned with tokens.
// With repair_bio, orphan "I-X" tags become "B-X" and are reported instead
// of raising BioSequenceError.
FrameDocument parse_bio_frames(std::string_view document, bool repair_bio = false);

std::string write_frame_sentence(const FrameSentence& sentence);

}  // namespace roleproj
