#pragma once

#include <compare>
#include <string>
#include <vector>

namespace roleproj {

// Alignment endpoint used for unaligned (epsilon) positions.
inline constexpr int kEps = -1;

inline bool is_eps(int index) { return index == kEps; }

// A single alignment link. Either endpoint may be kEps, never both.
// Ordering is by source, then target, so kEps sorts first on either side.
struct Link {
  int src = kEps;
  int tgt = kEps;

  bool aligned() const { return src != kEps && tgt != kEps; }
  auto operator<=>(const Link&) const = default;
};

struct Token {
  int index = 0;
  std::string surface;
  std::string pos;
  std::string lemma;
  bool is_predicate = false;

  bool operator==(const Token&) const = default;
};

// Builds a token list from bare surfaces, indices 0..n-1.
std::vector<Token> make_tokens(const std::vector<std::string>& surfaces);
std::vector<std::string> surfaces(const std::vector<Token>& tokens);

// One predicate frame over a source sentence: one BIO tag per token.
struct SRLFrame {
  int predicate_index = 0;
  std::vector<std::string> tags;

  bool operator==(const SRLFrame&) const = default;
};

struct SentencePair {
  std::string id;
  std::vector<Token> src;
  std::vector<Token> tgt;
};

}  // namespace roleproj
