#include <doctest.h>

#include "roleproj/alignment_graph.hpp"
#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

using namespace roleproj;

namespace {

AlignmentSet make(int sl, int tl, std::initializer_list<Link> links) {
  AlignmentSet set(sl, tl);
  for (const Link& l : links) set.add(l);
  return set;
}

// october(9) 1987(10) crash(11) against écrasement(7) d'(8) octobre(9) 1987(10).
AlignmentSet crash_set() {
  return make(12, 11, {{9, 7}, {9, 9}, {kEps, 8}, {10, 10}, {11, 7}});
}

}  // namespace

TEST_CASE("degrees count only links with both endpoints") {
  const auto d = degrees(make(18, 25, {{17, 23}, {17, 24}}));
  CHECK(d.src[17] == 2);
  CHECK(d.tgt[23] == 1);
  CHECK(d.tgt[24] == 1);
  CHECK(d.src[0] == 0);

  const auto empty = degrees(AlignmentSet(3, 2));
  CHECK(empty.src == std::vector<int>{0, 0, 0});
  CHECK(empty.tgt == std::vector<int>{0, 0});

  const auto c = degrees(make(12, 10, {{9, 7}, {9, 9}, {11, 7}}));
  CHECK(c.src[9] == 2);
  CHECK(c.src[11] == 1);
  CHECK(c.tgt[7] == 2);
  CHECK(c.tgt[9] == 1);

  const auto e = degrees(make(2, 2, {{0, kEps}, {kEps, 1}}));
  CHECK(e.src[0] == 0);
  CHECK(e.tgt[1] == 0);
}

TEST_CASE("partition by endpoint degrees") {
  SUBCASE("one source, two targets") {
    const auto p = partition(make(18, 25, {{17, 23}, {17, 24}}));
    REQUIRE(p.one_to_many.size() == 1);
    CHECK(p.one_to_many[0].src == 17);
    CHECK(p.one_to_many[0].tgts == std::vector<int>{23, 24});
    CHECK(p.one_to_one.empty());
    CHECK(p.many_to_one.empty());
  }
  SUBCASE("two sources, one target") {
    const auto p = partition(make(6, 7, {{4, 6}, {5, 6}}));
    REQUIRE(p.many_to_one.size() == 1);
    CHECK(p.many_to_one[0].srcs == std::vector<int>{4, 5});
    CHECK(p.many_to_one[0].tgt == 6);
  }
  SUBCASE("ordering link sits in both groups") {
    const auto p = partition(crash_set());
    CHECK(p.one_to_one == std::vector<Link>{{10, 10}});
    REQUIRE(p.one_to_many.size() == 1);
    CHECK(p.one_to_many[0].src == 9);
    CHECK(p.one_to_many[0].tgts == std::vector<int>{7, 9});
    REQUIRE(p.many_to_one.size() == 1);
    CHECK(p.many_to_one[0].srcs == std::vector<int>{9, 11});
    CHECK(p.many_to_one[0].tgt == 7);
    CHECK(p.tgt_unaligned == std::vector<int>{8});
    CHECK(p.src_unaligned.empty());
  }
}

TEST_CASE("ordering links have both endpoint degrees above one") {
  CHECK(detect_divergences(crash_set()).ordering_links == std::vector<Link>{{9, 7}});
  // Every link of the 2x3 zig-zag: only the two middle links qualify.
  const auto r = detect_divergences(make(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}));
  CHECK(r.ordering_links == std::vector<Link>{{0, 1}, {1, 1}});
  CHECK(r.one_to_many_groups == 2);
  CHECK(r.many_to_one_groups == 1);

  const auto diag = detect_divergences(make(3, 3, {{0, 0}, {1, 1}, {2, 2}}));
  CHECK(diag.ordering_links.empty());
  CHECK(diag.one_to_many_groups == 0);
  CHECK(diag.many_to_one_groups == 0);
}

TEST_CASE("eps links next to real links are reported") {
  const auto r = detect_divergences(make(2, 2, {{0, 0}, {0, kEps}, {kEps, 0}, {kEps, 1}}));
  CHECK(r.src_eps_conflicts == std::vector<int>{0});
  CHECK(r.tgt_eps_conflicts == std::vector<int>{0});
}

TEST_CASE("alignment set rejects bad links and collapses duplicates") {
  AlignmentSet set(2, 3);
  set.add({0, 1});
  set.add({0, 1});
  CHECK(set.size() == 1);
  CHECK_THROWS_AS(set.add({2, 0}), RangeError);
  CHECK_THROWS_AS(set.add({0, 3}), RangeError);
  CHECK_THROWS_AS(set.add({-2, 0}), RangeError);
  CHECK_THROWS_AS(set.add({kEps, kEps}), RangeError);
}

TEST_CASE("pharaoh lines parse and serialize") {
  const auto set = parse_alignment_line("  9-9 eps-8 9-7 11-7 10-10 9-7 ", 12, 11);
  CHECK(set == crash_set());
  CHECK(serialize_alignment(set) == "eps-8 9-7 9-9 10-10 11-7");
  CHECK(parse_alignment_line("", 3, 3).empty());
  CHECK(format_link({3, kEps}) == "3-eps");

  SUBCASE("errors carry line and column") {
    try {
      parse_alignment_line("0-0 1x2", 3, 3, 4);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_alignment_line("0-a", 3, 3), ParseError);
    CHECK_THROWS_AS(parse_alignment_line("-1", 3, 3), ParseError);
    CHECK_THROWS_AS(parse_alignment_line("eps-eps", 3, 3), ParseError);
    CHECK_THROWS_AS(parse_alignment_line("0-3", 3, 3), RangeError);
    CHECK_THROWS_AS(parse_alignment_line("5-0", 3, 3), RangeError);
  }
}

TEST_CASE("line splitting ignores one trailing newline and strips CR") {
  CHECK(split_lines("") == std::vector<std::string>{});
  CHECK(split_lines("a\nb\n") == std::vector<std::string>{"a", "b"});
  CHECK(split_lines("a\r\n\nb") == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("token lines with optional ids") {
  const auto lines = parse_token_lines("s1\tle  chat\nun chien\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].id == std::optional<std::string>("s1"));
  CHECK(lines[0].tokens == std::vector<std::string>{"le", "chat"});
  CHECK_FALSE(lines[1].id.has_value());
  CHECK(lines[1].tokens == std::vector<std::string>{"un", "chien"});
}
