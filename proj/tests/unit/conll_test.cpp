#include <doctest.h>

#include "roleproj/conll2009.hpp"
#include "roleproj/corpus_io.hpp"
#include "roleproj/errors.hpp"

using namespace roleproj;

namespace {

const char* kLightVerb =
    "1\tmarket\tmarket\tmarket\tNN\tNN\t_\t_\t2\t2\tSBJ\tSBJ\t_\t_\tARG1\n"
    "2\tfell\tfall\tfall\t_\tVBD\t_\t_\t0\t0\tROOT\tROOT\tY\tfall.01\t_\n"
    "3\t156.83\t156.83\t156.83\tCD\tCD\t_\t_\t2\t2\tOBJ\tOBJ\t_\t_\tARG2\n"
    "\n";

}  // namespace

TEST_CASE("CoNLL-2009 parse and write") {
  const auto doc = parse_conll2009(kLightVerb);
  REQUIRE(doc.sentences.size() == 1);
  const auto& s = doc.sentences[0];
  CHECK(s.ordinal == 1);
  CHECK(s.rows.size() == 3);
  CHECK(s.apred_count == 1);
  CHECK(s.predicate_count() == 1);
  CHECK(s.predicate_rows() == std::vector<std::size_t>{1});
  CHECK(s.apred(2, 0) == "ARG2");
  CHECK(doc.warnings.empty());
  CHECK(write_conll2009(doc.sentences) == kLightVerb);
}

TEST_CASE("CoNLL-2009 tolerates extra blank lines and a missing final blank") {
  const std::string text = std::string("\n\n") + kLightVerb + "\n\n" + kLightVerb;
  const auto doc = parse_conll2009(text.substr(0, text.size() - 2));
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[1].ordinal == 2);
  CHECK(parse_conll2009("").sentences.empty());
}

TEST_CASE("CoNLL-2009 structural errors name the sentence") {
  SUBCASE("ragged rows") {
    const std::string bad = std::string(kLightVerb) +
                            "1\ta\ta\ta\tNN\tNN\t_\t_\t0\t0\tROOT\tROOT\t_\t_\n"
                            "2\tb\tb\tb\tNN\tNN\t_\t_\t1\t1\tNMOD\tNMOD\t_\t_\tX\n";
    try {
      parse_conll2009(bad);
      FAIL("expected StructuralError");
    } catch (const StructuralError& e) {
      CHECK(std::string(e.what()).find("sentence 2") != std::string::npos);
    }
  }
  SUBCASE("too few columns") {
    CHECK_THROWS_AS(parse_conll2009("1\ta\tb\n"), StructuralError);
  }
  SUBCASE("non-contiguous ids") {
    CHECK_THROWS_AS(parse_conll2009("2\ta\ta\ta\tNN\tNN\t_\t_\t0\t0\tROOT\tROOT\t_\t_\n"),
                    StructuralError);
  }
}

TEST_CASE("predicate/APRED mismatch is a warning") {
  const auto doc = parse_conll2009("1\ta\ta\ta\tNN\tNN\t_\t_\t0\t0\tROOT\tROOT\tY\ta.01\n");
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].find("sentence 1") != std::string::npos);
}

TEST_CASE("headword frames from APRED columns") {
  const auto hw = headword_frames(parse_conll2009(kLightVerb).sentences[0]);
  CHECK(surfaces(hw.tokens) == std::vector<std::string>{"market", "fell", "156.83"});
  CHECK(hw.tokens[1].pos == "VBD");  // POS "_" falls back to PPOS
  CHECK(hw.tokens[1].is_predicate);
  REQUIRE(hw.frames.size() == 1);
  CHECK(hw.frames[0].predicate_index == 1);
  CHECK(hw.frames[0].tags == std::vector<std::string>{"B-ARG1", "B-V", "B-ARG2"});
}
