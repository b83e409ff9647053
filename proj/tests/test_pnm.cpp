#include <string>
#include <vector>

#include <doctest.h>

#include "wmlab/pnm.hpp"

using namespace wmlab;

namespace {

const char* kHostPgm = "P2\n2 2\n3\n0 1\n2 3\n";
const char* kWatermarkPbm = "P1\n2 2\n0 0\n1 1\n";
const char* kBuiltinScenarioText =
    "scenario v1\n"
    "depth 2\n"
    "rule complement\n"
    "host\n0 1\n2 3\n"
    "watermark\n0 0\n1 1\n"
    "attacker_host\n0 1\n2 3\n"
    "attacker_watermark\n1 1\n1 1\n";

}  // namespace

TEST_CASE("canonical PGM round trip") {
  const PixelImage img = read_pgm(kHostPgm);
  CHECK(img == PixelImage(2, 2, 2, {0, 1, 2, 3}));
  CHECK(img.bit_depth() == 2);
  CHECK(write_pgm(img) == kHostPgm);
  CHECK(write_pgm(read_pgm(write_pgm(img))) == write_pgm(img));
}

TEST_CASE("PGM depth is inferred from maxval") {
  CHECK(read_pgm("P2\n1 1\n1\n1\n").bit_depth() == 1);
  CHECK(read_pgm("P2\n1 1\n3\n0\n").bit_depth() == 2);
  CHECK(read_pgm("P2\n1 1\n4\n4\n").bit_depth() == 3);
  CHECK(read_pgm("P2\n1 1\n255\n200\n").bit_depth() == 8);
  CHECK(read_pgm("P2\n1 1\n65535\n40000\n").bit_depth() == 16);
  // Non-canonical maxval widens on rewrite: depth 3 means maxval 7.
  CHECK(write_pgm(read_pgm("P2\n1 1\n4\n4\n")) == "P2\n1 1\n7\n4\n");
}

TEST_CASE("PGM accepts comments and arbitrary whitespace") {
  const PixelImage img = read_pgm("P2 # magic\n# a comment line\n 2\t2 \n3\n0 1 2 3 # tail\n");
  CHECK(img == PixelImage(2, 2, 2, {0, 1, 2, 3}));
}

TEST_CASE("binary P5 parses to the same image") {
  const std::string one_byte = std::string("P5\n2 2\n3\n") + '\x00' + '\x01' + '\x02' + '\x03';
  CHECK(read_pgm(one_byte) == PixelImage(2, 2, 2, {0, 1, 2, 3}));

  // Two bytes per pixel, big-endian, once maxval exceeds 255.
  const std::string two_byte =
      std::string("P5\n2 1\n1023\n") + '\x01' + '\x00' + '\x00' + '\xff';
  CHECK(read_pgm(two_byte) == PixelImage(2, 1, 10, {256, 255}));
}

TEST_CASE("canonical PBM round trip") {
  const BitMatrix wm = read_pbm(kWatermarkPbm);
  CHECK(wm == BitMatrix(2, 2, {0, 0, 1, 1}));
  CHECK(write_pbm(wm) == kWatermarkPbm);
  CHECK(read_pbm("P1\n2 2\n1 1\n1 1\n") == BitMatrix(2, 2, {1, 1, 1, 1}));
  // Packed digits are legal on input.
  CHECK(read_pbm("P1\n4 1\n0110\n") == BitMatrix(1, 4, {0, 1, 1, 0}));
}

TEST_CASE("scenario round trips in both directions") {
  const Scenario parsed = read_scenario(kBuiltinScenarioText);
  CHECK(parsed == builtin_scenario());
  CHECK(write_scenario(parsed) == kBuiltinScenarioText);
  CHECK(read_scenario(write_scenario(builtin_scenario())) == builtin_scenario());

  Scenario parity = builtin_scenario();
  parity.rule = EmbedRule::ParityAdjust;
  CHECK(read_scenario(write_scenario(parity)) == parity);
}

TEST_CASE("scenario comments, blank lines and odd spacing are tolerated") {
  const Scenario s = read_scenario(
      "scenario v1   # header\n"
      "\n"
      "depth 2\n"
      "rule complement\n"
      "host\n  0   1\n2 3   # row\n"
      "watermark\n0 0\n1 1\n"
      "\n\n"
      "attacker_host\n0 1\n2 3\n"
      "attacker_watermark\n1 1\n1 1\n");
  CHECK(s == builtin_scenario());
}

TEST_CASE("scenario grammar errors carry line numbers") {
  try {
    read_scenario("scenario v2\n");
    FAIL("expected GrammarError");
  } catch (const GrammarError& e) {
    CHECK(e.line() == 1);
  }

  try {
    read_scenario(
        "scenario v1\ndepth 2\nrule complement\n"
        "host\n0 1\n2 x\n"
        "watermark\n0 0\n1 1\n"
        "attacker_host\n0 1\n2 3\n"
        "attacker_watermark\n1 1\n1 1\n");
    FAIL("expected GrammarError");
  } catch (const GrammarError& e) {
    CHECK(e.line() == 6);
  }
}

TEST_CASE("scenario validation failures are typed") {
  // Host pixel exceeding the declared depth.
  CHECK_THROWS_AS(read_scenario("scenario v1\ndepth 2\nrule complement\n"
                                "host\n0 1\n2 4\n"
                                "watermark\n0 0\n1 1\n"
                                "attacker_host\n0 1\n2 3\n"
                                "attacker_watermark\n1 1\n1 1\n"),
                  InvariantViolation);
  // Missing final section.
  CHECK_THROWS_AS(read_scenario("scenario v1\ndepth 2\nrule complement\n"
                                "host\n0 1\n2 3\n"
                                "watermark\n0 0\n1 1\n"
                                "attacker_host\n0 1\n2 3\n"),
                  MissingSection);
  // Sections out of order.
  CHECK_THROWS_AS(read_scenario("scenario v1\ndepth 2\nrule complement\n"
                                "watermark\n0 0\n1 1\n"
                                "host\n0 1\n2 3\n"
                                "attacker_host\n0 1\n2 3\n"
                                "attacker_watermark\n1 1\n1 1\n"),
                  MissingSection);
  // Watermark entry that is not a bit.
  CHECK_THROWS_AS(read_scenario("scenario v1\ndepth 2\nrule complement\n"
                                "host\n0 1\n2 3\n"
                                "watermark\n0 2\n1 1\n"
                                "attacker_host\n0 1\n2 3\n"
                                "attacker_watermark\n1 1\n1 1\n"),
                  InvariantViolation);
  // Ragged grid.
  CHECK_THROWS_AS(read_scenario("scenario v1\ndepth 2\nrule complement\n"
                                "host\n0 1\n2\n"
                                "watermark\n0 0\n1 1\n"
                                "attacker_host\n0 1\n2 3\n"
                                "attacker_watermark\n1 1\n1 1\n"),
                  GrammarError);
}

TEST_CASE("malformed inputs raise typed errors, never crashes") {
  const struct {
    const char* name;
    std::string bytes;
    ErrorKind expected;
  } corpus[] = {
      {"empty", "", ErrorKind::MalformedHeader},
      {"bad magic", "P9\n2 2\n3\n0 0 0 0\n", ErrorKind::MalformedHeader},
      {"magic only", "P2", ErrorKind::MalformedHeader},
      {"negative width", "P2\n-1 2\n3\n0 0\n", ErrorKind::MalformedHeader},
      {"zero dimension", "P2\n0 2\n3\n\n", ErrorKind::MalformedHeader},
      {"huge dimension", "P2\n99999999999 1\n3\n0\n", ErrorKind::MalformedHeader},
      {"maxval zero", "P2\n1 1\n0\n0\n", ErrorKind::MalformedHeader},
      {"maxval too large", "P2\n1 1\n70000\n0\n", ErrorKind::MalformedHeader},
      {"truncated ascii raster", "P2\n2 2\n3\n0 1 2\n", ErrorKind::TruncatedPayload},
      {"garbage ascii pixel", "P2\n2 2\n3\n0 1 zz 3\n", ErrorKind::TruncatedPayload},
      {"negative pixel", "P2\n2 2\n3\n0 1 -2 3\n", ErrorKind::PixelOutOfRange},
      {"pixel above maxval", "P2\n2 2\n3\n0 1\n2 9\n", ErrorKind::PixelOutOfRange},
      {"truncated binary raster", std::string("P5\n2 2\n3\n") + '\x00' + '\x01',
       ErrorKind::TruncatedPayload},
      {"binary pixel above maxval", std::string("P5\n1 1\n3\n") + '\x09',
       ErrorKind::PixelOutOfRange},
  };
  for (const auto& sample : corpus) {
    INFO(sample.name);
    try {
      read_pgm(sample.bytes);
      FAIL("no error raised");
    } catch (const Error& e) {
      CHECK(e.kind() == sample.expected);
    }
  }

  const struct {
    const char* name;
    std::string bytes;
    ErrorKind expected;
  } pbm_corpus[] = {
      {"bad magic", "P2\n2 2\n0 0\n1 1\n", ErrorKind::MalformedHeader},
      {"non-binary digit", "P1\n2 2\n0 2\n1 1\n", ErrorKind::NonBinaryDigit},
      {"letter in raster", "P1\n2 2\n0 a\n1 1\n", ErrorKind::NonBinaryDigit},
      {"truncated raster", "P1\n2 2\n0 1\n", ErrorKind::TruncatedPayload},
  };
  for (const auto& sample : pbm_corpus) {
    INFO(sample.name);
    try {
      read_pbm(sample.bytes);
      FAIL("no error raised");
    } catch (const Error& e) {
      CHECK(e.kind() == sample.expected);
    }
  }

  // Arbitrary binary noise must come back as a typed error too.
  const std::string noise = {'\x00', '\xff', '\x7f', '\n', '\x01', '#', '\x02'};
  CHECK_THROWS_AS(read_pgm(noise), Error);
  CHECK_THROWS_AS(read_pbm(noise), Error);
  CHECK_THROWS_AS(read_scenario(noise), Error);
}

TEST_CASE("canonical writers are deterministic") {
  const PixelImage img(2, 2, 2, {0, 1, 2, 3});
  CHECK(write_pgm(img) == write_pgm(PixelImage(2, 2, 2, {0, 1, 2, 3})));
  const Scenario s = builtin_scenario();
  CHECK(write_scenario(s) == write_scenario(builtin_scenario()));
}

TEST_CASE("counterexample report text is stable") {
  const std::string report = write_report(run_counterexample(builtin_scenario()));
  CHECK(report ==
        "report counterexample v1\n"
        "rule complement\n"
        "depth 2\n"
        "b 0\n"
        "b_tilde 0\n"
        "action noop\n"
        "verdict original_survives\n"
        "builtin 1\n"
        "match_check_bits 1\n"
        "match_watermarked 1\n"
        "match_attacker_watermarked 1\n"
        "match_extracted 1\n"
        "match_attacker_extracted 1\n"
        "match_extractions_differ 1\n"
        "match_all 1\n"
        "watermarked\n0 1\n1 0\n"
        "attacker_watermarked\n3 2\n1 0\n"
        "attacked\n0 1\n1 0\n"
        "extracted\n0 0\n1 1\n"
        "attacker_extracted\n1 1\n1 1\n");
}

TEST_CASE("sweep report text is stable") {
  SweepOptions o;
  o.width = 2;
  o.height = 2;
  o.depth = 2;
  o.rule = EmbedRule::Complement;
  const Scenario builtin = builtin_scenario();
  o.fixed_host = builtin.host;
  o.fixed_watermark = builtin.watermark;
  o.fixed_attacker_host = builtin.attacker_host;
  CHECK(write_report(exhaustive_sweep(o)) ==
        "report sweep v1\n"
        "rule complement\n"
        "width 2\n"
        "height 2\n"
        "depth 2\n"
        "wm_rows 2\n"
        "wm_cols 2\n"
        "total 16\n"
        "replaced 1\n"
        "survives 15\n"
        "neither 0\n"
        "success_rate 1/16\n");
}
