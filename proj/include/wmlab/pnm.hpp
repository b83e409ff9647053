#pragma once

#include <string>
#include <string_view>

#include "wmlab/core.hpp"
#include "wmlab/harness.hpp"

namespace wmlab {

/// Reads an ASCII "P2" or binary "P5" PGM. The bit depth is the smallest d
/// with 2^d - 1 >= maxval; maxval must be in [1, 65535]. Arbitrary input
/// bytes never crash the parser — every failure is a typed Error carrying
/// the offending line.
PixelImage read_pgm(std::string_view bytes);

/// Canonical ASCII PGM: "P2", dimensions, maxval = 2^d - 1, one image row
/// per line with single-space separators, trailing newline. Equal images
/// produce byte-identical output.
std::string write_pgm(const PixelImage& image);

/// Reads an ASCII "P1" PBM; raster digits may be packed or spaced.
BitMatrix read_pbm(std::string_view bytes);

/// Canonical ASCII PBM, one row per line, single-space separators.
std::string write_pbm(const BitMatrix& matrix);

/// Scenario v1 document:
///   scenario v1
///   depth <d>
///   rule complement|parity
/// followed by the four grids, each introduced by its label line ("host",
/// "watermark", "attacker_host", "attacker_watermark") and given as
/// space-separated integer rows. Blank lines are ignored and '#' starts a
/// comment. Dimensions are inferred from the grids and all invariants are
/// validated on load.
Scenario read_scenario(std::string_view text);

/// Canonical scenario rendering; parse(render(s)) == s for every valid s.
std::string write_scenario(const Scenario& scenario);

/// Flat "key value" line reports, with grids rendered as a label line
/// followed by rows, mirroring the scenario grammar.
std::string write_report(const CounterexampleReport& report);
std::string write_report(const SweepReport& report);
std::string write_report(const TheoremReport& report);

const char* rule_name(EmbedRule rule);
const char* action_name(AttackAction action);
const char* verdict_name(Verdict verdict);

}  // namespace wmlab
