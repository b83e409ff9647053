#pragma once

#include <cstdint>
#include <optional>

#include "wmlab/adversary.hpp"
#include "wmlab/core.hpp"
#include "wmlab/scheme.hpp"

namespace wmlab {

/// One complete attack instance: both hosts, both watermarks, the depth
/// they live at, and the embedding rule to run under.
struct Scenario {
  int depth;
  PixelImage host;
  BitMatrix watermark;
  PixelImage attacker_host;
  BitMatrix attacker_watermark;
  EmbedRule rule;

  /// Throws unless every dimension compatibility holds: hosts share shape
  /// and the declared depth, each watermark tiles its host, and the two
  /// watermarks share dimensions (the claim compares them bit for bit).
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The 2x2 depth-2 instance whose expected values are recorded as
/// constants: host [[0,1],[2,3]], watermark [[0,0],[1,1]], attacker host
/// equal to the host, attacker watermark all ones, Complement rule.
Scenario builtin_scenario();

/// Bit-exact comparisons of one run's artifacts against the recorded
/// expected values of the builtin scenario.
struct ReferenceMatch {
  bool check_bits = false;            // b == b_tilde == 0
  bool watermarked = false;           // [[0,1],[1,0]]
  bool attacker_watermarked = false;  // [[3,2],[1,0]]
  bool extracted = false;             // [[0,0],[1,1]]
  bool attacker_extracted = false;    // [[1,1],[1,1]]
  bool extractions_differ = false;    // extracted != attacker_extracted

  bool all() const noexcept {
    return check_bits && watermarked && attacker_watermarked && extracted &&
           attacker_extracted && extractions_differ;
  }
};

struct CounterexampleReport {
  int depth;
  EmbedRule rule;
  CheckBit b;        // parity of the host
  CheckBit b_tilde;  // parity of the attacker's host
  AttackAction action;
  PixelImage watermarked;
  PixelImage attacker_watermarked;
  PixelImage attacked;
  BitMatrix extracted;           // from the attacked image
  BitMatrix attacker_extracted;  // from the attacker's watermarked image
  ClaimOutcome outcome;
  bool scenario_is_builtin;
  ReferenceMatch reference_match;
};

/// Runs the full pipeline on one scenario: embed both watermarks, attack
/// the genuine watermarked image, extract from the attacked image and from
/// the attacker's watermarked image (informed extraction under Complement,
/// blind parity extraction under ParityAdjust), and judge the claim.
CounterexampleReport run_counterexample(const Scenario& scenario);

/// Exact ratio of two counts, kept reduced. Counts stay integral end to
/// end, so no tolerance is ever involved.
struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  static Rational reduce(std::uint64_t num, std::uint64_t den);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Instance space for a sweep: any component left unfixed ranges over its
/// full domain (every pixel assignment for images, every bit assignment
/// for watermarks). wm_rows/wm_cols of 0 mean "same as the image", i.e.
/// one pixel per block.
struct SweepOptions {
  std::size_t width = 0;
  std::size_t height = 0;
  int depth = 1;
  EmbedRule rule = EmbedRule::Complement;
  std::size_t wm_rows = 0;
  std::size_t wm_cols = 0;
  std::optional<PixelImage> fixed_host;
  std::optional<BitMatrix> fixed_watermark;
  std::optional<PixelImage> fixed_attacker_host;
  std::optional<BitMatrix> fixed_attacker_watermark;
};

struct SweepReport {
  std::size_t width = 0;
  std::size_t height = 0;
  int depth = 1;
  EmbedRule rule = EmbedRule::Complement;
  std::size_t wm_rows = 0;
  std::size_t wm_cols = 0;
  std::uint64_t total_instances = 0;
  std::uint64_t replaced_count = 0;
  std::uint64_t survives_count = 0;
  std::uint64_t neither_count = 0;
  Rational success_rate;  // replaced_count / total_instances
};

/// Runs run_counterexample on every instance of the space and tallies the
/// verdicts. Enumeration is deterministic and single-threaded; the tallies
/// are order-independent by construction.
///
/// Tractability guard: width*height <= 9 and depth <= 2, otherwise
/// IntractableDomain. Sampling is deliberately not offered — a partial
/// sweep would not refute anything.
SweepReport exhaustive_sweep(const SweepOptions& options);

struct TheoremCounterexample {
  PixelImage host;
  BitMatrix watermark;
  PixelImage attacker_host;
  BitMatrix extracted;
  BitMatrix expected;
};

struct TheoremReport {
  std::size_t width = 0;
  std::size_t height = 0;
  int depth = 1;
  EmbedRule rule = EmbedRule::Complement;
  std::size_t wm_rows = 0;
  std::size_t wm_cols = 0;
  std::uint64_t instances_checked = 0;
  bool holds = false;
  std::optional<TheoremCounterexample> counterexample;
};

/// Checks, over every (host, watermark, attacker host) in the domain, that
/// extraction after the attack is fully determined by the check bits:
///   Complement    — equals W when b == b_tilde, bitwise NOT of W otherwise.
///   ParityAdjust  — blind extraction equals W, XORed with
///                   (block pixel count mod 2) on every bit when the attack
///                   complemented.
/// Stops at the first violating instance and reports it. Same tractability
/// guard as exhaustive_sweep.
TheoremReport verify_attack_outcome_theorem(std::size_t width, std::size_t height, int depth,
                                            EmbedRule rule, std::size_t wm_rows = 0,
                                            std::size_t wm_cols = 0);

}  // namespace wmlab
