#pragma once

#include "wmlab/core.hpp"

namespace wmlab {

enum class AttackAction {
  NoOp,
  ComplementAll,
};

/// What the attack did and why: the two host check bits that drove the
/// decision, and the resulting image.
struct AttackTrace {
  CheckBit original_check_bit;   // from the original host
  CheckBit attacker_check_bit;   // from the attacker's host
  AttackAction action;
  PixelImage attacked;
};

/// The three-step substitution attack: compare the parity of the original
/// host with the parity of the attacker's host; when they differ,
/// complement every pixel of the target, otherwise leave it alone.
/// The target is the genuine watermarked image being tampered with.
AttackTrace complement_attack(const PixelImage& target, const PixelImage& original_host,
                              const PixelImage& attacker_host);

enum class Verdict {
  ReplacedWithAttacker,
  OriginalSurvives,
  NeitherWatermark,
};

struct ClaimOutcome {
  Verdict verdict;
  BitMatrix extracted;
};

/// Decides whether the attack's claim held for one extraction result.
/// ReplacedWithAttacker is checked first, so W == W-tilde counts as a
/// (vacuous) replacement.
ClaimOutcome evaluate_claim(const BitMatrix& extracted, const BitMatrix& original_wm,
                            const BitMatrix& attacker_wm);

}  // namespace wmlab
