#include "wmlab/adversary.hpp"

namespace wmlab {

AttackTrace complement_attack(const PixelImage& target, const PixelImage& original_host,
                              const PixelImage& attacker_host) {
  if (!target.same_shape(original_host) || !target.same_shape(attacker_host))
    throw DimensionMismatch("attack requires target and both hosts to share shape and depth");
  const CheckBit b = check_bit(original_host);
  const CheckBit b_tilde = check_bit(attacker_host);
  if (b == b_tilde) return AttackTrace{b, b_tilde, AttackAction::NoOp, target};
  return AttackTrace{b, b_tilde, AttackAction::ComplementAll, complement_image(target)};
}

ClaimOutcome evaluate_claim(const BitMatrix& extracted, const BitMatrix& original_wm,
                            const BitMatrix& attacker_wm) {
  const bool same_dims = extracted.rows() == original_wm.rows() &&
                         extracted.cols() == original_wm.cols() &&
                         extracted.rows() == attacker_wm.rows() &&
                         extracted.cols() == attacker_wm.cols();
  if (!same_dims)
    throw DimensionMismatch("claim evaluation requires all three matrices to share dimensions");
  // Replacement is checked first: W == W-tilde counts as the claim holding
  // vacuously rather than as survival.
  if (extracted == attacker_wm) return ClaimOutcome{Verdict::ReplacedWithAttacker, extracted};
  if (extracted == original_wm) return ClaimOutcome{Verdict::OriginalSurvives, extracted};
  return ClaimOutcome{Verdict::NeitherWatermark, extracted};
}

}  // namespace wmlab
