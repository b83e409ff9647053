#include <cstdint>
#include <vector>

#include <doctest.h>

#include "wmlab/adversary.hpp"

using namespace wmlab;

namespace {

std::vector<PixelImage> all_images(std::size_t width, std::size_t height, int depth) {
  const std::uint16_t maxv = static_cast<std::uint16_t>((1u << depth) - 1u);
  const std::size_t n = width * height;
  std::vector<PixelImage> images;
  std::vector<std::uint16_t> pixels(n, 0);
  for (;;) {
    images.emplace_back(width, height, depth, pixels);
    std::size_t k = n;
    while (k > 0 && pixels[k - 1] == maxv) pixels[--k] = 0;
    if (k == 0) return images;
    ++pixels[k - 1];
  }
}

}  // namespace

TEST_CASE("attack does nothing when the host parities agree") {
  const PixelImage target(2, 2, 2, {0, 1, 1, 0});
  const PixelImage host(2, 2, 2, {0, 1, 2, 3});
  const AttackTrace trace = complement_attack(target, host, host);
  CHECK(trace.original_check_bit.value() == 0);
  CHECK(trace.attacker_check_bit.value() == 0);
  CHECK(trace.action == AttackAction::NoOp);
  CHECK(trace.attacked == target);
}

TEST_CASE("attack complements every pixel when the host parities differ") {
  const PixelImage target(2, 2, 2, {0, 1, 1, 0});
  const PixelImage original_host(2, 2, 2, {0, 1, 2, 3});   // parity 0
  const PixelImage attacker_host(2, 2, 2, {1, 0, 0, 0});   // parity 1
  const AttackTrace trace = complement_attack(target, original_host, attacker_host);
  CHECK(trace.original_check_bit.value() == 0);
  CHECK(trace.attacker_check_bit.value() == 1);
  CHECK(trace.action == AttackAction::ComplementAll);
  CHECK(trace.attacked == PixelImage(2, 2, 2, {3, 2, 2, 3}));
}

TEST_CASE("identical hosts always mean no-op") {
  for (const PixelImage& host : all_images(2, 1, 2)) {
    const PixelImage target(2, 1, 2, {3, 1});
    const AttackTrace trace = complement_attack(target, host, host);
    CHECK(trace.action == AttackAction::NoOp);
    CHECK(trace.attacked == target);
  }
}

TEST_CASE("attack rejects mismatched shapes") {
  const PixelImage a(2, 2, 2, {0, 1, 2, 3});
  const PixelImage b(2, 1, 2, {0, 1});
  const PixelImage c(2, 2, 1, {0, 1, 1, 0});
  CHECK_THROWS_AS(complement_attack(a, b, a), DimensionMismatch);
  CHECK_THROWS_AS(complement_attack(a, a, b), DimensionMismatch);
  CHECK_THROWS_AS(complement_attack(c, a, a), DimensionMismatch);
}

// Attacking twice with the same hosts repeats the same decision, and
// complement composed with complement is the identity, so the doubly
// attacked image is always the original target.
TEST_CASE("attack composition table, exhaustively at 2x2 depth 2") {
  const auto images = all_images(2, 2, 2);
  std::uint64_t checked = 0, violations = 0;
  for (const PixelImage& original_host : images) {
    const unsigned b = check_bit(original_host).value();
    for (const PixelImage& attacker_host : images) {
      const unsigned b_tilde = check_bit(attacker_host).value();
      for (const PixelImage& target : images) {
        const AttackTrace once = complement_attack(target, original_host, attacker_host);
        const bool first_ok =
            b == b_tilde
                ? once.action == AttackAction::NoOp && once.attacked == target
                : once.action == AttackAction::ComplementAll &&
                      once.attacked == complement_image(target);
        const AttackTrace twice =
            complement_attack(once.attacked, original_host, attacker_host);
        const bool second_ok = twice.action == once.action && twice.attacked == target;
        ++checked;
        if (!first_ok || !second_ok) ++violations;
      }
    }
  }
  CHECK(checked == 256ull * 256 * 256);
  CHECK(violations == 0);
}

TEST_CASE("claim evaluation verdicts") {
  const BitMatrix w(2, 2, {0, 0, 1, 1});
  const BitMatrix w_tilde(2, 2, {1, 1, 1, 1});

  CHECK(evaluate_claim(BitMatrix(2, 2, {0, 0, 1, 1}), w, w_tilde).verdict ==
        Verdict::OriginalSurvives);
  CHECK(evaluate_claim(BitMatrix(2, 2, {1, 1, 1, 1}), w, w_tilde).verdict ==
        Verdict::ReplacedWithAttacker);
  CHECK(evaluate_claim(BitMatrix(2, 2, {1, 0, 0, 0}), w, w_tilde).verdict ==
        Verdict::NeitherWatermark);
}

TEST_CASE("replacement wins when both watermarks are equal") {
  const BitMatrix w(1, 2, {1, 0});
  CHECK(evaluate_claim(w, w, w).verdict == Verdict::ReplacedWithAttacker);
}

TEST_CASE("claim evaluation rejects mismatched dimensions") {
  const BitMatrix w(2, 2, {0, 0, 1, 1});
  const BitMatrix narrow(2, 1, {0, 1});
  CHECK_THROWS_AS(evaluate_claim(narrow, w, w), DimensionMismatch);
  CHECK_THROWS_AS(evaluate_claim(w, narrow, w), DimensionMismatch);
  CHECK_THROWS_AS(evaluate_claim(w, w, narrow), DimensionMismatch);
}

TEST_CASE("exactly one verdict per input") {
  const std::vector<BitMatrix> matrices = {
      BitMatrix(1, 2, {0, 0}), BitMatrix(1, 2, {0, 1}),
      BitMatrix(1, 2, {1, 0}), BitMatrix(1, 2, {1, 1})};
  for (const BitMatrix& extracted : matrices)
    for (const BitMatrix& w : matrices)
      for (const BitMatrix& w_tilde : matrices) {
        const ClaimOutcome outcome = evaluate_claim(extracted, w, w_tilde);
        if (extracted == w_tilde) {
          CHECK(outcome.verdict == Verdict::ReplacedWithAttacker);
        } else if (extracted == w) {
          CHECK(outcome.verdict == Verdict::OriginalSurvives);
        } else {
          CHECK(outcome.verdict == Verdict::NeitherWatermark);
        }
        CHECK(outcome.extracted == extracted);
      }
}
