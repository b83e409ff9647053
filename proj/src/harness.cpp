#include "wmlab/harness.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace wmlab {

namespace {

const PixelImage& expected_watermarked() {
  static const PixelImage img(2, 2, 2, {0, 1, 1, 0});
  return img;
}
const PixelImage& expected_attacker_watermarked() {
  static const PixelImage img(2, 2, 2, {3, 2, 1, 0});
  return img;
}
const BitMatrix& expected_extracted() {
  static const BitMatrix m(2, 2, {0, 0, 1, 1});
  return m;
}
const BitMatrix& expected_attacker_extracted() {
  static const BitMatrix m(2, 2, {1, 1, 1, 1});
  return m;
}

void check_tractable(std::size_t width, std::size_t height, int depth) {
  if (width == 0 || height == 0) throw InvariantViolation("domain dimensions must be positive");
  if (depth < 1) throw InvariantViolation("bit depth must be at least 1");
  if (width * height > 9 || depth > 2)
    throw IntractableDomain("exhaustive domain limited to width*height <= 9 and depth <= 2; got " +
                            std::to_string(width) + "x" + std::to_string(height) + " at depth " +
                            std::to_string(depth));
}

// Every assignment of `count` values over [0, maxv], last position
// advancing fastest. Calls fn with the current assignment.
template <typename T, typename Fn>
void for_each_assignment(std::size_t count, T maxv, Fn&& fn) {
  std::vector<T> values(count, 0);
  for (;;) {
    fn(values);
    std::size_t k = count;
    while (k > 0 && values[k - 1] == maxv) values[--k] = 0;
    if (k == 0) return;
    ++values[k - 1];
  }
}

std::uint64_t domain_size(std::size_t positions, std::uint64_t alphabet) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < positions; ++i) n *= alphabet;
  return n;
}

template <typename Fn>
void for_each_image(const std::optional<PixelImage>& fixed, std::size_t width,
                    std::size_t height, int depth, Fn&& fn) {
  if (fixed) {
    fn(*fixed);
    return;
  }
  const auto maxv = static_cast<std::uint16_t>((1u << depth) - 1u);
  for_each_assignment(width * height, maxv, [&](const std::vector<std::uint16_t>& pixels) {
    fn(PixelImage(width, height, depth, pixels));
  });
}

template <typename Fn>
void for_each_watermark(const std::optional<BitMatrix>& fixed, std::size_t rows,
                        std::size_t cols, Fn&& fn) {
  if (fixed) {
    fn(*fixed);
    return;
  }
  for_each_assignment(rows * cols, std::uint8_t{1}, [&](const std::vector<std::uint8_t>& bits) {
    fn(BitMatrix(rows, cols, bits));
  });
}

}  // namespace

void Scenario::validate() const {
  if (host.bit_depth() != depth || attacker_host.bit_depth() != depth)
    throw InvariantViolation("scenario depth " + std::to_string(depth) +
                             " disagrees with the hosts' bit depth");
  if (!host.same_shape(attacker_host))
    throw DimensionMismatch("host and attacker host must share shape and depth");
  make_grid(host, watermark);
  make_grid(attacker_host, attacker_watermark);
  if (watermark.rows() != attacker_watermark.rows() ||
      watermark.cols() != attacker_watermark.cols())
    throw DimensionMismatch("the two watermarks must share dimensions");
}

Scenario builtin_scenario() {
  return Scenario{2,
                  PixelImage(2, 2, 2, {0, 1, 2, 3}),
                  BitMatrix(2, 2, {0, 0, 1, 1}),
                  PixelImage(2, 2, 2, {0, 1, 2, 3}),
                  BitMatrix(2, 2, {1, 1, 1, 1}),
                  EmbedRule::Complement};
}

CounterexampleReport run_counterexample(const Scenario& scenario) {
  scenario.validate();
  const std::size_t wm_rows = scenario.watermark.rows();
  const std::size_t wm_cols = scenario.watermark.cols();

  const EmbeddingResult genuine = embed(scenario.host, scenario.watermark, scenario.rule);
  const EmbeddingResult attacker =
      embed(scenario.attacker_host, scenario.attacker_watermark, scenario.rule);

  const AttackTrace trace =
      complement_attack(genuine.watermarked, scenario.host, scenario.attacker_host);

  const bool informed = scenario.rule == EmbedRule::Complement;
  BitMatrix extracted =
      informed ? extract_informed(trace.attacked, scenario.host, genuine.check_bit,
                                  wm_rows, wm_cols)
               : extract_blind_parity(trace.attacked, wm_rows, wm_cols);
  BitMatrix attacker_extracted =
      informed ? extract_informed(attacker.watermarked, scenario.attacker_host,
                                  attacker.check_bit, wm_rows, wm_cols)
               : extract_blind_parity(attacker.watermarked, wm_rows, wm_cols);

  ClaimOutcome outcome =
      evaluate_claim(extracted, scenario.watermark, scenario.attacker_watermark);

  ReferenceMatch match;
  match.check_bits = trace.original_check_bit.value() == 0 && trace.attacker_check_bit.value() == 0;
  match.watermarked = genuine.watermarked == expected_watermarked();
  match.attacker_watermarked = attacker.watermarked == expected_attacker_watermarked();
  match.extracted = extracted == expected_extracted();
  match.attacker_extracted = attacker_extracted == expected_attacker_extracted();
  match.extractions_differ = !(extracted == attacker_extracted);

  return CounterexampleReport{scenario.depth,
                              scenario.rule,
                              trace.original_check_bit,
                              trace.attacker_check_bit,
                              trace.action,
                              genuine.watermarked,
                              attacker.watermarked,
                              trace.attacked,
                              std::move(extracted),
                              std::move(attacker_extracted),
                              std::move(outcome),
                              scenario == builtin_scenario(),
                              match};
}

Rational Rational::reduce(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

SweepReport exhaustive_sweep(const SweepOptions& options) {
  check_tractable(options.width, options.height, options.depth);

  std::size_t wm_rows = options.wm_rows != 0 ? options.wm_rows : options.height;
  std::size_t wm_cols = options.wm_cols != 0 ? options.wm_cols : options.width;
  if (options.fixed_watermark) {
    if (options.wm_rows == 0 && options.wm_cols == 0) {
      wm_rows = options.fixed_watermark->rows();
      wm_cols = options.fixed_watermark->cols();
    }
    if (options.fixed_watermark->rows() != wm_rows || options.fixed_watermark->cols() != wm_cols)
      throw DimensionMismatch("fixed watermark does not match the sweep's watermark dimensions");
  }
  if (options.fixed_attacker_watermark &&
      (options.fixed_attacker_watermark->rows() != wm_rows ||
       options.fixed_attacker_watermark->cols() != wm_cols))
    throw DimensionMismatch(
        "fixed attacker watermark does not match the sweep's watermark dimensions");

  for (const auto& fixed : {options.fixed_host, options.fixed_attacker_host}) {
    if (fixed && (fixed->width() != options.width || fixed->height() != options.height ||
                  fixed->bit_depth() != options.depth))
      throw DimensionMismatch("fixed host does not match the sweep's shape or depth");
  }

  // Divisibility must hold before enumeration starts, not on instance one.
  make_grid(PixelImage(options.width, options.height, options.depth,
                       std::vector<std::uint16_t>(options.width * options.height, 0)),
            wm_rows, wm_cols);

  SweepReport report;
  report.width = options.width;
  report.height = options.height;
  report.depth = options.depth;
  report.rule = options.rule;
  report.wm_rows = wm_rows;
  report.wm_cols = wm_cols;

  const std::uint64_t pixel_alphabet = 1ull << options.depth;
  const std::uint64_t host_domain =
      options.fixed_host ? 1 : domain_size(options.width * options.height, pixel_alphabet);
  const std::uint64_t attacker_host_domain =
      options.fixed_attacker_host ? 1
                                  : domain_size(options.width * options.height, pixel_alphabet);
  const std::uint64_t wm_domain =
      options.fixed_watermark ? 1 : domain_size(wm_rows * wm_cols, 2);
  const std::uint64_t attacker_wm_domain =
      options.fixed_attacker_watermark ? 1 : domain_size(wm_rows * wm_cols, 2);
  report.total_instances = host_domain * wm_domain * attacker_host_domain * attacker_wm_domain;

  for_each_image(options.fixed_host, options.width, options.height, options.depth,
                 [&](const PixelImage& host) {
    for_each_watermark(options.fixed_watermark, wm_rows, wm_cols, [&](const BitMatrix& wm) {
      for_each_image(options.fixed_attacker_host, options.width, options.height, options.depth,
                     [&](const PixelImage& attacker_host) {
        for_each_watermark(options.fixed_attacker_watermark, wm_rows, wm_cols,
                           [&](const BitMatrix& attacker_wm) {
          const Scenario instance{options.depth, host,          wm,
                                  attacker_host, attacker_wm,   options.rule};
          const CounterexampleReport run = run_counterexample(instance);
          switch (run.outcome.verdict) {
            case Verdict::ReplacedWithAttacker: ++report.replaced_count; break;
            case Verdict::OriginalSurvives: ++report.survives_count; break;
            case Verdict::NeitherWatermark: ++report.neither_count; break;
          }
        });
      });
    });
  });

  report.success_rate = Rational::reduce(report.replaced_count, report.total_instances);
  return report;
}

TheoremReport verify_attack_outcome_theorem(std::size_t width, std::size_t height, int depth,
                                            EmbedRule rule, std::size_t wm_rows,
                                            std::size_t wm_cols) {
  check_tractable(width, height, depth);
  if (wm_rows == 0) wm_rows = height;
  if (wm_cols == 0) wm_cols = width;

  const BlockGrid grid =
      make_grid(PixelImage(width, height, depth, std::vector<std::uint16_t>(width * height, 0)),
                wm_rows, wm_cols);
  const bool odd_block = grid.block_pixel_count() % 2 == 1;

  TheoremReport report;
  report.width = width;
  report.height = height;
  report.depth = depth;
  report.rule = rule;
  report.wm_rows = wm_rows;
  report.wm_cols = wm_cols;
  report.holds = true;

  std::optional<PixelImage> no_image;
  std::optional<BitMatrix> no_matrix;
  bool done = false;

  for_each_watermark(no_matrix, wm_rows, wm_cols, [&](const BitMatrix& wm) {
    if (done) return;
    const BitMatrix wm_inverted = wm.inverted();
    for_each_image(no_image, width, height, depth, [&](const PixelImage& host) {
      if (done) return;
      const EmbeddingResult genuine = embed(host, wm, rule);
      for_each_image(no_image, width, height, depth, [&](const PixelImage& attacker_host) {
        if (done) return;
        const AttackTrace trace =
            complement_attack(genuine.watermarked, host, attacker_host);
        const BitMatrix actual =
            rule == EmbedRule::Complement
                ? extract_informed(trace.attacked, host, genuine.check_bit, wm_rows, wm_cols)
                : extract_blind_parity(trace.attacked, wm_rows, wm_cols);
        const bool complemented = trace.action == AttackAction::ComplementAll;
        const BitMatrix& expected =
            (complemented && (rule == EmbedRule::Complement || odd_block)) ? wm_inverted : wm;
        ++report.instances_checked;
        if (!(actual == expected)) {
          report.holds = false;
          report.counterexample =
              TheoremCounterexample{host, wm, attacker_host, actual, expected};
          done = true;
        }
      });
    });
  });

  return report;
}

}  // namespace wmlab
