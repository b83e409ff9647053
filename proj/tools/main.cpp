#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "wmlab/harness.hpp"
#include "wmlab/pnm.hpp"

namespace {

// Exit codes: 0 success, 2 I/O or parse failure, 3 validation or dimension
// failure, 4 verification mismatch.
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;
constexpr int kExitVerification = 4;

int exit_code_for(wmlab::ErrorKind kind) {
  switch (kind) {
    case wmlab::ErrorKind::MalformedHeader:
    case wmlab::ErrorKind::TruncatedPayload:
    case wmlab::ErrorKind::NonBinaryDigit:
    case wmlab::ErrorKind::GrammarError:
    case wmlab::ErrorKind::MissingSection:
      return kExitIo;
    case wmlab::ErrorKind::PixelOutOfRange:
    case wmlab::ErrorKind::InvariantViolation:
    case wmlab::ErrorKind::DimensionMismatch:
    case wmlab::ErrorKind::IntractableDomain:
      return kExitValidation;
  }
  return kExitValidation;
}

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoFailure("failed reading " + path);
  return buffer.str();
}

void spit(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << data;
  out.flush();
  if (!out) throw IoFailure("failed writing " + path);
}

wmlab::EmbedRule rule_from(const std::string& name) {
  return name == "parity" ? wmlab::EmbedRule::ParityAdjust : wmlab::EmbedRule::Complement;
}

// Sidecar format written by `embed --emit-checkbit`: a single "b 0"/"b 1" line.
wmlab::CheckBit read_check_bit_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::string key, value;
  in >> key >> value;
  if (key != "b" || (value != "0" && value != "1"))
    throw wmlab::GrammarError("check-bit file " + path + " must contain \"b 0\" or \"b 1\"", 1);
  return wmlab::CheckBit(value == "1" ? 1u : 0u);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wmlab: block-parity watermarking, the parity-matching complement attack, "
               "and exhaustive verification of its outcome"};
  app.require_subcommand(1);
  const auto rule_values = CLI::IsMember({"complement", "parity"});

  auto* embed_cmd = app.add_subcommand("embed", "Embed a watermark into a host image");
  std::string embed_host, embed_wm, embed_out, embed_checkbit;
  std::string embed_rule = "complement";
  embed_cmd->add_option("--host", embed_host, "host image (PGM)")->required();
  embed_cmd->add_option("--watermark", embed_wm, "watermark (PBM)")->required();
  embed_cmd->add_option("--rule", embed_rule, "embedding rule")->check(rule_values);
  embed_cmd->add_option("--out", embed_out, "watermarked image (PGM)")->required();
  embed_cmd->add_option("--emit-checkbit", embed_checkbit, "write the check bit sidecar here");

  auto* attack_cmd =
      app.add_subcommand("attack", "Run the parity-matching complement attack on an image");
  std::string attack_target, attack_original, attack_attacker, attack_out;
  attack_cmd->add_option("--target", attack_target, "image to tamper with (PGM)")->required();
  attack_cmd->add_option("--original-host", attack_original, "original host (PGM)")->required();
  attack_cmd->add_option("--attacker-host", attack_attacker, "attacker's host (PGM)")->required();
  attack_cmd->add_option("--out", attack_out, "attacked image (PGM)")->required();

  auto* extract_cmd = app.add_subcommand("extract", "Extract a watermark from an image");
  std::string extract_in, extract_mode, extract_ref, extract_checkbit, extract_out;
  std::size_t extract_rows = 0, extract_cols = 0;
  extract_cmd->add_option("--in", extract_in, "watermarked image (PGM)")->required();
  extract_cmd->add_option("--mode", extract_mode, "extraction mode")
      ->check(CLI::IsMember({"informed", "blind"}))
      ->required();
  extract_cmd->add_option("--reference-host", extract_ref, "reference host (PGM, informed only)");
  extract_cmd->add_option("--checkbit", extract_checkbit,
                          "check bit sidecar (informed only)");
  extract_cmd->add_option("--wm-rows", extract_rows, "watermark rows")->required();
  extract_cmd->add_option("--wm-cols", extract_cols, "watermark columns")->required();
  extract_cmd->add_option("--out", extract_out, "extracted watermark (PBM)")->required();

  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "Run the counterexample pipeline and check the recorded expected values");
  std::string verify_scenario;
  bool verify_expect = false;
  verify_cmd->add_option("--scenario", verify_scenario,
                         "scenario file (default: the builtin scenario)");
  verify_cmd->add_flag("--expect-paper", verify_expect,
                       "require the recorded expected values even for a custom scenario");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Exhaustively enumerate scenarios and tally the verdicts");
  std::size_t sweep_width = 0, sweep_height = 0;
  int sweep_depth = 1;
  std::string sweep_rule = "complement", sweep_all_but;
  std::size_t sweep_wm_rows = 0, sweep_wm_cols = 0;
  std::string sweep_fix_host, sweep_fix_wm, sweep_fix_att_host, sweep_fix_att_wm;
  bool sweep_fix_all = false;
  sweep_cmd->add_option("--width", sweep_width, "image width")->required();
  sweep_cmd->add_option("--height", sweep_height, "image height")->required();
  sweep_cmd->add_option("--depth", sweep_depth, "bit depth")->required();
  sweep_cmd->add_option("--rule", sweep_rule, "embedding rule")->check(rule_values);
  sweep_cmd->add_option("--wm-rows", sweep_wm_rows, "watermark rows (default: image height)");
  sweep_cmd->add_option("--wm-cols", sweep_wm_cols, "watermark columns (default: image width)");
  sweep_cmd->add_option("--fix-host", sweep_fix_host, "fix the host to this PGM");
  sweep_cmd->add_option("--fix-watermark", sweep_fix_wm, "fix the watermark to this PBM");
  sweep_cmd->add_option("--fix-attacker-host", sweep_fix_att_host,
                        "fix the attacker host to this PGM");
  sweep_cmd->add_option("--fix-attacker-watermark", sweep_fix_att_wm,
                        "fix the attacker watermark to this PBM");
  auto* fix_all_but_opt =
      sweep_cmd->add_option("--fix-all-but", sweep_all_but,
                            "fix every component except this one to the builtin scenario")
          ->check(CLI::IsMember({"host", "watermark", "attacker_host", "attacker_watermark"}));
  sweep_cmd->add_flag("--fix-all", sweep_fix_all, "fix all components to the builtin scenario")
      ->excludes(fix_all_but_opt);

  auto* theorem_cmd = app.add_subcommand(
      "verify-theorem", "Check that post-attack extraction is determined by the check bits");
  std::size_t theorem_width = 0, theorem_height = 0;
  int theorem_depth = 1;
  std::string theorem_rule = "complement";
  std::size_t theorem_wm_rows = 0, theorem_wm_cols = 0;
  theorem_cmd->add_option("--width", theorem_width, "image width")->required();
  theorem_cmd->add_option("--height", theorem_height, "image height")->required();
  theorem_cmd->add_option("--depth", theorem_depth, "bit depth")->required();
  theorem_cmd->add_option("--rule", theorem_rule, "embedding rule")->check(rule_values);
  theorem_cmd->add_option("--wm-rows", theorem_wm_rows, "watermark rows (default: image height)");
  theorem_cmd->add_option("--wm-cols", theorem_wm_cols,
                          "watermark columns (default: image width)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitIo;
  }

  try {
    if (embed_cmd->parsed()) {
      const wmlab::PixelImage host = wmlab::read_pgm(slurp(embed_host));
      const wmlab::BitMatrix wm = wmlab::read_pbm(slurp(embed_wm));
      const wmlab::EmbeddingResult result = wmlab::embed(host, wm, rule_from(embed_rule));
      spit(embed_out, wmlab::write_pgm(result.watermarked));
      if (!embed_checkbit.empty())
        spit(embed_checkbit, "b " + std::to_string(result.check_bit.value()) + "\n");
      return 0;
    }

    if (attack_cmd->parsed()) {
      const wmlab::PixelImage target = wmlab::read_pgm(slurp(attack_target));
      const wmlab::PixelImage original = wmlab::read_pgm(slurp(attack_original));
      const wmlab::PixelImage attacker = wmlab::read_pgm(slurp(attack_attacker));
      const wmlab::AttackTrace trace = wmlab::complement_attack(target, original, attacker);
      spit(attack_out, wmlab::write_pgm(trace.attacked));
      std::cout << "b " << trace.original_check_bit.value() << "\n"
                << "b_tilde " << trace.attacker_check_bit.value() << "\n"
                << "action " << wmlab::action_name(trace.action) << "\n";
      return 0;
    }

    if (extract_cmd->parsed()) {
      const wmlab::PixelImage image = wmlab::read_pgm(slurp(extract_in));
      wmlab::BitMatrix extracted = [&] {
        if (extract_mode == "informed") {
          if (extract_ref.empty() || extract_checkbit.empty())
            throw IoFailure("informed extraction needs --reference-host and --checkbit");
          return wmlab::extract_informed(image, wmlab::read_pgm(slurp(extract_ref)),
                                         read_check_bit_file(extract_checkbit), extract_rows,
                                         extract_cols);
        }
        return wmlab::extract_blind_parity(image, extract_rows, extract_cols);
      }();
      spit(extract_out, wmlab::write_pbm(extracted));
      return 0;
    }

    if (verify_cmd->parsed()) {
      const wmlab::Scenario scenario = verify_scenario.empty()
                                           ? wmlab::builtin_scenario()
                                           : wmlab::read_scenario(slurp(verify_scenario));
      const wmlab::CounterexampleReport report = wmlab::run_counterexample(scenario);
      std::cout << wmlab::write_report(report);
      const bool enforce = verify_scenario.empty() || verify_expect;
      if (enforce && !(report.outcome.verdict == wmlab::Verdict::OriginalSurvives &&
                       report.reference_match.all()))
        return kExitVerification;
      return 0;
    }

    if (sweep_cmd->parsed()) {
      wmlab::SweepOptions options;
      options.width = sweep_width;
      options.height = sweep_height;
      options.depth = sweep_depth;
      options.rule = rule_from(sweep_rule);
      options.wm_rows = sweep_wm_rows;
      options.wm_cols = sweep_wm_cols;
      if (sweep_fix_all || !sweep_all_but.empty()) {
        const wmlab::Scenario builtin = wmlab::builtin_scenario();
        if (sweep_all_but != "host") options.fixed_host = builtin.host;
        if (sweep_all_but != "watermark") options.fixed_watermark = builtin.watermark;
        if (sweep_all_but != "attacker_host") options.fixed_attacker_host = builtin.attacker_host;
        if (sweep_all_but != "attacker_watermark")
          options.fixed_attacker_watermark = builtin.attacker_watermark;
      }
      if (!sweep_fix_host.empty()) options.fixed_host = wmlab::read_pgm(slurp(sweep_fix_host));
      if (!sweep_fix_wm.empty()) options.fixed_watermark = wmlab::read_pbm(slurp(sweep_fix_wm));
      if (!sweep_fix_att_host.empty())
        options.fixed_attacker_host = wmlab::read_pgm(slurp(sweep_fix_att_host));
      if (!sweep_fix_att_wm.empty())
        options.fixed_attacker_watermark = wmlab::read_pbm(slurp(sweep_fix_att_wm));
      std::cout << wmlab::write_report(wmlab::exhaustive_sweep(options));
      return 0;
    }

    if (theorem_cmd->parsed()) {
      const wmlab::TheoremReport report = wmlab::verify_attack_outcome_theorem(
          theorem_width, theorem_height, theorem_depth, rule_from(theorem_rule),
          theorem_wm_rows, theorem_wm_cols);
      std::cout << wmlab::write_report(report);
      return report.holds ? 0 : kExitVerification;
    }
  } catch (const wmlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  return 0;
}
