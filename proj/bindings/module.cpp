#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wmlab/adversary.hpp"
#include "wmlab/core.hpp"
#include "wmlab/harness.hpp"
#include "wmlab/pnm.hpp"
#include "wmlab/scheme.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace wmlab;

namespace {

std::string grid_repr(const char* name, std::size_t rows, std::size_t cols, int depth) {
  std::string out = "<";
  out += name;
  out += " " + std::to_string(cols) + "x" + std::to_string(rows);
  if (depth > 0) out += " depth=" + std::to_string(depth);
  out += ">";
  return out;
}

}  // namespace

PYBIND11_MODULE(_wmlab, m) {
  m.doc() = "Block-parity watermarking, the parity-matching complement attack, and "
            "exhaustive verification of its outcome.";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
  py::register_exception<IntractableDomain>(m, "IntractableDomain", base);
  py::register_exception<MalformedHeader>(m, "MalformedHeader", base);
  py::register_exception<PixelOutOfRange>(m, "PixelOutOfRange", base);
  py::register_exception<TruncatedPayload>(m, "TruncatedPayload", base);
  py::register_exception<NonBinaryDigit>(m, "NonBinaryDigit", base);
  py::register_exception<GrammarError>(m, "GrammarError", base);
  py::register_exception<MissingSection>(m, "MissingSection", base);

  py::class_<CheckBit>(m, "CheckBit")
      .def(py::init<unsigned>(), "value"_a)
      .def_property_readonly("value", &CheckBit::value)
      .def(py::self == py::self)
      .def("__xor__", [](CheckBit a, CheckBit b) { return a ^ b; })
      .def("__int__", &CheckBit::value)
      .def("__repr__",
           [](CheckBit b) { return "CheckBit(" + std::to_string(b.value()) + ")"; });

  py::class_<PixelImage>(m, "PixelImage")
      .def(py::init<std::size_t, std::size_t, int, std::vector<std::uint16_t>>(),
           "width"_a, "height"_a, "bit_depth"_a, "pixels"_a)
      .def_property_readonly("width", &PixelImage::width)
      .def_property_readonly("height", &PixelImage::height)
      .def_property_readonly("bit_depth", &PixelImage::bit_depth)
      .def_property_readonly("max_value", &PixelImage::max_value)
      .def_property_readonly("pixels",
                             [](const PixelImage& i) { return i.pixels(); })
      .def("at", &PixelImage::at, "row"_a, "col"_a)
      .def(py::self == py::self)
      .def("__repr__", [](const PixelImage& i) {
        return grid_repr("PixelImage", i.height(), i.width(), i.bit_depth());
      });

  py::class_<BitMatrix>(m, "BitMatrix")
      .def(py::init<std::size_t, std::size_t, std::vector<std::uint8_t>>(),
           "rows"_a, "cols"_a, "bits"_a)
      .def_property_readonly("rows", &BitMatrix::rows)
      .def_property_readonly("cols", &BitMatrix::cols)
      .def_property_readonly("bits", [](const BitMatrix& w) { return w.bits(); })
      .def("at", &BitMatrix::at, "row"_a, "col"_a)
      .def("inverted", &BitMatrix::inverted)
      .def(py::self == py::self)
      .def("__repr__", [](const BitMatrix& w) {
        return grid_repr("BitMatrix", w.rows(), w.cols(), 0);
      });

  py::class_<BlockGrid>(m, "BlockGrid")
      .def_readonly("block_width", &BlockGrid::block_width)
      .def_readonly("block_height", &BlockGrid::block_height)
      .def_readonly("rows", &BlockGrid::rows)
      .def_readonly("cols", &BlockGrid::cols)
      .def_property_readonly("block_pixel_count", &BlockGrid::block_pixel_count)
      .def(py::self == py::self);

  py::enum_<EmbedRule>(m, "EmbedRule")
      .value("Complement", EmbedRule::Complement)
      .value("ParityAdjust", EmbedRule::ParityAdjust);

  py::enum_<AttackAction>(m, "AttackAction")
      .value("NoOp", AttackAction::NoOp)
      .value("ComplementAll", AttackAction::ComplementAll);

  py::enum_<Verdict>(m, "Verdict")
      .value("ReplacedWithAttacker", Verdict::ReplacedWithAttacker)
      .value("OriginalSurvives", Verdict::OriginalSurvives)
      .value("NeitherWatermark", Verdict::NeitherWatermark);

  py::class_<EmbeddingResult>(m, "EmbeddingResult")
      .def_readonly("watermarked", &EmbeddingResult::watermarked)
      .def_readonly("check_bit", &EmbeddingResult::check_bit)
      .def_readonly("rule", &EmbeddingResult::rule);

  py::class_<AttackTrace>(m, "AttackTrace")
      .def_readonly("original_check_bit", &AttackTrace::original_check_bit)
      .def_readonly("attacker_check_bit", &AttackTrace::attacker_check_bit)
      .def_readonly("action", &AttackTrace::action)
      .def_readonly("attacked", &AttackTrace::attacked);

  py::class_<ClaimOutcome>(m, "ClaimOutcome")
      .def_readonly("verdict", &ClaimOutcome::verdict)
      .def_readonly("extracted", &ClaimOutcome::extracted);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<int, PixelImage, BitMatrix, PixelImage, BitMatrix, EmbedRule>(),
           "depth"_a, "host"_a, "watermark"_a, "attacker_host"_a, "attacker_watermark"_a,
           "rule"_a)
      .def_readwrite("depth", &Scenario::depth)
      .def_readwrite("host", &Scenario::host)
      .def_readwrite("watermark", &Scenario::watermark)
      .def_readwrite("attacker_host", &Scenario::attacker_host)
      .def_readwrite("attacker_watermark", &Scenario::attacker_watermark)
      .def_readwrite("rule", &Scenario::rule)
      .def("validate", &Scenario::validate)
      .def(py::self == py::self);

  py::class_<ReferenceMatch>(m, "ReferenceMatch")
      .def_readonly("check_bits", &ReferenceMatch::check_bits)
      .def_readonly("watermarked", &ReferenceMatch::watermarked)
      .def_readonly("attacker_watermarked", &ReferenceMatch::attacker_watermarked)
      .def_readonly("extracted", &ReferenceMatch::extracted)
      .def_readonly("attacker_extracted", &ReferenceMatch::attacker_extracted)
      .def_readonly("extractions_differ", &ReferenceMatch::extractions_differ)
      .def("all", &ReferenceMatch::all);

  py::class_<CounterexampleReport>(m, "CounterexampleReport")
      .def_readonly("depth", &CounterexampleReport::depth)
      .def_readonly("rule", &CounterexampleReport::rule)
      .def_readonly("b", &CounterexampleReport::b)
      .def_readonly("b_tilde", &CounterexampleReport::b_tilde)
      .def_readonly("action", &CounterexampleReport::action)
      .def_readonly("watermarked", &CounterexampleReport::watermarked)
      .def_readonly("attacker_watermarked", &CounterexampleReport::attacker_watermarked)
      .def_readonly("attacked", &CounterexampleReport::attacked)
      .def_readonly("extracted", &CounterexampleReport::extracted)
      .def_readonly("attacker_extracted", &CounterexampleReport::attacker_extracted)
      .def_readonly("outcome", &CounterexampleReport::outcome)
      .def_readonly("scenario_is_builtin", &CounterexampleReport::scenario_is_builtin)
      .def_readonly("reference_match", &CounterexampleReport::reference_match);

  py::class_<Rational>(m, "Rational")
      .def_readonly("numerator", &Rational::numerator)
      .def_readonly("denominator", &Rational::denominator)
      .def(py::self == py::self)
      .def("__repr__", [](const Rational& r) {
        return std::to_string(r.numerator) + "/" + std::to_string(r.denominator);
      });

  py::class_<SweepOptions>(m, "SweepOptions")
      .def(py::init<>())
      .def_readwrite("width", &SweepOptions::width)
      .def_readwrite("height", &SweepOptions::height)
      .def_readwrite("depth", &SweepOptions::depth)
      .def_readwrite("rule", &SweepOptions::rule)
      .def_readwrite("wm_rows", &SweepOptions::wm_rows)
      .def_readwrite("wm_cols", &SweepOptions::wm_cols)
      .def_readwrite("fixed_host", &SweepOptions::fixed_host)
      .def_readwrite("fixed_watermark", &SweepOptions::fixed_watermark)
      .def_readwrite("fixed_attacker_host", &SweepOptions::fixed_attacker_host)
      .def_readwrite("fixed_attacker_watermark", &SweepOptions::fixed_attacker_watermark);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("width", &SweepReport::width)
      .def_readonly("height", &SweepReport::height)
      .def_readonly("depth", &SweepReport::depth)
      .def_readonly("rule", &SweepReport::rule)
      .def_readonly("wm_rows", &SweepReport::wm_rows)
      .def_readonly("wm_cols", &SweepReport::wm_cols)
      .def_readonly("total_instances", &SweepReport::total_instances)
      .def_readonly("replaced_count", &SweepReport::replaced_count)
      .def_readonly("survives_count", &SweepReport::survives_count)
      .def_readonly("neither_count", &SweepReport::neither_count)
      .def_readonly("success_rate", &SweepReport::success_rate);

  py::class_<TheoremCounterexample>(m, "TheoremCounterexample")
      .def_readonly("host", &TheoremCounterexample::host)
      .def_readonly("watermark", &TheoremCounterexample::watermark)
      .def_readonly("attacker_host", &TheoremCounterexample::attacker_host)
      .def_readonly("extracted", &TheoremCounterexample::extracted)
      .def_readonly("expected", &TheoremCounterexample::expected);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("width", &TheoremReport::width)
      .def_readonly("height", &TheoremReport::height)
      .def_readonly("depth", &TheoremReport::depth)
      .def_readonly("rule", &TheoremReport::rule)
      .def_readonly("wm_rows", &TheoremReport::wm_rows)
      .def_readonly("wm_cols", &TheoremReport::wm_cols)
      .def_readonly("instances_checked", &TheoremReport::instances_checked)
      .def_readonly("holds", &TheoremReport::holds)
      .def_readonly("counterexample", &TheoremReport::counterexample);

  m.def("check_bit", py::overload_cast<const PixelImage&>(&check_bit), "image"_a,
        "Parity (sum mod 2) of all pixel values.");
  m.def("block_check_bit",
        py::overload_cast<const PixelImage&, const BlockGrid&, std::size_t, std::size_t>(
            &check_bit),
        "image"_a, "grid"_a, "block_row"_a, "block_col"_a,
        "Parity of one block under the given grid.");
  m.def("complement_image", &complement_image, "image"_a,
        "Per-pixel map v -> (2^d - 1) - v.");
  m.def("make_grid",
        py::overload_cast<const PixelImage&, const BitMatrix&>(&make_grid),
        "image"_a, "watermark"_a);
  m.def("make_grid",
        py::overload_cast<const PixelImage&, std::size_t, std::size_t>(&make_grid),
        "image"_a, "wm_rows"_a, "wm_cols"_a);

  m.def("embed", &embed, "host"_a, "watermark"_a, "rule"_a);
  m.def("extract_informed", &extract_informed, "watermarked"_a, "reference_host"_a, "b"_a,
        "wm_rows"_a, "wm_cols"_a);
  m.def("extract_blind_parity", &extract_blind_parity, "watermarked"_a, "wm_rows"_a,
        "wm_cols"_a);

  m.def("complement_attack", &complement_attack, "target"_a, "original_host"_a,
        "attacker_host"_a);
  m.def("evaluate_claim", &evaluate_claim, "extracted"_a, "original_wm"_a, "attacker_wm"_a);

  m.def("builtin_scenario", &builtin_scenario);
  m.def("run_counterexample", &run_counterexample, "scenario"_a);
  m.def("exhaustive_sweep", &exhaustive_sweep, "options"_a);
  m.def("verify_attack_outcome_theorem", &verify_attack_outcome_theorem, "width"_a,
        "height"_a, "depth"_a, "rule"_a, "wm_rows"_a = 0, "wm_cols"_a = 0);

  m.def("read_pgm", [](const std::string& data) { return read_pgm(data); }, "data"_a);
  m.def("write_pgm", &write_pgm, "image"_a);
  m.def("read_pbm", [](const std::string& data) { return read_pbm(data); }, "data"_a);
  m.def("write_pbm", &write_pbm, "matrix"_a);
  m.def("read_scenario", [](const std::string& text) { return read_scenario(text); }, "text"_a);
  m.def("write_scenario", &write_scenario, "scenario"_a);
  m.def("write_report",
        py::overload_cast<const CounterexampleReport&>(&write_report), "report"_a);
  m.def("write_report", py::overload_cast<const SweepReport&>(&write_report), "report"_a);
  m.def("write_report", py::overload_cast<const TheoremReport&>(&write_report), "report"_a);
}
