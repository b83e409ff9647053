#include "wmlab/pnm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wmlab {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Cursor over raw bytes with line tracking and '#' comment skipping, shared
// by the PGM and PBM readers.
class ByteScanner {
 public:
  explicit ByteScanner(std::string_view data) : data_(data) {}

  std::size_t line() const noexcept { return line_; }
  bool at_end() const noexcept { return pos_ >= data_.size(); }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }

  void skip_separators() {
    while (!at_end()) {
      const char c = data_[pos_];
      if (is_space(c)) {
        advance();
      } else if (c == '#') {
        while (!at_end() && data_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  char take() {
    const char c = data_[pos_];
    advance();
    return c;
  }

  std::string next_token() {
    skip_separators();
    std::string token;
    while (!at_end() && !is_space(data_[pos_]) && data_[pos_] != '#') token.push_back(take());
    return token;
  }

  // Unsigned decimal token; nullopt when the next token is not all digits.
  // Values are capped well above any legal field so overflow cannot wrap.
  std::optional<std::uint32_t> next_number() {
    last_token_ = next_token();
    if (last_token_.empty()) return std::nullopt;
    std::uint64_t value = 0;
    for (char c : last_token_) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > 0xFFFFFFFFull) return std::nullopt;
    }
    return static_cast<std::uint32_t>(value);
  }

  const std::string& last_token() const noexcept { return last_token_; }

  // Raw byte for binary rasters; caller checks remaining() first.
  std::uint8_t take_raw() { return static_cast<std::uint8_t>(take()); }

 private:
  void advance() {
    if (data_[pos_] == '\n') ++line_;
    ++pos_;
  }

  std::string_view data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::string last_token_;
};

constexpr std::size_t kMaxDimension = 1u << 20;

std::pair<std::size_t, std::size_t> read_dimensions(ByteScanner& sc, const char* what) {
  const auto width = sc.next_number();
  if (!width) throw MalformedHeader(std::string(what) + ": unreadable width", sc.line());
  const auto height = sc.next_number();
  if (!height) throw MalformedHeader(std::string(what) + ": unreadable height", sc.line());
  if (*width == 0 || *height == 0)
    throw MalformedHeader(std::string(what) + ": dimensions must be positive", sc.line());
  if (*width > kMaxDimension || *height > kMaxDimension)
    throw MalformedHeader(std::string(what) + ": dimensions too large", sc.line());
  return {*width, *height};
}

int depth_for_maxval(std::uint32_t maxval) {
  int d = 1;
  while ((1u << d) - 1u < maxval) ++d;
  return d;
}

void append_row(std::string& out, const std::uint16_t* values, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out.push_back(' ');
    out += std::to_string(values[i]);
  }
  out.push_back('\n');
}

}  // namespace

PixelImage read_pgm(std::string_view bytes) {
  ByteScanner sc(bytes);
  const std::string magic = sc.next_token();
  if (magic != "P2" && magic != "P5")
    throw MalformedHeader("expected PGM magic P2 or P5, got \"" + magic + "\"", sc.line());

  const auto [width, height] = read_dimensions(sc, "PGM");
  const auto maxval = sc.next_number();
  if (!maxval) throw MalformedHeader("PGM: unreadable maxval", sc.line());
  if (*maxval == 0 || *maxval > 65535)
    throw MalformedHeader("PGM: maxval must be in [1, 65535], got " + std::to_string(*maxval),
                          sc.line());

  const int depth = depth_for_maxval(*maxval);
  const std::size_t count = width * height;
  std::vector<std::uint16_t> pixels;

  if (magic == "P2") {
    // Each pixel needs at least one digit plus a separator, so a raster
    // shorter than that cannot possibly complete; reject before allocating.
    if (sc.remaining() + 1 < count * 2)
      throw TruncatedPayload("PGM raster shorter than the header implies", sc.line());
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto value = sc.next_number();
      if (!value) {
        if (sc.last_token().empty())
          throw TruncatedPayload("PGM raster ended after " + std::to_string(i) + " of " +
                                     std::to_string(count) + " pixels",
                                 sc.line());
        if (sc.last_token()[0] == '-')
          throw PixelOutOfRange("PGM pixel \"" + sc.last_token() + "\" is negative", sc.line());
        throw TruncatedPayload("PGM raster contains non-numeric token \"" + sc.last_token() +
                                   "\"",
                               sc.line());
      }
      if (*value > *maxval)
        throw PixelOutOfRange("PGM pixel value " + std::to_string(*value) + " exceeds maxval " +
                                  std::to_string(*maxval),
                              sc.line());
      pixels.push_back(static_cast<std::uint16_t>(*value));
    }
  } else {
    if (sc.at_end() || !is_space(sc.take()))
      throw MalformedHeader("P5: missing whitespace after maxval", sc.line());
    const std::size_t bytes_per_pixel = *maxval > 255 ? 2 : 1;
    if (sc.remaining() < count * bytes_per_pixel)
      throw TruncatedPayload("P5 raster ended after " +
                                 std::to_string(sc.remaining() / bytes_per_pixel) + " of " +
                                 std::to_string(count) + " pixels",
                             sc.line());
    pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::uint32_t value = sc.take_raw();
      if (bytes_per_pixel == 2) value = (value << 8) | sc.take_raw();  // big-endian
      if (value > *maxval)
        throw PixelOutOfRange("P5 pixel value " + std::to_string(value) + " exceeds maxval " +
                              std::to_string(*maxval));
      pixels.push_back(static_cast<std::uint16_t>(value));
    }
  }

  return PixelImage(width, height, depth, std::move(pixels));
}

std::string write_pgm(const PixelImage& image) {
  std::string out = "P2\n";
  out += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
  out += std::to_string(image.max_value()) + "\n";
  for (std::size_t r = 0; r < image.height(); ++r)
    append_row(out, image.pixels().data() + r * image.width(), image.width());
  return out;
}

BitMatrix read_pbm(std::string_view bytes) {
  ByteScanner sc(bytes);
  const std::string magic = sc.next_token();
  if (magic != "P1")
    throw MalformedHeader("expected PBM magic P1, got \"" + magic + "\"", sc.line());

  const auto [cols, rows] = read_dimensions(sc, "PBM");
  const std::size_t count = rows * cols;
  if (sc.remaining() < count)
    throw TruncatedPayload("PBM raster shorter than the header implies", sc.line());

  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  while (bits.size() < count) {
    sc.skip_separators();
    if (sc.at_end())
      throw TruncatedPayload("PBM raster ended after " + std::to_string(bits.size()) + " of " +
                                 std::to_string(count) + " bits",
                             sc.line());
    const char c = sc.take();
    if (c != '0' && c != '1')
      throw NonBinaryDigit("PBM raster contains '" + std::string(1, c) + "', expected 0 or 1",
                           sc.line());
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitMatrix(rows, cols, std::move(bits));
}

std::string write_pbm(const BitMatrix& matrix) {
  std::string out = "P1\n";
  out += std::to_string(matrix.cols()) + " " + std::to_string(matrix.rows()) + "\n";
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string(matrix.at(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

struct ScenarioLine {
  std::size_t number;
  std::string text;
};

// Comment-stripped, trimmed, non-blank lines with their 1-based numbers.
std::vector<ScenarioLine> logical_lines(std::string_view text) {
  std::vector<ScenarioLine> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::size_t b = 0, e = raw.size();
    while (b < e && is_space(raw[b])) ++b;
    while (e > b && is_space(raw[e - 1])) --e;
    if (e > b) lines.push_back({number, std::string(raw.substr(b, e - b))});
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<std::uint32_t> parse_number(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::uint64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 0xFFFFFFFFull) return std::nullopt;
  }
  return static_cast<std::uint32_t>(value);
}

constexpr const char* kSectionLabels[4] = {"host", "watermark", "attacker_host",
                                           "attacker_watermark"};

bool is_section_label(const std::string& text) {
  for (const char* label : kSectionLabels)
    if (text == label) return true;
  return false;
}

struct RawGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> values;
  std::vector<std::size_t> row_lines;  // input line of each row
  std::size_t label_line = 0;
};

RawGrid parse_grid(const std::vector<ScenarioLine>& lines, std::size_t& index,
                   const char* label) {
  if (index >= lines.size()) throw MissingSection(std::string("missing section \"") + label + "\"");
  const ScenarioLine& head = lines[index];
  if (head.text != label) {
    if (is_section_label(head.text))
      throw MissingSection(std::string("expected section \"") + label + "\", found \"" +
                               head.text + "\"",
                           head.number);
    throw GrammarError(std::string("expected section label \"") + label + "\", got \"" +
                           head.text + "\"",
                       head.number);
  }
  RawGrid grid;
  grid.label_line = head.number;
  ++index;
  while (index < lines.size() && !is_section_label(lines[index].text)) {
    const ScenarioLine& row = lines[index];
    const auto fields = split_fields(row.text);
    std::vector<std::uint32_t> values;
    values.reserve(fields.size());
    for (const auto& field : fields) {
      const auto value = parse_number(field);
      if (!value)
        throw GrammarError("grid row contains non-numeric token \"" + field + "\"", row.number);
      values.push_back(*value);
    }
    if (grid.rows == 0) {
      grid.cols = values.size();
    } else if (values.size() != grid.cols) {
      throw GrammarError("grid row has " + std::to_string(values.size()) +
                             " entries, expected " + std::to_string(grid.cols),
                         row.number);
    }
    grid.values.insert(grid.values.end(), values.begin(), values.end());
    grid.row_lines.push_back(row.number);
    ++grid.rows;
    ++index;
  }
  if (grid.rows == 0)
    throw GrammarError(std::string("section \"") + label + "\" has no rows", head.number);
  return grid;
}

PixelImage grid_to_image(const RawGrid& grid, int depth, const char* label) {
  const std::uint32_t maxv = (1u << depth) - 1u;
  std::vector<std::uint16_t> pixels;
  pixels.reserve(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const std::uint32_t v = grid.values[i];
    if (v > maxv)
      throw InvariantViolation(std::string(label) + " pixel value " + std::to_string(v) +
                                   " exceeds depth-" + std::to_string(depth) + " maximum " +
                                   std::to_string(maxv),
                               grid.row_lines[i / grid.cols]);
    pixels.push_back(static_cast<std::uint16_t>(v));
  }
  return PixelImage(grid.cols, grid.rows, depth, std::move(pixels));
}

BitMatrix grid_to_matrix(const RawGrid& grid, const char* label) {
  std::vector<std::uint8_t> bits;
  bits.reserve(grid.values.size());
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const std::uint32_t v = grid.values[i];
    if (v > 1)
      throw InvariantViolation(std::string(label) + " entry " + std::to_string(v) +
                                   " is not a bit",
                               grid.row_lines[i / grid.cols]);
    bits.push_back(static_cast<std::uint8_t>(v));
  }
  return BitMatrix(grid.rows, grid.cols, std::move(bits));
}

}  // namespace

Scenario read_scenario(std::string_view text) {
  const auto lines = logical_lines(text);
  if (lines.empty()) throw GrammarError("empty document, expected \"scenario v1\"", 1);
  if (lines[0].text != "scenario v1")
    throw GrammarError("first line must be exactly \"scenario v1\"", lines[0].number);

  if (lines.size() < 2) throw GrammarError("missing \"depth <d>\" line", lines[0].number);
  const auto depth_fields = split_fields(lines[1].text);
  if (depth_fields.size() != 2 || depth_fields[0] != "depth")
    throw GrammarError("expected \"depth <d>\"", lines[1].number);
  const auto depth_value = parse_number(depth_fields[1]);
  if (!depth_value) throw GrammarError("depth is not a number", lines[1].number);
  if (*depth_value < 1 || *depth_value > static_cast<std::uint32_t>(kMaxBitDepth))
    throw InvariantViolation("depth must be in [1, " + std::to_string(kMaxBitDepth) + "], got " +
                                 std::to_string(*depth_value),
                             lines[1].number);
  const int depth = static_cast<int>(*depth_value);

  if (lines.size() < 3) throw GrammarError("missing \"rule complement|parity\" line",
                                           lines[1].number);
  const auto rule_fields = split_fields(lines[2].text);
  if (rule_fields.size() != 2 || rule_fields[0] != "rule" ||
      (rule_fields[1] != "complement" && rule_fields[1] != "parity"))
    throw GrammarError("expected \"rule complement\" or \"rule parity\"", lines[2].number);
  const EmbedRule rule =
      rule_fields[1] == "complement" ? EmbedRule::Complement : EmbedRule::ParityAdjust;

  std::size_t index = 3;
  const RawGrid host_grid = parse_grid(lines, index, kSectionLabels[0]);
  const RawGrid wm_grid = parse_grid(lines, index, kSectionLabels[1]);
  const RawGrid attacker_host_grid = parse_grid(lines, index, kSectionLabels[2]);
  const RawGrid attacker_wm_grid = parse_grid(lines, index, kSectionLabels[3]);

  Scenario scenario{depth,
                    grid_to_image(host_grid, depth, "host"),
                    grid_to_matrix(wm_grid, "watermark"),
                    grid_to_image(attacker_host_grid, depth, "attacker_host"),
                    grid_to_matrix(attacker_wm_grid, "attacker_watermark"),
                    rule};
  scenario.validate();
  return scenario;
}

namespace {

void append_image_section(std::string& out, const char* label, const PixelImage& image) {
  out += label;
  out.push_back('\n');
  for (std::size_t r = 0; r < image.height(); ++r)
    append_row(out, image.pixels().data() + r * image.width(), image.width());
}

void append_matrix_section(std::string& out, const char* label, const BitMatrix& matrix) {
  out += label;
  out.push_back('\n');
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string(matrix.at(r, c));
    }
    out.push_back('\n');
  }
}

void append_kv(std::string& out, const char* key, const std::string& value) {
  out += key;
  out.push_back(' ');
  out += value;
  out.push_back('\n');
}

}  // namespace

std::string write_scenario(const Scenario& scenario) {
  std::string out = "scenario v1\n";
  append_kv(out, "depth", std::to_string(scenario.depth));
  append_kv(out, "rule", rule_name(scenario.rule));
  append_image_section(out, kSectionLabels[0], scenario.host);
  append_matrix_section(out, kSectionLabels[1], scenario.watermark);
  append_image_section(out, kSectionLabels[2], scenario.attacker_host);
  append_matrix_section(out, kSectionLabels[3], scenario.attacker_watermark);
  return out;
}

const char* rule_name(EmbedRule rule) {
  return rule == EmbedRule::Complement ? "complement" : "parity";
}

const char* action_name(AttackAction action) {
  return action == AttackAction::NoOp ? "noop" : "complement_all";
}

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::ReplacedWithAttacker: return "replaced_with_attacker";
    case Verdict::OriginalSurvives: return "original_survives";
    case Verdict::NeitherWatermark: return "neither_watermark";
  }
  return "unknown";
}

std::string write_report(const CounterexampleReport& report) {
  std::string out = "report counterexample v1\n";
  append_kv(out, "rule", rule_name(report.rule));
  append_kv(out, "depth", std::to_string(report.depth));
  append_kv(out, "b", std::to_string(report.b.value()));
  append_kv(out, "b_tilde", std::to_string(report.b_tilde.value()));
  append_kv(out, "action", action_name(report.action));
  append_kv(out, "verdict", verdict_name(report.outcome.verdict));
  append_kv(out, "builtin", report.scenario_is_builtin ? "1" : "0");
  const ReferenceMatch& m = report.reference_match;
  append_kv(out, "match_check_bits", m.check_bits ? "1" : "0");
  append_kv(out, "match_watermarked", m.watermarked ? "1" : "0");
  append_kv(out, "match_attacker_watermarked", m.attacker_watermarked ? "1" : "0");
  append_kv(out, "match_extracted", m.extracted ? "1" : "0");
  append_kv(out, "match_attacker_extracted", m.attacker_extracted ? "1" : "0");
  append_kv(out, "match_extractions_differ", m.extractions_differ ? "1" : "0");
  append_kv(out, "match_all", m.all() ? "1" : "0");
  append_image_section(out, "watermarked", report.watermarked);
  append_image_section(out, "attacker_watermarked", report.attacker_watermarked);
  append_image_section(out, "attacked", report.attacked);
  append_matrix_section(out, "extracted", report.extracted);
  append_matrix_section(out, "attacker_extracted", report.attacker_extracted);
  return out;
}

std::string write_report(const SweepReport& report) {
  std::string out = "report sweep v1\n";
  append_kv(out, "rule", rule_name(report.rule));
  append_kv(out, "width", std::to_string(report.width));
  append_kv(out, "height", std::to_string(report.height));
  append_kv(out, "depth", std::to_string(report.depth));
  append_kv(out, "wm_rows", std::to_string(report.wm_rows));
  append_kv(out, "wm_cols", std::to_string(report.wm_cols));
  append_kv(out, "total", std::to_string(report.total_instances));
  append_kv(out, "replaced", std::to_string(report.replaced_count));
  append_kv(out, "survives", std::to_string(report.survives_count));
  append_kv(out, "neither", std::to_string(report.neither_count));
  append_kv(out, "success_rate",
            std::to_string(report.success_rate.numerator) + "/" +
                std::to_string(report.success_rate.denominator));
  return out;
}

std::string write_report(const TheoremReport& report) {
  std::string out = "report theorem v1\n";
  append_kv(out, "rule", rule_name(report.rule));
  append_kv(out, "width", std::to_string(report.width));
  append_kv(out, "height", std::to_string(report.height));
  append_kv(out, "depth", std::to_string(report.depth));
  append_kv(out, "wm_rows", std::to_string(report.wm_rows));
  append_kv(out, "wm_cols", std::to_string(report.wm_cols));
  append_kv(out, "instances", std::to_string(report.instances_checked));
  append_kv(out, "holds", report.holds ? "1" : "0");
  if (report.counterexample) {
    append_image_section(out, "counterexample_host", report.counterexample->host);
    append_matrix_section(out, "counterexample_watermark", report.counterexample->watermark);
    append_image_section(out, "counterexample_attacker_host",
                         report.counterexample->attacker_host);
    append_matrix_section(out, "counterexample_extracted", report.counterexample->extracted);
    append_matrix_section(out, "counterexample_expected", report.counterexample->expected);
  }
  return out;
}

}  // namespace wmlab
