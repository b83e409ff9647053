#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wmlab/errors.hpp"

namespace wmlab {

inline constexpr int kMaxBitDepth = 16;

/// A single parity bit, the quantity the scheme embeds and verifies.
class CheckBit {
 public:
  CheckBit() = default;
  explicit CheckBit(unsigned value)
      : value_(static_cast<std::uint8_t>(value)) {
    if (value > 1) throw InvariantViolation("check bit must be 0 or 1");
  }

  unsigned value() const noexcept { return value_; }

  friend CheckBit operator^(CheckBit a, CheckBit b) noexcept {
    CheckBit r;
    r.value_ = a.value_ ^ b.value_;
    return r;
  }
  friend bool operator==(CheckBit, CheckBit) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Rectangular grid of integer pixels at a declared bit depth.
/// Values are validated against the depth at construction and the object
/// is immutable afterwards, so all arithmetic downstream stays exact.
class PixelImage {
 public:
  PixelImage(std::size_t width, std::size_t height, int bit_depth,
             std::vector<std::uint16_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  int bit_depth() const noexcept { return bit_depth_; }
  std::uint16_t max_value() const noexcept {
    return static_cast<std::uint16_t>((1u << bit_depth_) - 1u);
  }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }
  std::uint16_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * width_ + col];
  }
  const std::vector<std::uint16_t>& pixels() const noexcept { return pixels_; }

  // Same width, height and bit depth.
  bool same_shape(const PixelImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_ &&
           bit_depth_ == other.bit_depth_;
  }

  friend bool operator==(const PixelImage&, const PixelImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  int bit_depth_;
  std::vector<std::uint16_t> pixels_;
};

/// Rectangular grid of watermark bits, row-major.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return bits_[row * cols_ + col];
  }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Every bit flipped.
  BitMatrix inverted() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

/// Partition of an image into equal rectangular blocks, one watermark bit
/// per block. Blocks are addressed (block_row, block_col), row-major, in
/// the same order as the watermark bits they carry.
struct BlockGrid {
  std::size_t block_width = 0;
  std::size_t block_height = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t block_pixel_count() const noexcept { return block_width * block_height; }
  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

/// Parity (sum mod 2) of all pixel values.
CheckBit check_bit(const PixelImage& image);

/// Parity of one block of the image under the given grid.
CheckBit check_bit(const PixelImage& image, const BlockGrid& grid,
                   std::size_t block_row, std::size_t block_col);

/// Per-pixel map v -> (2^d - 1) - v. Dimensions and depth are unchanged;
/// applying it twice gives back the input.
PixelImage complement_image(const PixelImage& image);

/// The unique grid putting one watermark bit on each equal-size block.
/// Throws DimensionMismatch unless the watermark dimensions divide the
/// image dimensions exactly.
BlockGrid make_grid(const PixelImage& image, const BitMatrix& watermark);
BlockGrid make_grid(const PixelImage& image, std::size_t wm_rows, std::size_t wm_cols);

}  // namespace wmlab
