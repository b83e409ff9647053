#include "wmlab/core.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace wmlab {

PixelImage::PixelImage(std::size_t width, std::size_t height, int bit_depth,
                       std::vector<std::uint16_t> pixels)
    : width_(width), height_(height), bit_depth_(bit_depth), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0)
    throw InvariantViolation("image dimensions must be positive");
  if (bit_depth_ < 1 || bit_depth_ > kMaxBitDepth)
    throw InvariantViolation("bit depth must be in [1, " + std::to_string(kMaxBitDepth) +
                             "], got " + std::to_string(bit_depth_));
  if (pixels_.size() != width_ * height_)
    throw InvariantViolation("pixel count " + std::to_string(pixels_.size()) +
                             " does not match " + std::to_string(width_) + "x" +
                             std::to_string(height_));
  const std::uint16_t maxv = max_value();
  for (std::uint16_t v : pixels_) {
    if (v > maxv)
      throw InvariantViolation("pixel value " + std::to_string(v) + " exceeds depth-" +
                               std::to_string(bit_depth_) + " maximum " + std::to_string(maxv));
  }
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (rows_ == 0 || cols_ == 0)
    throw InvariantViolation("watermark dimensions must be positive");
  if (bits_.size() != rows_ * cols_)
    throw InvariantViolation("bit count " + std::to_string(bits_.size()) + " does not match " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
  for (std::uint8_t b : bits_) {
    if (b > 1) throw InvariantViolation("watermark entries must be 0 or 1");
  }
}

BitMatrix BitMatrix::inverted() const {
  std::vector<std::uint8_t> flipped(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) flipped[i] = bits_[i] ^ 1u;
  return BitMatrix(rows_, cols_, std::move(flipped));
}

CheckBit check_bit(const PixelImage& image) {
  std::uint64_t sum = 0;
  for (std::uint16_t v : image.pixels()) sum += v;
  return CheckBit(static_cast<unsigned>(sum % 2));
}

CheckBit check_bit(const PixelImage& image, const BlockGrid& grid,
                   std::size_t block_row, std::size_t block_col) {
  if (block_row >= grid.rows || block_col >= grid.cols)
    throw DimensionMismatch("block index (" + std::to_string(block_row) + ", " +
                            std::to_string(block_col) + ") outside " +
                            std::to_string(grid.rows) + "x" + std::to_string(grid.cols) +
                            " grid");
  std::uint64_t sum = 0;
  const std::size_t r0 = block_row * grid.block_height;
  const std::size_t c0 = block_col * grid.block_width;
  for (std::size_t r = r0; r < r0 + grid.block_height; ++r)
    for (std::size_t c = c0; c < c0 + grid.block_width; ++c) sum += image.at(r, c);
  return CheckBit(static_cast<unsigned>(sum % 2));
}

PixelImage complement_image(const PixelImage& image) {
  const std::uint16_t maxv = image.max_value();
  std::vector<std::uint16_t> flipped(image.pixel_count());
  const auto& src = image.pixels();
  for (std::size_t i = 0; i < src.size(); ++i)
    flipped[i] = static_cast<std::uint16_t>(maxv - src[i]);
  return PixelImage(image.width(), image.height(), image.bit_depth(), std::move(flipped));
}

BlockGrid make_grid(const PixelImage& image, std::size_t wm_rows, std::size_t wm_cols) {
  if (wm_rows == 0 || wm_cols == 0)
    throw DimensionMismatch("watermark dimensions must be positive");
  if (image.width() % wm_cols != 0 || image.height() % wm_rows != 0)
    throw DimensionMismatch(std::to_string(wm_rows) + "x" + std::to_string(wm_cols) +
                            " watermark does not divide " + std::to_string(image.width()) + "x" +
                            std::to_string(image.height()) + " image");
  return BlockGrid{image.width() / wm_cols, image.height() / wm_rows, wm_rows, wm_cols};
}

BlockGrid make_grid(const PixelImage& image, const BitMatrix& watermark) {
  return make_grid(image, watermark.rows(), watermark.cols());
}

}  // namespace wmlab
