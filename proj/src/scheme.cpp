#include "wmlab/scheme.hpp"

#include <utility>
#include <vector>

namespace wmlab {

namespace {

// Complements every pixel of block (i, j) in place.
void complement_block(std::vector<std::uint16_t>& pixels, std::size_t image_width,
                      std::uint16_t maxv, const BlockGrid& grid, std::size_t i, std::size_t j) {
  const std::size_t r0 = i * grid.block_height;
  const std::size_t c0 = j * grid.block_width;
  for (std::size_t r = r0; r < r0 + grid.block_height; ++r)
    for (std::size_t c = c0; c < c0 + grid.block_width; ++c) {
      std::uint16_t& v = pixels[r * image_width + c];
      v = static_cast<std::uint16_t>(maxv - v);
    }
}

bool blocks_equal(const PixelImage& a, const PixelImage& b, const BlockGrid& grid,
                  std::size_t i, std::size_t j) {
  const std::size_t r0 = i * grid.block_height;
  const std::size_t c0 = j * grid.block_width;
  for (std::size_t r = r0; r < r0 + grid.block_height; ++r)
    for (std::size_t c = c0; c < c0 + grid.block_width; ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

}  // namespace

EmbeddingResult embed(const PixelImage& host, const BitMatrix& watermark, EmbedRule rule) {
  const BlockGrid grid = make_grid(host, watermark);
  const CheckBit host_bit = check_bit(host);
  std::vector<std::uint16_t> pixels = host.pixels();
  const std::uint16_t maxv = host.max_value();

  for (std::size_t i = 0; i < grid.rows; ++i) {
    for (std::size_t j = 0; j < grid.cols; ++j) {
      if (rule == EmbedRule::Complement) {
        if ((watermark.at(i, j) ^ host_bit.value()) == 1u)
          complement_block(pixels, host.width(), maxv, grid, i, j);
      } else {
        const CheckBit block_bit = check_bit(host, grid, i, j);
        if (block_bit.value() != watermark.at(i, j)) {
          // LSB toggle of the block's first pixel: +1 when even, -1 when
          // odd, so the value stays within the depth's range.
          const std::size_t first =
              i * grid.block_height * host.width() + j * grid.block_width;
          pixels[first] ^= 1u;
        }
      }
    }
  }

  return EmbeddingResult{
      PixelImage(host.width(), host.height(), host.bit_depth(), std::move(pixels)),
      host_bit, rule};
}

BitMatrix extract_informed(const PixelImage& watermarked, const PixelImage& reference_host,
                           CheckBit b, std::size_t wm_rows, std::size_t wm_cols) {
  if (!watermarked.same_shape(reference_host))
    throw DimensionMismatch("watermarked image and reference host differ in shape or depth");
  const BlockGrid grid = make_grid(watermarked, wm_rows, wm_cols);
  std::vector<std::uint8_t> bits;
  bits.reserve(wm_rows * wm_cols);
  for (std::size_t i = 0; i < grid.rows; ++i)
    for (std::size_t j = 0; j < grid.cols; ++j) {
      const unsigned differs = blocks_equal(watermarked, reference_host, grid, i, j) ? 0u : 1u;
      bits.push_back(static_cast<std::uint8_t>(b.value() ^ differs));
    }
  return BitMatrix(wm_rows, wm_cols, std::move(bits));
}

BitMatrix extract_blind_parity(const PixelImage& watermarked,
                               std::size_t wm_rows, std::size_t wm_cols) {
  const BlockGrid grid = make_grid(watermarked, wm_rows, wm_cols);
  std::vector<std::uint8_t> bits;
  bits.reserve(wm_rows * wm_cols);
  for (std::size_t i = 0; i < grid.rows; ++i)
    for (std::size_t j = 0; j < grid.cols; ++j)
      bits.push_back(static_cast<std::uint8_t>(check_bit(watermarked, grid, i, j).value()));
  return BitMatrix(wm_rows, wm_cols, std::move(bits));
}

}  // namespace wmlab
