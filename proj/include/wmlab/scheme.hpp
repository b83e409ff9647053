#pragma once

#include <cstddef>

#include "wmlab/core.hpp"

namespace wmlab {

/// The base scheme's embedding step exists in two reconstructions, because
/// the published description pins down the extraction side but not the
/// exact pixel edit:
///   Complement   — compute the global check bit b of the host; complement
///                  every pixel of block (i,j) when W(i,j) XOR b == 1.
///                  Reproduces the recorded reference numerics exactly.
///   ParityAdjust — per block, if the block parity differs from W(i,j),
///                  toggle the lowest bit of the block's first pixel
///                  (row-major). Changes at most one pixel per block.
enum class EmbedRule {
  Complement,
  ParityAdjust,
};

struct EmbeddingResult {
  PixelImage watermarked;
  CheckBit check_bit;  // global host parity at embed time
  EmbedRule rule;
};

/// Embeds the watermark into the host under the chosen rule. The result
/// keeps the host's dimensions, depth and value range.
EmbeddingResult embed(const PixelImage& host, const BitMatrix& watermark, EmbedRule rule);

/// Informed extraction: bit (i,j) = b XOR (0 if block (i,j) of the
/// watermarked image equals the corresponding reference block, else 1).
/// Pairs with EmbedRule::Complement.
BitMatrix extract_informed(const PixelImage& watermarked, const PixelImage& reference_host,
                           CheckBit b, std::size_t wm_rows, std::size_t wm_cols);

/// Blind extraction: bit (i,j) = parity of block (i,j). Pairs with
/// EmbedRule::ParityAdjust.
BitMatrix extract_blind_parity(const PixelImage& watermarked,
                               std::size_t wm_rows, std::size_t wm_cols);

}  // namespace wmlab
