#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <doctest.h>

#include "wmlab/core.hpp"

using namespace wmlab;

namespace {

// All row-major pixel assignments for a given shape and depth.
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

TEST_CASE("check_bit is the pixel sum mod 2") {
  CHECK(check_bit(PixelImage(2, 2, 2, {0, 1, 2, 3})).value() == 0);  // 6 mod 2
  CHECK(check_bit(PixelImage(2, 2, 2, {0, 0, 0, 0})).value() == 0);
  CHECK(check_bit(PixelImage(2, 2, 2, {1, 0, 0, 0})).value() == 1);
}

TEST_CASE("check_bit of a block") {
  // 4x4 image split into 2x2 blocks of 2x2 pixels each.
  const PixelImage img(4, 4, 2,
                       {0, 1, 2, 2,
                        2, 3, 0, 1,
                        1, 1, 3, 3,
                        0, 1, 3, 2});
  const BlockGrid grid = make_grid(img, 2, 2);
  CHECK(grid.block_width == 2);
  CHECK(grid.block_height == 2);
  CHECK(check_bit(img, grid, 0, 0).value() == 0);  // 0+1+2+3
  CHECK(check_bit(img, grid, 0, 1).value() == 1);  // 2+2+0+1
  CHECK(check_bit(img, grid, 1, 0).value() == 1);  // 1+1+0+1
  CHECK(check_bit(img, grid, 1, 1).value() == 1);  // 3+3+3+2
  CHECK_THROWS_AS(check_bit(img, grid, 2, 0), DimensionMismatch);
}

TEST_CASE("complement_image flips every pixel within the depth range") {
  CHECK(complement_image(PixelImage(2, 2, 2, {0, 1, 2, 3})) ==
        PixelImage(2, 2, 2, {3, 2, 1, 0}));
  CHECK(complement_image(PixelImage(2, 2, 1, {0, 0, 0, 0})) ==
        PixelImage(2, 2, 1, {1, 1, 1, 1}));
  const PixelImage x(2, 2, 2, {2, 0, 1, 3});
  CHECK(complement_image(complement_image(x)) == x);
}

TEST_CASE("make_grid rejects non-dividing dimensions") {
  const BitMatrix wm(2, 2, {0, 0, 1, 1});
  const BlockGrid one = make_grid(PixelImage(2, 2, 2, {0, 1, 2, 3}), wm);
  CHECK(one == BlockGrid{1, 1, 2, 2});

  const BlockGrid two = make_grid(PixelImage(4, 4, 1, std::vector<std::uint16_t>(16, 0)), wm);
  CHECK(two == BlockGrid{2, 2, 2, 2});

  CHECK_THROWS_AS(make_grid(PixelImage(3, 2, 2, {0, 1, 2, 3, 0, 1}), wm), DimensionMismatch);
}

TEST_CASE("construction validates every invariant") {
  CHECK_THROWS_AS(PixelImage(2, 2, 2, {0, 1, 2, 4}), InvariantViolation);   // 4 > 3
  CHECK_THROWS_AS(PixelImage(2, 2, 2, {0, 1, 2}), InvariantViolation);      // short
  CHECK_THROWS_AS(PixelImage(0, 2, 2, {}), InvariantViolation);             // empty
  CHECK_THROWS_AS(PixelImage(1, 1, 0, {0}), InvariantViolation);            // depth 0
  CHECK_THROWS_AS(PixelImage(1, 1, 17, {0}), InvariantViolation);           // depth 17
  CHECK_THROWS_AS(BitMatrix(2, 2, {0, 1, 2, 1}), InvariantViolation);       // 2 not a bit
  CHECK_THROWS_AS(BitMatrix(2, 2, {0, 1}), InvariantViolation);             // short
  CHECK_THROWS_AS(CheckBit(2), InvariantViolation);
  CHECK(PixelImage(1, 1, 16, {65535}).max_value() == 65535);
}

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kSmallShapes{
    {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {4, 1}, {1, 4}, {2, 2}};

}  // namespace

TEST_CASE("complement involution, exhaustively for every image up to 4 pixels") {
  for (int depth : {1, 2}) {
    for (auto [w, h] : kSmallShapes) {
      for (const PixelImage& img : all_images(w, h, depth)) {
        CHECK(complement_image(complement_image(img)) == img);
      }
    }
  }
}

TEST_CASE("complement flips the check bit precisely when the pixel count is odd") {
  for (int depth : {1, 2}) {
    for (auto [w, h] : kSmallShapes) {
      const unsigned parity_of_count = static_cast<unsigned>((w * h) % 2);
      for (const PixelImage& img : all_images(w, h, depth)) {
        const unsigned expected = check_bit(img).value() ^ parity_of_count;
        CHECK(check_bit(complement_image(img)).value() == expected);
      }
    }
  }
}

TEST_CASE("single-pixel complement flips parity at every depth") {
  for (int depth = 1; depth <= kMaxBitDepth; ++depth) {
    const std::uint32_t maxv = (1u << depth) - 1u;
    for (std::uint32_t v = 0; v <= maxv; ++v) {
      const unsigned flipped = static_cast<unsigned>((maxv - v) % 2);
      CHECK(flipped == ((v % 2) ^ 1u));
    }
  }
}

TEST_CASE("check_bit ignores pixel order") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const std::size_t w = 1 + rng() % 6, h = 1 + rng() % 6;
    const int depth = 1 + static_cast<int>(rng() % 8);
    std::vector<std::uint16_t> pixels(w * h);
    const std::uint32_t maxv = (1u << depth) - 1u;
    for (auto& p : pixels) p = static_cast<std::uint16_t>(rng() % (maxv + 1));
    const PixelImage img(w, h, depth, pixels);
    std::shuffle(pixels.begin(), pixels.end(), rng);
    CHECK(check_bit(PixelImage(w, h, depth, pixels)) == check_bit(img));
  }
}
