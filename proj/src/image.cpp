#include "dynsbox/image.hpp"

#include <string>
#include <utility>

#include "dynsbox/error.hpp"

namespace dynsbox {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) throw InputError("image dimensions must be positive");
  if (pixels_.size() != width_ * height_) {
    throw InputError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                     std::to_string(width_) + "x" + std::to_string(height_));
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage rotate180(const GrayImage& img) {
  std::vector<std::uint8_t> out(img.pixels().rbegin(), img.pixels().rend());
  return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage transpose(const GrayImage& img) {
  const std::size_t rows = img.height();
  const std::size_t cols = img.width();
  std::vector<std::uint8_t> out(img.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[c * rows + r] = img.at(r, c);
  }
  return GrayImage(rows, cols, std::move(out));
}

// out(j, i) = in(M-1-i, N-1-j) for an M x N input; output is N x M.
GrayImage anti_transpose(const GrayImage& img) {
  const auto rows = static_cast<std::ptrdiff_t>(img.height());
  const auto cols = static_cast<std::ptrdiff_t>(img.width());
  const auto in = img.pixels();
  std::vector<std::uint8_t> out(img.size());
#pragma omp parallel for schedule(static) if (rows * cols >= 65536)
  for (std::ptrdiff_t j = 0; j < cols; ++j) {
    std::uint8_t* dst = out.data() + j * rows;
    const std::ptrdiff_t src_col = cols - 1 - j;
    for (std::ptrdiff_t i = 0; i < rows; ++i) dst[i] = in[static_cast<std::size_t>((rows - 1 - i) * cols + src_col)];
  }
  return GrayImage(img.height(), img.width(), std::move(out));
}

namespace serial {

GrayImage anti_transpose(const GrayImage& img) { return transpose(rotate180(img)); }

}  // namespace serial

}  // namespace dynsbox
