#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dynsbox {

/// 8-bit grayscale image, row-major, height rows of width pixels.
class GrayImage {
 public:
  /// Throws InputError for zero dimensions or a size mismatch.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * width_ + col];
  }
  std::uint8_t& at(std::size_t row, std::size_t col) noexcept {
    return pixels_[row * width_ + col];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

// Geometry used between rounds. The cipher applies transpose(rot180(img)),
// a reflection about the anti-diagonal, which is its own inverse.

GrayImage rotate180(const GrayImage& img);
GrayImage transpose(const GrayImage& img);
GrayImage anti_transpose(const GrayImage& img);

namespace serial {
GrayImage anti_transpose(const GrayImage& img);
}

}  // namespace dynsbox
