#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "dynsbox/image.hpp"

namespace dynsbox::metrics {

using Histogram = std::array<std::uint64_t, 256>;

/// Paired byte samples (x_i, y_i).
struct PixelPairSeries {
  std::span<const std::uint8_t> xs;
  std::span<const std::uint8_t> ys;
};

struct Correlation {
  double rho = 0.0;
  bool degenerate = false;  // a variance term was zero
};

/// Pearson coefficient from the raw-sum formula. Sums are exact integers.
/// Zero-variance cases: both zero and xs == ys gives 1, otherwise 0.
/// Throws InputError for fewer than two pairs or unequal lengths.
Correlation correlation_detail(PixelPairSeries series);
inline double correlation(PixelPairSeries series) { return correlation_detail(series).rho; }

/// Each pixel against its right-hand neighbour, all rows.
/// Throws InputError for single-column images.
Correlation adjacent_correlation_detail(const GrayImage& img);
inline double adjacent_correlation(const GrayImage& img) {
  return adjacent_correlation_detail(img).rho;
}

/// Co-located pixels of two equally sized images.
double cross_correlation(const GrayImage& a, const GrayImage& b);

Histogram histogram(const GrayImage& img);
Histogram histogram(std::span<const std::uint8_t> values);

/// Shannon entropy in bits of the 256-bin distribution.
double entropy(const Histogram& hist);
double entropy(const GrayImage& img);

double chi_square(const Histogram& hist, std::uint64_t total);

/// Percentage of differing positions. Throws InputError on a size mismatch.
double npcr(const GrayImage& c1, const GrayImage& c2);

struct MetricsReport {
  std::size_t width = 0;
  std::size_t height = 0;
  double entropy_bits = 0.0;
  Correlation corr_adjacent;
  Histogram histogram{};
  double chi_square = 0.0;
};

/// corr_adjacent is left at its default for single-column images.
MetricsReport analyze(const GrayImage& img);

namespace serial {
Histogram histogram(std::span<const std::uint8_t> values);
std::uint64_t count_differences(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
Correlation correlation_detail(PixelPairSeries series);
Correlation adjacent_correlation_detail(const GrayImage& img);
}  // namespace serial

}  // namespace dynsbox::metrics
