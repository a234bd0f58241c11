#include "dynsbox/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dynsbox/error.hpp"

namespace dynsbox::metrics {
namespace {

struct RawSums {
  std::uint64_t n = 0;
  std::uint64_t sx = 0;
  std::uint64_t sy = 0;
  std::uint64_t sxx = 0;
  std::uint64_t syy = 0;
  std::uint64_t sxy = 0;
  bool identical = true;
};

// Pearson coefficient from exact integer sums.
Correlation finish(const RawSums& s) {
  using Wide = __int128;
  const Wide n = static_cast<Wide>(s.n);
  const Wide num = n * static_cast<Wide>(s.sxy) - static_cast<Wide>(s.sx) * static_cast<Wide>(s.sy);
  const Wide dx = n * static_cast<Wide>(s.sxx) - static_cast<Wide>(s.sx) * static_cast<Wide>(s.sx);
  const Wide dy = n * static_cast<Wide>(s.syy) - static_cast<Wide>(s.sy) * static_cast<Wide>(s.sy);

  if (dx == 0 || dy == 0) {
    const bool both = dx == 0 && dy == 0;
    return {both && s.identical ? 1.0 : 0.0, true};
  }
  long double denom;
  if (dx == dy) {
    denom = static_cast<long double>(dx);
  } else {
    denom = std::sqrt(static_cast<long double>(dx)) * std::sqrt(static_cast<long double>(dy));
  }
  const long double rho = static_cast<long double>(num) / denom;
  return {static_cast<double>(std::clamp(rho, -1.0L, 1.0L)), false};
}

void check_series(PixelPairSeries series) {
  if (series.xs.size() != series.ys.size()) throw InputError("correlation series lengths differ");
  if (series.xs.size() < 2) throw InputError("correlation needs at least two pairs");
}

RawSums sums_parallel(PixelPairSeries series) {
  const auto n = static_cast<std::ptrdiff_t>(series.xs.size());
  const std::uint8_t* xs = series.xs.data();
  const std::uint8_t* ys = series.ys.data();
  std::uint64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, diff = 0;
#pragma omp parallel for schedule(static) reduction(+ : sx, sy, sxx, syy, sxy, diff) if (n >= 65536)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::uint64_t x = xs[i];
    const std::uint64_t y = ys[i];
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
    diff += x != y ? 1U : 0U;
  }
  return {static_cast<std::uint64_t>(n), sx, sy, sxx, syy, sxy, diff == 0};
}

RawSums sums_serial(PixelPairSeries series) {
  RawSums s;
  s.n = series.xs.size();
  for (std::size_t i = 0; i < series.xs.size(); ++i) {
    const std::uint64_t x = series.xs[i];
    const std::uint64_t y = series.ys[i];
    s.sx += x;
    s.sy += y;
    s.sxx += x * x;
    s.syy += y * y;
    s.sxy += x * y;
    if (x != y) s.identical = false;
  }
  return s;
}

struct AdjacentPairs {
  std::vector<std::uint8_t> left;
  std::vector<std::uint8_t> right;
};

AdjacentPairs horizontal_pairs(const GrayImage& img) {
  if (img.width() < 2) throw InputError("adjacent correlation needs at least two columns");
  AdjacentPairs pairs;
  const std::size_t per_row = img.width() - 1;
  pairs.left.reserve(per_row * img.height());
  pairs.right.reserve(per_row * img.height());
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < per_row; ++c) {
      pairs.left.push_back(img.at(r, c));
      pairs.right.push_back(img.at(r, c + 1));
    }
  }
  return pairs;
}

}  // namespace

Correlation correlation_detail(PixelPairSeries series) {
  check_series(series);
  return finish(sums_parallel(series));
}

Correlation adjacent_correlation_detail(const GrayImage& img) {
  const auto pairs = horizontal_pairs(img);
  return correlation_detail({pairs.left, pairs.right});
}

double cross_correlation(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InputError("cross correlation needs equally sized images");
  }
  return correlation({a.pixels(), b.pixels()});
}

Histogram histogram(std::span<const std::uint8_t> values) {
  Histogram total{};
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  const std::uint8_t* data = values.data();
#pragma omp parallel if (n >= 65536)
  {
    Histogram local{};
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) ++local[data[i]];
#pragma omp critical(dynsbox_histogram_merge)
    for (std::size_t v = 0; v < 256; ++v) total[v] += local[v];
  }
  return total;
}

Histogram histogram(const GrayImage& img) { return histogram(img.pixels()); }

double entropy(const Histogram& hist) {
  std::uint64_t total = 0;
  for (auto c : hist) total += c;
  if (total == 0) throw InputError("entropy of an empty image");
  double h = 0.0;
  for (auto c : hist) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

double entropy(const GrayImage& img) { return entropy(histogram(img)); }

double chi_square(const Histogram& hist, std::uint64_t total) {
  if (total == 0) throw InputError("chi-square of an empty histogram");
  const double expected = static_cast<double>(total) / 256.0;
  double chi = 0.0;
  for (auto c : hist) {
    const double d = static_cast<double>(c) - expected;
    chi += d * d / expected;
  }
  return chi;
}

double npcr(const GrayImage& c1, const GrayImage& c2) {
  if (c1.width() != c2.width() || c1.height() != c2.height()) {
    throw InputError("NPCR needs equally sized images");
  }
  const auto a = c1.pixels();
  const auto b = c2.pixels();
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  std::uint64_t differ = 0;
#pragma omp parallel for schedule(static) reduction(+ : differ) if (n >= 65536)
  for (std::ptrdiff_t i = 0; i < n; ++i) differ += a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)] ? 1U : 0U;
  return 100.0 * static_cast<double>(differ) / static_cast<double>(a.size());
}

MetricsReport analyze(const GrayImage& img) {
  MetricsReport r;
  r.width = img.width();
  r.height = img.height();
  r.histogram = histogram(img);
  r.entropy_bits = entropy(r.histogram);
  r.chi_square = chi_square(r.histogram, img.size());
  if (img.width() >= 2) r.corr_adjacent = adjacent_correlation_detail(img);
  return r;
}

namespace serial {

Histogram histogram(std::span<const std::uint8_t> values) {
  Histogram h{};
  for (auto v : values) ++h[v];
  return h;
}

std::uint64_t count_differences(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) n += a[i] != b[i] ? 1U : 0U;
  return n;
}

Correlation correlation_detail(PixelPairSeries series) {
  check_series(series);
  return finish(sums_serial(series));
}

Correlation adjacent_correlation_detail(const GrayImage& img) {
  const auto pairs = horizontal_pairs(img);
  return correlation_detail({pairs.left, pairs.right});
}

}  // namespace serial

}  // namespace dynsbox::metrics
