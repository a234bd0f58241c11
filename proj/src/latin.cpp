#include "dynsbox/latin.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "dynsbox/chaos.hpp"
#include "dynsbox/error.hpp"

namespace dynsbox {
namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint64_t load_be64(const std::array<std::uint8_t, 32>& b, std::size_t offset) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < 8; ++i) v = (v << 8) | b[offset + i];
  return v;
}

double fold_to_unit(std::uint64_t w) {
  constexpr std::uint64_t kModulus = 1'000'000'000'000'000ULL - 3;
  return chaos::guard(static_cast<double>(w % kModulus + 1) / 1e15);
}

}  // namespace

LatinKey LatinKey::from_hex(std::string_view hex) {
  if (hex.size() != 64) {
    throw ParseError("Latin key must be 64 hex characters, got " + std::to_string(hex.size()));
  }
  std::array<std::uint8_t, 32> bytes{};
  for (std::size_t i = 0; i < 32; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("Latin key contains a non-hex character");
    bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return LatinKey(bytes);
}

std::string LatinKey::to_hex() const {
  std::string out;
  out.reserve(64);
  char buf[3];
  for (auto b : bytes_) {
    std::snprintf(buf, sizeof buf, "%02X", b);
    out += buf;
  }
  return out;
}

LatinKey LatinKey::rotated_left(std::size_t bytes) const {
  auto out = bytes_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(bytes % out.size()), out.end());
  return LatinKey(out);
}

LatinSeeds derive_seeds(const LatinKey& key) {
  const auto& b = key.bytes();
  const std::uint64_t w1 = load_be64(b, 0) ^ load_be64(b, 8);
  const std::uint64_t w2 = load_be64(b, 16) ^ load_be64(b, 24);
  return {fold_to_unit(w1), fold_to_unit(w2)};
}

Permutation keyed_permutation(double y0, PermTag tag) {
  const double p = tag == PermTag::kP ? 0.37 : 0.43;
  return chaotic_shuffle(y0, p, 250, 2);
}

LatinSquare::LatinSquare(std::vector<std::uint8_t> grid) : grid_(std::move(grid)) {
  if (grid_.size() != kOrder * kOrder) throw InputError("Latin square must hold 256x256 cells");
}

LatinSquare latin_from_permutations(const Permutation& p, const Permutation& q) {
  constexpr auto n = static_cast<std::ptrdiff_t>(LatinSquare::kOrder);
  std::vector<std::uint8_t> grid(LatinSquare::kOrder * LatinSquare::kOrder);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const unsigned shift = q[static_cast<std::size_t>(i)];
    std::uint8_t* row = grid.data() + i * n;
    for (unsigned j = 0; j < LatinSquare::kOrder; ++j) row[j] = p[(shift + j) & 0xFFU];
  }
  return LatinSquare(std::move(grid));
}

namespace serial {

LatinSquare latin_from_permutations(const Permutation& p, const Permutation& q) {
  std::vector<std::uint8_t> grid;
  grid.reserve(LatinSquare::kOrder * LatinSquare::kOrder);
  for (std::size_t i = 0; i < LatinSquare::kOrder; ++i) {
    for (std::size_t j = 0; j < LatinSquare::kOrder; ++j) grid.push_back(p[(q[i] + j) % 256]);
  }
  return LatinSquare(std::move(grid));
}

}  // namespace serial

LatinSquare build_latin(const LatinKey& key) {
  const auto seeds = derive_seeds(key);
  return latin_from_permutations(keyed_permutation(seeds.y0_p, PermTag::kP),
                                 keyed_permutation(seeds.y0_q, PermTag::kQ));
}

bool is_latin(std::span<const std::uint8_t> grid, std::size_t order) {
  if (order == 0 || order > 256 || grid.size() != order * order) return false;
  std::vector<std::uint8_t> seen(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      const auto v = grid[i * order + j];
      if (v >= order || seen[v]) return false;
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order; ++j) {
      const auto v = grid[j * order + i];
      if (v >= order || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

}  // namespace dynsbox
