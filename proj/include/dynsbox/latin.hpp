#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynsbox/sbox.hpp"

namespace dynsbox {

/// 256-bit external key of the Latin square.
class LatinKey {
 public:
  LatinKey() = default;
  explicit LatinKey(const std::array<std::uint8_t, 32>& bytes) : bytes_(bytes) {}

  /// Exactly 64 hex characters, either case. Throws ParseError otherwise.
  static LatinKey from_hex(std::string_view hex);

  const std::array<std::uint8_t, 32>& bytes() const noexcept { return bytes_; }
  std::string to_hex() const;

  /// Left rotation by `bytes` whole bytes (8*bytes bits).
  LatinKey rotated_left(std::size_t bytes) const;

  friend bool operator==(const LatinKey&, const LatinKey&) = default;

 private:
  std::array<std::uint8_t, 32> bytes_{};
};

struct LatinSeeds {
  double y0_p;
  double y0_q;
};

/// Folds each 16-byte half into a 64-bit word (XOR of its big-endian 8-byte
/// halves) and maps it to (w mod (1e15 - 3) + 1) / 1e15.
LatinSeeds derive_seeds(const LatinKey& key);

enum class PermTag { kP, kQ };

/// Chaotic shuffle with p = 0.37 (P) or 0.43 (Q), n0 = 250, zeta = 2.
Permutation keyed_permutation(double y0, PermTag tag);

class LatinSquare {
 public:
  static constexpr std::size_t kOrder = 256;

  /// Throws InputError unless the grid has 256*256 cells.
  explicit LatinSquare(std::vector<std::uint8_t> grid);

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return grid_[row * kOrder + col];
  }
  /// Flattened row-major view, 1-based q in [1, 65536].
  std::uint8_t flat(std::size_t q) const noexcept { return grid_[q - 1]; }
  std::span<const std::uint8_t> cells() const noexcept { return grid_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::vector<std::uint8_t> grid_;
};

/// L(i,j) = p[(q[i] + j) mod 256]. Latin for any two permutations.
LatinSquare latin_from_permutations(const Permutation& p, const Permutation& q);

LatinSquare build_latin(const LatinKey& key);

/// True iff every row and column of the order-n grid holds n distinct
/// symbols from [0, n).
bool is_latin(std::span<const std::uint8_t> grid, std::size_t order);
inline bool is_latin(const LatinSquare& sq) { return is_latin(sq.cells(), LatinSquare::kOrder); }

namespace serial {
LatinSquare latin_from_permutations(const Permutation& p, const Permutation& q);
}

}  // namespace dynsbox
