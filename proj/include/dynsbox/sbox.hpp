#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dynsbox {

using Permutation = std::array<std::uint8_t, 256>;

bool is_permutation(std::span<const std::uint8_t> values);

/// Parameters of the chaotic Fisher-Yates S-box generator.
struct SBoxGenParams {
  double y0_base = 0.41;      // PWLCM seed of the first box
  double p = 0.47;            // PWLCM control parameter
  unsigned n0 = 500;          // burn-in iterations
  unsigned zeta = 3;          // full shuffle passes
  double increment = 0.000223;
  std::size_t count = 1000;

  /// Throws InputError on out-of-range fields.
  void validate() const;

  friend bool operator==(const SBoxGenParams&, const SBoxGenParams&) = default;
};

/// A bijective byte substitution viewed as a 16x16 row-major table.
class SBox {
 public:
  SBox();  // identity
  /// Throws InputError if table is not a permutation of 0..255.
  explicit SBox(const Permutation& table);

  /// 1-based (row, col) lookup. Throws IndexError outside 1..16.
  std::uint8_t lookup(int row, int col) const;
  std::uint8_t operator[](std::size_t i) const noexcept { return table_[i]; }

  const Permutation& table() const noexcept { return table_; }
  bool is_bijective() const { return is_permutation(table_); }

  friend bool operator==(const SBox&, const SBox&) = default;

 private:
  Permutation table_;
};

/// Chaotic Fisher-Yates shuffle of 0..255 driven by a PWLCM seeded with
/// (seed_y0, p): n0 burn-in steps, then zeta passes of 255 swaps each.
/// Throws InputError when seed_y0 or p is outside (0,1).
Permutation chaotic_shuffle(double seed_y0, double p, unsigned n0, unsigned zeta);

SBox generate_sbox(double seed_y0, const SBoxGenParams& params);

/// Seed of box j (1-based): guard(frac(y0_base + (j-1)*increment)).
double box_seed(const SBoxGenParams& params, std::size_t j) noexcept;

class SBoxBank {
 public:
  SBoxBank() = default;
  SBoxBank(std::vector<SBox> boxes, SBoxGenParams params);

  std::size_t size() const noexcept { return boxes_.size(); }
  /// 1-based.
  const SBox& box(std::size_t k) const;
  const std::vector<SBox>& boxes() const noexcept { return boxes_; }
  const SBoxGenParams& params() const noexcept { return params_; }

  std::size_t count_bijective() const;

  friend bool operator==(const SBoxBank& a, const SBoxBank& b) {
    return a.boxes_ == b.boxes_;
  }

 private:
  std::vector<SBox> boxes_;
  SBoxGenParams params_;
};

/// Boxes are generated in parallel (OpenMP); each box is independent.
SBoxBank generate_bank(const SBoxGenParams& params);

namespace serial {
SBoxBank generate_bank(const SBoxGenParams& params);
}

// Bank file: "SBXB", u16 version (LE), u32 count (LE), count*256 bytes.
inline constexpr std::uint16_t kBankFormatVersion = 1;
inline constexpr std::size_t kBankHeaderSize = 10;

std::vector<std::uint8_t> encode_bank(const SBoxBank& bank);
/// Throws ParseError on bad magic, version, size, or a non-bijective box.
SBoxBank decode_bank(std::span<const std::uint8_t> bytes);

}  // namespace dynsbox
