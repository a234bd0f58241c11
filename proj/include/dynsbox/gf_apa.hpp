#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dynsbox::gf {

/// Reduction polynomial x^8 + x^4 + x^3 + x + 1.
inline constexpr unsigned kPoly = 0x11B;

/// Carry-less product reduced modulo kPoly.
constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept {
  unsigned x = a;
  unsigned r = 0;
  while (b != 0) {
    if (b & 1U) r ^= x;
    x <<= 1;
    if (x & 0x100U) x ^= kPoly;
    b = static_cast<std::uint8_t>(b >> 1);
  }
  return static_cast<std::uint8_t>(r);
}

/// Multiplicative inverse as a^254; maps 0 to 0.
constexpr std::uint8_t inv(std::uint8_t a) noexcept {
  // a^254 = a^(2+4+8+16+32+64+128)
  std::uint8_t result = 1;
  std::uint8_t sq = a;
  for (int bit = 1; bit < 8; ++bit) {
    sq = mul(sq, sq);
    result = mul(result, sq);
  }
  return result;
}

}  // namespace dynsbox::gf

namespace dynsbox::apa {

/// Which bit of a byte holds coefficient x_0 of the affine matrix.
enum class BitOrder { kLsbFirst, kMsbFirst };

/// kAffinePowerAffine: A(P(A(x))). kPowerFirst: the composition read as
/// "apply P, then A, then A", i.e. A(A(P(x))).
enum class Composition { kAffinePowerAffine, kPowerFirst };

struct Convention {
  BitOrder bits = BitOrder::kLsbFirst;
  Composition order = Composition::kAffinePowerAffine;

  friend bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(const Convention& c);

enum class Provenance { kComputed, kReferenceConstant };

/// 256-entry byte map. Computed tables are bijections; the printed constant
/// is kept verbatim and is not one.
struct ApaTable {
  std::array<std::uint8_t, 256> entries{};
  Provenance provenance = Provenance::kComputed;

  std::uint8_t operator[](std::uint8_t x) const noexcept { return entries[x]; }
  bool is_bijective() const noexcept;
  ApaTable inverse() const;
  std::string to_hex_grid() const;
};

/// The 8x8 affine map with constant column (1,1,0,0,0,1,1,0).
std::uint8_t affine(std::uint8_t x, BitOrder bits = BitOrder::kLsbFirst) noexcept;

std::uint8_t transform(std::uint8_t x, const Convention& c) noexcept;

ApaTable compute_table(const Convention& c);

/// The published 16x16 table, row-major.
const ApaTable& printed_table();

/// Cached table under the selected convention; used by the cipher.
const ApaTable& cipher_table();

/// A∘P∘A under the selected convention.
inline std::uint8_t apa(std::uint8_t x) { return cipher_table()[x]; }

struct Disagreement {
  std::uint8_t input;
  std::uint8_t computed;
  std::uint8_t printed;
};

struct ConventionScore {
  Convention convention;
  int agreement = 0;
};

struct DuplicateValue {
  std::uint8_t value;
  std::vector<std::uint8_t> positions;  // input bytes mapping to value
};

struct ConventionReport {
  std::vector<ConventionScore> scores;  // one per candidate, fixed order
  Convention selected;
  ApaTable table;
  std::vector<Disagreement> disagreements;  // against the selected table
  std::vector<DuplicateValue> printed_duplicates;
  int printed_missing_values = 0;
  int fixed_points = 0;

  std::string to_text() const;
};

/// Scores every candidate convention against the printed table and keeps the
/// best one. Ties resolve toward LSB-first A∘P∘A.
ConventionReport reconcile_convention();

}  // namespace dynsbox::apa
