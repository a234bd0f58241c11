#pragma once

#include <cstdint>

#include "dynsbox/chaos.hpp"
#include "dynsbox/image.hpp"
#include "dynsbox/latin.hpp"
#include "dynsbox/sbox.hpp"

namespace dynsbox {

/// The full secret of the cipher.
struct CipherKey {
  double x0 = 0.23456;   // logistic seed, (0,1)
  double lambda = 3.99;  // logistic parameter, (3.57, 4)
  unsigned beta = 4;     // rounds, >= 1
  std::uint8_t c0 = 0;   // chaining seed
  LatinKey latin_key;
  SBoxGenParams sbox_params;

  /// Throws InputError on out-of-range fields.
  void validate() const;
};

struct RoundKey {
  double x0;
  std::uint8_t c0;
  LatinKey latin_key;
  unsigned round;
};

/// Per-round key schedule:
///   x0_r = guard(frac(x0 + r * 0.054321))
///   c0_r = (c0 + 97 r) mod 256
///   K_r  = K rotated left by r bytes
RoundKey round_key(const CipherKey& master, unsigned r);

/// One logistic step, then k/l/m from the state's digits and
/// Φ = apa(box_k(l, m)).
std::uint8_t select_substituent(chaos::LogisticState& ls, const SBoxBank& bank);

struct RoundResult {
  GrayImage image;
  chaos::LogisticState state;
};

/// C(i) = C(i-1) ^ P(i) ^ Φ ^ L(q), q = (i mod 65536) + 1, followed by
/// (C(i) mod 4) + 1 discarded logistic steps; output is the anti-transpose
/// of the M x N cipher grid (N x M).
RoundResult encrypt_round(const GrayImage& img, const RoundKey& rk, const SBoxBank& bank,
                          chaos::LogisticState ls);

RoundResult decrypt_round(const GrayImage& img, const RoundKey& rk, const SBoxBank& bank,
                          chaos::LogisticState ls);

/// beta rounds, each with a fresh logistic state seeded from its round key.
GrayImage encrypt(const GrayImage& img, const CipherKey& key, const SBoxBank& bank);
/// Rounds beta down to 1.
GrayImage decrypt(const GrayImage& img, const CipherKey& key, const SBoxBank& bank);

}  // namespace dynsbox
