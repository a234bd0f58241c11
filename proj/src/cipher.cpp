#include "dynsbox/cipher.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "dynsbox/error.hpp"
#include "dynsbox/gf_apa.hpp"

namespace dynsbox {
namespace {

constexpr double kRoundSeedStep = 0.054321;
constexpr unsigned kRoundChainStep = 97;
constexpr std::size_t kLatinCells = LatinSquare::kOrder * LatinSquare::kOrder;

// q = (i mod 65536) + 1 for 1-based pixel index i.
std::size_t latin_index(std::size_t i) noexcept { return i % kLatinCells + 1; }

// t = (C(i) mod 4) + 1 discarded logistic steps.
unsigned feedback_skip(std::uint8_t cipher_byte) noexcept { return (cipher_byte & 3U) + 1U; }

}  // namespace

void CipherKey::validate() const {
  if (!(x0 > 0.0 && x0 < 1.0)) throw InputError("x0 must lie in (0, 1)");
  if (!(lambda > 3.57 && lambda < 4.0)) throw InputError("lambda must lie in (3.57, 4)");
  if (beta < 1) throw InputError("beta must be at least 1");
  sbox_params.validate();
}

RoundKey round_key(const CipherKey& master, unsigned r) {
  if (r < 1) throw InputError("round index starts at 1");
  RoundKey rk{
      chaos::guard(chaos::frac(master.x0 + static_cast<double>(r) * kRoundSeedStep)),
      static_cast<std::uint8_t>((master.c0 + kRoundChainStep * r) % 256),
      master.latin_key.rotated_left(r),
      r,
  };
  return rk;
}

std::uint8_t select_substituent(chaos::LogisticState& ls, const SBoxBank& bank) {
  const auto d = chaos::extract_digits(ls.step());
  const std::size_t k = d.a1 % bank.size() + 1;
  const int l = static_cast<int>(d.a2 % 16) + 1;
  const int m = static_cast<int>(d.a3 % 16) + 1;
  return apa::apa(bank.box(k).lookup(l, m));
}

RoundResult encrypt_round(const GrayImage& img, const RoundKey& rk, const SBoxBank& bank,
                          chaos::LogisticState ls) {
  if (bank.size() == 0) throw InputError("S-box bank is empty");
  const LatinSquare latin = build_latin(rk.latin_key);
  const auto plain = img.pixels();

  std::vector<std::uint8_t> cipher(plain.size());
  std::uint8_t prev = rk.c0;
  for (std::size_t i = 1; i <= plain.size(); ++i) {
    const std::uint8_t phi = select_substituent(ls, bank);
    const std::uint8_t c = prev ^ plain[i - 1] ^ phi ^ latin.flat(latin_index(i));
    cipher[i - 1] = c;
    ls.advance(feedback_skip(c));
    prev = c;
  }
  return {anti_transpose(GrayImage(img.width(), img.height(), std::move(cipher))), ls};
}

RoundResult decrypt_round(const GrayImage& img, const RoundKey& rk, const SBoxBank& bank,
                          chaos::LogisticState ls) {
  if (bank.size() == 0) throw InputError("S-box bank is empty");
  const LatinSquare latin = build_latin(rk.latin_key);
  const GrayImage grid = anti_transpose(img);
  const auto cipher = grid.pixels();

  std::vector<std::uint8_t> plain(cipher.size());
  std::uint8_t prev = rk.c0;
  for (std::size_t i = 1; i <= cipher.size(); ++i) {
    const std::uint8_t phi = select_substituent(ls, bank);
    const std::uint8_t c = cipher[i - 1];
    plain[i - 1] = c ^ prev ^ phi ^ latin.flat(latin_index(i));
    ls.advance(feedback_skip(c));
    prev = c;
  }
  return {GrayImage(grid.width(), grid.height(), std::move(plain)), ls};
}

GrayImage encrypt(const GrayImage& img, const CipherKey& key, const SBoxBank& bank) {
  key.validate();
  GrayImage current = img;
  for (unsigned r = 1; r <= key.beta; ++r) {
    const RoundKey rk = round_key(key, r);
    current = encrypt_round(current, rk, bank, chaos::LogisticState(rk.x0, key.lambda)).image;
  }
  return current;
}

GrayImage decrypt(const GrayImage& img, const CipherKey& key, const SBoxBank& bank) {
  key.validate();
  GrayImage current = img;
  for (unsigned r = key.beta; r >= 1; --r) {
    const RoundKey rk = round_key(key, r);
    current = decrypt_round(current, rk, bank, chaos::LogisticState(rk.x0, key.lambda)).image;
  }
  return current;
}

}  // namespace dynsbox
