#include "dynsbox/sbox.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <utility>

#include "dynsbox/chaos.hpp"
#include "dynsbox/error.hpp"

namespace dynsbox {
namespace {

Permutation identity_permutation() {
  Permutation p{};
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(in[offset + i]) << (8 * i);
  return v;
}

}  // namespace

bool is_permutation(std::span<const std::uint8_t> values) {
  if (values.size() != 256) return false;
  std::array<bool, 256> seen{};
  for (auto v : values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void SBoxGenParams::validate() const {
  if (!(y0_base > 0.0 && y0_base < 1.0)) throw InputError("y0_base must lie in (0, 1)");
  if (!(p > 0.0 && p < 1.0)) throw InputError("p must lie in (0, 1)");
  if (!(increment > 0.0) || !std::isfinite(increment)) throw InputError("increment must be positive");
  if (count < 1) throw InputError("count must be at least 1");
}

SBox::SBox() : table_(identity_permutation()) {}

SBox::SBox(const Permutation& table) : table_(table) {
  if (!is_permutation(table_)) throw InputError("S-box table is not a permutation of 0..255");
}

std::uint8_t SBox::lookup(int row, int col) const {
  if (row < 1 || row > 16 || col < 1 || col > 16) {
    throw IndexError("S-box index (" + std::to_string(row) + ", " + std::to_string(col) +
                     ") outside 1..16");
  }
  return table_[static_cast<std::size_t>(16 * (row - 1) + (col - 1))];
}

Permutation chaotic_shuffle(double seed_y0, double p, unsigned n0, unsigned zeta) {
  chaos::PwlcmState state(seed_y0, p);
  state.advance(n0);

  Permutation s = identity_permutation();
  for (unsigned pass = 0; pass < zeta; ++pass) {
    // cnt = 1..255 gives k = 256 down to 2 (1-based positions).
    for (std::uint32_t cnt = 1; cnt < 256; ++cnt) {
      const std::uint32_t k = 256 - cnt + 1;
      const std::uint32_t m = chaos::extract_index(state.step(), k);
      std::swap(s[k - 1], s[m - 1]);
    }
  }
  return s;
}

SBox generate_sbox(double seed_y0, const SBoxGenParams& params) {
  return SBox(chaotic_shuffle(seed_y0, params.p, params.n0, params.zeta));
}

double box_seed(const SBoxGenParams& params, std::size_t j) noexcept {
  const double offset = static_cast<double>(j - 1) * params.increment;
  return chaos::guard(chaos::frac(params.y0_base + offset));
}

SBoxBank::SBoxBank(std::vector<SBox> boxes, SBoxGenParams params)
    : boxes_(std::move(boxes)), params_(params) {}

const SBox& SBoxBank::box(std::size_t k) const {
  if (k < 1 || k > boxes_.size()) throw IndexError("S-box bank index out of range");
  return boxes_[k - 1];
}

std::size_t SBoxBank::count_bijective() const {
  std::size_t n = 0;
  for (const auto& b : boxes_) n += b.is_bijective() ? 1 : 0;
  return n;
}

SBoxBank generate_bank(const SBoxGenParams& params) {
  params.validate();
  const auto count = static_cast<std::ptrdiff_t>(params.count);
  std::vector<SBox> boxes(params.count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    boxes[static_cast<std::size_t>(j)] =
        generate_sbox(box_seed(params, static_cast<std::size_t>(j) + 1), params);
  }
  return SBoxBank(std::move(boxes), params);
}

namespace serial {

SBoxBank generate_bank(const SBoxGenParams& params) {
  params.validate();
  std::vector<SBox> boxes;
  boxes.reserve(params.count);
  for (std::size_t j = 1; j <= params.count; ++j) boxes.push_back(generate_sbox(box_seed(params, j), params));
  return SBoxBank(std::move(boxes), params);
}

}  // namespace serial

std::vector<std::uint8_t> encode_bank(const SBoxBank& bank) {
  std::vector<std::uint8_t> out;
  out.reserve(kBankHeaderSize + bank.size() * 256);
  for (char c : {'S', 'B', 'X', 'B'}) out.push_back(static_cast<std::uint8_t>(c));
  put_le(out, kBankFormatVersion, 2);
  put_le(out, bank.size(), 4);
  for (const auto& b : bank.boxes()) out.insert(out.end(), b.table().begin(), b.table().end());
  return out;
}

SBoxBank decode_bank(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kBankHeaderSize || std::memcmp(bytes.data(), "SBXB", 4) != 0) {
    throw ParseError("not an S-box bank file (bad magic)");
  }
  const auto version = get_le(bytes, 4, 2);
  if (version != kBankFormatVersion) {
    throw ParseError("unsupported S-box bank version " + std::to_string(version));
  }
  const auto count = get_le(bytes, 6, 4);
  if (count == 0 || bytes.size() != kBankHeaderSize + count * 256) {
    throw ParseError("S-box bank size does not match its declared count");
  }
  std::vector<SBox> boxes;
  boxes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Permutation t{};
    std::memcpy(t.data(), bytes.data() + kBankHeaderSize + i * 256, 256);
    if (!is_permutation(t)) throw ParseError("S-box " + std::to_string(i + 1) + " is not bijective");
    boxes.emplace_back(t);
  }
  SBoxGenParams params;
  params.count = count;
  return SBoxBank(std::move(boxes), params);
}

}  // namespace dynsbox
