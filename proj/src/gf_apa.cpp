#include "dynsbox/gf_apa.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <sstream>

namespace dynsbox::apa {
namespace {

// Rows of the affine matrix; bit j of kAffineRows[i] is the coefficient of x_j.
constexpr std::array<std::uint8_t, 8> kAffineRows = {
    0b11110001,  // 1 0 0 0 1 1 1 1
    0b11100011,  // 1 1 0 0 0 1 1 1
    0b11000111,  // 1 1 1 0 0 0 1 1
    0b10001111,  // 1 1 1 1 0 0 0 1
    0b00011111,  // 1 1 1 1 1 0 0 0
    0b00111110,  // 0 1 1 1 1 1 0 0
    0b01111100,  // 0 0 1 1 1 1 1 0
    0b11111000,  // 0 0 0 1 1 1 1 1
};
// c_0..c_7 = 1 1 0 0 0 1 1 0
constexpr std::uint8_t kAffineConstant = 0b01100011;

constexpr std::uint8_t reverse_bits(std::uint8_t x) noexcept {
  std::uint8_t r = 0;
  for (int i = 0; i < 8; ++i) {
    r = static_cast<std::uint8_t>((r << 1) | ((x >> i) & 1U));
  }
  return r;
}

constexpr std::uint8_t affine_lsb(std::uint8_t x) noexcept {
  std::uint8_t out = 0;
  for (int i = 0; i < 8; ++i) {
    const unsigned dot = static_cast<unsigned>(std::popcount(static_cast<unsigned>(kAffineRows[i] & x))) & 1U;
    out = static_cast<std::uint8_t>(out | (dot << i));
  }
  return static_cast<std::uint8_t>(out ^ kAffineConstant);
}

// clang-format off
constexpr std::array<std::uint8_t, 256> kPrinted = {
    0x8C, 0x90, 0xD9, 0xC1, 0x46, 0x63, 0x53, 0xF1, 0x61, 0x32, 0x15, 0x3E, 0x26, 0x9A, 0x97, 0x2E,
    0xD8, 0x80, 0x99, 0x9E, 0xC0, 0x95, 0x67, 0xB7, 0x6D, 0xE0, 0xF3, 0x28, 0x20, 0x86, 0xB6, 0xEF,
    0x4B, 0x31, 0xB5, 0xD2, 0x13, 0x39, 0x6C, 0xAF, 0x03, 0x3F, 0x4D, 0x34, 0xF9, 0xEC, 0x8E, 0x17,
    0xC5, 0x25, 0x3C, 0x89, 0xC9, 0x2B, 0x3A, 0xC2, 0x6E, 0xC6, 0xAA, 0x91, 0x49, 0x18, 0x93, 0xDE,
    0x0D, 0x6F, 0x65, 0xAF, 0x92, 0xA7, 0xF6, 0xA6, 0x40, 0xB9, 0xED, 0xB0, 0xC3, 0xD7, 0x7D, 0x7C,
    0x54, 0x59, 0xDF, 0x2F, 0xDA, 0xA4, 0x05, 0x94, 0x9B, 0x72, 0x01, 0x74, 0xA9, 0xF7, 0x81, 0xE9,
    0x1F, 0xB3, 0xEB, 0xCF, 0xE8, 0x47, 0x52, 0x36, 0xBC, 0x16, 0x29, 0x76, 0x12, 0xFA, 0x9C, 0x8A,
    0x5B, 0xA8, 0x43, 0xD1, 0x79, 0x85, 0x42, 0x82, 0xC7, 0xA1, 0x78, 0x4F, 0xE2, 0x35, 0xEA, 0xAD,
    0xDC, 0x0E, 0xD3, 0x2D, 0x6A, 0x5A, 0x44, 0xAB, 0xC8, 0xE5, 0x37, 0x0A, 0x6B, 0x51, 0xE3, 0x14,
    0xCD, 0x56, 0x4A, 0xD6, 0x08, 0x83, 0xBB, 0x33, 0xE1, 0x30, 0x4E, 0x24, 0x5E, 0xB4, 0x00, 0x48,
    0x5F, 0x22, 0x0B, 0x50, 0x3D, 0x80, 0x1A, 0xBF, 0xCC, 0xFF, 0x64, 0x87, 0x1B, 0xC4, 0x07, 0xF8,
    0x0C, 0xD4, 0xAC, 0x02, 0x10, 0x84, 0x7E, 0x69, 0x70, 0x60, 0x55, 0x2A, 0x21, 0x57, 0x23, 0x66,
    0x62, 0x73, 0xCB, 0x41, 0x58, 0x71, 0x77, 0x1C, 0x7B, 0x8F, 0x9F, 0x9D, 0xA3, 0xB1, 0x7F, 0x5D,
    0xF4, 0x06, 0xAE, 0xD5, 0xE6, 0x3B, 0xBA, 0xFE, 0x96, 0xE7, 0x0F, 0x45, 0x2C, 0xF0, 0xFC, 0xBD,
    0xE4, 0x98, 0xFB, 0xCA, 0x11, 0xF5, 0xDD, 0x7A, 0x5C, 0xFD, 0xCE, 0x88, 0xD0, 0x68, 0x8D, 0x4C,
    0xBE, 0x04, 0x38, 0x1D, 0x1E, 0xF2, 0x27, 0x19, 0xB2, 0x75, 0xA2, 0xEE, 0xDB, 0xB8, 0x09, 0x8B,
};
// clang-format on

constexpr std::array<Convention, 4> kCandidates = {{
    {BitOrder::kLsbFirst, Composition::kAffinePowerAffine},
    {BitOrder::kLsbFirst, Composition::kPowerFirst},
    {BitOrder::kMsbFirst, Composition::kAffinePowerAffine},
    {BitOrder::kMsbFirst, Composition::kPowerFirst},
}};

std::string hex_byte(std::uint8_t v) {
  char buf[3];
  std::snprintf(buf, sizeof buf, "%02X", v);
  return buf;
}

}  // namespace

std::string to_string(const Convention& c) {
  std::string s = c.bits == BitOrder::kLsbFirst ? "x0=LSB" : "x0=MSB";
  s += c.order == Composition::kAffinePowerAffine ? ", A(P(A(x)))" : ", A(A(P(x)))";
  return s;
}

bool ApaTable::is_bijective() const noexcept {
  std::array<bool, 256> seen{};
  for (auto v : entries) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

ApaTable ApaTable::inverse() const {
  ApaTable inv;
  inv.provenance = provenance;
  for (int x = 0; x < 256; ++x) inv.entries[entries[x]] = static_cast<std::uint8_t>(x);
  return inv;
}

std::string ApaTable::to_hex_grid() const {
  std::string out;
  out.reserve(16 * 48);
  for (int row = 0; row < 16; ++row) {
    for (int col = 0; col < 16; ++col) {
      if (col != 0) out += ' ';
      out += hex_byte(entries[row * 16 + col]);
    }
    out += '\n';
  }
  return out;
}

std::uint8_t affine(std::uint8_t x, BitOrder bits) noexcept {
  if (bits == BitOrder::kLsbFirst) return affine_lsb(x);
  return reverse_bits(affine_lsb(reverse_bits(x)));
}

std::uint8_t transform(std::uint8_t x, const Convention& c) noexcept {
  if (c.order == Composition::kAffinePowerAffine) {
    return affine(gf::inv(affine(x, c.bits)), c.bits);
  }
  return affine(affine(gf::inv(x), c.bits), c.bits);
}

ApaTable compute_table(const Convention& c) {
  ApaTable t;
  t.provenance = Provenance::kComputed;
  for (int x = 0; x < 256; ++x) t.entries[x] = transform(static_cast<std::uint8_t>(x), c);
  return t;
}

const ApaTable& printed_table() {
  static const ApaTable table{kPrinted, Provenance::kReferenceConstant};
  return table;
}

const ApaTable& cipher_table() {
  static const ApaTable table = reconcile_convention().table;
  return table;
}

ConventionReport reconcile_convention() {
  const ApaTable& printed = printed_table();
  ConventionReport report;

  int best = -1;
  for (const auto& candidate : kCandidates) {
    const ApaTable t = compute_table(candidate);
    int agree = 0;
    for (int x = 0; x < 256; ++x) agree += t.entries[x] == printed.entries[x] ? 1 : 0;
    report.scores.push_back({candidate, agree});
    if (agree > best) {
      best = agree;
      report.selected = candidate;
      report.table = t;
    }
  }

  for (int x = 0; x < 256; ++x) {
    if (report.table.entries[x] != printed.entries[x]) {
      report.disagreements.push_back(
          {static_cast<std::uint8_t>(x), report.table.entries[x], printed.entries[x]});
    }
  }

  std::map<std::uint8_t, std::vector<std::uint8_t>> where;
  for (int x = 0; x < 256; ++x) where[printed.entries[x]].push_back(static_cast<std::uint8_t>(x));
  for (auto& [value, positions] : where) {
    if (positions.size() > 1) report.printed_duplicates.push_back({value, positions});
  }
  report.printed_missing_values = 256 - static_cast<int>(where.size());

  for (int x = 0; x < 256; ++x) report.fixed_points += report.table.entries[x] == x ? 1 : 0;
  return report;
}

std::string ConventionReport::to_text() const {
  std::ostringstream os;
  os << "convention agreement with printed table (of 256):\n";
  for (const auto& s : scores) os << "  " << to_string(s.convention) << ": " << s.agreement << '\n';
  os << "selected: " << to_string(selected) << '\n';
  os << "computed table bijective: " << (table.is_bijective() ? "yes" : "no") << '\n';
  os << "fixed points: " << fixed_points << '\n';
  os << "printed table duplicates: " << printed_duplicates.size() << " value(s), "
     << printed_missing_values << " byte value(s) never appear\n";
  for (const auto& d : printed_duplicates) {
    os << "  0x" << hex_byte(d.value) << " at";
    for (auto p : d.positions) os << " (row " << hex_byte(p).substr(0, 1) << ", col " << hex_byte(p).substr(1) << ')';
    os << '\n';
  }
  os << "disagreements: " << disagreements.size() << '\n';
  for (const auto& d : disagreements) {
    os << "  [" << hex_byte(d.input) << "] computed " << hex_byte(d.computed) << " printed "
       << hex_byte(d.printed) << '\n';
  }
  return os.str();
}

}  // namespace dynsbox::apa
