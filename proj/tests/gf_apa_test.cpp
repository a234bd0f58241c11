#include "dynsbox/gf_apa.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace dynsbox;

namespace {

// Independent inverse: exhaustive search over the multiplication table.
std::uint8_t inverse_by_search(std::uint8_t a) {
  if (a == 0) return 0;
  for (int b = 1; b < 256; ++b) {
    if (gf::mul(a, static_cast<std::uint8_t>(b)) == 1) return static_cast<std::uint8_t>(b);
  }
  return 0;
}

// Independent inverse: extended Euclid over GF(2)[x].
int poly_degree(unsigned p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint8_t inverse_by_euclid(std::uint8_t a) {
  if (a == 0) return 0;
  unsigned r0 = gf::kPoly, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    unsigned q = 0, r = r0;
    while (poly_degree(r) >= poly_degree(r1)) {
      const int shift = poly_degree(r) - poly_degree(r1);
      q ^= 1U << shift;
      r ^= r1 << shift;
    }
    unsigned qs = 0;  // carry-less q * s1
    for (int i = 0; i < 16; ++i) {
      if (q & (1U << i)) qs ^= s1 << i;
    }
    const unsigned s = s0 ^ qs;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  // r0 == 1; reduce s0 modulo the field polynomial.
  while (poly_degree(s0) >= 8) s0 ^= gf::kPoly << (poly_degree(s0) - 8);
  return static_cast<std::uint8_t>(s0);
}

}  // namespace

TEST_CASE("gf_mul examples") {
  for (int a = 0; a < 256; ++a) CHECK(gf::mul(static_cast<std::uint8_t>(a), 0x01) == a);
  CHECK(gf::mul(0x02, 0x80) == 0x1B);
  CHECK(gf::mul(0x53, 0xCA) == 0x01);
}

TEST_CASE("gf_mul is commutative and associative") {
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      REQUIRE(gf::mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) ==
              gf::mul(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)));
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 20000; ++i) {
    const auto a = static_cast<std::uint8_t>(byte(rng));
    const auto b = static_cast<std::uint8_t>(byte(rng));
    const auto c = static_cast<std::uint8_t>(byte(rng));
    REQUIRE(gf::mul(gf::mul(a, b), c) == gf::mul(a, gf::mul(b, c)));
  }
}

TEST_CASE("gf_inv agrees with search and Euclid") {
  CHECK(gf::inv(0x00) == 0x00);
  CHECK(gf::inv(0x01) == 0x01);
  CHECK(gf::inv(0x53) == 0xCA);
  for (int a = 0; a < 256; ++a) {
    const auto x = static_cast<std::uint8_t>(a);
    REQUIRE(gf::inv(x) == inverse_by_search(x));
    REQUIRE(gf::inv(x) == inverse_by_euclid(x));
    if (a != 0) REQUIRE(gf::mul(x, gf::inv(x)) == 0x01);
  }
}

TEST_CASE("affine map") {
  CHECK(apa::affine(0x00) == 0x63);
  std::array<bool, 256> seen{};
  for (int a = 0; a < 256; ++a) {
    const auto y = apa::affine(static_cast<std::uint8_t>(a));
    CHECK_FALSE(seen[y]);
    seen[y] = true;
  }
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; b += 7) {
      const auto x = static_cast<std::uint8_t>(a);
      const auto y = static_cast<std::uint8_t>(b);
      REQUIRE((apa::affine(x) ^ apa::affine(y) ^ apa::affine(0)) == apa::affine(x ^ y));
    }
  }
}

TEST_CASE("affine MSB convention mirrors the LSB one") {
  CHECK(apa::affine(0x00, apa::BitOrder::kMsbFirst) == 0xC6);
}

TEST_CASE("apa table is a bijection with an exact inverse") {
  const auto t = apa::compute_table({});
  CHECK(t.is_bijective());
  const auto inv = t.inverse();
  for (int x = 0; x < 256; ++x) CHECK(inv[t[static_cast<std::uint8_t>(x)]] == x);
  for (int x = 0; x < 256; ++x) {
    const auto b = static_cast<std::uint8_t>(x);
    CHECK(t[b] == apa::affine(gf::inv(apa::affine(b))));
  }
}

TEST_CASE("apa values under the selected convention") {
  // The printed table has 0x8C / 0x8B in these cells; the computed A∘P∘A
  // gives different values and the cells show up as disagreements.
  CHECK(apa::apa(0x00) == 0xFB);
  CHECK(apa::apa(0xFF) == 0xDE);
  CHECK(apa::printed_table()[0x00] == 0x8C);
  CHECK(apa::printed_table()[0xFF] == 0x8B);
}

TEST_CASE("reconciliation report") {
  const auto r = apa::reconcile_convention();
  REQUIRE(r.scores.size() == 4);
  int best = 0;
  for (const auto& s : r.scores) {
    CHECK(s.agreement >= 0);
    CHECK(s.agreement < 256);
    best = std::max(best, s.agreement);
  }
  CHECK(r.scores[0].agreement == 2);
  CHECK(r.scores[1].agreement == 1);
  CHECK(r.scores[2].agreement == 2);
  CHECK(r.scores[3].agreement == 1);
  CHECK(r.selected == apa::Convention{});
  CHECK(r.table.is_bijective());
  CHECK(r.table.entries == apa::cipher_table().entries);
  CHECK(static_cast<int>(r.disagreements.size()) == 256 - best);

  REQUIRE(r.printed_duplicates.size() == 2);
  CHECK(r.printed_duplicates[0].value == 0x80);
  CHECK(r.printed_duplicates[0].positions == std::vector<std::uint8_t>{0x11, 0xA5});
  CHECK(r.printed_duplicates[1].value == 0xAF);
  CHECK(r.printed_duplicates[1].positions == std::vector<std::uint8_t>{0x27, 0x43});
  CHECK(r.printed_missing_values == 2);
  CHECK_FALSE(apa::printed_table().is_bijective());

  const auto text = r.to_text();
  CHECK(text.find("selected: x0=LSB") != std::string::npos);
  CHECK(text.find("0xAF at (row 2, col 7) (row 4, col 3)") != std::string::npos);
  MESSAGE("apa fixed points: " << r.fixed_points);
}

TEST_CASE("hex grid layout") {
  const auto grid = apa::printed_table().to_hex_grid();
  CHECK(grid.substr(0, 5) == "8C 90");
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 16);
  CHECK(grid.substr(grid.size() - 3) == "8B\n");
}
