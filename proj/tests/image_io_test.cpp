#include "dynsbox/image_io.hpp"

#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"

using namespace dynsbox;
using pgm::PgmErrorKind;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

PgmErrorKind error_kind(const std::vector<std::uint8_t>& data) {
  try {
    pgm::read_pgm(data);
  } catch (const pgm::PgmError& e) {
    return e.kind();
  }
  FAIL("expected a PGM error");
  return PgmErrorKind::kBadHeader;
}

}  // namespace

TEST_CASE("minimal P5") {
  auto data = bytes_of("P5\n1 1\n255\n");
  data.push_back(0x41);
  const auto img = pgm::read_pgm(data);
  CHECK(img.width() == 1);
  CHECK(img.height() == 1);
  CHECK(img.at(0, 0) == 65);
}

TEST_CASE("comments between header tokens") {
  auto data = bytes_of("P5\n# foo\n2 # width above\n1\n# maxval next\n255\n");
  data.push_back(1);
  data.push_back(2);
  const auto img = pgm::read_pgm(data);
  CHECK(img.width() == 2);
  CHECK(img.height() == 1);
  CHECK(img.at(0, 1) == 2);
}

TEST_CASE("header parse errors are distinct") {
  CHECK(error_kind(bytes_of("P2\n1 1\n255\n0")) == PgmErrorKind::kBadMagic);
  CHECK(error_kind(bytes_of("")) == PgmErrorKind::kBadMagic);
  CHECK(error_kind(bytes_of("P5\n1 1\n65535\n\0\0")) == PgmErrorKind::kUnsupportedDepth);
  CHECK(error_kind(bytes_of("P5\n2 2\n255\n\1\2")) == PgmErrorKind::kTruncated);
  CHECK(error_kind(bytes_of("P5\n1 1\n255\n\1\2")) == PgmErrorKind::kTrailingData);
  CHECK(error_kind(bytes_of("P5\nx 1\n255\n\1")) == PgmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P5\n0 1\n255\n")) == PgmErrorKind::kBadHeader);
  CHECK(error_kind(bytes_of("P5\n1 1")) == PgmErrorKind::kTruncated);
}

TEST_CASE("canonical writer") {
  const auto out = pgm::write_pgm(GrayImage(1, 1, 0));
  const std::string header = "P5\n1 1\n255\n";
  REQUIRE(out.size() == header.size() + 1);
  CHECK(header.size() == 11);
  CHECK(std::string(out.begin(), out.begin() + 11) == header);
  CHECK(out.back() == 0);
  CHECK(pgm::write_pgm(GrayImage(1, 1, 0)) == out);
}

TEST_CASE("write/read round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 25; ++i) {
    const std::size_t w = 1 + rng() % 40, h = 1 + rng() % 40;
    std::vector<std::uint8_t> px(w * h);
    for (auto& p : px) p = static_cast<std::uint8_t>(rng());
    const GrayImage img(w, h, px);
    const auto bytes = pgm::write_pgm(img);
    REQUIRE(pgm::read_pgm(bytes) == img);
    REQUIRE(pgm::write_pgm(pgm::read_pgm(bytes)) == bytes);
  }
}

TEST_CASE("from_raw") {
  const std::vector<std::uint8_t> four = {1, 2, 3, 4};
  const auto img = pgm::from_raw(four, 2, 2);
  CHECK(img.at(1, 0) == 3);
  const std::vector<std::uint8_t> five = {1, 2, 3, 4, 5};
  CHECK_THROWS_AS(pgm::from_raw(five, 2, 2), InputError);
  CHECK_THROWS_AS(pgm::from_raw({}, 2, 2), InputError);
  CHECK_THROWS_AS(pgm::from_raw({}, 0, 0), InputError);
}

TEST_CASE("atomic file writes") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "dynsbox_io_test";
  fs::create_directories(dir);
  const auto path = dir / "img.pgm";
  const auto bytes = pgm::write_pgm(GrayImage(3, 2, 7));
  fileio::write_file_atomic(path, bytes);
  CHECK(fileio::read_file(path) == bytes);
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().filename() == "img.pgm");
  CHECK_THROWS_AS(fileio::write_file_atomic(dir / "missing" / "x.pgm", bytes), IoError);
  CHECK_THROWS_AS(fileio::read_file(dir / "nope.pgm"), IoError);
  fs::remove_all(dir);
}
