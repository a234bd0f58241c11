#include "dynsbox/image_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <system_error>

namespace dynsbox::pgm {
namespace {

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads an unsigned decimal.
  std::uint64_t next_number(const char* field) {
    skip_separators();
    if (pos_ >= bytes_.size()) {
      throw PgmError(PgmErrorKind::kTruncated, std::string("PGM header ends before ") + field);
    }
    if (bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      throw PgmError(PgmErrorKind::kBadHeader, std::string("PGM header: expected ") + field);
    }
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw PgmError(PgmErrorKind::kBadHeader, std::string("PGM header: ") + field + " too large");
      }
      ++pos_;
    }
    return v;
  }

  // The single whitespace byte that ends the header.
  void end_of_header() {
    if (pos_ >= bytes_.size()) throw PgmError(PgmErrorKind::kTruncated, "PGM header is incomplete");
    if (!is_space(bytes_[pos_])) throw PgmError(PgmErrorKind::kBadHeader, "PGM maxval not followed by whitespace");
    ++pos_;
  }

  std::size_t position() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }

 private:
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw PgmError(PgmErrorKind::kBadMagic, "not a binary PGM (expected magic P5)");
  }
  if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
    throw PgmError(PgmErrorKind::kBadMagic, "not a binary PGM (expected magic P5)");
  }
  HeaderReader reader(bytes);
  reader.seek(2);
  const auto width = reader.next_number("width");
  const auto height = reader.next_number("height");
  const auto maxval = reader.next_number("maxval");
  if (width == 0 || height == 0) throw PgmError(PgmErrorKind::kBadHeader, "PGM dimensions must be positive");
  if (maxval != 255) {
    throw PgmError(PgmErrorKind::kUnsupportedDepth,
                   "unsupported PGM maxval " + std::to_string(maxval) + " (only 255)");
  }
  if (width > std::numeric_limits<std::size_t>::max() / height) {
    throw PgmError(PgmErrorKind::kBadHeader, "PGM dimensions overflow");
  }
  reader.end_of_header();

  const std::size_t expected = width * height;
  const std::size_t available = bytes.size() - reader.position();
  if (available < expected) {
    throw PgmError(PgmErrorKind::kTruncated, "PGM payload truncated: expected " + std::to_string(expected) +
                                                 " bytes, found " + std::to_string(available));
  }
  if (available > expected) {
    throw PgmError(PgmErrorKind::kTrailingData,
                   "PGM has " + std::to_string(available - expected) + " bytes after the payload");
  }
  const auto payload = bytes.subspan(reader.position());
  return GrayImage(width, height, std::vector<std::uint8_t>(payload.begin(), payload.end()));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

GrayImage from_raw(std::span<const std::uint8_t> bytes, std::size_t width, std::size_t height) {
  if (bytes.empty()) throw InputError("raw image is empty");
  if (bytes.size() != width * height) {
    throw InputError("raw image has " + std::to_string(bytes.size()) + " bytes, expected " +
                     std::to_string(width * height));
  }
  return GrayImage(width, height, std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

}  // namespace dynsbox::pgm

namespace dynsbox::fileio {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return data;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("error writing " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace dynsbox::fileio
