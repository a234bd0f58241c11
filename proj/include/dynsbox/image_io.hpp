#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "dynsbox/error.hpp"
#include "dynsbox/image.hpp"

namespace dynsbox::pgm {

enum class PgmErrorKind { kBadMagic, kBadHeader, kUnsupportedDepth, kTruncated, kTrailingData };

class PgmError : public ParseError {
 public:
  PgmError(PgmErrorKind kind, const std::string& what) : ParseError(what), kind_(kind) {}
  PgmErrorKind kind() const noexcept { return kind_; }

 private:
  PgmErrorKind kind_;
};

/// Binary P5 with maxval 255. Comments are allowed between header tokens.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// "P5\n<w> <h>\n255\n" followed by the raw payload.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage from_raw(std::span<const std::uint8_t> bytes, std::size_t width, std::size_t height);

}  // namespace dynsbox::pgm

namespace dynsbox::fileio {

/// Throws IoError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
/// Throws IoError; a failed write leaves no file behind.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace dynsbox::fileio
