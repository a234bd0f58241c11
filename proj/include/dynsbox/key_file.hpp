#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dynsbox/cipher.hpp"

namespace dynsbox {

/// Parses "name = value" lines. Blank lines and lines starting with '#' are
/// ignored. x0, lambda, beta, c0 and K are required; y0_base, p, n0 and zeta
/// fall back to SBoxGenParams defaults. Throws ParseError naming the field.
CipherKey parse_key_file(std::string_view text);
CipherKey load_key_file(const std::filesystem::path& path);

/// Inverse of parse_key_file; doubles are written with round-trip precision.
std::string format_key_file(const CipherKey& key);

}  // namespace dynsbox
