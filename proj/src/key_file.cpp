#include "dynsbox/key_file.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "dynsbox/error.hpp"
#include "dynsbox/image_io.hpp"

namespace dynsbox {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view name, std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("key file: field '" + std::string(name) + "' is not a number");
  }
  return v;
}

unsigned long long parse_unsigned(std::string_view name, std::string_view text, unsigned long long max) {
  unsigned long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v > max) {
    throw ParseError("key file: field '" + std::string(name) + "' must be an integer in [0, " +
                     std::to_string(max) + "]");
  }
  return v;
}

const std::set<std::string, std::less<>> kKnownFields = {"x0", "lambda", "beta", "c0", "K",
                                                         "y0_base", "p", "n0", "zeta"};
const char* const kRequiredFields[] = {"x0", "lambda", "beta", "c0", "K"};

}  // namespace

CipherKey parse_key_file(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("key file line " + std::to_string(line_no) + ": expected name=value");
    }
    const std::string name(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!kKnownFields.contains(name)) throw ParseError("key file: unknown field '" + name + "'");
    if (!fields.emplace(name, value).second) throw ParseError("key file: duplicate field '" + name + "'");
  }
  for (const char* required : kRequiredFields) {
    if (!fields.contains(required)) throw ParseError(std::string("key file: missing field '") + required + "'");
  }

  CipherKey key;
  key.x0 = parse_double("x0", fields["x0"]);
  key.lambda = parse_double("lambda", fields["lambda"]);
  key.beta = static_cast<unsigned>(parse_unsigned("beta", fields["beta"], 1'000'000));
  key.c0 = static_cast<std::uint8_t>(parse_unsigned("c0", fields["c0"], 255));
  key.latin_key = LatinKey::from_hex(fields["K"]);
  if (auto it = fields.find("y0_base"); it != fields.end()) key.sbox_params.y0_base = parse_double("y0_base", it->second);
  if (auto it = fields.find("p"); it != fields.end()) key.sbox_params.p = parse_double("p", it->second);
  if (auto it = fields.find("n0"); it != fields.end()) {
    key.sbox_params.n0 = static_cast<unsigned>(parse_unsigned("n0", it->second, 100'000'000));
  }
  if (auto it = fields.find("zeta"); it != fields.end()) {
    key.sbox_params.zeta = static_cast<unsigned>(parse_unsigned("zeta", it->second, 1'000'000));
  }

  try {
    key.validate();
  } catch (const InputError& e) {
    throw ParseError(std::string("key file: ") + e.what());
  }
  return key;
}

CipherKey load_key_file(const std::filesystem::path& path) {
  const auto bytes = fileio::read_file(path);
  return parse_key_file(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string format_key_file(const CipherKey& key) {
  char buf[64];
  auto num = [&buf](double v) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  std::string out;
  out += "x0 = " + num(key.x0) + "\n";
  out += "lambda = " + num(key.lambda) + "\n";
  out += "beta = " + std::to_string(key.beta) + "\n";
  out += "c0 = " + std::to_string(key.c0) + "\n";
  out += "K = " + key.latin_key.to_hex() + "\n";
  out += "y0_base = " + num(key.sbox_params.y0_base) + "\n";
  out += "p = " + num(key.sbox_params.p) + "\n";
  out += "n0 = " + std::to_string(key.sbox_params.n0) + "\n";
  out += "zeta = " + std::to_string(key.sbox_params.zeta) + "\n";
  return out;
}

}  // namespace dynsbox
