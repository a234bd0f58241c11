#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dynsbox/cipher.hpp"
#include "dynsbox/error.hpp"
#include "dynsbox/gf_apa.hpp"
#include "dynsbox/image_io.hpp"
#include "dynsbox/key_file.hpp"
#include "dynsbox/metrics.hpp"
#include "dynsbox/sbox.hpp"

namespace dynsbox::cli {
namespace {

namespace fs = std::filesystem;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

GrayImage load_pgm(const fs::path& path) { return pgm::read_pgm(fileio::read_file(path)); }

SBoxBank bank_for(const CipherKey& key, const std::optional<fs::path>& bank_path) {
  if (bank_path) return decode_bank(fileio::read_file(*bank_path));
  return generate_bank(key.sbox_params);
}

int cmd_gen_sboxes(const fs::path& key_path, const fs::path& out_path, std::ostream& out) {
  const CipherKey key = load_key_file(key_path);
  const SBoxBank bank = generate_bank(key.sbox_params);
  fileio::write_file_atomic(out_path, encode_bank(bank));
  out << "bijective: " << bank.count_bijective() << "/" << bank.size() << '\n';
  return kOk;
}

int cmd_cipher(bool encrypting, const fs::path& key_path, const std::optional<fs::path>& bank_path,
               const fs::path& in_path, const fs::path& out_path) {
  const CipherKey key = load_key_file(key_path);
  const GrayImage input = load_pgm(in_path);
  const SBoxBank bank = bank_for(key, bank_path);
  const GrayImage result = encrypting ? encrypt(input, key, bank) : decrypt(input, key, bank);
  fileio::write_file_atomic(out_path, pgm::write_pgm(result));
  return kOk;
}

void print_kv(const metrics::MetricsReport& r, std::ostream& out) {
  out << "width=" << r.width << '\n';
  out << "height=" << r.height << '\n';
  out << "pixels=" << r.width * r.height << '\n';
  out << "entropy=" << fixed(r.entropy_bits, 4) << '\n';
  if (r.width >= 2) {
    out << "corr_adjacent=" << fixed(r.corr_adjacent.rho, 6) << '\n';
    out << "corr_degenerate=" << (r.corr_adjacent.degenerate ? 1 : 0) << '\n';
  } else {
    out << "corr_adjacent=n/a\n";
  }
  out << "chi_square=" << fixed(r.chi_square, 4) << '\n';
  out << "histogram=";
  for (std::size_t v = 0; v < 256; ++v) out << (v ? "," : "") << r.histogram[v];
  out << '\n';
}

void print_text(const metrics::MetricsReport& r, std::ostream& out) {
  out << "image:              " << r.width << " x " << r.height << '\n';
  out << "entropy (bits):     " << fixed(r.entropy_bits, 4) << '\n';
  if (r.width >= 2) {
    out << "adjacent corr:      " << fixed(r.corr_adjacent.rho, 6)
        << (r.corr_adjacent.degenerate ? "  (zero variance)" : "") << '\n';
  } else {
    out << "adjacent corr:      n/a (single column)\n";
  }
  out << "chi-square (df=255): " << fixed(r.chi_square, 4) << '\n';
}

int cmd_analyze(const fs::path& first, const std::optional<fs::path>& second, bool text, std::ostream& out) {
  const GrayImage a = load_pgm(first);
  std::optional<GrayImage> b;
  if (second) {
    b = load_pgm(*second);
    if (a.width() != b->width() || a.height() != b->height()) {
      throw InputError("analyze: images differ in size (" + std::to_string(a.width()) + "x" +
                       std::to_string(a.height()) + " vs " + std::to_string(b->width()) + "x" +
                       std::to_string(b->height()) + ")");
    }
  }
  const auto report = metrics::analyze(a);
  if (text) {
    print_text(report, out);
  } else {
    print_kv(report, out);
  }
  if (b) {
    const double n = metrics::npcr(a, *b);
    const double cc = a.size() >= 2 ? metrics::cross_correlation(a, *b) : 0.0;
    if (text) {
      out << "NPCR (%):           " << fixed(n, 4) << '\n';
      out << "cross corr:         " << fixed(cc, 6) << '\n';
    } else {
      out << "npcr=" << fixed(n, 4) << '\n';
      out << "cross_correlation=" << fixed(cc, 6) << '\n';
    }
  }
  return kOk;
}

int cmd_apa_table(std::ostream& out) {
  const auto report = apa::reconcile_convention();
  out << report.table.to_hex_grid();
  out << '\n' << report.to_text();
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaotic dynamic S-box image cipher"};
  app.require_subcommand(1);

  fs::path key_path;
  fs::path out_path;
  fs::path in_path;
  std::string bank_arg;
  std::string second_arg;
  bool text = false;

  auto* gen = app.add_subcommand("gen-sboxes", "Generate the S-box bank file from a key file");
  gen->add_option("--key", key_path, "Key file")->required();
  gen->add_option("--out", out_path, "Output bank file")->required();

  auto* enc = app.add_subcommand("encrypt", "Encrypt a binary PGM image");
  auto* dec = app.add_subcommand("decrypt", "Decrypt a binary PGM image");
  for (auto* sub : {enc, dec}) {
    sub->add_option("input", in_path, "Input PGM")->required();
    sub->add_option("--key", key_path, "Key file")->required();
    sub->add_option("--out", out_path, "Output PGM")->required();
    sub->add_option("--bank", bank_arg, "Pre-built S-box bank instead of regenerating from the key");
  }

  auto* ana = app.add_subcommand("analyze", "Entropy, correlation, histogram, chi-square, NPCR");
  ana->add_option("input", in_path, "PGM image")->required();
  ana->add_option("second", second_arg, "Second PGM for NPCR and cross correlation");
  ana->add_flag("--text", text, "Human-readable report instead of key=value lines");

  auto* apa_cmd = app.add_subcommand("apa-table", "Print the APA table and the reconciliation report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto optional_path = [](const std::string& s) -> std::optional<fs::path> {
    if (s.empty()) return std::nullopt;
    return fs::path(s);
  };

  try {
    if (gen->parsed()) return cmd_gen_sboxes(key_path, out_path, out);
    if (enc->parsed()) return cmd_cipher(true, key_path, optional_path(bank_arg), in_path, out_path);
    if (dec->parsed()) return cmd_cipher(false, key_path, optional_path(bank_arg), in_path, out_path);
    if (ana->parsed()) return cmd_analyze(in_path, optional_path(second_arg), text, out);
    if (apa_cmd->parsed()) return cmd_apa_table(out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace dynsbox::cli
