#include "cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "dynsbox/image_io.hpp"

using namespace dynsbox;
namespace fs = std::filesystem;

namespace {

const char* const kKey =
    "x0 = 0.23456\n"
    "lambda = 3.99\n"
    "beta = 4\n"
    "c0 = 77\n"
    "K = 12A34F56E78D90C31B72AF4835DC0981237654CD185A3FEB01CAE7259018FD14\n";

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("dynsbox_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name, std::ios::binary) << text;
    return dir / name;
  }
  fs::path write_image(const std::string& name, const GrayImage& img) const {
    fileio::write_file_atomic(dir / name, pgm::write_pgm(img));
    return dir / name;
  }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dynsbox");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

GrayImage random_image(std::size_t w, std::size_t h, unsigned seed) {
  std::vector<std::uint8_t> px(w * h);
  for (auto& p : px) {
    seed = seed * 1103515245U + 12345U;
    p = static_cast<std::uint8_t>(seed >> 16);
  }
  return GrayImage(w, h, px);
}

std::string kv(const std::string& out, const std::string& name) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(name + "=", 0) == 0) return line.substr(name.size() + 1);
  }
  return {};
}

}  // namespace

TEST_CASE("gen-sboxes") {
  Sandbox sb;
  const auto key = sb.write("k.key", kKey);
  const auto r = run({"gen-sboxes", "--key", key.string(), "--out", (sb.dir / "bank.sbx").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("bijective: 1000/1000") != std::string::npos);
  CHECK(fs::file_size(sb.dir / "bank.sbx") == 4 + 2 + 4 + 256000);

  const auto no_k = sb.write("bad.key", "x0 = 0.23456\nlambda = 3.99\nbeta = 4\nc0 = 77\n");
  const auto bad = run({"gen-sboxes", "--key", no_k.string(), "--out", (sb.dir / "b2.sbx").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'K'") != std::string::npos);

  const auto unwritable = run({"gen-sboxes", "--key", key.string(), "--out", (sb.dir / "no" / "dir" / "b.sbx").string()});
  CHECK(unwritable.code == 3);
}

TEST_CASE("encrypt / decrypt round trip, with and without a bank file") {
  Sandbox sb;
  const auto key = sb.write("k.key", kKey);
  const auto plain = sb.write_image("plain.pgm", random_image(256, 256, 1));
  const auto enc = (sb.dir / "enc.pgm").string();
  const auto dec = (sb.dir / "dec.pgm").string();
  REQUIRE(run({"encrypt", plain.string(), "--key", key.string(), "--out", enc}).code == 0);
  REQUIRE(run({"decrypt", enc, "--key", key.string(), "--out", dec}).code == 0);
  CHECK(fileio::read_file(dec) == fileio::read_file(plain));
  CHECK(fileio::read_file(enc) != fileio::read_file(plain));

  const auto bank = (sb.dir / "bank.sbx").string();
  REQUIRE(run({"gen-sboxes", "--key", key.string(), "--out", bank}).code == 0);
  const auto enc2 = (sb.dir / "enc2.pgm").string();
  REQUIRE(run({"encrypt", plain.string(), "--key", key.string(), "--bank", bank, "--out", enc2}).code == 0);
  CHECK(fileio::read_file(enc2) == fileio::read_file(enc));
}

TEST_CASE("single round on a non-square image swaps dimensions") {
  Sandbox sb;
  std::string one_round = kKey;
  one_round.replace(one_round.find("beta = 4"), 8, "beta = 1");
  const auto key1 = sb.write("k1.key", one_round);
  const auto plain = sb.write_image("p.pgm", random_image(40, 10, 2));
  const auto enc = (sb.dir / "e.pgm").string();
  REQUIRE(run({"encrypt", plain.string(), "--key", key1.string(), "--out", enc}).code == 0);
  const auto img = pgm::read_pgm(fileio::read_file(enc));
  CHECK(img.width() == 10);
  CHECK(img.height() == 40);
}

TEST_CASE("corrupt input leaves no output") {
  Sandbox sb;
  const auto key = sb.write("k.key", kKey);
  const auto corrupt = sb.write("c.pgm", "P5\n4 4\n255\nabc");
  const auto out = sb.dir / "o.pgm";
  CHECK(run({"encrypt", corrupt.string(), "--key", key.string(), "--out", out.string()}).code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run({"encrypt", (sb.dir / "missing.pgm").string(), "--key", key.string(), "--out", out.string()}).code == 3);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("analyze") {
  Sandbox sb;
  const auto black = sb.write_image("black.pgm", GrayImage(256, 256, 0));
  auto r = run({"analyze", black.string()});
  CHECK(r.code == 0);
  CHECK(kv(r.out, "entropy") == "0.0000");
  CHECK(kv(r.out, "corr_adjacent") == "1.000000");
  CHECK(kv(r.out, "corr_degenerate") == "1");

  r = run({"analyze", black.string(), black.string()});
  CHECK(kv(r.out, "npcr") == "0.0000");

  GrayImage one(256, 256, 0);
  one.at(3, 3) = 1;
  const auto other = sb.write_image("one.pgm", one);
  r = run({"analyze", black.string(), other.string()});
  CHECK(kv(r.out, "npcr") == "0.0015");

  const auto small = sb.write_image("small.pgm", GrayImage(8, 8, 0));
  CHECK(run({"analyze", black.string(), small.string()}).code == 2);

  r = run({"analyze", "--text", black.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("entropy (bits):     0.0000") != std::string::npos);
}

TEST_CASE("apa-table") {
  const auto r = run({"apa-table"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("FB ", 0) == 0);
  CHECK(r.out.find("selected: x0=LSB") != std::string::npos);
  CHECK(r.out.find("printed table duplicates: 2 value(s)") != std::string::npos);
}

TEST_CASE("usage errors map to exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"encrypt", "x.pgm"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("independent processes produce identical ciphertext files") {
  Sandbox sb;
  const auto key = sb.write("k.key", kKey);
  const auto plain = sb.write_image("p.pgm", random_image(64, 48, 3));
  const std::string tool = DYNSBOX_TOOL_PATH;
  for (const char* name : {"a.pgm", "b.pgm"}) {
    const std::string cmd = "\"" + tool + "\" encrypt \"" + plain.string() + "\" --key \"" + key.string() +
                            "\" --out \"" + (sb.dir / name).string() + "\"";
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  CHECK(fileio::read_file(sb.dir / "a.pgm") == fileio::read_file(sb.dir / "b.pgm"));
}
