// Times the OpenMP kernels against their serial references.
//
//   bench_kernels [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "dynsbox/cipher.hpp"
#include "dynsbox/image.hpp"
#include "dynsbox/latin.hpp"
#include "dynsbox/metrics.hpp"
#include "dynsbox/sbox.hpp"

using namespace dynsbox;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double par, double ser) {
  std::printf("%-22s %10.3f ms %10.3f ms %8.2fx\n", name, par, ser, ser / par);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  std::printf("threads: %d, repeats: %d\n", omp_get_max_threads(), repeats);
  std::printf("%-22s %13s %13s %9s\n", "kernel", "openmp", "serial", "speedup");

  const SBoxGenParams params;
  row("bank (1000 boxes)", best_of(repeats, [&] { (void)generate_bank(params); }),
      best_of(repeats, [&] { (void)serial::generate_bank(params); }));

  std::mt19937 rng(1);
  Permutation p{}, q{};
  for (int i = 0; i < 256; ++i) p[i] = q[i] = static_cast<std::uint8_t>(i);
  std::shuffle(p.begin(), p.end(), rng);
  std::shuffle(q.begin(), q.end(), rng);
  row("latin fill", best_of(repeats, [&] { (void)latin_from_permutations(p, q); }),
      best_of(repeats, [&] { (void)serial::latin_from_permutations(p, q); }));

  std::vector<std::uint8_t> px(2048 * 2048);
  for (auto& v : px) v = static_cast<std::uint8_t>(rng());
  const GrayImage big(2048, 2048, px);
  row("anti-transpose 2048^2", best_of(repeats, [&] { (void)anti_transpose(big); }),
      best_of(repeats, [&] { (void)serial::anti_transpose(big); }));
  row("histogram 2048^2", best_of(repeats, [&] { (void)metrics::histogram(big.pixels()); }),
      best_of(repeats, [&] { (void)metrics::serial::histogram(big.pixels()); }));
  row("correlation 2048^2", best_of(repeats, [&] { (void)metrics::adjacent_correlation_detail(big); }),
      best_of(repeats, [&] { (void)metrics::serial::adjacent_correlation_detail(big); }));

  CipherKey key;
  const auto bank = generate_bank(key.sbox_params);
  const GrayImage img(256, 256, 0);
  const double enc = best_of(repeats, [&] { (void)encrypt(img, key, bank); });
  std::printf("encrypt 256x256, %u rounds: %.3f ms (sequential by construction)\n", key.beta, enc);
  return 0;
}
