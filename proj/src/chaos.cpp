#include "dynsbox/chaos.hpp"

#include <cmath>

#include "dynsbox/error.hpp"

namespace dynsbox::chaos {
namespace {

constexpr double kGuardShift = 0.123456789;
constexpr double kGuardFallback = 0.5000000001;

bool inside_unit(double v) noexcept { return v > 0.0 && v < 1.0; }

}  // namespace

double frac(double v) noexcept { return v - std::floor(v); }

double guard(double v) noexcept {
  if (inside_unit(v)) return v;
  const double shifted = frac(v + kGuardShift);
  if (inside_unit(shifted)) return shifted;
  return kGuardFallback;
}

LogisticState::LogisticState(double x, double lambda) : x_(x), lambda_(lambda) {
  if (!inside_unit(x)) throw InputError("logistic seed x0 must lie in (0, 1)");
  if (!(lambda > 3.57 && lambda < 4.0)) throw InputError("logistic lambda must lie in (3.57, 4)");
}

double LogisticState::step() noexcept {
  x_ = guard(lambda_ * x_ * (1.0 - x_));
  return x_;
}

void LogisticState::advance(unsigned steps) noexcept {
  for (unsigned i = 0; i < steps; ++i) step();
}

PwlcmState::PwlcmState(double y, double p) : y_(y), p_(p) {
  if (!inside_unit(y)) throw InputError("PWLCM seed must lie in (0, 1)");
  if (!inside_unit(p)) throw InputError("PWLCM parameter p must lie in (0, 1)");
}

double PwlcmState::step() noexcept {
  const double raw = y_ <= p_ ? y_ / p_ : (1.0 - y_) / (1.0 - p_);
  y_ = guard(raw);
  return y_;
}

void PwlcmState::advance(unsigned steps) noexcept {
  for (unsigned i = 0; i < steps; ++i) step();
}

LogisticState logistic_step(LogisticState s) noexcept {
  s.step();
  return s;
}

PwlcmState pwlcm_step(PwlcmState s) noexcept {
  s.step();
  return s;
}

Digits extract_digits(double x) noexcept {
  // 1e15 < 2^53, so the floored product is an exact integer.
  const auto u = static_cast<std::uint64_t>(std::floor(x * 1e15));
  return {static_cast<std::uint32_t>(u / 10'000'000'000ULL),
          static_cast<std::uint32_t>((u / 100'000ULL) % 100'000ULL),
          static_cast<std::uint32_t>(u % 100'000ULL)};
}

std::uint32_t extract_index(double y, std::uint32_t k) {
  if (k == 0) throw InputError("extract_index: k must be positive");
  const auto v = static_cast<std::uint64_t>(std::floor(y * 1e10));
  return static_cast<std::uint32_t>(v % k) + 1;
}

}  // namespace dynsbox::chaos
