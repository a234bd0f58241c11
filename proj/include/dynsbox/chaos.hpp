#pragma once

// Logistic map and piecewise linear chaotic map (PWLCM).
//
// All arithmetic is IEEE-754 binary64 in the literal operation order of the
// map equations. The build disables floating-point contraction so the same
// inputs give bit-identical trajectories on every platform.

#include <cstdint>

namespace dynsbox::chaos {

/// Keeps a state strictly inside (0, 1). Values outside the open interval
/// are replaced by frac(v + 0.123456789), then by 0.5000000001.
double guard(double v) noexcept;

/// v - floor(v).
double frac(double v) noexcept;

class LogisticState {
 public:
  /// Throws InputError unless x is in (0,1) and lambda in (3.57, 4).
  LogisticState(double x, double lambda);

  double x() const noexcept { return x_; }
  double lambda() const noexcept { return lambda_; }

  /// x <- lambda * x * (1 - x), then guard.
  double step() noexcept;
  void advance(unsigned steps) noexcept;

 private:
  double x_;
  double lambda_;
};

class PwlcmState {
 public:
  /// Throws InputError unless y and p are in (0,1).
  PwlcmState(double y, double p);

  double y() const noexcept { return y_; }
  double p() const noexcept { return p_; }

  /// y/p on (0, p], (1-y)/(1-p) on (p, 1), then guard.
  double step() noexcept;
  void advance(unsigned steps) noexcept;

 private:
  double y_;
  double p_;
};

/// Pure single steps, for callers that keep the state themselves.
LogisticState logistic_step(LogisticState s) noexcept;
PwlcmState pwlcm_step(PwlcmState s) noexcept;

struct Digits {
  std::uint32_t a1;  // d1..d5
  std::uint32_t a2;  // d6..d10
  std::uint32_t a3;  // d11..d15

  friend bool operator==(const Digits&, const Digits&) = default;
};

/// Splits u = floor(x * 1e15) into three five-digit groups.
Digits extract_digits(double x) noexcept;

/// (floor(y * 1e10) mod k) + 1, in [1, k]. Throws InputError for k == 0.
std::uint32_t extract_index(double y, std::uint32_t k);

}  // namespace dynsbox::chaos
