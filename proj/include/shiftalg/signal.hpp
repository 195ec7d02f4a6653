#pragma once

// I and E realized as operators on sampled functions over [0, 2).
// With N even samples at spacing 2/N, the unit shift E is an exact rotation
// by N/2 indices; on 2-antiperiodic signals wrapped samples change sign.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shiftalg/algebra.hpp"

namespace shiftalg {

enum class SignalKind { Periodic2, Antiperiodic2 };

const char* signal_kind_name(SignalKind k) noexcept;
SignalKind signal_kind_from_name(const std::string& name);

class SampledSignal {
 public:
  /// Throws Error(InvalidSignal) unless samples.size() is even and positive
  /// and every sample is finite.
  SampledSignal(std::vector<double> samples, SignalKind kind);

  /// Samples f(2k/N), k = 0..N-1.
  template <class F>
  static SampledSignal sample(F&& f, std::size_t n, SignalKind kind) {
    std::vector<double> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = f(2.0 * static_cast<double>(k) / static_cast<double>(n));
    return SampledSignal(std::move(s), kind);
  }

  std::size_t size() const noexcept { return samples_.size(); }
  SignalKind kind() const noexcept { return kind_; }
  const std::vector<double>& samples() const noexcept { return samples_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  /// Grid spacing 2/N.
  double spacing() const noexcept { return 2.0 / static_cast<double>(samples_.size()); }
  /// Index offset of the unit shift E.
  std::ptrdiff_t unit_steps() const noexcept { return static_cast<std::ptrdiff_t>(samples_.size() / 2); }

 private:
  std::vector<double> samples_;
  SignalKind kind_;
};

/// s(t + h * 2/N). Periodic: rotation. Antiperiodic: rotation, negating each
/// sample once per wrap past t = 2. h may be negative.
SampledSignal shift(const SampledSignal& s, std::ptrdiff_t h_steps);

/// (xI + yE) s = x s + y shift(s, N/2). Split signature pairs with
/// Periodic2 and complex with Antiperiodic2; anything else is KindMismatch.
SampledSignal apply_operator(const Binarion& a, const SampledSignal& s);

struct Decomposition {
  SampledSignal p1;   // 1-periodic part, eigenvalue x + y of xI + yE
  SampledSignal ap1;  // 1-antiperiodic part, eigenvalue x - y
};

/// p1 = (s + Es)/2, ap1 = (s - Es)/2 for Periodic2 input.
Decomposition decompose(const SampledSignal& s);

struct EigenResidual {
  double r_plus = 0.0;   // |(aI+bE)p1 - (a+b)p1|_inf
  double r_minus = 0.0;  // |(aI+bE)ap1 - (a-b)ap1|_inf
};

EigenResidual eigen_action_residual(const Binarion& a, const SampledSignal& s);

double max_abs_diff(const SampledSignal& a, const SampledSignal& b);
double max_abs(const SampledSignal& s) noexcept;
SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator*(double c, const SampledSignal& s);

}  // namespace shiftalg
