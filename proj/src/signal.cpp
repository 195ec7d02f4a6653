#include "shiftalg/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shiftalg {

const char* signal_kind_name(SignalKind k) noexcept {
  return k == SignalKind::Periodic2 ? "periodic2" : "antiperiodic2";
}

SignalKind signal_kind_from_name(const std::string& name) {
  if (name == "periodic2") return SignalKind::Periodic2;
  if (name == "antiperiodic2") return SignalKind::Antiperiodic2;
  throw Error(ErrorCode::InvalidSignal, "unknown signal kind '" + name + "'");
}

SampledSignal::SampledSignal(std::vector<double> samples, SignalKind kind)
    : samples_(std::move(samples)), kind_(kind) {
  if (samples_.empty() || samples_.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidSignal,
                "signal needs an even, positive number of samples, got " +
                    std::to_string(samples_.size()));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidSignal, "signal samples must be finite");
  }
}

namespace {

void require_same_shape(const SampledSignal& a, const SampledSignal& b) {
  if (a.size() != b.size() || a.kind() != b.kind()) {
    throw Error(ErrorCode::KindMismatch, "signals differ in length or kind");
  }
}

}  // namespace

SampledSignal shift(const SampledSignal& s, std::ptrdiff_t h_steps) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  std::vector<double> out(s.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t j = i + h_steps;
    // floor division: number of times we wrapped past either end
    std::ptrdiff_t wraps = j / n;
    std::ptrdiff_t idx = j % n;
    if (idx < 0) {
      idx += n;
      --wraps;
    }
    double v = s[static_cast<std::size_t>(idx)];
    if (s.kind() == SignalKind::Antiperiodic2 && (wraps % 2 != 0)) v = -v;
    out[static_cast<std::size_t>(i)] = v;
  }
  return SampledSignal(std::move(out), s.kind());
}

SampledSignal apply_operator(const Binarion& a, const SampledSignal& s) {
  const bool ok = (a.sig() == Signature::Split && s.kind() == SignalKind::Periodic2) ||
                  (a.sig() == Signature::Complex && s.kind() == SignalKind::Antiperiodic2);
  if (!ok) {
    throw Error(ErrorCode::KindMismatch,
                std::string("KindMismatch: ") + signature_name(a.sig()) +
                    " operators do not act on " + signal_kind_name(s.kind()) + " signals");
  }
  const SampledSignal es = shift(s, s.unit_steps());
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = a.x() * s[i] + a.y() * es[i];
  return SampledSignal(std::move(out), s.kind());
}

Decomposition decompose(const SampledSignal& s) {
  if (s.kind() != SignalKind::Periodic2) {
    throw Error(ErrorCode::KindMismatch, "KindMismatch: decompose needs a periodic2 signal");
  }
  const SampledSignal es = shift(s, s.unit_steps());
  std::vector<double> p1(s.size());
  std::vector<double> ap1(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    p1[i] = 0.5 * (s[i] + es[i]);
    ap1[i] = 0.5 * (s[i] - es[i]);
  }
  return {SampledSignal(std::move(p1), s.kind()), SampledSignal(std::move(ap1), s.kind())};
}

EigenResidual eigen_action_residual(const Binarion& a, const SampledSignal& s) {
  if (a.sig() != Signature::Split) {
    throw Error(ErrorCode::KindMismatch,
                "KindMismatch: eigen_action_residual needs a split-signature operator");
  }
  const Decomposition d = decompose(s);
  const SampledSignal ap = apply_operator(a, d.p1);
  const SampledSignal am = apply_operator(a, d.ap1);
  return {max_abs_diff(ap, (a.x() + a.y()) * d.p1), max_abs_diff(am, (a.x() - a.y()) * d.ap1)};
}

double max_abs_diff(const SampledSignal& a, const SampledSignal& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const SampledSignal& s) noexcept {
  double m = 0.0;
  for (double v : s.samples()) m = std::max(m, std::abs(v));
  return m;
}

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
  require_same_shape(a, b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return SampledSignal(std::move(out), a.kind());
}

SampledSignal operator*(double c, const SampledSignal& s) {
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = c * s[i];
  return SampledSignal(std::move(out), s.kind());
}

}  // namespace shiftalg
