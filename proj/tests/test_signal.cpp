#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "shiftalg/signal.hpp"

using namespace shiftalg;

namespace {

SampledSignal random_signal(oracle::Rng& rng, std::size_t n, SignalKind kind) {
  std::vector<double> s(n);
  for (double& v : s) v = rng.uniform(-1, 1);
  return SampledSignal(std::move(s), kind);
}

}  // namespace

TEST_CASE("signals need an even, positive number of finite samples") {
  CHECK_THROWS_AS(SampledSignal({1, 2, 3}, SignalKind::Periodic2), Error);
  CHECK_THROWS_AS(SampledSignal({}, SignalKind::Periodic2), Error);
  CHECK_THROWS_AS(SampledSignal({1, std::numeric_limits<double>::quiet_NaN()}, SignalKind::Periodic2),
                  Error);
  const SampledSignal ok({1, 2}, SignalKind::Antiperiodic2);
  CHECK(ok.size() == 2);
  CHECK(ok.spacing() == 1.0);
}

TEST_CASE("shift rotates, flipping sign per wrap when antiperiodic") {
  const SampledSignal p({1, 2, 3, 4}, SignalKind::Periodic2);
  CHECK(shift(p, 1).samples() == std::vector<double>{2, 3, 4, 1});
  CHECK(shift(p, -1).samples() == std::vector<double>{4, 1, 2, 3});
  CHECK(shift(p, 4).samples() == p.samples());

  const SampledSignal a({1, 2, 3, 4}, SignalKind::Antiperiodic2);
  CHECK(shift(a, 1).samples() == std::vector<double>{2, 3, 4, -1});
  CHECK(shift(a, -1).samples() == std::vector<double>{-4, 1, 2, 3});
  CHECK(shift(a, 4).samples() == std::vector<double>{-1, -2, -3, -4});
  CHECK(shift(a, 8).samples() == a.samples());
  CHECK(shift(a, -6).samples() == shift(a, 2).samples());
}

TEST_CASE("E squares to +I on periodic2 and -I on antiperiodic2") {
  oracle::Rng rng(109);
  for (std::size_t n : {2u, 8u, 64u, 100u}) {
    const SampledSignal p = random_signal(rng, n, SignalKind::Periodic2);
    const Binarion e = Binarion::unit_shift(Signature::Split);
    CHECK(apply_operator(e, apply_operator(e, p)).samples() == p.samples());

    const SampledSignal a = random_signal(rng, n, SignalKind::Antiperiodic2);
    const Binarion ec = Binarion::unit_shift(Signature::Complex);
    CHECK(apply_operator(ec, apply_operator(ec, a)).samples() == (-1.0 * a).samples());
  }
}

TEST_CASE("operator action is a representation of the algebra") {
  oracle::Rng rng(113);
  for (int i = 0; i < 100; ++i) {
    const Binarion a = rng.binarion(-3, 3, Signature::Split);
    const Binarion b = rng.binarion(-3, 3, Signature::Split);
    const SampledSignal s = random_signal(rng, 64, SignalKind::Periodic2);
    CHECK(max_abs_diff(apply_operator(a * b, s), apply_operator(a, apply_operator(b, s))) <= 1e-12);

    const Binarion c = rng.binarion(-3, 3, Signature::Complex);
    const Binarion d = rng.binarion(-3, 3, Signature::Complex);
    const SampledSignal t = random_signal(rng, 64, SignalKind::Antiperiodic2);
    CHECK(max_abs_diff(apply_operator(c * d, t), apply_operator(c, apply_operator(d, t))) <= 1e-12);
  }
}

TEST_CASE("operator and signal kinds must match") {
  const SampledSignal p({1, 2}, SignalKind::Periodic2);
  const SampledSignal a({1, 2}, SignalKind::Antiperiodic2);
  for (const auto& [op, s] : {std::pair{Binarion(1, 1, Signature::Complex), p},
                              std::pair{Binarion(1, 1, Signature::Split), a},
                              std::pair{Binarion(1, 1, Signature::Parabolic), p}}) {
    try {
      (void)apply_operator(op, s);
      FAIL("expected KindMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::KindMismatch);
    }
  }
  CHECK_THROWS_AS(decompose(a), Error);
}

TEST_CASE("decomposition into 1-periodic and 1-antiperiodic parts") {
  const double pi = std::numbers::pi;
  const auto s = SampledSignal::sample(
      [&](double t) { return std::sin(pi * t) + std::cos(2 * pi * t); }, 64, SignalKind::Periodic2);
  const Decomposition d = decompose(s);
  const auto p1 = SampledSignal::sample([&](double t) { return std::cos(2 * pi * t); }, 64,
                                        SignalKind::Periodic2);
  const auto ap1 = SampledSignal::sample([&](double t) { return std::sin(pi * t); }, 64,
                                         SignalKind::Periodic2);
  CHECK(max_abs_diff(d.p1, p1) <= 1e-12);
  CHECK(max_abs_diff(d.ap1, ap1) <= 1e-12);

  oracle::Rng rng(127);
  for (int i = 0; i < 100; ++i) {
    const SampledSignal r = random_signal(rng, 64, SignalKind::Periodic2);
    const Decomposition dr = decompose(r);
    CHECK(max_abs_diff(dr.p1 + dr.ap1, r) <= 1e-12);
    CHECK(max_abs_diff(shift(dr.p1, 32), dr.p1) <= 1e-12);
    CHECK(max_abs_diff(shift(dr.ap1, 32), -1.0 * dr.ap1) <= 1e-12);
  }
}

TEST_CASE("eigen-action of xI + yE on the two parts") {
  oracle::Rng rng(131);
  for (int i = 0; i < 100; ++i) {
    const Binarion a = rng.binarion(-5, 5, Signature::Split);
    const SampledSignal s = random_signal(rng, 64, SignalKind::Periodic2);
    const EigenResidual r = eigen_action_residual(a, s);
    CHECK(r.r_plus <= 1e-12);
    CHECK(r.r_minus <= 1e-12);
  }
}
