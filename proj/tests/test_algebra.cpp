#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "shiftalg/algebra.hpp"

using namespace shiftalg;

namespace {

constexpr Signature kAll[] = {Signature::Complex, Signature::Parabolic, Signature::Split};

bool spectrum_is(const Spectrum& s, std::complex<double> a, std::complex<double> b, double tol) {
  const bool same = std::abs(s.lambda1 - a) <= tol && std::abs(s.lambda2 - b) <= tol;
  const bool swapped = std::abs(s.lambda1 - b) <= tol && std::abs(s.lambda2 - a) <= tol;
  return same || swapped;
}

}  // namespace

TEST_CASE("unit shift squares to eps times the identity") {
  for (Signature s : kAll) {
    const Binarion e = Binarion::unit_shift(s);
    CHECK(e * e == Binarion(eps_of(s), 0.0, s));
  }
}

TEST_CASE("signature_from_int rejects values outside {-1, 0, 1}") {
  CHECK(signature_from_int(-1) == Signature::Complex);
  CHECK(signature_from_int(0) == Signature::Parabolic);
  CHECK(signature_from_int(1) == Signature::Split);
  CHECK_THROWS_AS(signature_from_int(2), Error);
}

TEST_CASE("non-finite components are rejected") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Binarion(inf, 0.0), Error);
  try {
    Binarion(1.0, nan);
    FAIL("expected InvalidValue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidValue);
  }
}

TEST_CASE("mixed signatures do not combine") {
  const Binarion a(1.0, 2.0, Signature::Split);
  const Binarion b(1.0, 2.0, Signature::Complex);
  try {
    (void)mul(a, b);
    FAIL("expected SignatureMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SignatureMismatch);
  }
  CHECK_THROWS_AS(add(a, b), Error);
}

TEST_CASE("products match the regular matrix representation") {
  oracle::Rng rng(7);
  for (Signature s : kAll) {
    for (int i = 0; i < 500; ++i) {
      const Binarion a = rng.binarion(-10, 10, s);
      const Binarion b = rng.binarion(-10, 10, s);
      const auto want = oracle::product(a, b);
      const Binarion got = a * b;
      CHECK(got.x() == doctest::Approx(want[0]).epsilon(1e-14));
      CHECK(got.y() == doctest::Approx(want[1]).epsilon(1e-14));
    }
  }
}

TEST_CASE("known products") {
  // (5I + 3E)^2 in the split algebra
  CHECK(Binarion(5, 3) * Binarion(5, 3) == Binarion(34, 30));
  // complex product (1 + 2i)(3 + 4i) = -5 + 10i
  CHECK(Binarion(1, 2, Signature::Complex) * Binarion(3, 4, Signature::Complex) ==
        Binarion(-5, 10, Signature::Complex));
  // dual numbers: (2 + 3e)(4 + 5e) = 8 + 22e
  CHECK(Binarion(2, 3, Signature::Parabolic) * Binarion(4, 5, Signature::Parabolic) ==
        Binarion(8, 22, Signature::Parabolic));
  // (E - I)(E + I) = E^2 - I = 0 when E^2 = I
  CHECK((Binarion(-1, 1) * Binarion(1, 1)).is_zero());
}

TEST_CASE("ring laws hold on random elements") {
  oracle::Rng rng(11);
  for (Signature s : kAll) {
    for (int i = 0; i < 300; ++i) {
      const Binarion a = rng.binarion(-5, 5, s);
      const Binarion b = rng.binarion(-5, 5, s);
      const Binarion c = rng.binarion(-5, 5, s);
      CHECK(oracle::rel_err(a * b, b * a) <= 1e-14);
      CHECK(oracle::rel_err((a * b) * c, a * (b * c)) <= 1e-12);
      CHECK(oracle::rel_err(a * (b + c), a * b + a * c) <= 1e-12);
      CHECK(a + Binarion::zero(s) == a);
      CHECK(a * Binarion::identity(s) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("conjugation is a multiplicative homomorphism with a conj(a) = det(a) I") {
  oracle::Rng rng(13);
  for (Signature s : kAll) {
    for (int i = 0; i < 300; ++i) {
      const Binarion a = rng.binarion(-5, 5, s);
      const Binarion b = rng.binarion(-5, 5, s);
      CHECK(oracle::rel_err(conj(a * b), conj(a) * conj(b)) <= 1e-13);
      const Binarion n = a * conj(a);
      CHECK(n.x() == doctest::Approx(det(a)).epsilon(1e-13));
      CHECK(std::abs(n.y()) <= 1e-12 * std::max(1.0, norm(a) * norm(a)));
    }
  }
}

TEST_CASE("det and trace") {
  CHECK(det(Binarion(5, 3)) == 16.0);
  CHECK(det(Binarion(5, 3, Signature::Complex)) == 34.0);
  CHECK(det(Binarion(5, 3, Signature::Parabolic)) == 25.0);
  CHECK(trace(Binarion(5, 3)) == 10.0);
  oracle::Rng rng(17);
  for (Signature s : kAll) {
    for (int i = 0; i < 200; ++i) {
      const Binarion a = rng.binarion(-5, 5, s);
      const Binarion b = rng.binarion(-5, 5, s);
      CHECK(det(a * b) == doctest::Approx(det(a) * det(b)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("inverse") {
  oracle::Rng rng(19);
  for (Signature s : kAll) {
    for (int i = 0; i < 300; ++i) {
      const Binarion a = rng.binarion(-5, 5, s);
      if (std::abs(det(a)) < 1e-3) continue;
      const Binarion id = a * inv(a);
      CHECK(oracle::rel_err(id, Binarion::identity(s)) <= 1e-12 * std::max(1.0, norm(a) * norm(inv(a))));
      CHECK(oracle::rel_err((a * a) / a, a) <= 1e-11);
    }
  }
  CHECK(inv(Binarion(5, 3)) == Binarion(5.0 / 16.0, -3.0 / 16.0));
}

TEST_CASE("null-cone elements are singular") {
  for (const Binarion a : {Binarion(1, 1), Binarion(2, -2), Binarion(0, 0),
                           Binarion(0, 3, Signature::Parabolic)}) {
    try {
      (void)inv(a);
      FAIL("expected Singular");
    } catch (const SingularError& e) {
      CHECK(e.code() == ErrorCode::Singular);
      CHECK(e.det() == 0.0);
    }
  }
  CHECK_THROWS_AS(div(Binarion(1, 0), Binarion(3, 3)), SingularError);
}

TEST_CASE("spectrum per signature") {
  CHECK(spectrum_is(spectrum(Binarion(5, 3)), 8.0, 2.0, 0.0));
  CHECK(spectrum_is(spectrum(Binarion(1, 2, Signature::Complex)), {1.0, 2.0}, {1.0, -2.0}, 0.0));
  CHECK(spectrum_is(spectrum(Binarion(4, 7, Signature::Parabolic)), 4.0, 4.0, 0.0));

  // eigenvalues are roots of the characteristic polynomial t^2 - tr t + det
  oracle::Rng rng(23);
  for (Signature s : kAll) {
    for (int i = 0; i < 200; ++i) {
      const Binarion a = rng.binarion(-5, 5, s);
      const Spectrum sp = spectrum(a);
      for (const auto l : {sp.lambda1, sp.lambda2}) {
        const auto p = l * l - trace(a) * l + det(a);
        CHECK(std::abs(p) <= 1e-12 * std::max(1.0, norm(a) * norm(a)));
      }
      CHECK(std::abs(sp.lambda1 + sp.lambda2 - trace(a)) <= 1e-12 * std::max(1.0, norm(a)));
    }
  }
}

TEST_CASE("norms") {
  const Binarion a(3, -4);
  CHECK(norm(a, NormKind::L1) == 7.0);
  CHECK(norm(a, NormKind::L2) == 5.0);
  CHECK(norm(a, NormKind::Inf) == 4.0);
  CHECK(norm(a) == 5.0);
}

TEST_CASE("integer powers agree with repeated multiplication") {
  oracle::Rng rng(29);
  for (Signature s : kAll) {
    for (int i = 0; i < 100; ++i) {
      const Binarion a = rng.binarion(-2, 2, s);
      for (int n = 0; n <= 12; ++n) {
        CHECK(oracle::rel_err(pow(a, n), oracle::repeated_mul(a, n)) <= 1e-12);
      }
      if (std::abs(det(a)) > 0.1) {
        CHECK(oracle::rel_err(pow(a, -3), inv(oracle::repeated_mul(a, 3))) <= 1e-10);
      }
    }
  }
  CHECK(pow(Binarion(5, 3), 3) == Binarion(260, 252));
  CHECK_THROWS_AS(pow(Binarion(1, 1), -1), SingularError);
}

TEST_CASE("human-readable form") {
  CHECK(to_string(Binarion(2, 1)) == "2I + 1E");
  CHECK(to_string(Binarion(0.6, -0.8)) == "0.6I - 0.8E");
  CHECK(to_string(Binarion(-0.0, -0.0)) == "0I + 0E");
  CHECK(to_string(Binarion(1.0 / 3.0, 0)) == "0.333333333333I + 0E");
}
