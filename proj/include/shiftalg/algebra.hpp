#pragma once

// Two-dimensional operator algebras L = xI + yE with E^2 = eps*I.
//
//   eps = +1  split-complex (I, E acting on 2-periodic functions)
//   eps = -1  complex       (I, E acting on 2-antiperiodic functions)
//   eps =  0  parabolic / dual numbers

#include <complex>
#include <string>

#include "shiftalg/errors.hpp"

namespace shiftalg {

enum class Signature : int { Complex = -1, Parabolic = 0, Split = 1 };

/// Throws Error(InvalidValue) unless eps is -1, 0 or +1.
Signature signature_from_int(int eps);

constexpr int eps_of(Signature s) noexcept { return static_cast<int>(s); }

const char* signature_name(Signature s) noexcept;

/// One algebra element xI + yE. Components are always finite.
class Binarion {
 public:
  /// The zero element of the split algebra.
  constexpr Binarion() noexcept = default;
  Binarion(double x, double y, Signature sig = Signature::Split);

  static Binarion identity(Signature sig = Signature::Split) { return {1.0, 0.0, sig}; }
  static Binarion unit_shift(Signature sig = Signature::Split) { return {0.0, 1.0, sig}; }
  static Binarion zero(Signature sig = Signature::Split) { return {0.0, 0.0, sig}; }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }
  constexpr Signature sig() const noexcept { return sig_; }
  constexpr int eps() const noexcept { return eps_of(sig_); }

  bool is_zero() const noexcept { return x_ == 0.0 && y_ == 0.0; }

  friend bool operator==(const Binarion&, const Binarion&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  Signature sig_ = Signature::Split;
};

/// Eigenvalues of the multiplication operator; complex only for eps = -1.
struct Spectrum {
  std::complex<double> lambda1;
  std::complex<double> lambda2;
};

enum class NormKind { L1, L2, Inf };

Binarion add(const Binarion& a, const Binarion& b);
Binarion sub(const Binarion& a, const Binarion& b);
Binarion neg(const Binarion& a);
Binarion scale(double c, const Binarion& a);
Binarion mul(const Binarion& a, const Binarion& b);
Binarion conj(const Binarion& a);
Binarion inv(const Binarion& a);
Binarion div(const Binarion& a, const Binarion& b);

/// x^2 - eps*y^2, the determinant of the matrix representation.
double det(const Binarion& a) noexcept;
/// Always 2x.
double trace(const Binarion& a) noexcept;
Spectrum spectrum(const Binarion& a);
double norm(const Binarion& a, NormKind p = NormKind::L2) noexcept;

/// Threshold under which |det| counts as zero for inversion:
/// 1e-12 * max(1, ||a||_2^2).
double singular_tolerance(const Binarion& a) noexcept;

/// Integer power by repeated squaring; negative n goes through inv().
Binarion pow(const Binarion& a, int n);

/// "aI + bE" with 12 significant digits.
std::string to_string(const Binarion& a);

/// Max of |dx|, |dy|; signatures are ignored.
double distance_inf(const Binarion& a, const Binarion& b) noexcept;
double distance_l2(const Binarion& a, const Binarion& b) noexcept;

inline Binarion operator+(const Binarion& a, const Binarion& b) { return add(a, b); }
inline Binarion operator-(const Binarion& a, const Binarion& b) { return sub(a, b); }
inline Binarion operator-(const Binarion& a) { return neg(a); }
inline Binarion operator*(const Binarion& a, const Binarion& b) { return mul(a, b); }
inline Binarion operator*(double c, const Binarion& a) { return scale(c, a); }
inline Binarion operator*(const Binarion& a, double c) { return scale(c, a); }
inline Binarion operator/(const Binarion& a, const Binarion& b) { return div(a, b); }

}  // namespace shiftalg
