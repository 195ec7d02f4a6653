#pragma once

// 2x2 real matrix representations of the three algebras, and the plain
// linear-algebra routines used as an oracle for the closed forms in
// algebra.hpp. Nothing here calls into algebra.cpp's arithmetic.
//
//   eps = +1  [[x, y], [y, x]]    circulant
//   eps = -1  [[x, -y], [y, x]]
//   eps =  0  [[x, y], [0, x]]

#include <cstdint>

#include "shiftalg/algebra.hpp"

namespace shiftalg {

struct Mat2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 0.0;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 to_matrix(const Binarion& a);
/// Throws Error(Shape) if m does not have the pattern for sig (within 1e-12,
/// relative to the largest entry when that exceeds 1).
Binarion from_matrix(const Mat2& m, Signature sig);
bool has_shape(const Mat2& m, Signature sig, double tol = 1e-12) noexcept;

Mat2 mat_add(const Mat2& a, const Mat2& b) noexcept;
Mat2 mat_mul(const Mat2& a, const Mat2& b) noexcept;
double mat_det(const Mat2& m) noexcept;
double mat_trace(const Mat2& m) noexcept;
/// Adjugate over determinant. Throws SingularError when
/// |det| <= 1e-12 * max(1, ||m||_F^2 / 2).
Mat2 mat_inv(const Mat2& m);
/// Roots of lambda^2 - tr*lambda + det = 0, larger real part first.
Spectrum mat_eig(const Mat2& m);
double mat_max_abs_diff(const Mat2& a, const Mat2& b) noexcept;

struct IsoReport {
  Signature sig = Signature::Split;
  int trials = 0;
  std::uint64_t seed = 0;
  double add_residual = 0.0;       // phi(a+b) vs phi(a)+phi(b)
  double mul_residual = 0.0;       // phi(ab) vs phi(a)phi(b)
  double det_residual = 0.0;
  double trace_residual = 0.0;
  double spectrum_residual = 0.0;  // unordered-pair distance
  double inverse_residual = 0.0;   // phi(inv a) vs mat_inv(phi(a)), invertible a only
  int subgroup_checks = 0;
  int subgroup_failures = 0;

  double max_residual() const noexcept;
};

/// Seeded randomized homomorphism check of to_matrix over `trials` pairs
/// with components drawn from [-10, 10]. Residuals are relative to
/// max(1, |reference|). For the split signature the subgroup
/// correspondences det>0 <-> H, det=1 <-> U, det>0 & m11>0 <-> E are also
/// spot-checked, including closure of the matrix images under products.
IsoReport iso_check(Signature sig, int trials, std::uint64_t seed);

/// Distance between two spectra treated as unordered pairs.
double spectrum_distance(const Spectrum& a, const Spectrum& b) noexcept;

}  // namespace shiftalg
