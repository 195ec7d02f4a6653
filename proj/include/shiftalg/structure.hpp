#pragma once

// Set-level structure of the split algebra (eps = +1): the regions cut out
// by det = x^2 - y^2, zero divisors on the null lines, fixed points of
// M -> LM, the diagonal ideals, and geometric series.

#include "shiftalg/algebra.hpp"

namespace shiftalg {

inline constexpr double kDefaultSetTol = 1e-9;

/// Most specific region label: Zero, then N, U, E, H, V in that order.
enum class RegionTag { H, V, U_subset_of_H, N, E_subset, Zero };

const char* region_tag_name(RegionTag tag) noexcept;

struct Region {
  RegionTag tag = RegionTag::Zero;
  double det = 0.0;
  bool in_LC2_star = false;  // invertible: |det| > tol
  bool in_H = false;         // det > tol
  bool in_V = false;         // det < -tol
  bool in_U = false;         // |det - 1| <= tol
  bool in_N = false;         // |det| <= tol
  bool in_Ecal = false;      // in_H and x > 0
};

/// Requires the split signature; throws Error(UnsupportedSignature) otherwise.
Region classify(const Binarion& a, double tol = kDefaultSetTol);

/// Canonical partner b with ab = 0: I - E for a on y = x, I + E for a on y = -x.
/// Throws Error(NotNull) if a is zero or |det a| > tol.
Binarion zero_divisor_partner(const Binarion& a, double tol = kDefaultSetTol);

struct FixedPointReport {
  bool in_FS1 = false;  // x - y = 1
  bool in_FS2 = false;  // x + y = 1
  bool in_S1 = false;   // x + y = 0
  bool in_S2 = false;   // x - y = 0
  // |a(I - E) - (I - E)|_inf when in_FS1, |a(I + E) - (I + E)|_inf when in_FS2;
  // zero otherwise.
  double fs1_residual = 0.0;
  double fs2_residual = 0.0;
};

FixedPointReport fixed_analysis(const Binarion& a, double tol = kDefaultSetTol);

/// a^n = (2x)^(n-1) a for a on either diagonal (|x| = |y| within tol), n >= 1.
/// Throws Error(NotOnDiagonal) off the diagonals, Error(InvalidValue) for n < 1.
Binarion ideal_power(const Binarion& a, int n, double tol = kDefaultSetTol);

/// sum_{k=0}^{n} a^k by iterated multiplication. Any signature.
Binarion geometric_sum(const Binarion& a, int n);

/// (I - a)^{-1}; throws Error(NormTooLarge) when ||a||_1 >= 1.
Binarion geometric_limit(const Binarion& a);

}  // namespace shiftalg
