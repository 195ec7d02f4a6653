#include "shiftalg/structure.hpp"

#include <cmath>

namespace shiftalg {

namespace {

void require_split(const Binarion& a, const char* what) {
  if (a.sig() != Signature::Split) {
    throw Error(ErrorCode::UnsupportedSignature,
                std::string(what) + " is defined for the split signature (eps = +1) only");
  }
}

}  // namespace

const char* region_tag_name(RegionTag tag) noexcept {
  switch (tag) {
    case RegionTag::H: return "H";
    case RegionTag::V: return "V";
    case RegionTag::U_subset_of_H: return "U";
    case RegionTag::N: return "N";
    case RegionTag::E_subset: return "E";
    case RegionTag::Zero: return "Zero";
  }
  return "?";
}

Region classify(const Binarion& a, double tol) {
  require_split(a, "classify");
  Region r;
  r.det = det(a);
  r.in_N = std::abs(r.det) <= tol;
  r.in_LC2_star = !r.in_N;
  r.in_H = r.det > tol;
  r.in_V = r.det < -tol;
  r.in_U = std::abs(r.det - 1.0) <= tol;
  r.in_Ecal = r.in_H && a.x() > 0.0;

  if (norm(a, NormKind::Inf) <= tol) {
    r.tag = RegionTag::Zero;
  } else if (r.in_N) {
    r.tag = RegionTag::N;
  } else if (r.in_U) {
    r.tag = RegionTag::U_subset_of_H;
  } else if (r.in_Ecal) {
    r.tag = RegionTag::E_subset;
  } else if (r.in_H) {
    r.tag = RegionTag::H;
  } else {
    r.tag = RegionTag::V;
  }
  return r;
}

Binarion zero_divisor_partner(const Binarion& a, double tol) {
  require_split(a, "zero_divisor_partner");
  if (a.is_zero() || norm(a, NormKind::Inf) <= tol) {
    throw Error(ErrorCode::NotNull, "NotNull: zero has no zero-divisor partner");
  }
  if (std::abs(det(a)) > tol) {
    throw Error(ErrorCode::NotNull,
                "NotNull: element is invertible (det = " + std::to_string(det(a)) +
                    ") and is not a zero divisor");
  }
  // On y = x the partner lies on y = -x, and vice versa.
  if (std::abs(a.x() - a.y()) <= std::abs(a.x() + a.y())) return {1.0, -1.0, a.sig()};
  return {1.0, 1.0, a.sig()};
}

FixedPointReport fixed_analysis(const Binarion& a, double tol) {
  require_split(a, "fixed_analysis");
  FixedPointReport rep;
  rep.in_FS1 = std::abs(a.x() - a.y() - 1.0) <= tol;
  rep.in_FS2 = std::abs(a.x() + a.y() - 1.0) <= tol;
  rep.in_S1 = std::abs(a.x() + a.y()) <= tol;
  rep.in_S2 = std::abs(a.x() - a.y()) <= tol;
  if (rep.in_FS1) {
    const Binarion m(1.0, -1.0, a.sig());
    rep.fs1_residual = distance_inf(mul(a, m), m);
  }
  if (rep.in_FS2) {
    const Binarion m(1.0, 1.0, a.sig());
    rep.fs2_residual = distance_inf(mul(a, m), m);
  }
  return rep;
}

Binarion ideal_power(const Binarion& a, int n, double tol) {
  require_split(a, "ideal_power");
  if (n < 1) throw Error(ErrorCode::InvalidValue, "ideal_power needs n >= 1");
  if (std::abs(a.x() - a.y()) > tol && std::abs(a.x() + a.y()) > tol) {
    throw Error(ErrorCode::NotOnDiagonal,
                "NotOnDiagonal: " + to_string(a) + " is not on the line y = x or y = -x");
  }
  return scale(std::pow(2.0 * a.x(), n - 1), a);
}

Binarion geometric_sum(const Binarion& a, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidValue, "geometric_sum needs n >= 0");
  Binarion term = Binarion::identity(a.sig());
  Binarion sum = term;
  for (int k = 1; k <= n; ++k) {
    term = mul(term, a);
    sum = add(sum, term);
  }
  return sum;
}

Binarion geometric_limit(const Binarion& a) {
  const double n1 = norm(a, NormKind::L1);
  if (!(n1 < 1.0)) {
    throw Error(ErrorCode::NormTooLarge,
                "NormTooLarge: geometric series needs ||a||_1 < 1, got " + std::to_string(n1));
  }
  return inv(sub(Binarion::identity(a.sig()), a));
}

}  // namespace shiftalg
