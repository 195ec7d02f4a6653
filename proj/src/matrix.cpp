#include "shiftalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "shiftalg/structure.hpp"

namespace shiftalg {

Mat2 to_matrix(const Binarion& a) {
  const double x = a.x();
  const double y = a.y();
  switch (a.sig()) {
    case Signature::Split: return {x, y, y, x};
    case Signature::Complex: return {x, -y, y, x};
    case Signature::Parabolic: return {x, y, 0.0, x};
  }
  return {};
}

bool has_shape(const Mat2& m, Signature sig, double tol) noexcept {
  const double scale = std::max({1.0, std::abs(m.m11), std::abs(m.m12),
                                 std::abs(m.m21), std::abs(m.m22)});
  const double t = tol * scale;
  if (std::abs(m.m11 - m.m22) > t) return false;
  switch (sig) {
    case Signature::Split: return std::abs(m.m12 - m.m21) <= t;
    case Signature::Complex: return std::abs(m.m12 + m.m21) <= t;
    case Signature::Parabolic: return std::abs(m.m21) <= t;
  }
  return false;
}

Binarion from_matrix(const Mat2& m, Signature sig) {
  if (!has_shape(m, sig)) {
    throw Error(ErrorCode::Shape, std::string("matrix does not have the ") +
                                      signature_name(sig) + " representation pattern");
  }
  switch (sig) {
    case Signature::Split:
    case Signature::Parabolic: return {m.m11, m.m12, sig};
    case Signature::Complex: return {m.m11, m.m21, sig};
  }
  return {};
}

Mat2 mat_add(const Mat2& a, const Mat2& b) noexcept {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) noexcept {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

double mat_det(const Mat2& m) noexcept { return m.m11 * m.m22 - m.m12 * m.m21; }

double mat_trace(const Mat2& m) noexcept { return m.m11 + m.m22; }

Mat2 mat_inv(const Mat2& m) {
  const double d = mat_det(m);
  const double fro2 = m.m11 * m.m11 + m.m12 * m.m12 + m.m21 * m.m21 + m.m22 * m.m22;
  if (std::abs(d) <= 1e-12 * std::max(1.0, fro2 / 2.0)) throw SingularError(d);
  return {m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d};
}

Spectrum mat_eig(const Mat2& m) {
  // Discriminant in the (a-d)^2/4 + bc form avoids cancellation in tr^2/4 - det.
  const double half_tr = 0.5 * (m.m11 + m.m22);
  const double half_gap = 0.5 * (m.m11 - m.m22);
  const double disc = half_gap * half_gap + m.m12 * m.m21;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    return {{half_tr + r, 0.0}, {half_tr - r, 0.0}};
  }
  const double r = std::sqrt(-disc);
  return {{half_tr, r}, {half_tr, -r}};
}

double mat_max_abs_diff(const Mat2& a, const Mat2& b) noexcept {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

double spectrum_distance(const Spectrum& a, const Spectrum& b) noexcept {
  const double same = std::max(std::abs(a.lambda1 - b.lambda1), std::abs(a.lambda2 - b.lambda2));
  const double swapped =
      std::max(std::abs(a.lambda1 - b.lambda2), std::abs(a.lambda2 - b.lambda1));
  return std::min(same, swapped);
}

double IsoReport::max_residual() const noexcept {
  return std::max({add_residual, mul_residual, det_residual, trace_residual,
                   spectrum_residual, inverse_residual});
}

namespace {

double rel(double err, double ref) { return err / std::max(1.0, std::abs(ref)); }

double mat_scale(const Mat2& m) {
  return std::max({std::abs(m.m11), std::abs(m.m12), std::abs(m.m21), std::abs(m.m22)});
}

}  // namespace

IsoReport iso_check(Signature sig, int trials, std::uint64_t seed) {
  IsoReport rep;
  rep.sig = sig;
  rep.trials = trials;
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> comp(-10.0, 10.0);
  std::uniform_real_distribution<double> rapidity(-2.0, 2.0);

  for (int t = 0; t < trials; ++t) {
    const Binarion a(comp(rng), comp(rng), sig);
    const Binarion b(comp(rng), comp(rng), sig);
    const Mat2 ma = to_matrix(a);
    const Mat2 mb = to_matrix(b);

    const Mat2 sum_ref = mat_add(ma, mb);
    rep.add_residual = std::max(
        rep.add_residual, rel(mat_max_abs_diff(to_matrix(a + b), sum_ref), mat_scale(sum_ref)));

    const Mat2 prod_ref = mat_mul(ma, mb);
    rep.mul_residual = std::max(
        rep.mul_residual, rel(mat_max_abs_diff(to_matrix(a * b), prod_ref), mat_scale(prod_ref)));

    const double dref = mat_det(ma);
    rep.det_residual = std::max(rep.det_residual, rel(std::abs(det(a) - dref), dref));
    const double tref = mat_trace(ma);
    rep.trace_residual = std::max(rep.trace_residual, rel(std::abs(trace(a) - tref), tref));

    const Spectrum sref = mat_eig(ma);
    const double sscale = std::max(std::abs(sref.lambda1), std::abs(sref.lambda2));
    rep.spectrum_residual =
        std::max(rep.spectrum_residual, rel(spectrum_distance(spectrum(a), sref), sscale));

    if (std::abs(det(a)) > 1e-6 * std::max(1.0, a.x() * a.x() + a.y() * a.y())) {
      const Mat2 iref = mat_inv(ma);
      rep.inverse_residual = std::max(
          rep.inverse_residual, rel(mat_max_abs_diff(to_matrix(inv(a)), iref), mat_scale(iref)));
    }

    if (sig != Signature::Split) continue;

    // det > 0 <-> H, det > 0 & m11 > 0 <-> E, on the random draws.
    const Region ra = classify(a);
    const double md = mat_det(ma);
    ++rep.subgroup_checks;
    if ((md > 1e-9) != ra.in_H) ++rep.subgroup_failures;
    ++rep.subgroup_checks;
    if ((md > 1e-9 && ma.m11 > 0.0) != ra.in_Ecal) ++rep.subgroup_failures;

    // det = 1 <-> U, with closure of CM2^1 under products and inverses.
    const double ta = rapidity(rng);
    const double tb = rapidity(rng);
    const double sa = (t % 2 == 0) ? 1.0 : -1.0;
    const Binarion ua(sa * std::cosh(ta), sa * std::sinh(ta), sig);
    const Binarion ub(std::cosh(tb), std::sinh(tb), sig);
    const Mat2 mua = to_matrix(ua);
    const Mat2 mub = to_matrix(ub);
    ++rep.subgroup_checks;
    if (!(std::abs(mat_det(mua) - 1.0) <= 1e-9 && classify(ua).in_U)) ++rep.subgroup_failures;
    const Mat2 mprod = mat_mul(mua, mub);
    ++rep.subgroup_checks;
    if (!(std::abs(mat_det(mprod) - 1.0) <= 1e-9 && classify(from_matrix(mprod, sig)).in_U))
      ++rep.subgroup_failures;
    ++rep.subgroup_checks;
    if (!(std::abs(mat_det(mat_inv(mua)) - 1.0) <= 1e-9)) ++rep.subgroup_failures;

    // CM2^{++} products stay in E.
    const Mat2 me = mat_mul(to_matrix(ub), mat_mul(mub, mub));
    ++rep.subgroup_checks;
    if (!(mat_det(me) > 0.0 && me.m11 > 0.0 && classify(from_matrix(me, sig)).in_Ecal))
      ++rep.subgroup_failures;
  }
  return rep;
}

}  // namespace shiftalg
