#pragma once

// Piecewise-parametric curves in the (x, y) plane and line integrals
//
//   int_C f(L) dL = int f(L(t)) L'(t) dt,   L'(t) = x'(t) I + y'(t) E,
//
// evaluated with composite Gauss-Legendre quadrature per segment.

#include <variant>
#include <vector>

#include "shiftalg/algebra.hpp"
#include "shiftalg/field.hpp"

namespace shiftalg {

/// Full circle, t in [0, 2 pi], starting at (cx + r, cy).
/// orientation +1 is counterclockwise.
struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
  int orientation = 1;
};

/// (x0, y0) -> (x1, y1), t in [0, 1].
struct LineSegment {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

struct PathPoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Samples with strictly increasing t. Between samples the curve is the cubic
/// Hermite interpolant whose node tangents are centered differences of the
/// sample polyline (one-sided at open ends, wrapped when the path closes on
/// itself).
struct SampledPath {
  std::vector<PathPoint> points;
};

using Segment = std::variant<Circle, LineSegment, SampledPath>;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

class Contour {
 public:
  /// Throws Error(InvalidContour) when consecutive endpoints are more than
  /// 1e-9 apart, when `closed` is set but the last endpoint misses the first,
  /// or when a segment is degenerate.
  Contour(std::vector<Segment> segments, bool closed);

  static Contour circle(double cx, double cy, double r);
  /// Closed polygon through the vertices, in order.
  static Contour polygon(const std::vector<Point2>& vertices);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool closed() const noexcept { return closed_; }

  Contour reversed() const;
  /// Contour formed by this followed by `next` (open unless `closed`).
  Contour concatenated(const Contour& next, bool closed) const;

  /// Points at `per_segment` + 1 uniform parameter values per segment.
  std::vector<Point2> sample_points(int per_segment) const;

 private:
  std::vector<Segment> segments_;
  bool closed_;
};

Point2 segment_start(const Segment& s);
Point2 segment_end(const Segment& s);

struct QuadratureSettings {
  int order = 8;
  int subdivisions = 64;
};

/// f(L(t)) L'(t) integrated over every segment and summed. L(t) carries
/// signature `sig`. Throws Error(Evaluation) if f fails or goes non-finite on
/// the contour.
Binarion integrate(const BinarionFn& f, const Contour& c, const QuadratureSettings& q = {},
                   Signature sig = Signature::Split);

/// |oint_C f dL|_2. Throws Error(NotClosed) for open contours.
double closed_holomorphic_check(const BinarionFn& f, const Contour& c,
                                const QuadratureSettings& q = {},
                                Signature sig = Signature::Split);

struct ClearanceReport {
  double min_abs_det = 0.0;  // min over samples of |det(L(t) - L0)|
  bool crosses = false;      // sign change (or exact zero) between samples

  /// Zero when the contour meets a singular line of L0, else min_abs_det.
  double clearance() const noexcept { return crosses ? 0.0 : min_abs_det; }
};

inline constexpr int kClearanceSamples = 4096;

/// det uses the signature of L0.
ClearanceReport singular_clearance(const Contour& c, const Binarion& L0,
                                   int samples_per_segment = kClearanceSamples);

/// Diagonal of the bounding box of the sampled contour.
double contour_diameter(const Contour& c);

struct CauchyResult {
  bool divergent = false;
  Binarion value;          // meaningful only when !divergent
  double clearance = 0.0;
  double tol = 0.0;        // 1e-6 * diameter^2
};

/// oint_C f(L) (L - L0)^{-1} dL when the contour clears the singular lines of
/// L0 by more than tol; otherwise reports divergence without integrating.
/// Throws Error(NotClosed) for open contours.
CauchyResult cauchy_probe(const BinarionFn& f, const Contour& c, const Binarion& L0,
                          const QuadratureSettings& q = {});

}  // namespace shiftalg
