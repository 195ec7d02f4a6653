#include "shiftalg/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shiftalg/quadrature.hpp"

namespace shiftalg {

namespace {

constexpr double kJoinTol = 1e-9;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Tangents {
  std::vector<double> mx;
  std::vector<double> my;
};

Tangents path_tangents(const SampledPath& p) {
  const auto& pts = p.points;
  const std::size_t n = pts.size();
  Tangents tg{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double dt = pts[k + 1].t - pts[k - 1].t;
    tg.mx[k] = (pts[k + 1].x - pts[k - 1].x) / dt;
    tg.my[k] = (pts[k + 1].y - pts[k - 1].y) / dt;
  }
  const bool loops = n > 2 && dist({pts.front().x, pts.front().y}, {pts.back().x, pts.back().y}) <=
                                  kJoinTol;
  if (loops) {
    const double dt = (pts[1].t - pts[0].t) + (pts[n - 1].t - pts[n - 2].t);
    tg.mx[0] = tg.mx[n - 1] = (pts[1].x - pts[n - 2].x) / dt;
    tg.my[0] = tg.my[n - 1] = (pts[1].y - pts[n - 2].y) / dt;
  } else {
    tg.mx[0] = (pts[1].x - pts[0].x) / (pts[1].t - pts[0].t);
    tg.my[0] = (pts[1].y - pts[0].y) / (pts[1].t - pts[0].t);
    tg.mx[n - 1] = (pts[n - 1].x - pts[n - 2].x) / (pts[n - 1].t - pts[n - 2].t);
    tg.my[n - 1] = (pts[n - 1].y - pts[n - 2].y) / (pts[n - 1].t - pts[n - 2].t);
  }
  return tg;
}

// Position and velocity on the Hermite piece [t_k, t_{k+1}] at local s in [0, 1].
struct Motion {
  double x, y, dx, dy;
};

Motion hermite(const SampledPath& p, const Tangents& tg, std::size_t k, double s) {
  const PathPoint& a = p.points[k];
  const PathPoint& b = p.points[k + 1];
  const double h = b.t - a.t;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  const double d00 = 6 * s2 - 6 * s, d10 = 3 * s2 - 4 * s + 1;
  const double d01 = -6 * s2 + 6 * s, d11 = 3 * s2 - 2 * s;
  return {h00 * a.x + h10 * h * tg.mx[k] + h01 * b.x + h11 * h * tg.mx[k + 1],
          h00 * a.y + h10 * h * tg.my[k] + h01 * b.y + h11 * h * tg.my[k + 1],
          (d00 * a.x + d01 * b.x) / h + d10 * tg.mx[k] + d11 * tg.mx[k + 1],
          (d00 * a.y + d01 * b.y) / h + d10 * tg.my[k] + d11 * tg.my[k + 1]};
}

Motion circle_motion(const Circle& c, double t) {
  const double o = c.orientation;
  const double ct = std::cos(o * t);
  const double st = std::sin(o * t);
  return {c.cx + c.r * ct, c.cy + c.r * st, -o * c.r * st, o * c.r * ct};
}

Motion line_motion(const LineSegment& l, double t) {
  const double dx = l.x1 - l.x0;
  const double dy = l.y1 - l.y0;
  return {l.x0 + t * dx, l.y0 + t * dy, dx, dy};
}

void validate_segment(const Segment& s) {
  std::visit(overloaded{
                 [](const Circle& c) {
                   if (!std::isfinite(c.cx) || !std::isfinite(c.cy) || !std::isfinite(c.r) ||
                       !(c.r > 0.0) || (c.orientation != 1 && c.orientation != -1)) {
                     throw Error(ErrorCode::InvalidContour,
                                 "circle needs finite centre, r > 0, orientation +-1");
                   }
                 },
                 [](const LineSegment& l) {
                   if (!std::isfinite(l.x0) || !std::isfinite(l.y0) || !std::isfinite(l.x1) ||
                       !std::isfinite(l.y1)) {
                     throw Error(ErrorCode::InvalidContour, "line endpoints must be finite");
                   }
                 },
                 [](const SampledPath& p) {
                   if (p.points.size() < 2) {
                     throw Error(ErrorCode::InvalidContour, "path needs at least two points");
                   }
                   for (std::size_t k = 0; k < p.points.size(); ++k) {
                     const PathPoint& q = p.points[k];
                     if (!std::isfinite(q.t) || !std::isfinite(q.x) || !std::isfinite(q.y)) {
                       throw Error(ErrorCode::InvalidContour, "path points must be finite");
                     }
                     if (k > 0 && !(q.t > p.points[k - 1].t)) {
                       throw Error(ErrorCode::InvalidContour,
                                   "path parameter t must be strictly increasing");
                     }
                   }
                 },
             },
             s);
}

// Calls visit(Motion, weight) for every quadrature node of segment s.
template <class Visit>
void for_each_node(const Segment& s, const GaussLegendre& rule, int subdivisions, Visit&& visit) {
  auto panels = [&](double t0, double t1, int count, auto&& motion) {
    const double width = (t1 - t0) / count;
    for (int p = 0; p < count; ++p) {
      const double a = t0 + p * width;
      const double half = 0.5 * width;
      const double mid = a + half;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        visit(motion(mid + half * rule.nodes[q]), half * rule.weights[q]);
      }
    }
  };
  std::visit(overloaded{
                 [&](const Circle& c) {
                   panels(0.0, kTwoPi, subdivisions,
                          [&](double t) { return circle_motion(c, t); });
                 },
                 [&](const LineSegment& l) {
                   panels(0.0, 1.0, subdivisions, [&](double t) { return line_motion(l, t); });
                 },
                 [&](const SampledPath& p) {
                   const Tangents tg = path_tangents(p);
                   const std::size_t intervals = p.points.size() - 1;
                   const int per = std::max(
                       1, static_cast<int>((subdivisions + intervals - 1) / intervals));
                   for (std::size_t k = 0; k < intervals; ++k) {
                     const double h = p.points[k + 1].t - p.points[k].t;
                     // integrate in local s in [0,1]; dt = h ds
                     panels(0.0, 1.0, per, [&](double s) {
                       Motion m = hermite(p, tg, k, s);
                       m.dx *= h;
                       m.dy *= h;
                       return m;
                     });
                   }
                 },
             },
             s);
}

Motion motion_at(const Segment& s, double u) {
  return std::visit(overloaded{
                        [&](const Circle& c) { return circle_motion(c, u * kTwoPi); },
                        [&](const LineSegment& l) { return line_motion(l, u); },
                        [&](const SampledPath& p) {
                          const double t0 = p.points.front().t;
                          const double t1 = p.points.back().t;
                          const double t = t0 + u * (t1 - t0);
                          auto it = std::upper_bound(
                              p.points.begin(), p.points.end(), t,
                              [](double v, const PathPoint& q) { return v < q.t; });
                          std::size_t k = it == p.points.begin()
                                              ? 0
                                              : static_cast<std::size_t>(it - p.points.begin()) - 1;
                          k = std::min(k, p.points.size() - 2);
                          const double s = (t - p.points[k].t) / (p.points[k + 1].t - p.points[k].t);
                          return hermite(p, path_tangents(p), k, std::clamp(s, 0.0, 1.0));
                        },
                    },
                    s);
}

}  // namespace

Point2 segment_start(const Segment& s) {
  return std::visit(overloaded{
                        [](const Circle& c) { return Point2{c.cx + c.r, c.cy}; },
                        [](const LineSegment& l) { return Point2{l.x0, l.y0}; },
                        [](const SampledPath& p) {
                          return Point2{p.points.front().x, p.points.front().y};
                        },
                    },
                    s);
}

Point2 segment_end(const Segment& s) {
  return std::visit(overloaded{
                        [](const Circle& c) { return Point2{c.cx + c.r, c.cy}; },
                        [](const LineSegment& l) { return Point2{l.x1, l.y1}; },
                        [](const SampledPath& p) {
                          return Point2{p.points.back().x, p.points.back().y};
                        },
                    },
                    s);
}

Contour::Contour(std::vector<Segment> segments, bool closed)
    : segments_(std::move(segments)), closed_(closed) {
  if (segments_.empty()) throw Error(ErrorCode::InvalidContour, "contour has no segments");
  for (const Segment& s : segments_) validate_segment(s);
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (dist(segment_end(segments_[k - 1]), segment_start(segments_[k])) > kJoinTol) {
      throw Error(ErrorCode::InvalidContour,
                  "segment " + std::to_string(k) + " does not start where segment " +
                      std::to_string(k - 1) + " ends");
    }
  }
  if (closed_ && dist(segment_end(segments_.back()), segment_start(segments_.front())) > kJoinTol) {
    throw Error(ErrorCode::InvalidContour, "closed contour does not return to its start");
  }
}

Contour Contour::circle(double cx, double cy, double r) { return Contour({Circle{cx, cy, r, 1}}, true); }

Contour Contour::polygon(const std::vector<Point2>& vertices) {
  if (vertices.size() < 2) throw Error(ErrorCode::InvalidContour, "polygon needs two vertices");
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const Point2 a = vertices[k];
    const Point2 b = vertices[(k + 1) % vertices.size()];
    segs.emplace_back(LineSegment{a.x, a.y, b.x, b.y});
  }
  return Contour(std::move(segs), true);
}

Contour Contour::reversed() const {
  std::vector<Segment> out;
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    out.push_back(std::visit(overloaded{
                                 [](const Circle& c) -> Segment {
                                   return Circle{c.cx, c.cy, c.r, -c.orientation};
                                 },
                                 [](const LineSegment& l) -> Segment {
                                   return LineSegment{l.x1, l.y1, l.x0, l.y0};
                                 },
                                 [](const SampledPath& p) -> Segment {
                                   SampledPath r;
                                   for (auto q = p.points.rbegin(); q != p.points.rend(); ++q) {
                                     r.points.push_back({-q->t, q->x, q->y});
                                   }
                                   return r;
                                 },
                             },
                             *it));
  }
  return Contour(std::move(out), closed_);
}

Contour Contour::concatenated(const Contour& next, bool closed) const {
  std::vector<Segment> segs = segments_;
  segs.insert(segs.end(), next.segments_.begin(), next.segments_.end());
  return Contour(std::move(segs), closed);
}

std::vector<Point2> Contour::sample_points(int per_segment) const {
  std::vector<Point2> pts;
  const int n = std::max(1, per_segment);
  for (const Segment& s : segments_) {
    for (int k = 0; k <= n; ++k) {
      const Motion m = motion_at(s, static_cast<double>(k) / n);
      pts.push_back({m.x, m.y});
    }
  }
  return pts;
}

Binarion integrate(const BinarionFn& f, const Contour& c, const QuadratureSettings& q,
                   Signature sig) {
  if (q.subdivisions < 1) throw Error(ErrorCode::InvalidValue, "subdivisions must be >= 1");
  const GaussLegendre rule = gauss_legendre(q.order);
  double sx = 0.0;
  double sy = 0.0;
  for (const Segment& s : c.segments()) {
    for_each_node(s, rule, q.subdivisions, [&](const Motion& m, double w) {
      Binarion val;
      try {
        val = f(Binarion(m.x, m.y, sig));
      } catch (const Error& e) {
        throw Error(ErrorCode::Evaluation, "EvaluationError: integrand failed at (" +
                                               std::to_string(m.x) + ", " + std::to_string(m.y) +
                                               "): " + e.what());
      }
      const Binarion prod = mul(val, Binarion(m.dx, m.dy, sig));
      sx += w * prod.x();
      sy += w * prod.y();
    });
  }
  if (!std::isfinite(sx) || !std::isfinite(sy)) {
    throw Error(ErrorCode::Evaluation, "EvaluationError: integral is not finite");
  }
  return {sx, sy, sig};
}

double closed_holomorphic_check(const BinarionFn& f, const Contour& c,
                                const QuadratureSettings& q, Signature sig) {
  if (!c.closed()) throw Error(ErrorCode::NotClosed, "NotClosed: contour is open");
  return norm(integrate(f, c, q, sig), NormKind::L2);
}

ClearanceReport singular_clearance(const Contour& c, const Binarion& L0, int samples_per_segment) {
  ClearanceReport rep;
  rep.min_abs_det = INFINITY;
  const double eps = L0.eps();
  double prev = 0.0;
  bool have_prev = false;
  for (const Point2& p : c.sample_points(samples_per_segment)) {
    const double dx = p.x - L0.x();
    const double dy = p.y - L0.y();
    const double d = dx * dx - eps * dy * dy;
    rep.min_abs_det = std::min(rep.min_abs_det, std::abs(d));
    if (d == 0.0 || (have_prev && ((prev < 0.0) != (d < 0.0)))) rep.crosses = true;
    prev = d;
    have_prev = true;
  }
  return rep;
}

double contour_diameter(const Contour& c) {
  const std::vector<Point2> pts = c.sample_points(kClearanceSamples);
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const Point2& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return std::hypot(x1 - x0, y1 - y0);
}

CauchyResult cauchy_probe(const BinarionFn& f, const Contour& c, const Binarion& L0,
                          const QuadratureSettings& q) {
  if (!c.closed()) throw Error(ErrorCode::NotClosed, "NotClosed: contour is open");
  CauchyResult res;
  const double diam = contour_diameter(c);
  res.tol = 1e-6 * diam * diam;
  res.clearance = singular_clearance(c, L0).clearance();
  if (res.clearance <= res.tol) {
    res.divergent = true;
    return res;
  }
  res.value = integrate([&](const Binarion& L) { return mul(f(L), inv(sub(L, L0))); }, c, q,
                        L0.sig());
  return res;
}

}  // namespace shiftalg
