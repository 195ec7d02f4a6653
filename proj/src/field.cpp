#include "shiftalg/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace shiftalg {

void GridGeometry::validate() const {
  if (nx < 3 || ny < 3) throw Error(ErrorCode::InvalidGrid, "grid needs nx, ny >= 3");
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) ||
      !std::isfinite(ymax) || !(xmax > xmin) || !(ymax > ymin)) {
    throw Error(ErrorCode::InvalidGrid, "grid box must be finite with xmax > xmin, ymax > ymin");
  }
}

FieldGrid FieldGrid::from_arrays(const GridGeometry& g, Signature sig, std::vector<double> u,
                                 std::vector<double> v) {
  g.validate();
  if (u.size() != g.size() || v.size() != g.size()) {
    throw Error(ErrorCode::InvalidGrid, "u and v must each hold nx*ny samples");
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!std::isfinite(u[k]) || !std::isfinite(v[k])) {
      throw Error(ErrorCode::InvalidGrid, "field samples must be finite");
    }
  }
  FieldGrid out;
  out.geom = g;
  out.sig = sig;
  out.u = std::move(u);
  out.v = std::move(v);
  out.valid.assign(g.size(), 1);
  return out;
}

double FieldGrid::scale() const noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (valid[k]) s = std::max({s, std::abs(u[k]), std::abs(v[k])});
  }
  return s;
}

FieldGrid sample_field(const BinarionFn& f, const GridGeometry& g, Signature sig) {
  g.validate();
  FieldGrid out;
  out.geom = g;
  out.sig = sig;
  out.u.assign(g.size(), 0.0);
  out.v.assign(g.size(), 0.0);
  out.valid.assign(g.size(), 0);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      try {
        const Binarion w = f(Binarion(g.x_at(i), g.y_at(j), sig));
        out.u[k] = w.x();
        out.v[k] = w.y();
        out.valid[k] = 1;
      } catch (const Error&) {
        // left masked
      }
    }
  }
  return out;
}

namespace {

// Central-difference stencils at interior node (i, j).
struct Stencil {
  const GridGeometry& g;
  const std::vector<double>& a;

  double dx(int i, int j) const {
    return (a[g.index(i + 1, j)] - a[g.index(i - 1, j)]) / (2.0 * g.hx());
  }
  double dy(int i, int j) const {
    return (a[g.index(i, j + 1)] - a[g.index(i, j - 1)]) / (2.0 * g.hy());
  }
  double dxx(int i, int j) const {
    const double h = g.hx();
    return (a[g.index(i + 1, j)] - 2.0 * a[g.index(i, j)] + a[g.index(i - 1, j)]) / (h * h);
  }
  double dyy(int i, int j) const {
    const double h = g.hy();
    return (a[g.index(i, j + 1)] - 2.0 * a[g.index(i, j)] + a[g.index(i, j - 1)]) / (h * h);
  }
};

bool stencil_ok(const FieldGrid& f, int i, int j) {
  const GridGeometry& g = f.geom;
  return f.valid[g.index(i, j)] && f.valid[g.index(i - 1, j)] && f.valid[g.index(i + 1, j)] &&
         f.valid[g.index(i, j - 1)] && f.valid[g.index(i, j + 1)];
}

template <class Op>
ResidualGrid residual_pair(const FieldGrid& f, Op op) {
  f.geom.validate();
  ResidualGrid r;
  r.geom = f.geom;
  r.r1.assign(f.geom.size(), 0.0);
  r.r2.assign(f.geom.size(), 0.0);
  r.interior.assign(f.geom.size(), 0);
  const Stencil su{f.geom, f.u};
  const Stencil sv{f.geom, f.v};
  for (int j = 1; j + 1 < f.geom.ny; ++j) {
    for (int i = 1; i + 1 < f.geom.nx; ++i) {
      if (!stencil_ok(f, i, j)) continue;
      const std::size_t k = f.geom.index(i, j);
      const auto [a, b] = op(su, sv, i, j);
      r.r1[k] = a;
      r.r2[k] = b;
      r.interior[k] = 1;
      r.max_r1 = std::max(r.max_r1, std::abs(a));
      r.max_r2 = std::max(r.max_r2, std::abs(b));
    }
  }
  return r;
}

}  // namespace

ResidualGrid cr_residual(const FieldGrid& g, CrSense sense) {
  const double s = sense == CrSense::Split ? -1.0 : 1.0;
  return residual_pair(g, [s](const Stencil& u, const Stencil& v, int i, int j) {
    return std::pair{u.dx(i, j) - v.dy(i, j), u.dy(i, j) + s * v.dx(i, j)};
  });
}

ComponentMax wave_residual(const FieldGrid& g) {
  const ResidualGrid r = residual_pair(g, [](const Stencil& u, const Stencil& v, int i, int j) {
    return std::pair{u.dxx(i, j) - u.dyy(i, j), v.dxx(i, j) - v.dyy(i, j)};
  });
  return {r.max_r1, r.max_r2};
}

ComponentMax laplace_residual(const FieldGrid& g) {
  const ResidualGrid r = residual_pair(g, [](const Stencil& u, const Stencil& v, int i, int j) {
    return std::pair{u.dxx(i, j) + u.dyy(i, j), v.dxx(i, j) + v.dyy(i, j)};
  });
  return {r.max_r1, r.max_r2};
}

ResidualGrid dbar(const FieldGrid& g) {
  return residual_pair(g, [](const Stencil& u, const Stencil& v, int i, int j) {
    return std::pair{0.5 * (u.dx(i, j) - v.dy(i, j)), 0.5 * (v.dx(i, j) - u.dy(i, j))};
  });
}

double analytic_threshold(const FieldGrid& g) noexcept {
  const double h = std::max(g.geom.hx(), g.geom.hy());
  return std::max(1e-6, 10.0 * h * h * g.scale());
}

bool passes(const ResidualGrid& r, const FieldGrid& g) noexcept {
  return r.max() <= analytic_threshold(g);
}

FieldGrid pointwise_product(const FieldGrid& a, const FieldGrid& b) {
  if (a.sig != b.sig || a.geom.nx != b.geom.nx || a.geom.ny != b.geom.ny ||
      a.geom.xmin != b.geom.xmin || a.geom.xmax != b.geom.xmax || a.geom.ymin != b.geom.ymin ||
      a.geom.ymax != b.geom.ymax) {
    throw Error(ErrorCode::InvalidGrid, "fields live on different grids or signatures");
  }
  FieldGrid out = a;
  const double eps = eps_of(a.sig);
  for (std::size_t k = 0; k < a.u.size(); ++k) {
    out.valid[k] = a.valid[k] && b.valid[k];
    if (!out.valid[k]) {
      out.u[k] = out.v[k] = 0.0;
      continue;
    }
    out.u[k] = a.u[k] * b.u[k] + eps * a.v[k] * b.v[k];
    out.v[k] = a.u[k] * b.v[k] + a.v[k] * b.u[k];
  }
  return out;
}

void write_residual_csv(std::ostream& os, const ResidualGrid& r) {
  os << "x,y,r1,r2\n";
  char buf[160];
  for (int j = 0; j < r.geom.ny; ++j) {
    for (int i = 0; i < r.geom.nx; ++i) {
      const std::size_t k = r.geom.index(i, j);
      if (!r.interior[k]) continue;
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.geom.x_at(i), r.geom.y_at(j),
                    r.r1[k], r.r2[k]);
      os << buf;
    }
  }
}

namespace {

// Angular distance from phi to the nearest direction where dL is singular.
double null_distance(double phi, Signature sig) {
  double offset = 0.0;
  double period = 0.0;
  switch (sig) {
    case Signature::Complex: return std::numbers::pi;
    case Signature::Split:
      offset = std::numbers::pi / 4.0;
      period = std::numbers::pi / 2.0;
      break;
    case Signature::Parabolic:
      offset = std::numbers::pi / 2.0;
      period = std::numbers::pi;
      break;
  }
  const double t = std::remainder(phi - offset, period);
  return std::abs(t);
}

}  // namespace

ProbeReport diff_quotient_probe(const BinarionFn& f, const Binarion& L0,
                                const std::vector<double>& directions,
                                const std::vector<double>& radii, double tol) {
  if (directions.empty() || radii.empty()) {
    throw Error(ErrorCode::InvalidValue, "probe needs at least one direction and one radius");
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0) || (k > 0 && !(radii[k] < radii[k - 1]))) {
      throw Error(ErrorCode::InvalidValue, "probe radii must be positive and strictly decreasing");
    }
  }
  for (double phi : directions) {
    if (null_distance(phi, L0.sig()) <= kNullAngleTol) {
      throw Error(ErrorCode::NullDirection,
                  "NullDirection: angle " + std::to_string(phi) +
                      " runs along a line where L - L0 is not invertible");
    }
  }

  ProbeReport rep;
  rep.radii = radii;
  rep.tol = tol;
  const Binarion f0 = f(L0);
  for (double phi : directions) {
    DirectionProbe d;
    d.angle = phi;
    for (double r : radii) {
      const Binarion L = add(L0, Binarion(r * std::cos(phi), r * std::sin(phi), L0.sig()));
      // divide by the representable step, not the requested one; the null-direction
      // guard keeps its det away from zero, so the general singular floor is skipped
      const Binarion step = sub(L, L0);
      const double dt = det(step);
      if (dt == 0.0 || !std::isfinite(dt)) throw SingularError(dt);
      const Binarion step_inv(step.x() / dt, -step.y() / dt, step.sig());
      d.quotients.push_back(mul(sub(f(L), f0), step_inv));
    }
    d.limit = d.quotients.back();
    rep.directions.push_back(std::move(d));
  }
  for (std::size_t a = 0; a < rep.directions.size(); ++a) {
    for (std::size_t b = a + 1; b < rep.directions.size(); ++b) {
      rep.spread =
          std::max(rep.spread, distance_l2(rep.directions[a].limit, rep.directions[b].limit));
    }
  }
  rep.differentiable = rep.spread <= tol;
  return rep;
}

}  // namespace shiftalg
