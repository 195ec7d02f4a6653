#pragma once

// Finite-difference analysis of component fields u(x, y), v(x, y) of
// f(xI + yE) = uI + vE on a uniform rectangular grid.
//
// All derivatives are second-order central differences evaluated on interior
// nodes only; boundary nodes (and nodes next to a masked sample) are left out
// of every residual.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "shiftalg/algebra.hpp"

namespace shiftalg {

using BinarionFn = std::function<Binarion(const Binarion&)>;

struct GridGeometry {
  double xmin = -1.0;
  double xmax = 1.0;
  double ymin = -1.0;
  double ymax = 1.0;
  int nx = 3;
  int ny = 3;

  double hx() const noexcept { return (xmax - xmin) / (nx - 1); }
  double hy() const noexcept { return (ymax - ymin) / (ny - 1); }
  double x_at(int i) const noexcept { return xmin + i * hx(); }
  double y_at(int j) const noexcept { return ymin + j * hy(); }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }

  /// Throws Error(InvalidGrid) for nx, ny < 3 or an empty/non-finite box.
  void validate() const;
};

/// Row-major samples (row j = fixed y). `valid` is 0 where f failed or
/// produced a non-finite value; those entries of u and v hold 0.
struct FieldGrid {
  GridGeometry geom;
  Signature sig = Signature::Split;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<std::uint8_t> valid;

  /// Builds a fully valid grid; throws Error(InvalidGrid) on size mismatch or
  /// non-finite samples.
  static FieldGrid from_arrays(const GridGeometry& g, Signature sig, std::vector<double> u,
                               std::vector<double> v);

  /// max |u|, |v| over valid nodes.
  double scale() const noexcept;
};

struct ResidualGrid {
  GridGeometry geom;
  std::vector<double> r1;
  std::vector<double> r2;
  std::vector<std::uint8_t> interior;
  double max_r1 = 0.0;
  double max_r2 = 0.0;

  double max() const noexcept { return max_r1 > max_r2 ? max_r1 : max_r2; }
};

enum class CrSense { Split, Complex };

FieldGrid sample_field(const BinarionFn& f, const GridGeometry& g,
                       Signature sig = Signature::Split);

/// r1 = u_x - v_y; r2 = u_y - v_x (split) or u_y + v_x (complex).
ResidualGrid cr_residual(const FieldGrid& g, CrSense sense);

struct ComponentMax {
  double u = 0.0;
  double v = 0.0;
  double max() const noexcept { return u > v ? u : v; }
};

/// max |u_xx - u_yy|, |v_xx - v_yy| over interior nodes.
ComponentMax wave_residual(const FieldGrid& g);
/// max |u_xx + u_yy|, |v_xx + v_yy| over interior nodes.
ComponentMax laplace_residual(const FieldGrid& g);

/// df/dLbar = 0.5 (u_x - v_y) I + 0.5 (v_x - u_y) E, stored as r1 (I part)
/// and r2 (E part).
ResidualGrid dbar(const FieldGrid& g);

/// Residuals at or below max(1e-6, 10 h^2 scale) are read as discretization
/// error; anything larger as a genuine failure of the equations.
double analytic_threshold(const FieldGrid& g) noexcept;
bool passes(const ResidualGrid& r, const FieldGrid& g) noexcept;

/// Pointwise algebra product of two fields on the same grid.
FieldGrid pointwise_product(const FieldGrid& a, const FieldGrid& b);

/// CSV rows "x,y,r1,r2" for interior nodes, with a header line.
void write_residual_csv(std::ostream& os, const ResidualGrid& r);

struct DirectionProbe {
  double angle = 0.0;
  std::vector<Binarion> quotients;  // one per radius
  Binarion limit;                   // quotient at the smallest radius
};

struct ProbeReport {
  std::vector<double> radii;
  std::vector<DirectionProbe> directions;
  double spread = 0.0;  // max pairwise |limit_i - limit_j|_2
  double tol = 0.0;
  bool differentiable = false;
};

/// Evaluates (f(L0 + dL) - f(L0)) / dL with dL = r (cos phi I + sin phi E)
/// for every (phi, r). Directions within 1e-3 rad of a null direction of the
/// signature (|cos| = |sin| for split, phi = pi/2 mod pi for parabolic)
/// throw Error(NullDirection). Radii must be positive and strictly
/// decreasing.
ProbeReport diff_quotient_probe(const BinarionFn& f, const Binarion& L0,
                                const std::vector<double>& directions,
                                const std::vector<double>& radii, double tol = 1e-5);

inline constexpr double kNullAngleTol = 1e-3;

}  // namespace shiftalg
