#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "shiftalg/field.hpp"
#include "shiftalg/functions.hpp"

using namespace shiftalg;

namespace {

GridGeometry square(int n, double lo = -1.0, double hi = 1.0) { return {lo, hi, lo, hi, n, n}; }

FieldGrid from_components(const GridGeometry& g, double (*u)(double, double),
                          double (*v)(double, double)) {
  std::vector<double> us(g.size());
  std::vector<double> vs(g.size());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      us[g.index(i, j)] = u(g.x_at(i), g.y_at(j));
      vs[g.index(i, j)] = v(g.x_at(i), g.y_at(j));
    }
  }
  return FieldGrid::from_arrays(g, Signature::Split, std::move(us), std::move(vs));
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(square(2).validate(), Error);
  CHECK_THROWS_AS((GridGeometry{1, 1, 0, 1, 5, 5}.validate()), Error);
  CHECK_NOTHROW(square(3).validate());
  try {
    (void)FieldGrid::from_arrays(square(3), Signature::Split, {1, 2}, {1, 2});
    FAIL("expected InvalidGrid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGrid);
  }
}

TEST_CASE("the split square L^2 satisfies the split CR equations") {
  const FieldGrid g = sample_field([](const Binarion& l) { return l * l; }, square(101));
  // u = x^2 + y^2, v = 2xy
  CHECK(g.u[g.geom.index(100, 100)] == doctest::Approx(2.0));
  const ResidualGrid r = cr_residual(g, CrSense::Split);
  CHECK(r.max() <= 1e-6);
  CHECK(passes(r, g));
  CHECK(wave_residual(g).max() <= 1e-6);
  // the Laplacian of x^2 + y^2 is 4, not 0
  CHECK(laplace_residual(g).u == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(dbar(g).max() <= 1e-6);
}

TEST_CASE("the complex square fails the split equations and passes the complex ones") {
  const FieldGrid g = from_components(
      square(101), [](double x, double y) { return x * x - y * y; },
      [](double x, double y) { return 2 * x * y; });
  const ResidualGrid split = cr_residual(g, CrSense::Split);
  // r2 = u_y - v_x = -2y - 2y, largest on the interior rows y = +-0.98
  CHECK(split.max_r2 == doctest::Approx(3.92).epsilon(1e-9));
  CHECK(split.max() >= 3.9);
  CHECK_FALSE(passes(split, g));
  const ResidualGrid cx = cr_residual(g, CrSense::Complex);
  CHECK(cx.max() <= 1e-6);
  CHECK(passes(cx, g));
  CHECK(laplace_residual(g).max() <= 1e-6);
}

TEST_CASE("conjugation fails both senses") {
  const FieldGrid g = sample_field([](const Binarion& l) { return conj(l); }, square(101));
  const ResidualGrid s = cr_residual(g, CrSense::Split);
  const ResidualGrid c = cr_residual(g, CrSense::Complex);
  CHECK(s.max() >= 1.9);
  CHECK(c.max() >= 1.9);
  CHECK_FALSE(passes(s, g));
  CHECK_FALSE(passes(c, g));
  // d conj(L) / d Lbar = I
  const ResidualGrid d = dbar(g);
  CHECK(d.max_r1 == doctest::Approx(1.0));
  CHECK(d.max_r2 <= 1e-12);
}

TEST_CASE("residuals of smooth fields are second order") {
  // u + iv = e^(x + iy) in the complex sense on a square grid
  auto cexp = [](int n) {
    const FieldGrid g = sample_field([](const Binarion& l) { return exp(l); },
                                     GridGeometry{0, 1, 0, 1, n, n}, Signature::Complex);
    return cr_residual(g, CrSense::Complex).max();
  };
  const double ratio_c = cexp(21) / cexp(41);
  CHECK(ratio_c >= 3.5);
  CHECK(ratio_c <= 4.5);

  // split exp on a rectangular grid (hx != hy)
  auto sexp = [](int nx, int ny) {
    const FieldGrid g = sample_field([](const Binarion& l) { return exp(l); },
                                     GridGeometry{0, 1, 0, 2, nx, ny});
    return cr_residual(g, CrSense::Split).max();
  };
  const double ratio_s = sexp(21, 21) / sexp(41, 41);
  CHECK(ratio_s >= 3.5);
  CHECK(ratio_s <= 4.5);
}

TEST_CASE("products of split-analytic fields stay split-analytic") {
  const GridGeometry geom = square(81);
  const FieldGrid a = sample_field([](const Binarion& l) { return exp(l); }, geom);
  const FieldGrid b = sample_field([](const Binarion& l) { return l * l * l; }, geom);
  const FieldGrid p = pointwise_product(a, b);
  const FieldGrid direct = sample_field([](const Binarion& l) { return exp(l) * l * l * l; }, geom);
  for (std::size_t k = 0; k < p.u.size(); ++k) {
    CHECK(p.u[k] == doctest::Approx(direct.u[k]).epsilon(1e-12));
    CHECK(p.v[k] == doctest::Approx(direct.v[k]).epsilon(1e-12));
  }
  CHECK(passes(cr_residual(p, CrSense::Split), p));
}

TEST_CASE("samples where f fails are masked out of the residuals") {
  // ln is undefined off x > |y|; on [0.1, 2] x [-1, 1] that cuts a wedge out
  const GridGeometry geom{0.1, 2.0, -1.0, 1.0, 41, 41};
  const FieldGrid g = sample_field([](const Binarion& l) { return ln(l); }, geom);
  std::size_t masked = 0;
  for (auto v : g.valid) masked += v ? 0 : 1;
  CHECK(masked > 0);
  CHECK(masked < g.valid.size());
  const ResidualGrid r = cr_residual(g, CrSense::Split);
  for (int j = 1; j < geom.ny - 1; ++j) {
    for (int i = 1; i < geom.nx - 1; ++i) {
      if (!g.valid[geom.index(i, j)]) CHECK_FALSE(r.interior[geom.index(i, j)]);
    }
  }
  CHECK(std::isfinite(r.max()));
}

TEST_CASE("residual CSV export") {
  const FieldGrid g = sample_field([](const Binarion& l) { return l; }, square(4));
  std::ostringstream os;
  write_residual_csv(os, cr_residual(g, CrSense::Split));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,r1,r2");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);  // interior nodes of a 4x4 grid
}

TEST_CASE("difference quotients along several directions") {
  const std::vector<double> radii{1e-3, 1e-5, 1e-7};
  const std::vector<double> dirs{0.0, 0.3, 1.2, 2.0, -0.4};
  const Binarion l0(1.0, 0.5);

  const ProbeReport sq = diff_quotient_probe([](const Binarion& l) { return l * l; }, l0, dirs, radii);
  CHECK(sq.differentiable);
  for (const DirectionProbe& d : sq.directions) {
    CHECK(distance_l2(d.limit, Binarion(2.0, 1.0)) <= 1e-6);
  }

  const ProbeReport cj = diff_quotient_probe([](const Binarion& l) { return conj(l); }, l0, dirs, radii);
  CHECK_FALSE(cj.differentiable);
  CHECK(cj.spread > 0.1);

  try {
    (void)diff_quotient_probe([](const Binarion& l) { return l; }, l0,
                              {std::numbers::pi / 4}, radii);
    FAIL("expected NullDirection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NullDirection);
  }
  CHECK_THROWS_AS(diff_quotient_probe([](const Binarion& l) { return l; }, l0, dirs, {1e-3, 1e-2}),
                  Error);

  // the complex signature has no null directions
  const Binarion c0(1.0, 0.5, Signature::Complex);
  const ProbeReport cs = diff_quotient_probe([](const Binarion& l) { return exp(l); }, c0,
                                             {0.0, std::numbers::pi / 4, std::numbers::pi / 2}, radii);
  CHECK(cs.differentiable);
}
