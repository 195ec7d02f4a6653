#pragma once

#include <vector>

namespace shiftalg {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on the three-term Legendre recurrence.
/// Throws Error(InvalidValue) for order < 1.
GaussLegendre gauss_legendre(int order);

}  // namespace shiftalg
