#pragma once

// Elementary functions of L = xI + yE, the hyperbolic polar form on
// E = {x > |y|}, and truncated power series used as independent oracles.

#include "shiftalg/algebra.hpp"

namespace shiftalg {

/// rho * e^{theta E} = rho (cosh theta I + sinh theta E).
struct HyperbolicForm {
  double rho = 1.0;
  double theta = 0.0;
};

/// Closed forms for every signature:
///   eps = +1  e^x (cosh y I + sinh y E)
///   eps = -1  e^x (cos y I + sin y E)
///   eps =  0  e^x (I + y E)
Binarion exp(const Binarion& a);

/// Principal logarithm on {x > |y|}: 0.5 ln(x^2 - y^2) I + atanh(y/x) E.
/// Split signature only.
Binarion ln(const Binarion& a);

/// sin(x)cos(y) I + cos(x)sin(y) E. Split signature only.
Binarion sin(const Binarion& a);
/// cos(x)cos(y) I - sin(x)sin(y) E. Split signature only.
Binarion cos(const Binarion& a);

/// Principal square root, defined when x + y >= 0 and x - y >= 0.
/// The result has a non-negative identity component.
Binarion sqrt(const Binarion& a);

HyperbolicForm to_hyperbolic(const Binarion& a);
Binarion from_hyperbolic(const HyperbolicForm& h);
HyperbolicForm hyperbolic_product(const HyperbolicForm& a, const HyperbolicForm& b) noexcept;

/// rho^n (cosh n theta I + sinh n theta E) for a in E, n >= 1.
Binarion pow_de_moivre(const Binarion& a, int n);

/// Principal argument in [-pi, pi) for the complex signature.
/// Throws Error(UndefinedArg) at 0.
double arg_principal(const Binarion& a);

enum class SeriesKind { Exp, Sin, Cos };

/// Partial sum of the defining power series with `terms` terms, built from
/// mul/add/scale only:
///   Exp  sum_{k<terms} a^k / k!
///   Sin  sum_{n<terms} (-1)^n a^{2n+1} / (2n+1)!
///   Cos  sum_{n<terms} (-1)^n a^{2n} / (2n)!
Binarion taylor_oracle(SeriesKind kind, const Binarion& a, int terms);

inline constexpr int kExpOracleTerms = 60;
inline constexpr int kTrigOracleTerms = 40;

}  // namespace shiftalg
