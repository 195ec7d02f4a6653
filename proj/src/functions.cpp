#include "shiftalg/functions.hpp"

#include <cmath>
#include <numbers>

namespace shiftalg {

namespace {

void require_split(const Binarion& a, const char* fn) {
  if (a.sig() != Signature::Split) {
    throw Error(ErrorCode::UnsupportedSignature,
                std::string("UnsupportedSignature: ") + fn +
                    " is defined for the split signature (eps = +1) only, got " +
                    signature_name(a.sig()));
  }
}

void require_exp_region(const Binarion& a, const char* fn) {
  if (!(a.x() > std::abs(a.y()))) {
    throw DomainError(std::string("DomainError: ") + fn + "(" + to_string(a) +
                      ") is outside the domain {xI+yE in LC2 : x > |y|}");
  }
}

}  // namespace

Binarion exp(const Binarion& a) {
  const double ex = std::exp(a.x());
  switch (a.sig()) {
    case Signature::Split: return {ex * std::cosh(a.y()), ex * std::sinh(a.y()), a.sig()};
    case Signature::Complex: return {ex * std::cos(a.y()), ex * std::sin(a.y()), a.sig()};
    case Signature::Parabolic: return {ex, ex * a.y(), a.sig()};
  }
  return {};
}

Binarion ln(const Binarion& a) {
  require_split(a, "ln");
  require_exp_region(a, "ln");
  return {0.5 * std::log(det(a)), std::atanh(a.y() / a.x()), a.sig()};
}

Binarion sin(const Binarion& a) {
  require_split(a, "sin");
  return {std::sin(a.x()) * std::cos(a.y()), std::cos(a.x()) * std::sin(a.y()), a.sig()};
}

Binarion cos(const Binarion& a) {
  require_split(a, "cos");
  return {std::cos(a.x()) * std::cos(a.y()), -std::sin(a.x()) * std::sin(a.y()), a.sig()};
}

Binarion sqrt(const Binarion& a) {
  require_split(a, "sqrt");
  const double plus = a.x() + a.y();
  const double minus = a.x() - a.y();
  if (plus < 0.0 || minus < 0.0) {
    throw DomainError("DomainError: sqrt(" + to_string(a) +
                      ") needs x + y >= 0 and x - y >= 0");
  }
  const double sp = std::sqrt(plus);
  const double sm = std::sqrt(minus);
  return {0.5 * (sp + sm), 0.5 * (sp - sm), a.sig()};
}

HyperbolicForm to_hyperbolic(const Binarion& a) {
  require_split(a, "to_hyperbolic");
  require_exp_region(a, "to_hyperbolic");
  return {std::sqrt(det(a)), std::atanh(a.y() / a.x())};
}

Binarion from_hyperbolic(const HyperbolicForm& h) {
  if (!(h.rho > 0.0) || !std::isfinite(h.rho) || !std::isfinite(h.theta)) {
    throw Error(ErrorCode::InvalidValue, "hyperbolic form needs finite rho > 0 and finite theta");
  }
  return {h.rho * std::cosh(h.theta), h.rho * std::sinh(h.theta), Signature::Split};
}

HyperbolicForm hyperbolic_product(const HyperbolicForm& a, const HyperbolicForm& b) noexcept {
  return {a.rho * b.rho, a.theta + b.theta};
}

Binarion pow_de_moivre(const Binarion& a, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidValue, "pow_de_moivre needs n >= 1");
  const HyperbolicForm h = to_hyperbolic(a);
  const double rn = std::pow(h.rho, n);
  return {rn * std::cosh(n * h.theta), rn * std::sinh(n * h.theta), a.sig()};
}

double arg_principal(const Binarion& a) {
  if (a.sig() != Signature::Complex) {
    throw Error(ErrorCode::UnsupportedSignature,
                "UnsupportedSignature: arg_principal needs the complex signature (eps = -1)");
  }
  const double x = a.x();
  const double y = a.y();
  constexpr double pi = std::numbers::pi;
  if (x > 0.0) return std::atan(y / x);
  if (x < 0.0) return y > 0.0 ? std::atan(y / x) + pi : std::atan(y / x) - pi;
  if (y > 0.0) return pi / 2.0;
  if (y < 0.0) return -pi / 2.0;
  throw Error(ErrorCode::UndefinedArg, "UndefinedArg: the argument of 0 is undefined");
}

Binarion taylor_oracle(SeriesKind kind, const Binarion& a, int terms) {
  if (terms < 1) throw Error(ErrorCode::InvalidValue, "taylor_oracle needs terms >= 1");
  const Signature sig = a.sig();
  switch (kind) {
    case SeriesKind::Exp: {
      Binarion term = Binarion::identity(sig);
      Binarion sum = term;
      for (int k = 1; k < terms; ++k) {
        term = scale(1.0 / k, mul(term, a));
        sum = add(sum, term);
      }
      return sum;
    }
    case SeriesKind::Sin:
    case SeriesKind::Cos: {
      const Binarion a2 = mul(a, a);
      const bool is_sin = kind == SeriesKind::Sin;
      Binarion term = is_sin ? a : Binarion::identity(sig);
      Binarion sum = term;
      for (int n = 1; n < terms; ++n) {
        const double k = is_sin ? 2.0 * n : 2.0 * n - 1.0;
        term = scale(-1.0 / (k * (k + 1.0)), mul(term, a2));
        sum = add(sum, term);
      }
      return sum;
    }
  }
  return {};
}

}  // namespace shiftalg
