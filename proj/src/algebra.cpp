#include "shiftalg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace shiftalg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::UnsupportedSignature: return "UnsupportedSignature";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::NotOnDiagonal: return "NotOnDiagonal";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::UndefinedArg: return "UndefinedArg";
    case ErrorCode::Shape: return "ShapeError";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NullDirection: return "NullDirection";
    case ErrorCode::Evaluation: return "EvaluationError";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::InvalidContour: return "InvalidContour";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidSignal: return "InvalidSignal";
    case ErrorCode::Lex: return "LexError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_det(double det) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", det);
  return buf;
}

void require_same_sig(const Binarion& a, const Binarion& b) {
  if (a.sig() != b.sig()) {
    throw Error(ErrorCode::SignatureMismatch,
                std::string("signature mismatch: ") + signature_name(a.sig()) +
                    " vs " + signature_name(b.sig()));
  }
}

}  // namespace

SingularError::SingularError(double det)
    : Error(ErrorCode::Singular, "Singular: element is not invertible (det = " +
                                     format_det(det) + ")"),
      det_(det) {}

LexError::LexError(std::size_t position, char ch)
    : SyntaxError(ErrorCode::Lex, position,
                  "LexError at position " + std::to_string(position) +
                      ": unexpected character '" + std::string(1, ch) + "'"),
      ch_(ch) {}

ParseError::ParseError(std::size_t position, const std::string& expected)
    : SyntaxError(ErrorCode::Parse, position,
                  "ParseError at position " + std::to_string(position) +
                      ": expected " + expected),
      expected_(expected) {}

Signature signature_from_int(int eps) {
  switch (eps) {
    case -1: return Signature::Complex;
    case 0: return Signature::Parabolic;
    case 1: return Signature::Split;
    default:
      throw Error(ErrorCode::InvalidValue,
                  "signature must be -1, 0 or 1, got " + std::to_string(eps));
  }
}

const char* signature_name(Signature s) noexcept {
  switch (s) {
    case Signature::Complex: return "complex";
    case Signature::Parabolic: return "parabolic";
    case Signature::Split: return "split";
  }
  return "?";
}

Binarion::Binarion(double x, double y, Signature sig) : x_(x), y_(y), sig_(sig) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::InvalidValue, "Binarion components must be finite");
  }
  switch (sig) {
    case Signature::Complex:
    case Signature::Parabolic:
    case Signature::Split: break;
    default: throw Error(ErrorCode::InvalidValue, "invalid signature");
  }
}

Binarion add(const Binarion& a, const Binarion& b) {
  require_same_sig(a, b);
  return {a.x() + b.x(), a.y() + b.y(), a.sig()};
}

Binarion sub(const Binarion& a, const Binarion& b) {
  require_same_sig(a, b);
  return {a.x() - b.x(), a.y() - b.y(), a.sig()};
}

Binarion neg(const Binarion& a) { return {-a.x(), -a.y(), a.sig()}; }

Binarion scale(double c, const Binarion& a) { return {c * a.x(), c * a.y(), a.sig()}; }

Binarion mul(const Binarion& a, const Binarion& b) {
  require_same_sig(a, b);
  const double eps = a.eps();
  return {a.x() * b.x() + eps * a.y() * b.y(), a.x() * b.y() + b.x() * a.y(), a.sig()};
}

Binarion conj(const Binarion& a) { return {a.x(), -a.y(), a.sig()}; }

double det(const Binarion& a) noexcept {
  return a.x() * a.x() - a.eps() * a.y() * a.y();
}

double trace(const Binarion& a) noexcept { return 2.0 * a.x(); }

Spectrum spectrum(const Binarion& a) {
  using C = std::complex<double>;
  switch (a.sig()) {
    case Signature::Split: return {C(a.x() + a.y()), C(a.x() - a.y())};
    case Signature::Parabolic: return {C(a.x()), C(a.x())};
    case Signature::Complex: return {C(a.x(), a.y()), C(a.x(), -a.y())};
  }
  return {};
}

double norm(const Binarion& a, NormKind p) noexcept {
  switch (p) {
    case NormKind::L1: return std::abs(a.x()) + std::abs(a.y());
    case NormKind::L2: return std::hypot(a.x(), a.y());
    case NormKind::Inf: return std::max(std::abs(a.x()), std::abs(a.y()));
  }
  return 0.0;
}

double singular_tolerance(const Binarion& a) noexcept {
  const double n2 = a.x() * a.x() + a.y() * a.y();
  return 1e-12 * std::max(1.0, n2);
}

Binarion inv(const Binarion& a) {
  const double d = det(a);
  if (std::abs(d) <= singular_tolerance(a)) throw SingularError(d);
  return {a.x() / d, -a.y() / d, a.sig()};
}

Binarion div(const Binarion& a, const Binarion& b) {
  require_same_sig(a, b);
  return mul(a, inv(b));
}

Binarion pow(const Binarion& a, int n) {
  if (n < 0) return pow(inv(a), -n);
  Binarion result = Binarion::identity(a.sig());
  Binarion base = a;
  unsigned k = static_cast<unsigned>(n);
  while (k != 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k != 0) base = mul(base, base);
  }
  return result;
}

std::string to_string(const Binarion& a) {
  char buf[96];
  const double y = a.y();
  std::snprintf(buf, sizeof buf, "%.12gI %c %.12gE", a.x() == 0.0 ? 0.0 : a.x(),
                std::signbit(y) && y != 0.0 ? '-' : '+', std::abs(y));
  return buf;
}

double distance_inf(const Binarion& a, const Binarion& b) noexcept {
  return std::max(std::abs(a.x() - b.x()), std::abs(a.y() - b.y()));
}

double distance_l2(const Binarion& a, const Binarion& b) noexcept {
  return std::hypot(a.x() - b.x(), a.y() - b.y());
}

}  // namespace shiftalg
