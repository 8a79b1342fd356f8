#include "exact/int_types.hpp"

#include <cctype>

namespace hca {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NonConsecutiveStates: return "NonConsecutiveStates";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BoundarySite: return "BoundarySite";
    case ErrorCode::ZeroVariation: return "ZeroVariation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NonFiniteTime: return "NonFiniteTime";
    case ErrorCode::OutsideTrustedRegion: return "OutsideTrustedRegion";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnstableSpectrum: return "UnstableSpectrum";
    case ErrorCode::StabilityViolated: return "StabilityViolated";
    case ErrorCode::TooFewScales: return "TooFewScales";
    case ErrorCode::FloatOverflow: return "FloatOverflow";
    case ErrorCode::NonConstantLapse: return "NonConstantLapse";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_half_integer(const Rational& r) {
  return r.get_den() == 1 || r.get_den() == 2;
}

std::string int_to_string(const Int& v) { return v.get_str(); }

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

bool valid_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& text) {
  if (!valid_decimal(text))
    fail(ErrorCode::ParseError, "not a decimal integer: '" + text + "'");
  return Int(text);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rational(num, den);
}

double to_double_checked(const Int& v) {
  static const Int kLimit = Int(1) << 53;
  if (cmp(abs(v), kLimit) > 0)
    fail(ErrorCode::FloatOverflow,
         "integer magnitude exceeds 2^53, refusing lossy float conversion: " +
             v.get_str());
  return v.get_d();
}

std::string GaussInt::to_string() const {
  return "(" + re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i)";
}

GaussVector pack_psi(const IntVector& x, const IntVector& p) {
  require_same_dim(x.size(), p.size(), "pack_psi");
  GaussVector psi(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) psi[i] = GaussInt(x[i], p[i]);
  return psi;
}

void unpack_psi(const GaussVector& psi, IntVector& x, IntVector& p) {
  x.resize(psi.size());
  p.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    x[i] = psi[i].re;
    p[i] = psi[i].im;
  }
}

GaussInt dot_conj(const GaussVector& a, const GaussVector& b) {
  require_same_dim(a.size(), b.size(), "dot_conj");
  GaussInt acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].conj() * b[i];
  return acc;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": dimensions " +
                                           std::to_string(a) + " vs " +
                                           std::to_string(b));
}

}  // namespace hca
