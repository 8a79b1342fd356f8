#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "exact/error.hpp"

namespace hca {

/// Arbitrary-precision signed integer. Every coordinate, momentum and
/// lapse value in the automaton lives in this domain; arithmetic never
/// overflows or rounds.
using Int = mpz_class;

/// Exact rational. Hamiltonian values, pi and action values are
/// half-integers (denominator 1 or 2) but we keep a general exact
/// rational and check the denominator where it matters.
using Rational = mpq_class;

using IntVector = std::vector<Int>;

Rational make_rational(const Int& num, const Int& den);
inline Rational half_of(const Int& v) { return make_rational(v, 2); }

// mpz_class has no long long constructor; long is 64-bit on this target.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

bool is_half_integer(const Rational& r);

std::string int_to_string(const Int& v);
std::string rational_to_string(const Rational& r);  // "k" or "p/q"

Int parse_int(const std::string& text);
Rational parse_rational(const std::string& text);  // accepts "k" and "p/q"

/// Exact conversion to double; refuses magnitudes above 2^53 where the
/// double lattice no longer contains every integer.
double to_double_checked(const Int& v);

/// Complex integer x + ip; the state amplitude domain of the automaton.
struct GaussInt {
  Int re, im;

  GaussInt() : re(0), im(0) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussInt(long r) : re(r), im(0) {}

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussInt operator*(const Int& s) const { return {re * s, im * s}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  GaussInt conj() const { return {re, -im}; }
  bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == 0 && im == 0; }

  std::string to_string() const;
};

using GaussVector = std::vector<GaussInt>;

/// psi = x + ip, componentwise.
GaussVector pack_psi(const IntVector& x, const IntVector& p);
/// Inverse of pack_psi; exact round trip.
void unpack_psi(const GaussVector& psi, IntVector& x, IntVector& p);

GaussInt dot_conj(const GaussVector& a, const GaussVector& b);  // sum conj(a_i) b_i

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace hca
