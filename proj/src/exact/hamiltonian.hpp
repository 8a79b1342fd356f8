#pragma once

#include "exact/matrices.hpp"

namespace hca {

/// Validated pair of integer coupling matrices together with the derived
/// self-adjoint Gaussian-integer matrix H = S + iA.
///
/// S must be exactly symmetric and A exactly antisymmetric; both conditions
/// are enforced at construction and nowhere else.
class HamiltonianSpec {
 public:
  static HamiltonianSpec build(IntMatrix s, IntMatrix a);

  int dim() const { return s_.dim(); }
  const IntMatrix& s() const { return s_; }
  const IntMatrix& a() const { return a_; }
  const GaussMatrix& h() const { return h_; }

 private:
  HamiltonianSpec(IntMatrix s, IntMatrix a, GaussMatrix h)
      : s_(std::move(s)), a_(std::move(a)), h_(std::move(h)) {}

  IntMatrix s_;
  IntMatrix a_;
  GaussMatrix h_;
};

/// GH - HG, exact. Zero matrix iff the arguments commute.
GaussMatrix commutator(const GaussMatrix& g, const GaussMatrix& h);

/// Hamiltonian value (1/2) (x'Sx + p'Sp) + p'Ax as an exact rational with
/// denominator 1 or 2.
Rational h_value_xp(const HamiltonianSpec& spec, const IntVector& x,
                    const IntVector& p);

/// Hamiltonian value (1/2) psi^dag H psi. Agrees with h_value_xp on the
/// unpacked x, p by an algebraic identity; both routes are kept so they can
/// cross-check each other.
Rational h_value_psi(const HamiltonianSpec& spec, const GaussVector& psi);

}  // namespace hca
