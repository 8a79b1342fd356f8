#include "exact/hamiltonian.hpp"

namespace hca {

HamiltonianSpec HamiltonianSpec::build(IntMatrix s, IntMatrix a) {
  if (s.dim() != a.dim())
    fail(ErrorCode::DimensionMismatch, "S and A must have equal dimension");
  if (!s.is_symmetric()) fail(ErrorCode::NotSymmetric, "S is not symmetric");
  if (!a.is_antisymmetric())
    fail(ErrorCode::NotAntisymmetric, "A is not antisymmetric");
  GaussMatrix h(s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) h.at(i, j) = GaussInt(s.at(i, j), a.at(i, j));
  return HamiltonianSpec(std::move(s), std::move(a), std::move(h));
}

GaussMatrix commutator(const GaussMatrix& g, const GaussMatrix& h) {
  require_same_dim(g.dim(), h.dim(), "commutator");
  return g.mul(h) - h.mul(g);
}

namespace {

Int dot(const IntVector& a, const IntVector& b) {
  Int acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

Rational h_value_xp(const HamiltonianSpec& spec, const IntVector& x,
                    const IntVector& p) {
  require_same_dim(static_cast<std::size_t>(spec.dim()), x.size(), "h_value_xp");
  require_same_dim(x.size(), p.size(), "h_value_xp");
  Int quad = dot(x, spec.s().mul(x)) + dot(p, spec.s().mul(p));
  Int cross = dot(p, spec.a().mul(x));
  return half_of(quad) + Rational(cross);
}

Rational h_value_psi(const HamiltonianSpec& spec, const GaussVector& psi) {
  require_same_dim(static_cast<std::size_t>(spec.dim()), psi.size(), "h_value_psi");
  GaussInt form = dot_conj(psi, spec.h().mul(psi));
  // psi^dag H psi is real for self-adjoint H; anything else is a bug.
  if (form.im != 0)
    fail(ErrorCode::Internal, "h_value_psi produced a non-real quadratic form");
  return half_of(form.re);
}

}  // namespace hca
