#include "conservation/unitaries.hpp"

#include <algorithm>
#include <numeric>

namespace hca {

UnitaryVerdict admissible_unitary_check(const GaussMatrix& u,
                                        const HamiltonianSpec& spec) {
  require_same_dim(u.dim(), spec.dim(), "admissible_unitary_check");
  UnitaryVerdict verdict;
  verdict.unitary = u.adjoint().mul(u) == GaussMatrix::identity(u.dim());
  verdict.commutes = commutator(u, spec.h()).is_zero();
  return verdict;
}

namespace {

GaussInt phase_value(int k) {
  switch (k & 3) {
    case 0: return GaussInt(Int(1), Int(0));
    case 1: return GaussInt(Int(0), Int(1));
    case 2: return GaussInt(Int(-1), Int(0));
    default: return GaussInt(Int(0), Int(-1));
  }
}

}  // namespace

std::vector<GaussMatrix> enumerate_admissible_unitaries(
    const HamiltonianSpec& spec, int max_dim) {
  const int n = spec.dim();
  if (n > max_dim)
    fail(ErrorCode::DimensionTooLarge,
         "admissible-unitary search limited to dimension " +
             std::to_string(max_dim));
  std::vector<GaussMatrix> found;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const long phase_count = 1L << (2 * n);  // 4^n phase assignments
  do {
    for (long code = 0; code < phase_count; ++code) {
      GaussMatrix u(n);
      long rest = code;
      for (int i = 0; i < n; ++i) {
        u.at(i, perm[i]) = phase_value(static_cast<int>(rest & 3));
        rest >>= 2;
      }
      if (commutator(u, spec.h()).is_zero()) found.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace hca
