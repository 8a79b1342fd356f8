#pragma once

#include <complex>

#include "exact/hamiltonian.hpp"

namespace hca {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major, double precision.
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Complex& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  ComplexVector mul(const ComplexVector& v) const;
  ComplexMatrix mul(const ComplexMatrix& o) const;
  ComplexMatrix scaled(double s) const;

 private:
  int dim_;
  std::vector<Complex> e_;
};

ComplexMatrix to_float(const GaussMatrix& m);
inline ComplexMatrix to_float(const HamiltonianSpec& spec) {
  return to_float(spec.h());
}

double frobenius_norm(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);  // max |m_ij - conj(m_ji)|
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

double inf_norm(const ComplexVector& v);
double norm2(const ComplexVector& v);
Complex inner(const ComplexVector& a, const ComplexVector& b);  // conj(a).b

}  // namespace hca
