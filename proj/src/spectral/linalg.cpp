#include "spectral/linalg.hpp"

#include <cmath>

namespace hca {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  e_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexVector ComplexMatrix::mul(const ComplexVector& v) const {
  require_same_dim(static_cast<std::size_t>(dim_), v.size(), "ComplexMatrix::mul");
  ComplexVector out(dim_, Complex(0.0, 0.0));
  for (int i = 0; i < dim_; ++i) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < dim_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix ComplexMatrix::mul(const ComplexMatrix& o) const {
  require_same_dim(dim_, o.dim_, "ComplexMatrix::mul");
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      Complex a = at(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(double s) const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out.at(i, j) = at(i, j) * s;
  return out;
}

ComplexMatrix to_float(const GaussMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      out.at(i, j) = Complex(to_double_checked(m.at(i, j).re),
                             to_double_checked(m.at(i, j).im));
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) acc += std::norm(m.at(i, j));
  return std::sqrt(acc);
}

double hermiticity_defect(const ComplexMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
  return worst;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix ab = a.mul(b);
  ComplexMatrix ba = b.mul(a);
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) acc += std::norm(ab.at(i, j) - ba.at(i, j));
  return std::sqrt(acc);
}

double inf_norm(const ComplexVector& v) {
  double worst = 0.0;
  for (const Complex& z : v) worst = std::max(worst, std::abs(z));
  return worst;
}

double norm2(const ComplexVector& v) {
  double acc = 0.0;
  for (const Complex& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.size(), b.size(), "inner");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace hca
