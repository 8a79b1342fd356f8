#include "exact/matrices.hpp"

namespace hca {

namespace {

void require_positive_dim(int dim) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
}

}  // namespace

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  require_positive_dim(dim);
  e_.assign(static_cast<std::size_t>(dim) * dim, Int(0));
}

IntMatrix::IntMatrix(int dim, std::initializer_list<long> rowmajor) : IntMatrix(dim) {
  if (rowmajor.size() != e_.size())
    fail(ErrorCode::InvalidArgument, "matrix literal has wrong entry count");
  std::size_t k = 0;
  for (long v : rowmajor) e_[k++] = v;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::is_antisymmetric() const {
  for (int i = 0; i < dim_; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

IntVector IntMatrix::mul(const IntVector& v) const {
  require_same_dim(static_cast<std::size_t>(dim_), v.size(), "IntMatrix::mul");
  IntVector out(dim_, Int(0));
  for (int i = 0; i < dim_; ++i) {
    Int acc(0);
    for (int j = 0; j < dim_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

GaussMatrix::GaussMatrix(int dim) : dim_(dim) {
  require_positive_dim(dim);
  e_.assign(static_cast<std::size_t>(dim) * dim, GaussInt());
}

GaussMatrix GaussMatrix::identity(int dim) {
  GaussMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = GaussInt(1);
  return m;
}

bool GaussMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

bool GaussMatrix::is_self_adjoint() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (!(at(i, j) == at(j, i).conj())) return false;
  return true;
}

GaussMatrix GaussMatrix::adjoint() const {
  GaussMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

GaussMatrix GaussMatrix::mul(const GaussMatrix& o) const {
  require_same_dim(dim_, o.dim_, "GaussMatrix::mul");
  GaussMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const GaussInt& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

GaussMatrix GaussMatrix::operator-(const GaussMatrix& o) const {
  require_same_dim(dim_, o.dim_, "GaussMatrix::operator-");
  GaussMatrix out(dim_);
  for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
  return out;
}

GaussVector GaussMatrix::mul(const GaussVector& v) const {
  require_same_dim(static_cast<std::size_t>(dim_), v.size(), "GaussMatrix::mul");
  GaussVector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    GaussInt acc;
    for (int j = 0; j < dim_; ++j) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace hca
