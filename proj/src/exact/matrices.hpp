#pragma once

#include <initializer_list>

#include "exact/int_types.hpp"

namespace hca {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : dim_(0) {}
  explicit IntMatrix(int dim);
  IntMatrix(int dim, std::initializer_list<long> rowmajor);

  static IntMatrix zero(int dim) { return IntMatrix(dim); }

  int dim() const { return dim_; }
  Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const Int& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  IntVector mul(const IntVector& v) const;

 private:
  int dim_;
  std::vector<Int> e_;
};

/// Square matrix of Gaussian integers, row-major.
class GaussMatrix {
 public:
  GaussMatrix() : dim_(0) {}
  explicit GaussMatrix(int dim);

  static GaussMatrix identity(int dim);
  static GaussMatrix zero(int dim) { return GaussMatrix(dim); }

  int dim() const { return dim_; }
  GaussInt& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const GaussInt& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * dim_ + j];
  }

  bool operator==(const GaussMatrix& o) const {
    return dim_ == o.dim_ && e_ == o.e_;
  }
  bool is_zero() const;
  bool is_self_adjoint() const;

  GaussMatrix adjoint() const;
  GaussMatrix mul(const GaussMatrix& o) const;
  GaussMatrix operator-(const GaussMatrix& o) const;
  GaussVector mul(const GaussVector& v) const;

 private:
  int dim_;
  std::vector<GaussInt> e_;
};

}  // namespace hca
