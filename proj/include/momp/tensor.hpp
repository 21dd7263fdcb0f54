// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace momp {

using Complex = std::complex<double>;
using RowMajorMatrixXcd =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense rank-3 complex tensor with a fixed row-major layout: the flat index
// of entry (a, b, c) is a*n2*n3 + b*n3 + c. This matches the entry order of
// kron3(u, v, w), so vec() and the Kronecker-structured dictionaries agree
// without any permutation. Every tensor/vector conversion in the project
// goes through this class.
class Tensor3 {
 public:
  Tensor3() = default;

  Tensor3(Eigen::Index n1, Eigen::Index n2, Eigen::Index n3)
      : n1_(n1), n2_(n2), n3_(n3) {
    data_ = Eigen::VectorXcd::Zero(n1 * n2 * n3);
  }

  static Tensor3 from_vector(Eigen::VectorXcd v, Eigen::Index n1,
                             Eigen::Index n2, Eigen::Index n3);

  Eigen::Index n1() const { return n1_; }
  Eigen::Index n2() const { return n2_; }
  Eigen::Index n3() const { return n3_; }
  Eigen::Index size() const { return data_.size(); }

  // Size along a 1-based mode.
  Eigen::Index dim(int mode) const;

  Complex& operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) {
    return data_[(a * n2_ + b) * n3_ + c];
  }
  Complex operator()(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
    return data_[(a * n2_ + b) * n3_ + c];
  }

  const Eigen::VectorXcd& vec() const { return data_; }
  Eigen::VectorXcd& vec() { return data_; }

  double squared_norm() const { return data_.squaredNorm(); }
  double norm() const { return data_.norm(); }

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  Tensor3& operator*=(Complex scale);

 private:
  Eigen::Index n1_ = 0, n2_ = 0, n3_ = 0;
  Eigen::VectorXcd data_;
};

// Mode-n product: multiplies the tensor along the given 1-based mode by `m`,
// whose column count must match the mode size. The output mode size is the
// row count of `m`. Pass d.adjoint() for correlation-style products.
Tensor3 mode_n_product(const Tensor3& t, const Eigen::MatrixXcd& m, int mode);

// Squared Frobenius norm of the slice obtained by fixing `index` along the
// given 1-based mode.
double slice_norm_sq(const Tensor3& t, int mode, Eigen::Index index);

// Triple Kronecker product of column vectors; entry order matches the
// Tensor3 flattening.
Eigen::VectorXcd kron3(const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
                       const Eigen::VectorXcd& v3);

// Rank-1 tensor u o v o w, i.e. from_vector(kron3(u, v, w)).
Tensor3 outer3(const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
               const Eigen::VectorXcd& v3);

// Mode-n unfolding. Row i of the mode-1 unfolding is the slice (i, :, :)
// flattened row-major; modes 2 and 3 are defined so that
// mode_n_product(t, m, n) == refold(m * unfold(t, n)). Used by oracles and
// the single-dimension baselines.
Eigen::MatrixXcd unfold(const Tensor3& t, int mode);

}  // namespace momp
