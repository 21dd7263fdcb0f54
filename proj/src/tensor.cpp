// SPDX-License-Identifier: Apache-2.0
#include "momp/tensor.hpp"

#include <stdexcept>
#include <utility>

namespace momp {

namespace {

using ConstRowMap = Eigen::Map<const RowMajorMatrixXcd>;
using RowMap = Eigen::Map<RowMajorMatrixXcd>;

void check_mode(int mode) {
  if (mode < 1 || mode > 3) throw std::invalid_argument("mode must be 1, 2 or 3");
}

}  // namespace

Tensor3 Tensor3::from_vector(Eigen::VectorXcd v, Eigen::Index n1,
                             Eigen::Index n2, Eigen::Index n3) {
  if (v.size() != n1 * n2 * n3)
    throw std::invalid_argument("from_vector: size does not match dims");
  Tensor3 t;
  t.n1_ = n1;
  t.n2_ = n2;
  t.n3_ = n3;
  t.data_ = std::move(v);
  return t;
}

Eigen::Index Tensor3::dim(int mode) const {
  check_mode(mode);
  return mode == 1 ? n1_ : (mode == 2 ? n2_ : n3_);
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (other.size() != size()) throw std::invalid_argument("tensor shape mismatch");
  data_ += other.data_;
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (other.size() != size()) throw std::invalid_argument("tensor shape mismatch");
  data_ -= other.data_;
  return *this;
}

Tensor3& Tensor3::operator*=(Complex scale) {
  data_ *= scale;
  return *this;
}

Tensor3 mode_n_product(const Tensor3& t, const Eigen::MatrixXcd& m, int mode) {
  check_mode(mode);
  if (m.cols() != t.dim(mode))
    throw std::invalid_argument("mode_n_product: matrix columns must match mode size");

  const Eigen::Index n1 = t.n1(), n2 = t.n2(), n3 = t.n3();
  const Eigen::Index r = m.rows();

  if (mode == 1) {
    Tensor3 out(r, n2, n3);
    ConstRowMap in(t.vec().data(), n1, n2 * n3);
    RowMap(out.vec().data(), r, n2 * n3).noalias() = m * in;
    return out;
  }
  if (mode == 2) {
    Tensor3 out(n1, r, n3);
    for (Eigen::Index a = 0; a < n1; ++a) {
      ConstRowMap slice(t.vec().data() + a * n2 * n3, n2, n3);
      RowMap(out.vec().data() + a * r * n3, r, n3).noalias() = m * slice;
    }
    return out;
  }
  Tensor3 out(n1, n2, r);
  ConstRowMap in(t.vec().data(), n1 * n2, n3);
  RowMap(out.vec().data(), n1 * n2, r).noalias() = in * m.transpose();
  return out;
}

double slice_norm_sq(const Tensor3& t, int mode, Eigen::Index index) {
  check_mode(mode);
  if (index < 0 || index >= t.dim(mode))
    throw std::out_of_range("slice_norm_sq: index out of range");

  const Eigen::Index n1 = t.n1(), n2 = t.n2(), n3 = t.n3();
  if (mode == 1) {
    ConstRowMap in(t.vec().data(), n1, n2 * n3);
    return in.row(index).squaredNorm();
  }
  if (mode == 2) {
    double sum = 0.0;
    for (Eigen::Index a = 0; a < n1; ++a)
      for (Eigen::Index c = 0; c < n3; ++c) sum += std::norm(t(a, index, c));
    return sum;
  }
  double sum = 0.0;
  for (Eigen::Index a = 0; a < n1; ++a)
    for (Eigen::Index b = 0; b < n2; ++b) sum += std::norm(t(a, b, index));
  return sum;
}

Eigen::VectorXcd kron3(const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
                       const Eigen::VectorXcd& v3) {
  const Eigen::Index l1 = v1.size(), l2 = v2.size(), l3 = v3.size();
  Eigen::VectorXcd out(l1 * l2 * l3);
  Eigen::Index n = 0;
  for (Eigen::Index a = 0; a < l1; ++a)
    for (Eigen::Index b = 0; b < l2; ++b) {
      const Complex ab = v1[a] * v2[b];
      for (Eigen::Index c = 0; c < l3; ++c) out[n++] = ab * v3[c];
    }
  return out;
}

Tensor3 outer3(const Eigen::VectorXcd& v1, const Eigen::VectorXcd& v2,
               const Eigen::VectorXcd& v3) {
  return Tensor3::from_vector(kron3(v1, v2, v3), v1.size(), v2.size(), v3.size());
}

Eigen::MatrixXcd unfold(const Tensor3& t, int mode) {
  check_mode(mode);
  const Eigen::Index n1 = t.n1(), n2 = t.n2(), n3 = t.n3();
  if (mode == 1) return ConstRowMap(t.vec().data(), n1, n2 * n3);
  if (mode == 3) return ConstRowMap(t.vec().data(), n1 * n2, n3).transpose();
  Eigen::MatrixXcd out(n2, n1 * n3);
  for (Eigen::Index a = 0; a < n1; ++a)
    for (Eigen::Index b = 0; b < n2; ++b)
      for (Eigen::Index c = 0; c < n3; ++c) out(b, a * n3 + c) = t(a, b, c);
  return out;
}

}  // namespace momp
