// SPDX-License-Identifier: Apache-2.0
#include "phonon/linalg.hpp"

#include <algorithm>

#include <Eigen/LU>

#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>

namespace phonon::linalg {

std::vector<double> singular_values(const MatXc& A) {
  int n = int(A.rows());
  MatXc work = A;  // zgesdd destroys its input
  std::vector<double> s(n);
  int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', n, n, work.data(), n,
                            s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  return s;
}

double sigma_min(const MatXc& A) { return singular_values(A).back(); }

double sigma_min_rel(const MatXc& A) {
  auto s = singular_values(A);
  return s.back() / s.front();
}

double sigma_min_vector(const MatXc& A, VecXc& v_min) {
  int n = int(A.rows());
  MatXc work = A;
  std::vector<double> s(n);
  MatXc U(n, n), VT(n, n);
  int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'A', n, n, work.data(), n,
                            s.data(), U.data(), n, VT.data(), n);
  if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
  v_min = VT.row(n - 1).conjugate().transpose();
  return s[n - 1];
}

double log_abs_det(const MatXc& A) {
  Eigen::PartialPivLU<MatXc> lu(A);
  double acc = 0.0;
  for (int i = 0; i < A.rows(); ++i) acc += std::log(std::abs(lu.matrixLU()(i, i)));
  return acc;
}

}  // namespace phonon::linalg
