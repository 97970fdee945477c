// Copyright 2026 The qae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qae/types.hpp"

#include <cmath>
#include <sstream>

namespace qae {

void check_pure_state(const PureState& psi) {
  if (psi.dim() < 1) {
    throw std::invalid_argument("check_pure_state: empty amplitude vector");
  }
  const double norm2 = psi.amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kNorm) {
    std::ostringstream ss;
    ss << "check_pure_state: squared norm " << norm2 << " deviates from 1";
    throw std::invalid_argument(ss.str());
  }
}

bool is_valid_density_matrix(const DensityMatrix& rho, std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  const Matrix& m = rho.entries;
  if (m.rows() < 1 || m.rows() != m.cols()) {
    return fail("density matrix is not square");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::kHermitian) {
    std::ostringstream ss;
    ss << "Hermiticity residue " << herm;
    return fail(ss.str());
  }
  const double tr_dev = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (tr_dev > tol::kTrace) {
    std::ostringstream ss;
    ss << "trace deviates from 1 by " << tr_dev;
    return fail(ss.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m), Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < tol::kEigenvalue) {
    std::ostringstream ss;
    ss << "negative eigenvalue " << min_eig;
    return fail(ss.str());
  }
  return true;
}

void check_density_matrix(const DensityMatrix& rho) {
  std::string why;
  if (!is_valid_density_matrix(rho, &why)) {
    throw std::invalid_argument("check_density_matrix: " + why);
  }
}

void check_unitary(const UnitaryMatrix& u) {
  const Matrix& m = u.entries;
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw std::invalid_argument("check_unitary: matrix is not square");
  }
  const Matrix eye = Matrix::Identity(m.rows(), m.cols());
  const double dev = (m.adjoint() * m - eye).norm();
  if (dev > tol::kUnitary) {
    std::ostringstream ss;
    ss << "check_unitary: |U^dag U - I|_F = " << dev;
    throw std::invalid_argument(ss.str());
  }
}

void check_subspace(const Subspace& s) {
  if (s.dim_sub < 1 || s.dim_sub > s.dim_full) {
    throw std::invalid_argument("check_subspace: require 1 <= K <= N");
  }
  if (s.basis.rows() != s.dim_full || s.basis.cols() != s.dim_sub) {
    throw std::invalid_argument("check_subspace: basis shape mismatch");
  }
  const Matrix eye = Matrix::Identity(s.dim_sub, s.dim_sub);
  const double ortho = (s.basis.adjoint() * s.basis - eye).norm();
  if (ortho > tol::kProjector) {
    std::ostringstream ss;
    ss << "check_subspace: basis columns not orthonormal, residue " << ortho;
    throw std::invalid_argument(ss.str());
  }
  const Matrix p = s.projector();
  const double idem = (p * p - p).norm();
  if (idem > tol::kProjector) {
    std::ostringstream ss;
    ss << "check_subspace: projector not idempotent, residue " << idem;
    throw std::invalid_argument(ss.str());
  }
}

Vector fix_global_phase(const Vector& v, double eps) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > eps) {
      return v * std::conj(v[i] / mag);
    }
  }
  return v;
}

}  // namespace qae
