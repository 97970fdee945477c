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

#include "qae/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qae {
namespace {

// Strict weak order on phase-fixed eigenvectors; used only to make the
// ordering inside a degenerate eigenvalue cluster deterministic.
bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) {
    std::ostringstream ss;
    ss << "fidelity: dimension mismatch (" << rho.dim() << " vs " << psi.dim() << ")";
    throw std::invalid_argument(ss.str());
  }
  const Complex val = psi.amplitudes.adjoint() * rho.entries * psi.amplitudes;
  return val.real();
}

EigenDecomposition hermitian_eigen(const Matrix& m, double hermiticity_tol) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("hermitian_eigen: matrix is not square");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > hermiticity_tol) {
    std::ostringstream ss;
    ss << "hermitian_eigen: input not Hermitian, residue " << herm;
    throw std::invalid_argument(ss.str());
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
  }

  const int n = static_cast<int>(m.rows());
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);

  // Eigen sorts ascending; flip to descending and fix phases.
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = solver.eigenvalues()[n - 1 - j];
    out.eigenvectors.col(j) = fix_global_phase(solver.eigenvectors().col(n - 1 - j));
  }

  // Deterministic ordering inside near-degenerate clusters.
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n &&
           std::abs(out.eigenvalues[end - 1] - out.eigenvalues[end]) < tol::kDegenerate) {
      ++end;
    }
    if (end - start > 1) {
      std::vector<int> order(end - start);
      std::iota(order.begin(), order.end(), start);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return lex_less(out.eigenvectors.col(a), out.eigenvectors.col(b));
      });
      RealVector vals(end - start);
      Matrix vecs(n, end - start);
      for (int i = 0; i < end - start; ++i) {
        vals[i] = out.eigenvalues[order[i]];
        vecs.col(i) = out.eigenvectors.col(order[i]);
      }
      out.eigenvalues.segment(start, end - start) = vals;
      out.eigenvectors.middleCols(start, end - start) = vecs;
    }
    start = end;
  }
  return out;
}

EigenDecomposition eigen_decompose(const DensityMatrix& rho) {
  return hermitian_eigen(rho.entries, tol::kHermitian);
}

DominantProjector dominant_projector(const DensityMatrix& rho, int k) {
  if (k < 1 || k > rho.dim()) {
    throw std::invalid_argument("dominant_projector: require 1 <= K <= N");
  }
  const EigenDecomposition eig = eigen_decompose(rho);
  const Matrix v = eig.eigenvectors.leftCols(k);
  return DominantProjector{hermitize(v * v.adjoint()),
                           eig.eigenvalues.head(k).sum()};
}

}  // namespace qae
