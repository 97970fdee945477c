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

#include "qae/random.hpp"

#include <cmath>

namespace qae {
namespace {

Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

void require_dim(int n, const char* who) {
  if (n < 1) {
    throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
  }
}

}  // namespace

PureState haar_random_state(int n, Rng& rng) {
  require_dim(n, "haar_random_state");
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.complex_normal();
  v.normalize();
  return PureState{fix_global_phase(v)};
}

UnitaryMatrix haar_random_unitary(int n, Rng& rng) {
  require_dim(n, "haar_random_unitary");
  const Matrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge freedom of QR: without this the distribution is biased.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? (d / mag) : Complex(1.0, 0.0);
  }
  return UnitaryMatrix{q};
}

Subspace random_subspace(int n, int k, Rng& rng) {
  require_dim(n, "random_subspace");
  if (k < 1 || k > n) {
    throw std::invalid_argument("random_subspace: require 1 <= K <= N");
  }
  const UnitaryMatrix u = haar_random_unitary(n, rng);
  return Subspace{n, k, u.entries.leftCols(k)};
}

PureState sample_in_subspace(const Subspace& s, Rng& rng) {
  const PureState v = haar_random_state(s.dim_sub, rng);
  return PureState{fix_global_phase(s.basis * v.amplitudes)};
}

DensityMatrix random_density_matrix(int n, Rng& rng) {
  require_dim(n, "random_density_matrix");
  const Matrix g = ginibre(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{hermitize(rho)};
}

Matrix random_hermitian(int n, Rng& rng) {
  require_dim(n, "random_hermitian");
  const Matrix g = ginibre(n, n, rng);
  return hermitize(g);
}

}  // namespace qae
