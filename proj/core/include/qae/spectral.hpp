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

#ifndef QAE_SPECTRAL_HPP_
#define QAE_SPECTRAL_HPP_

#include <utility>

#include "qae/types.hpp"

namespace qae {

/// <psi| rho |psi>, the overlap of a mixed state with a pure reference.
double fidelity(const DensityMatrix& rho, const PureState& psi);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Eigenvectors are phase-fixed, and near-degenerate groups (gap below
/// tol::kDegenerate) are ordered lexicographically so the result is
/// deterministic. `hermiticity_tol` guards against garbage input.
EigenDecomposition hermitian_eigen(const Matrix& m, double hermiticity_tol);

EigenDecomposition eigen_decompose(const DensityMatrix& rho);

struct DominantProjector {
  Matrix projector;  // D_K, rank-K orthogonal projector
  double mass;       // sum of the K retained eigenvalues
};

/// Projector onto the eigenspace of the K largest eigenvalues of rho.
DominantProjector dominant_projector(const DensityMatrix& rho, int k);

}  // namespace qae

#endif  // QAE_SPECTRAL_HPP_
