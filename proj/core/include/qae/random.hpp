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

#ifndef QAE_RANDOM_HPP_
#define QAE_RANDOM_HPP_

#include "qae/rng.hpp"
#include "qae/types.hpp"

namespace qae {

/// Haar-random pure state of dimension N. Gaussian vector normalized, then
/// phase-fixed per the repository convention (distribution on rays is exact).
PureState haar_random_state(int n, Rng& rng);

/// Haar-random U(N) element via Ginibre + QR with the R-diagonal phase
/// correction, so the distribution is exactly the Haar measure.
UnitaryMatrix haar_random_unitary(int n, Rng& rng);

/// First K columns of a Haar-random N x N unitary.
Subspace random_subspace(int n, int k, Rng& rng);

/// Haar-random state inside the given subspace: basis * haar_random_state(K).
PureState sample_in_subspace(const Subspace& s, Rng& rng);

/// Random density matrix, Hilbert-Schmidt measure (G G^dag normalized).
DensityMatrix random_density_matrix(int n, Rng& rng);

/// Random Hermitian matrix, GUE normalization (entries O(1)).
Matrix random_hermitian(int n, Rng& rng);

}  // namespace qae

#endif  // QAE_RANDOM_HPP_
