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

#ifndef QAE_TYPES_HPP_
#define QAE_TYPES_HPP_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qae {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances used by the value-type validators. These are
// contracts, not knobs: tests assert against them.
namespace tol {
inline constexpr double kNorm = 1e-12;         // state normalization
inline constexpr double kHermitian = 1e-12;    // max |rho - rho^dag| entry
inline constexpr double kTrace = 1e-12;        // |tr(rho) - 1|
inline constexpr double kEigenvalue = -1e-10;  // PSD slack
inline constexpr double kUnitary = 1e-10;      // Frobenius |U^dag U - I|
inline constexpr double kProjector = 1e-10;    // idempotency / orthonormality
inline constexpr double kDegenerate = 1e-10;   // eigenvalue tie threshold
}  // namespace tol

/// A pure N-dimensional qudit state; amplitudes have unit 2-norm.
struct PureState {
  Vector amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  Matrix projector() const { return amplitudes * amplitudes.adjoint(); }
};

/// Hermitian, PSD, unit-trace matrix describing a possibly mixed state.
struct DensityMatrix {
  Matrix entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

struct UnitaryMatrix {
  Matrix entries;

  int dim() const { return static_cast<int>(entries.rows()); }
  UnitaryMatrix adjoint() const { return UnitaryMatrix{entries.adjoint()}; }
};

/// K-dimensional subspace of an N-dimensional space, held as an N x K
/// matrix with orthonormal columns.
struct Subspace {
  int dim_full = 0;
  int dim_sub = 0;
  Matrix basis;

  Matrix projector() const { return basis * basis.adjoint(); }
};

/// Eigenpairs of a Hermitian matrix, sorted by non-increasing eigenvalue.
/// Column j of `eigenvectors` pairs with `eigenvalues[j]`.
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
           eigenvectors.adjoint();
  }
};

// --- validators -----------------------------------------------------------
// Each returns silently on success and throws std::invalid_argument with the
// offending quantity otherwise. The check_* forms are always-on; operations
// use debug_check_* internally, which compiles out in NDEBUG builds.

void check_pure_state(const PureState& psi);
void check_density_matrix(const DensityMatrix& rho);
void check_unitary(const UnitaryMatrix& u);
void check_subspace(const Subspace& s);

bool is_valid_density_matrix(const DensityMatrix& rho, std::string* why = nullptr);

inline void debug_check_density_matrix(const DensityMatrix& rho) {
#ifndef NDEBUG
  check_density_matrix(rho);
#else
  (void)rho;
#endif
}

/// (rho + rho^dag)/2, used to scrub the tiny anti-Hermitian residue left by
/// floating-point channel arithmetic.
inline Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

/// Multiplies by a global phase so the first component with magnitude above
/// `eps` is real and positive. The repository-wide phase convention.
Vector fix_global_phase(const Vector& v, double eps = 1e-12);

}  // namespace qae

#endif  // QAE_TYPES_HPP_
