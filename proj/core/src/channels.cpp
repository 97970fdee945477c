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

#include "qae/channels.hpp"

#include <cmath>
#include <sstream>

#include "qae/spectral.hpp"

namespace qae {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_probability(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream ss;
    ss << who << ": probability " << p << " outside [0,1]";
    throw std::invalid_argument(ss.str());
  }
}

void require_dims_match(int channel_dim, int state_dim, const char* who) {
  if (channel_dim != state_dim) {
    std::ostringstream ss;
    ss << who << ": channel dimension " << channel_dim
       << " does not match state dimension " << state_dim;
    throw std::invalid_argument(ss.str());
  }
}

}  // namespace

double completeness_residue(const KrausChannel& ch) {
  Matrix acc = Matrix::Zero(ch.dim, ch.dim);
  for (const Matrix& m : ch.operators) acc += m.adjoint() * m;
  return (acc - Matrix::Identity(ch.dim, ch.dim)).norm();
}

void check_kraus(const KrausChannel& ch) {
  if (ch.dim < 1 || ch.operators.empty()) {
    throw std::invalid_argument("check_kraus: empty channel");
  }
  for (const Matrix& m : ch.operators) {
    if (m.rows() != ch.dim || m.cols() != ch.dim) {
      throw std::invalid_argument("check_kraus: operator shape mismatch");
    }
  }
  const double res = completeness_residue(ch);
  if (res > tol::kProjector) {
    std::ostringstream ss;
    ss << "check_kraus: completeness residue " << res;
    throw std::invalid_argument(ss.str());
  }
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  require_dims_match(ch.dim, rho.dim(), "apply");
  Matrix out = Matrix::Zero(ch.dim, ch.dim);
  for (const Matrix& m : ch.operators) out += m * rho.entries * m.adjoint();
  return DensityMatrix{hermitize(out)};
}

void check_mixture(const UnitaryMixture& mix) {
  if (mix.branches.empty()) {
    throw std::invalid_argument("check_mixture: no branches");
  }
  double total = 0.0;
  for (const auto& b : mix.branches) {
    if (b.probability < 0.0) {
      throw std::invalid_argument("check_mixture: negative branch probability");
    }
    total += b.probability;
  }
  if (std::abs(total - 1.0) > tol::kNorm) {
    std::ostringstream ss;
    ss << "check_mixture: probabilities sum to " << total;
    throw std::invalid_argument(ss.str());
  }
}

DensityMatrix apply_mixture(const UnitaryMixture& mix, const DensityMatrix& rho) {
  require_dims_match(mix.dim(), rho.dim(), "apply_mixture");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const auto& b : mix.branches) {
    out += b.probability * (b.unitary.entries * rho.entries * b.unitary.entries.adjoint());
  }
  return DensityMatrix{hermitize(out)};
}

KrausChannel mixture_to_kraus(const UnitaryMixture& mix) {
  KrausChannel ch;
  ch.dim = mix.dim();
  ch.operators.reserve(mix.branches.size());
  for (const auto& b : mix.branches) {
    ch.operators.push_back(std::sqrt(b.probability) * b.unitary.entries);
  }
  return ch;
}

DensityMatrix apply_mix(const FixedStateMix& mix, const DensityMatrix& rho) {
  require_dims_match(mix.noise.dim(), rho.dim(), "apply_mix");
  const Matrix rotated =
      mix.coherent.entries * rho.entries * mix.coherent.entries.adjoint();
  return DensityMatrix{
      hermitize((1.0 - mix.probability) * rotated + mix.probability * mix.noise.entries)};
}

KrausChannel mix_to_kraus(const FixedStateMix& mix) {
  const int n = mix.noise.dim();
  KrausChannel ch;
  ch.dim = n;
  ch.operators.push_back(std::sqrt(1.0 - mix.probability) * mix.coherent.entries);
  if (mix.probability > 0.0) {
    EigenDecomposition eig = eigen_decompose(mix.noise);
    // Keep only eigenvectors carrying weight; renormalize so the dropped
    // dust does not break completeness.
    std::vector<int> kept;
    double mass = 0.0;
    for (int i = 0; i < n; ++i) {
      if (eig.eigenvalues[i] > 1e-15) {
        kept.push_back(i);
        mass += eig.eigenvalues[i];
      }
    }
    for (int i : kept) {
      const double w = eig.eigenvalues[i] / mass;
      const Vector chi = eig.eigenvectors.col(i);
      for (int j = 0; j < n; ++j) {
        Matrix op = Matrix::Zero(n, n);
        op.col(j) = std::sqrt(mix.probability * w) * chi;
        ch.operators.push_back(std::move(op));
      }
    }
  }
  return ch;
}

Channel Channel::identity(int n) {
  if (n < 1) throw std::invalid_argument("Channel::identity: dimension must be >= 1");
  return Channel(KrausChannel{n, {Matrix::Identity(n, n)}});
}

DensityMatrix Channel::apply(const DensityMatrix& rho) const {
  if (const auto* k = as_kraus()) return qae::apply(*k, rho);
  if (const auto* m = as_mix()) return apply_mix(*m, rho);
  return qae::apply_mixture(*as_mixture(), rho);
}

KrausChannel Channel::to_kraus() const {
  if (const auto* k = as_kraus()) return *k;
  if (const auto* m = as_mix()) return mix_to_kraus(*m);
  return mixture_to_kraus(*as_mixture());
}

int Channel::dim() const {
  if (const auto* k = as_kraus()) return k->dim;
  if (const auto* m = as_mix()) return m->noise.dim();
  return as_mixture()->dim();
}

Channel fixed_state_mix(double p, const DensityMatrix& noise) {
  require_probability(p, "fixed_state_mix");
  debug_check_density_matrix(noise);
  return Channel(FixedStateMix{
      p, UnitaryMatrix{Matrix::Identity(noise.dim(), noise.dim())}, noise});
}

Channel coherent_pure_mix(double p, const UnitaryMatrix& v, const PureState& psi_noise) {
  require_probability(p, "coherent_pure_mix");
  if (v.dim() != psi_noise.dim()) {
    throw std::invalid_argument("coherent_pure_mix: dimension mismatch");
  }
  return Channel(FixedStateMix{p, v, DensityMatrix{psi_noise.projector()}});
}

Channel depolarizing(double p, int n) {
  require_probability(p, "depolarizing");
  if (n < 1) throw std::invalid_argument("depolarizing: dimension must be >= 1");
  const Matrix eye = Matrix::Identity(n, n);
  return Channel(FixedStateMix{p, UnitaryMatrix{eye}, DensityMatrix{eye / n}});
}

UnitaryMatrix weyl(int m, int n, int dim) {
  if (dim < 1) throw std::invalid_argument("weyl: dimension must be >= 1");
  if (m < 0 || m >= dim || n < 0 || n >= dim) {
    throw std::invalid_argument("weyl: indices must satisfy 0 <= m,n < N");
  }
  Matrix w = Matrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const double angle = 2.0 * kPi * j * m / dim;
    w(j, (j + n) % dim) = Complex(std::cos(angle), std::sin(angle));
  }
  return UnitaryMatrix{w};
}

namespace {

KrausChannel weyl_flip_family(double p, int n, bool dit, bool phase, const char* who) {
  require_probability(p, who);
  if (n < 2) {
    throw std::invalid_argument(std::string(who) + ": undefined for N < 2");
  }
  KrausChannel ch;
  ch.dim = n;
  ch.operators.push_back(std::sqrt(1.0 - p) * Matrix::Identity(n, n));
  if (dit && phase) {
    const double amp = std::sqrt(p) / (n - 1);
    for (int m = 1; m < n; ++m) {
      for (int k = 1; k < n; ++k) {
        ch.operators.push_back(amp * weyl(m, k, n).entries);
      }
    }
  } else {
    const double amp = std::sqrt(p / (n - 1));
    for (int j = 1; j < n; ++j) {
      ch.operators.push_back(amp * (dit ? weyl(0, j, n) : weyl(j, 0, n)).entries);
    }
  }
  return ch;
}

}  // namespace

KrausChannel dit_flip(double p, int n) {
  return weyl_flip_family(p, n, /*dit=*/true, /*phase=*/false, "dit_flip");
}

KrausChannel phase_flip(double p, int n) {
  return weyl_flip_family(p, n, /*dit=*/false, /*phase=*/true, "phase_flip");
}

KrausChannel dit_phase_flip(double p, int n) {
  return weyl_flip_family(p, n, /*dit=*/true, /*phase=*/true, "dit_phase_flip");
}

KrausChannel amplitude_damping(double p, int n) {
  require_probability(p, "amplitude_damping");
  if (n < 1) throw std::invalid_argument("amplitude_damping: dimension must be >= 1");
  KrausChannel ch;
  ch.dim = n;
  Matrix e0 = Matrix::Zero(n, n);
  e0(0, 0) = 1.0;
  for (int j = 1; j < n; ++j) e0(j, j) = std::sqrt(1.0 - p);
  ch.operators.push_back(std::move(e0));
  for (int j = 1; j < n; ++j) {
    Matrix ej = Matrix::Zero(n, n);
    ej(0, j) = std::sqrt(p);
    ch.operators.push_back(std::move(ej));
  }
  return ch;
}

UnitaryMixture gaussian_phase(double sigma, int n, int n_samples, Rng& rng) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_phase: sigma must be >= 0");
  if (n < 1) throw std::invalid_argument("gaussian_phase: dimension must be >= 1");
  if (n_samples < 1) throw std::invalid_argument("gaussian_phase: n_samples must be >= 1");
  UnitaryMixture mix;
  mix.branches.reserve(n_samples);
  const double prob = 1.0 / n_samples;
  for (int s = 0; s < n_samples; ++s) {
    Matrix u = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      const double theta = sigma * rng.normal();
      u(j, j) = Complex(std::cos(theta), std::sin(theta));
    }
    mix.branches.push_back({prob, UnitaryMatrix{std::move(u)}});
  }
  return mix;
}

DensityMatrix gaussian_phase_exact(const DensityMatrix& rho, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian_phase_exact: sigma must be >= 0");
  const double damp = std::exp(-sigma * sigma);
  Matrix out = rho.entries * damp;
  for (int j = 0; j < rho.dim(); ++j) out(j, j) = rho.entries(j, j);
  return DensityMatrix{hermitize(out)};
}

DensityMatrix gibbs_state(const Matrix& hamiltonian, double beta) {
  if (beta < 0.0) throw std::invalid_argument("gibbs_state: beta must be >= 0");
  EigenDecomposition eig = hermitian_eigen(hamiltonian, tol::kProjector);
  // hermitian_eigen sorts descending; the ground state is the last column.
  const int n = static_cast<int>(hamiltonian.rows());
  const double ground = eig.eigenvalues[n - 1];
  RealVector weights(n);
  for (int i = 0; i < n; ++i) {
    weights[i] = std::exp(-beta * (eig.eigenvalues[i] - ground));
  }
  weights /= weights.sum();
  Matrix rho = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    rho += weights[i] * (eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint());
  }
  return DensityMatrix{hermitize(rho)};
}

}  // namespace qae
