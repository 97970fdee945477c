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

#ifndef QAE_CHANNELS_HPP_
#define QAE_CHANNELS_HPP_

#include <variant>
#include <vector>

#include "qae/rng.hpp"
#include "qae/types.hpp"

namespace qae {

/// Completely positive trace-preserving map in operator-sum form,
/// rho -> sum_n M_n rho M_n^dag with sum_n M_n^dag M_n = I.
struct KrausChannel {
  int dim = 0;
  std::vector<Matrix> operators;
};

/// Residue of the completeness relation, |sum M^dag M - I|_F.
double completeness_residue(const KrausChannel& ch);
void check_kraus(const KrausChannel& ch);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Convex mixture of unitary conjugations, rho -> sum_k p_k V_k rho V_k^dag.
struct UnitaryMixture {
  struct Branch {
    double probability = 0.0;
    UnitaryMatrix unitary;
  };
  std::vector<Branch> branches;

  int dim() const {
    return branches.empty() ? 0 : branches.front().unitary.dim();
  }
};

void check_mixture(const UnitaryMixture& mix);
DensityMatrix apply_mixture(const UnitaryMixture& mix, const DensityMatrix& rho);
KrausChannel mixture_to_kraus(const UnitaryMixture& mix);

/// With probability p the (coherently rotated) state is replaced by a fixed
/// noise state: rho -> (1-p) V rho V^dag + p rho_noise. Kept in affine form
/// because that is exact and cheap; an equivalent operator-sum form (needed
/// by the quenched-fidelity formula) is available via to_kraus().
struct FixedStateMix {
  double probability = 0.0;
  UnitaryMatrix coherent;  // V; identity for the plain replacement channel
  DensityMatrix noise;
};

DensityMatrix apply_mix(const FixedStateMix& mix, const DensityMatrix& rho);

/// Operator-sum form of a FixedStateMix: sqrt(1-p) V plus the replacement
/// branch sqrt(p w_i) |chi_i><j| over an eigenbasis {w_i, |chi_i>} of the
/// noise state.
KrausChannel mix_to_kraus(const FixedStateMix& mix);

/// Tagged union over the three channel representations. Immutable after
/// construction; application is pure.
class Channel {
 public:
  Channel(KrausChannel k) : rep_(std::move(k)) {}          // NOLINT
  Channel(FixedStateMix m) : rep_(std::move(m)) {}         // NOLINT
  Channel(UnitaryMixture m) : rep_(std::move(m)) {}        // NOLINT

  static Channel identity(int n);

  DensityMatrix apply(const DensityMatrix& rho) const;
  KrausChannel to_kraus() const;
  int dim() const;

  const KrausChannel* as_kraus() const { return std::get_if<KrausChannel>(&rep_); }
  const FixedStateMix* as_mix() const { return std::get_if<FixedStateMix>(&rep_); }
  const UnitaryMixture* as_mixture() const { return std::get_if<UnitaryMixture>(&rep_); }

 private:
  std::variant<KrausChannel, FixedStateMix, UnitaryMixture> rep_;
};

// --- channel constructors --------------------------------------------------

/// rho -> (1-p) rho + p rho_noise.
Channel fixed_state_mix(double p, const DensityMatrix& noise);

/// rho -> (1-p) V rho V^dag + p |psi_noise><psi_noise|.
Channel coherent_pure_mix(double p, const UnitaryMatrix& v, const PureState& psi_noise);

/// rho -> (1-p) rho + p I/N.
Channel depolarizing(double p, int n);

/// Weyl operator W_{mn} = sum_j w^{jm} |j><j+n mod N|, w = exp(2 pi i / N).
UnitaryMatrix weyl(int m, int n, int dim);

KrausChannel dit_flip(double p, int n);
KrausChannel phase_flip(double p, int n);
KrausChannel dit_phase_flip(double p, int n);
KrausChannel amplitude_damping(double p, int n);

/// Empirical thermal-noise channel: n_samples equiprobable diagonal unitaries
/// with i.i.d. Normal(0, sigma^2) phases.
UnitaryMixture gaussian_phase(double sigma, int n, int n_samples, Rng& rng);

/// Analytic n_samples -> infinity limit of gaussian_phase: off-diagonal
/// entries are damped by exp(-sigma^2), the diagonal is untouched.
DensityMatrix gaussian_phase_exact(const DensityMatrix& rho, double sigma);

/// Gibbs state exp(-beta H)/Z, computed through the eigenbasis of H with the
/// ground energy subtracted so large beta does not overflow.
DensityMatrix gibbs_state(const Matrix& hamiltonian, double beta);

}  // namespace qae

#endif  // QAE_CHANNELS_HPP_
