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

#ifndef QAE_MESH_HPP_
#define QAE_MESH_HPP_

#include <utility>
#include <vector>

#include "qae/types.hpp"

namespace qae::mesh {

// Rectangular mesh of two-mode rotations covering U(N).
//
// Convention (fixed for the repository): a block with angles (theta, phi) on
// modes (m, m+1) acts as
//
//     [ e^{i phi} cos(theta)   -sin(theta) ]
//     [ e^{i phi} sin(theta)    cos(theta) ]
//
// and the full unitary is U = D * B_{L-1} * ... * B_0 where B_0 is the first
// block in `blocks` (applied to the input first) and D = diag(e^{i delta_j})
// holds the output phases. The decomposition returns theta in [0, pi/2] and
// phi, delta in (-pi, pi].

struct MziBlock {
  int layer = 0;  // rectangular column index, metadata for export
  int mode = 0;   // acts on modes (mode, mode+1)
  double theta = 0.0;
  double phi = 0.0;
};

struct MeshParams {
  int dim = 0;
  std::vector<MziBlock> blocks;      // N(N-1)/2 entries, application order
  RealVector output_phases;          // length N
};

/// The fixed block sequence (mode indices in application order) the
/// decomposition emits for dimension n. Depends only on n.
std::vector<int> rectangular_block_modes(int n);

UnitaryMatrix unitary_from_mesh(const MeshParams& params);

/// Rectangular nulling decomposition; exact up to roundoff, so
/// unitary_from_mesh(mesh_from_unitary(U)) reproduces U to ~1e-12.
MeshParams mesh_from_unitary(const UnitaryMatrix& u);

/// Number of free angles of the parameterization: N(N-1) + N.
int parameter_count(int n);

/// Flat view [thetas..., phis..., output_phases...] used by the trainer.
RealVector mesh_to_vector(const MeshParams& params);
MeshParams mesh_from_vector(int n, const RealVector& x);

/// Photon-number populations after U for a single photon injected in
/// `input_mode`: |U_{input_mode, k}|^2 over output modes k.
RealVector single_photon_populations(const UnitaryMatrix& u, int input_mode);

/// Mode intensities for a coherent-state input of amplitude alpha:
/// |alpha|^2 |U_{input_mode, k}|^2.
RealVector coherent_intensities(const UnitaryMatrix& u, int input_mode,
                                Complex alpha);

/// <0| T^dag rho T |0>, the compute-uncompute estimate of the fidelity of
/// rho against T|0>.
double compute_uncompute_fidelity(const UnitaryMatrix& t, const DensityMatrix& rho);

}  // namespace qae::mesh

#endif  // QAE_MESH_HPP_
