// Copyright 2026 The tcount Authors
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

#ifndef TCOUNT_ALGEBRAIC_H
#define TCOUNT_ALGEBRAIC_H

#include <vector>

#include "tcount/counter.h"
#include "tcount/mpo.h"
#include "tcount/pauli.h"

namespace tcount {

/// Real 2m x 2m matrix acting on the Majorana operators c_1 .. c_2m (row-major,
/// 0-based storage: entry (mu-1, nu-1) is R_{mu nu}).
struct RotationMatrix {
    std::size_t modes = 0;
    std::vector<double> data;

    static RotationMatrix identity(std::size_t modes);

    std::size_t dim() const {
        return 2 * modes;
    }
    double operator()(std::size_t r, std::size_t c) const {
        return data[r * dim() + c];
    }
    double &operator()(std::size_t r, std::size_t c) {
        return data[r * dim() + c];
    }
    /// max |(R^T R - I)_{ij}|.
    double orthogonality_error() const;
};

/// Jordan-Wigner Majorana c_mu (1-based): Z on qubits before the mode, then X
/// (odd mu) or Y (even mu) on qubit (mu - 1) / 2.
PauliString majorana_pauli(std::size_t num_modes, std::size_t mu);

/// R with C^dagger c_mu C = sum_nu R_{mu nu} c_nu. Throws on non-Gaussian gates.
RotationMatrix gaussian_rotation(const QuantumCircuit &circuit);

/// C^dagger Pi C = 1/2 (I - C^dagger Z_out C) as a bond-dimension-2 MPO.
MatrixProductOperator evolve_projector_stabiliser(const QuantumCircuit &circuit);

/// C^dagger Pi C = 1/2 I + i/2 (sum_mu R_{2m-1,mu} c_mu)(sum_nu R_{2m,nu} c_nu) built from
/// Pauli MPOs. The output qubit must be the last mode.
MatrixProductOperator evolve_projector_gaussian(const QuantumCircuit &circuit);

/// Two layers of `front` (input states attached) closed by the MPO: its ket legs
/// join the ket-layer outputs and its bra legs the bra-layer outputs.
Counter<Complex> build_concatenated_counter(const CheckerNetwork<Complex> &front,
                                            const MatrixProductOperator &evolved,
                                            const std::vector<Tensor<Complex>> &inputs);

/// Value <W| C1^dagger O C1 |W> of the concatenated counter (folded, then tree
/// or min-fill order).
Complex contract_concatenated(const CheckerNetwork<Complex> &front, const MatrixProductOperator &evolved,
                              const std::vector<Tensor<Complex>> &inputs);

}  // namespace tcount

#endif
