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

#ifndef TCOUNT_LOWERING_H
#define TCOUNT_LOWERING_H

#include <vector>

#include "tcount/boolean_circuit.h"
#include "tcount/quantum_circuit.h"
#include "tcount/tensor_network.h"

namespace tcount {

/// A checker circuit as a tensor network plus the roles of its open indices.
template <typename T>
struct CheckerNetwork {
    TensorNetwork<T> network;
    /// inputs[k] carries w_{k+1}.
    std::vector<Label> inputs;
    /// Inputs fixed to |0>.
    std::vector<Label> ancillas;
    /// The measured output index.
    Label output = 0;
    /// Every other open output; summed over by the counter.
    std::vector<Label> discards;
    /// Quantum circuits only: final index of each qubit, in qubit order.
    std::vector<Label> line_outputs;
    /// Every gate maps basis states to basis states up to a phase (always true
    /// for Boolean circuits).
    bool monomial = true;
};

/// Gate tensors are copy/delta tensors [g]^{i o} = delta(g(i), o), indices ordered
/// inputs then outputs. Input wires no gate consumes become discards, so they
/// are still summed over.
template <typename T>
CheckerNetwork<T> lower_to_network(const BooleanCircuit &circuit);

/// One operator tensor per gate (see tensor_from_operator). For exact number
/// systems every gate matrix must have integer entries.
template <typename T>
CheckerNetwork<T> lower_to_network(const QuantumCircuit &circuit);

/// The delta tensor of a Boolean gate kind with the given index labels.
template <typename T>
Tensor<T> boolean_gate_tensor(BoolGateKind kind, const std::vector<Label> &labels);

}  // namespace tcount

#endif
