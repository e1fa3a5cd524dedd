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

#ifndef TCOUNT_QUANTUM_CIRCUIT_H
#define TCOUNT_QUANTUM_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tcount/reversible_circuit.h"
#include "tcount/tensor.h"

namespace tcount {

/// Fermionic Gaussian gate: a real antisymmetric block `generator` acting on the
/// 2w Majorana operators of the adjacent modes first_mode .. first_mode + w - 1.
/// The unitary is exp(1/2 sum_{mu,nu} h_{mu nu} c_mu c_nu), which rotates the
/// Majorana operators by exp(2h) under conjugation.
struct GaussianGate {
    std::size_t first_mode = 0;
    std::size_t window = 1;
    std::vector<double> generator;  // (2w x 2w), row-major

    double h(std::size_t r, std::size_t c) const {
        return generator[r * 2 * window + c];
    }
};

/// Unitary of a Gaussian gate on its window of qubits (first mode most significant).
Matrix gaussian_gate_matrix(const GaussianGate &gate);

struct QuantumGate {
    std::string name;
    std::vector<std::size_t> targets;
    Matrix matrix;  // first target is the most significant bit of the matrix index
    std::optional<GaussianGate> gaussian;
};

/// Table gates: X, Y, Z, H, S, CNOT, CZ, T, Toffoli, SWAP.
const Matrix &gate_table_matrix(const std::string &name);
bool is_table_gate(const std::string &name);
bool is_clifford_gate_name(const std::string &name);

/// Quantum checker circuit on qubits 0 .. N-1. Qubits 0 .. n-1 take the solution
/// bits (qubit k holds w_{k+1}); the rest are ancillas starting in |0>. The
/// designated output qubit is the one measured.
class QuantumCircuit {
   public:
    QuantumCircuit(std::size_t num_qubits, std::size_t num_inputs, std::size_t output_qubit);

    void add(const std::string &name, std::vector<std::size_t> targets);
    void add_matrix(std::vector<std::size_t> targets, Matrix matrix, std::string name = "MAT");
    void add_gaussian(GaussianGate gate);
    void append(QuantumGate gate);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_inputs() const {
        return num_inputs_;
    }
    std::size_t output_qubit() const {
        return output_qubit_;
    }
    const std::vector<QuantumGate> &gates() const {
        return gates_;
    }

    /// All gates from the table's Clifford subset {X, Y, Z, H, S, CNOT, CZ}.
    bool is_clifford() const;
    /// All gates are Gaussian-generator gates.
    bool is_gaussian() const;

    /// Gates [begin, end) on the same qubits.
    QuantumCircuit slice(std::size_t begin, std::size_t end) const;
    /// Index where the longest trailing run of Clifford (or Gaussian) gates starts.
    std::size_t clifford_suffix_start() const;
    std::size_t gaussian_suffix_start() const;

    /// Name of the first gate failing `is_clifford`, if any.
    std::optional<std::string> first_non_clifford() const;

   private:
    void check_targets(const std::vector<std::size_t> &targets) const;

    std::size_t num_qubits_;
    std::size_t num_inputs_;
    std::size_t output_qubit_;
    std::vector<QuantumGate> gates_;
};

/// Same gate sequence as permutation unitaries: NOT -> X, CNOT -> CNOT, Toffoli -> Toffoli.
QuantumCircuit reversible_to_quantum(const ReversibleCircuit &circuit);

}  // namespace tcount

#endif
