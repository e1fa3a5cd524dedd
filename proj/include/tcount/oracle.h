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

#ifndef TCOUNT_ORACLE_H
#define TCOUNT_ORACLE_H

#include <array>
#include <vector>

#include "tcount/bits.h"
#include "tcount/boolean_circuit.h"
#include "tcount/pauli.h"
#include "tcount/quantum_circuit.h"

namespace tcount {

/// Brute-force references. Everything here is deliberately naive.

/// Statevector on m <= 12 qubits; amplitude index bit q is qubit q.
class DenseState {
   public:
    static constexpr std::size_t max_qubits = 12;

    static DenseState basis(std::size_t num_qubits, std::uint64_t index);
    /// Tensor product of single-qubit states, states[q] on qubit q.
    static DenseState product(const std::vector<std::array<Complex, 2>> &states);
    /// Takes 2^m amplitudes as they are (no normalization).
    static DenseState from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amps_;
    }

    /// Applies a k-qubit matrix whose first target is its most significant bit.
    void apply(const Matrix &matrix, const std::vector<std::size_t> &targets);
    /// Applies a gate and checks that the norm is unchanged to 1e-10.
    void apply(const QuantumGate &gate);
    double norm() const;
    /// Probability of reading 1 on the qubit.
    double probability_one(std::size_t qubit) const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Solutions w of length n (= circuit inputs) ending in `suffix`, by evaluation. n <= 24.
BigInt enumerate_count(const BooleanCircuit &circuit, std::size_t n, const Bits &suffix);
std::vector<Bits> enumerate_solutions(const BooleanCircuit &circuit);

/// The counter's input on qubits 0 .. N-1: |0> above n, |+> on the free bits,
/// the suffix bits on qubits 0 .. n'-1.
std::vector<std::array<Complex, 2>> counter_input_product(std::size_t n, const Bits &suffix, std::size_t num_qubits);

/// <psi|Pi_out|psi> for psi = C applied to the product input. N <= 12.
double dense_probability(const QuantumCircuit &circuit, const std::vector<std::array<Complex, 2>> &input);

/// The 2^N x 2^N unitary with index bit q = qubit q. N <= 6.
Matrix dense_operator(const QuantumCircuit &circuit);

/// U^dagger Pi_out U column by column from statevector runs. N <= 10.
Matrix dense_evolved_projector(const QuantumCircuit &circuit);

/// Dense matrix of a Pauli string (bit q = qubit q). m <= 10.
Matrix dense_pauli(const PauliString &p);

}  // namespace tcount

#endif
