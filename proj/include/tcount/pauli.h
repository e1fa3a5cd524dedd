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

#ifndef TCOUNT_PAULI_H
#define TCOUNT_PAULI_H

#include <cstdint>
#include <string>
#include <vector>

#include "tcount/quantum_circuit.h"

namespace tcount {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter_char(PauliLetter p);
const Matrix &pauli_letter_matrix(PauliLetter p);

/// i^phase times a tensor product of single-qubit Pauli letters. Qubit 0 is
/// printed first: "+iXZ" is i * X_0 Z_1.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits) : letters_(num_qubits, PauliLetter::I) {
    }

    /// Optional sign prefix (+, -, +i, -i, i) followed by one letter per qubit.
    static PauliString parse(const std::string &text);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter);

    std::size_t size() const {
        return letters_.size();
    }
    PauliLetter operator[](std::size_t q) const {
        return letters_[q];
    }
    void set(std::size_t q, PauliLetter letter) {
        letters_[q] = letter;
    }
    /// Exponent k of the global phase i^k, in [0, 4).
    unsigned phase() const {
        return phase_;
    }
    void set_phase(unsigned k) {
        phase_ = k & 3u;
    }
    Complex phase_value() const;

    PauliString &operator*=(const PauliString &rhs);
    friend PauliString operator*(PauliString a, const PauliString &b) {
        return a *= b;
    }
    bool operator==(const PauliString &) const = default;

    bool is_identity_up_to_phase() const;
    std::string str() const;

   private:
    std::vector<PauliLetter> letters_;
    unsigned phase_ = 0;
};

/// C^dagger p C: gates are undone from last to first. Throws on a non-Clifford gate.
PauliString conjugate_pauli(const QuantumCircuit &circuit, const PauliString &p);
/// C p C^dagger.
PauliString conjugate_pauli_forward(const QuantumCircuit &circuit, const PauliString &p);

}  // namespace tcount

#endif
