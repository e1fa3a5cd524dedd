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

#ifndef TCOUNT_REVERSIBLE_CIRCUIT_H
#define TCOUNT_REVERSIBLE_CIRCUIT_H

#include <cstddef>
#include <vector>

#include "tcount/bits.h"
#include "tcount/boolean_circuit.h"

namespace tcount {

enum class RevGateKind { Not, Cnot, Toffoli };

/// Controls first, target last.
struct RevGate {
    RevGateKind kind;
    std::vector<std::size_t> lines;

    std::size_t target() const {
        return lines.back();
    }
};

/// Circuit of NOT / CNOT / Toffoli gates. Lines 0 .. n-1 carry the input bits
/// (line k holds w_{k+1}); the remaining lines are ancillas starting at 0.
class ReversibleCircuit {
   public:
    ReversibleCircuit(std::size_t num_lines, std::size_t num_inputs, std::size_t result_line);

    void append(RevGateKind kind, std::vector<std::size_t> lines);

    std::size_t num_lines() const {
        return num_lines_;
    }
    std::size_t num_inputs() const {
        return num_inputs_;
    }
    std::size_t result_line() const {
        return result_line_;
    }
    const std::vector<RevGate> &gates() const {
        return gates_;
    }

    std::vector<bool> run(std::vector<bool> state) const;
    std::vector<bool> run_backward(std::vector<bool> state) const;
    /// Result line after running on (w, 0...0).
    bool evaluate(const Bits &w) const;

   private:
    std::size_t num_lines_;
    std::size_t num_inputs_;
    std::size_t result_line_;
    std::vector<RevGate> gates_;
};

/// Compiles each gate onto fresh ancillas without uncomputation: AND becomes a
/// Toffoli, XOR two CNOTs, NOT an in-place NOT, OR a De Morgan Toffoli with three
/// NOTs, FANOUT a CNOT per extra copy, CONST1 a NOT on a fresh line.
ReversibleCircuit make_reversible(const BooleanCircuit &circuit);

}  // namespace tcount

#endif
