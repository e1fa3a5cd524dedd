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

#ifndef TCOUNT_PARSERS_H
#define TCOUNT_PARSERS_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tcount/boolean_circuit.h"
#include "tcount/quantum_circuit.h"

namespace tcount {

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t line = 0);
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// DIMACS CNF. Variable i is input bit w_i. Clauses are OR chains (negative
/// literals through NOT), joined by an AND chain; an empty clause is CONST0 and
/// a formula without clauses is CONST1.
BooleanCircuit parse_dimacs(std::string_view text);

using Circuit = std::variant<BooleanCircuit, QuantumCircuit>;

/// Line-oriented netlist. Boolean form:
///   in <n>                      wires 1..n are inputs w_1..w_n
///   anc <k>                     wires n+1..n+k are constant-0 sources
///   gate <NAME> <ins> -> <outs> NAME in AND OR NOT XOR CONST0 CONST1 FANOUT
///   out <wire>
/// Quantum form (selected by a `qubits` line; qubits numbered from 1):
///   qubits <N>
///   in <n>                      solution bits on qubits 1..n (default N)
///   out <q>                     measured qubit (default N)
///   qgate <NAME> <targets>
///   qgate MAT <targets> <entries>   2^k x 2^k entries, row-major, `re` or `re,im`
///   ggate <first-mode> <entries>    2w x 2w real antisymmetric generator
/// `#` starts a comment.
Circuit parse_netlist(std::string_view text);

}  // namespace tcount

#endif
