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

#ifndef TCOUNT_BOOLEAN_CIRCUIT_H
#define TCOUNT_BOOLEAN_CIRCUIT_H

#include <cstddef>
#include <string>
#include <vector>

#include "tcount/bits.h"

namespace tcount {

enum class BoolGateKind { And, Or, Not, Xor, Const0, Const1, Fanout };

std::string gate_kind_name(BoolGateKind kind);
std::size_t gate_kind_arity(BoolGateKind kind);

struct BoolGate {
    BoolGateKind kind;
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
};

/// Acyclic Boolean circuit with a single designated output wire.
///
/// Wires 0 .. n-1 are the inputs, wire k carrying bit w_{k+1}. Gates are stored
/// in topological order and every wire is consumed at most once; copies are made
/// explicit with binary FANOUT gates, so the wire graph is a tensor-network
/// skeleton.
class BooleanCircuit {
   public:
    std::size_t num_inputs() const {
        return num_inputs_;
    }
    std::size_t num_wires() const {
        return num_wires_;
    }
    const std::vector<BoolGate> &gates() const {
        return gates_;
    }
    std::size_t output() const {
        return output_;
    }

    /// Values of every wire for input w (|w| == num_inputs()).
    std::vector<bool> evaluate_wires(const Bits &w) const;
    bool evaluate(const Bits &w) const;

   private:
    friend class BooleanCircuitBuilder;
    std::size_t num_inputs_ = 0;
    std::size_t num_wires_ = 0;
    std::vector<BoolGate> gates_;
    std::size_t output_ = 0;
};

/// Assembles a BooleanCircuit. Wires may be reused freely while building;
/// build() inserts the FANOUT gates needed so each wire has one consumer.
class BooleanCircuitBuilder {
   public:
    explicit BooleanCircuitBuilder(std::size_t num_inputs);

    /// Wire holding w_k (1-based).
    std::size_t input(std::size_t k) const;

    /// Adds a single-output gate and returns its output wire.
    std::size_t add(BoolGateKind kind, std::vector<std::size_t> inputs);
    std::size_t constant(bool value);
    /// Declares `copies` wires carrying the value of `wire`.
    std::vector<std::size_t> fanout(std::size_t wire, std::size_t copies);
    void set_output(std::size_t wire);

    BooleanCircuit build() const;

   private:
    std::size_t resolve(std::size_t wire) const;
    void check_wire(std::size_t wire) const;

    std::size_t num_inputs_;
    std::size_t num_wires_;
    std::vector<BoolGate> gates_;
    std::vector<std::size_t> alias_;
    std::size_t output_;
    bool has_output_ = false;
};

}  // namespace tcount

#endif
