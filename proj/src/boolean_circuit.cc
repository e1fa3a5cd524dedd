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

#include "tcount/boolean_circuit.h"

#include <numeric>
#include <stdexcept>

namespace tcount {

std::string gate_kind_name(BoolGateKind kind) {
    switch (kind) {
        case BoolGateKind::And:
            return "AND";
        case BoolGateKind::Or:
            return "OR";
        case BoolGateKind::Not:
            return "NOT";
        case BoolGateKind::Xor:
            return "XOR";
        case BoolGateKind::Const0:
            return "CONST0";
        case BoolGateKind::Const1:
            return "CONST1";
        case BoolGateKind::Fanout:
            return "FANOUT";
    }
    return "?";
}

std::size_t gate_kind_arity(BoolGateKind kind) {
    switch (kind) {
        case BoolGateKind::And:
        case BoolGateKind::Or:
        case BoolGateKind::Xor:
            return 2;
        case BoolGateKind::Not:
        case BoolGateKind::Fanout:
            return 1;
        case BoolGateKind::Const0:
        case BoolGateKind::Const1:
            return 0;
    }
    return 0;
}

std::vector<bool> BooleanCircuit::evaluate_wires(const Bits &w) const {
    if (w.size() != num_inputs_) {
        throw std::invalid_argument("BooleanCircuit::evaluate: expected " + std::to_string(num_inputs_) +
                                    " input bits, got " + std::to_string(w.size()) + ".");
    }
    std::vector<bool> v(num_wires_, false);
    for (std::size_t k = 0; k < num_inputs_; k++) {
        v[k] = w.at(k + 1);
    }
    for (const auto &g : gates_) {
        switch (g.kind) {
            case BoolGateKind::And:
                v[g.outputs[0]] = v[g.inputs[0]] && v[g.inputs[1]];
                break;
            case BoolGateKind::Or:
                v[g.outputs[0]] = v[g.inputs[0]] || v[g.inputs[1]];
                break;
            case BoolGateKind::Xor:
                v[g.outputs[0]] = v[g.inputs[0]] != v[g.inputs[1]];
                break;
            case BoolGateKind::Not:
                v[g.outputs[0]] = !v[g.inputs[0]];
                break;
            case BoolGateKind::Const0:
                v[g.outputs[0]] = false;
                break;
            case BoolGateKind::Const1:
                v[g.outputs[0]] = true;
                break;
            case BoolGateKind::Fanout:
                for (auto o : g.outputs) {
                    v[o] = v[g.inputs[0]];
                }
                break;
        }
    }
    return v;
}

bool BooleanCircuit::evaluate(const Bits &w) const {
    return evaluate_wires(w)[output_];
}

BooleanCircuitBuilder::BooleanCircuitBuilder(std::size_t num_inputs)
    : num_inputs_(num_inputs), num_wires_(num_inputs), alias_(num_inputs), output_(0) {
    std::iota(alias_.begin(), alias_.end(), std::size_t{0});
}

std::size_t BooleanCircuitBuilder::input(std::size_t k) const {
    if (k == 0 || k > num_inputs_) {
        throw std::out_of_range("BooleanCircuitBuilder::input: no input w_" + std::to_string(k) + ".");
    }
    return k - 1;
}

void BooleanCircuitBuilder::check_wire(std::size_t wire) const {
    if (wire >= num_wires_) {
        throw std::out_of_range("BooleanCircuitBuilder: wire " + std::to_string(wire) + " does not exist yet.");
    }
}

std::size_t BooleanCircuitBuilder::resolve(std::size_t wire) const {
    while (alias_[wire] != wire) {
        wire = alias_[wire];
    }
    return wire;
}

std::size_t BooleanCircuitBuilder::add(BoolGateKind kind, std::vector<std::size_t> inputs) {
    if (kind == BoolGateKind::Fanout) {
        throw std::invalid_argument("BooleanCircuitBuilder::add: use fanout() for copies.");
    }
    if (inputs.size() != gate_kind_arity(kind)) {
        throw std::invalid_argument(gate_kind_name(kind) + " takes " + std::to_string(gate_kind_arity(kind)) +
                                    " inputs, got " + std::to_string(inputs.size()) + ".");
    }
    for (auto &w : inputs) {
        check_wire(w);
        w = resolve(w);
    }
    std::size_t out = num_wires_++;
    alias_.push_back(out);
    gates_.push_back({kind, std::move(inputs), {out}});
    return out;
}

std::size_t BooleanCircuitBuilder::constant(bool value) {
    return add(value ? BoolGateKind::Const1 : BoolGateKind::Const0, {});
}

std::vector<std::size_t> BooleanCircuitBuilder::fanout(std::size_t wire, std::size_t copies) {
    check_wire(wire);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < copies; k++) {
        out.push_back(num_wires_++);
        alias_.push_back(resolve(wire));
    }
    return out;
}

void BooleanCircuitBuilder::set_output(std::size_t wire) {
    check_wire(wire);
    output_ = resolve(wire);
    has_output_ = true;
}

BooleanCircuit BooleanCircuitBuilder::build() const {
    if (!has_output_) {
        throw std::invalid_argument("Boolean circuit has no designated output wire.");
    }
    // Consumers per (resolved) wire: gate inputs plus the designated output.
    std::vector<std::size_t> uses(num_wires_, 0);
    for (const auto &g : gates_) {
        for (auto w : g.inputs) {
            uses[w]++;
        }
    }
    uses[output_]++;

    BooleanCircuit c;
    c.num_inputs_ = num_inputs_;
    std::size_t next_wire = 0;
    std::vector<std::size_t> renamed(num_wires_, 0);
    std::vector<std::size_t> remaining(num_wires_, 0);

    // Copies are split off lazily, right before each consumer, so the gate
    // order stays a sweep over the circuit.
    auto produce = [&](std::size_t w, std::size_t physical) {
        renamed[w] = physical;
        remaining[w] = uses[w];
    };
    auto consume = [&](std::size_t w) {
        std::size_t src = renamed[w];
        if (remaining[w]-- < 2) {
            return src;
        }
        std::size_t a = next_wire++;
        std::size_t b = next_wire++;
        c.gates_.push_back({BoolGateKind::Fanout, {src}, {a, b}});
        renamed[w] = a;
        return b;
    };

    next_wire = num_inputs_;
    for (std::size_t k = 0; k < num_inputs_; k++) {
        produce(k, k);
    }
    for (const auto &g : gates_) {
        BoolGate ng{g.kind, {}, {}};
        for (auto w : g.inputs) {
            ng.inputs.push_back(consume(w));
        }
        std::size_t out = next_wire++;
        ng.outputs.push_back(out);
        c.gates_.push_back(std::move(ng));
        produce(g.outputs[0], out);
    }
    std::size_t output_wire = consume(output_);
    c.output_ = output_wire;
    c.num_wires_ = next_wire;
    return c;
}

}  // namespace tcount
