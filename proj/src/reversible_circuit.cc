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

#include "tcount/reversible_circuit.h"

#include <stdexcept>

namespace tcount {

ReversibleCircuit::ReversibleCircuit(std::size_t num_lines, std::size_t num_inputs, std::size_t result_line)
    : num_lines_(num_lines), num_inputs_(num_inputs), result_line_(result_line) {
    if (num_inputs > num_lines || result_line >= num_lines) {
        throw std::invalid_argument("ReversibleCircuit: inputs or result line exceed the line count.");
    }
}

void ReversibleCircuit::append(RevGateKind kind, std::vector<std::size_t> lines) {
    std::size_t expected = kind == RevGateKind::Not ? 1 : kind == RevGateKind::Cnot ? 2 : 3;
    if (lines.size() != expected) {
        throw std::invalid_argument("ReversibleCircuit::append: wrong number of lines for gate.");
    }
    for (std::size_t i = 0; i < lines.size(); i++) {
        if (lines[i] >= num_lines_) {
            throw std::out_of_range("ReversibleCircuit::append: line out of range.");
        }
        for (std::size_t j = i + 1; j < lines.size(); j++) {
            if (lines[i] == lines[j]) {
                throw std::invalid_argument("ReversibleCircuit::append: repeated line in gate.");
            }
        }
    }
    gates_.push_back({kind, std::move(lines)});
}

namespace {

void apply(const RevGate &g, std::vector<bool> &state) {
    bool fire = true;
    for (std::size_t k = 0; k + 1 < g.lines.size(); k++) {
        fire = fire && state[g.lines[k]];
    }
    if (fire) {
        state[g.target()] = !state[g.target()];
    }
}

}  // namespace

std::vector<bool> ReversibleCircuit::run(std::vector<bool> state) const {
    if (state.size() != num_lines_) {
        throw std::invalid_argument("ReversibleCircuit::run: state size differs from line count.");
    }
    for (const auto &g : gates_) {
        apply(g, state);
    }
    return state;
}

std::vector<bool> ReversibleCircuit::run_backward(std::vector<bool> state) const {
    if (state.size() != num_lines_) {
        throw std::invalid_argument("ReversibleCircuit::run_backward: state size differs from line count.");
    }
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        apply(*it, state);
    }
    return state;
}

bool ReversibleCircuit::evaluate(const Bits &w) const {
    if (w.size() != num_inputs_) {
        throw std::invalid_argument("ReversibleCircuit::evaluate: wrong input length.");
    }
    std::vector<bool> state(num_lines_, false);
    for (std::size_t k = 0; k < num_inputs_; k++) {
        state[k] = w.at(k + 1);
    }
    return run(std::move(state))[result_line_];
}

ReversibleCircuit make_reversible(const BooleanCircuit &circuit) {
    // First pass: assign lines. Inputs keep their own line; NOT reuses the line
    // of its (single-use) operand; every other output gets a fresh ancilla.
    std::vector<std::size_t> line_of(circuit.num_wires(), 0);
    std::size_t lines = circuit.num_inputs();
    for (std::size_t k = 0; k < circuit.num_inputs(); k++) {
        line_of[k] = k;
    }
    for (const auto &g : circuit.gates()) {
        switch (g.kind) {
            case BoolGateKind::Not:
                line_of[g.outputs[0]] = line_of[g.inputs[0]];
                break;
            case BoolGateKind::Fanout:
                line_of[g.outputs[0]] = line_of[g.inputs[0]];
                for (std::size_t k = 1; k < g.outputs.size(); k++) {
                    line_of[g.outputs[k]] = lines++;
                }
                break;
            default:
                line_of[g.outputs[0]] = lines++;
                break;
        }
    }

    ReversibleCircuit r(lines, circuit.num_inputs(), line_of[circuit.output()]);
    for (const auto &g : circuit.gates()) {
        std::size_t out = line_of[g.outputs[0]];
        switch (g.kind) {
            case BoolGateKind::And:
                r.append(RevGateKind::Toffoli, {line_of[g.inputs[0]], line_of[g.inputs[1]], out});
                break;
            case BoolGateKind::Xor:
                r.append(RevGateKind::Cnot, {line_of[g.inputs[0]], out});
                r.append(RevGateKind::Cnot, {line_of[g.inputs[1]], out});
                break;
            case BoolGateKind::Not:
                r.append(RevGateKind::Not, {out});
                break;
            case BoolGateKind::Or: {
                std::size_t a = line_of[g.inputs[0]];
                std::size_t b = line_of[g.inputs[1]];
                r.append(RevGateKind::Not, {a});
                r.append(RevGateKind::Not, {b});
                r.append(RevGateKind::Toffoli, {a, b, out});
                r.append(RevGateKind::Not, {out});
                break;
            }
            case BoolGateKind::Const0:
                break;
            case BoolGateKind::Const1:
                r.append(RevGateKind::Not, {out});
                break;
            case BoolGateKind::Fanout:
                for (std::size_t k = 1; k < g.outputs.size(); k++) {
                    r.append(RevGateKind::Cnot, {line_of[g.inputs[0]], line_of[g.outputs[k]]});
                }
                break;
        }
    }
    return r;
}

}  // namespace tcount
