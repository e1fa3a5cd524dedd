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

#include "tcount/quantum_circuit.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace tcount {

namespace {

Matrix permutation_matrix(std::size_t dim, const std::vector<std::size_t> &image) {
    Matrix m(dim);
    for (std::size_t in = 0; in < dim; in++) {
        m(image[in], in) = 1;
    }
    return m;
}

std::map<std::string, Matrix> build_gate_table() {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i{0, 1};
    std::map<std::string, Matrix> t;
    t["X"] = Matrix(2, {0, 1, 1, 0});
    t["Y"] = Matrix(2, {0, -i, i, 0});
    t["Z"] = Matrix(2, {1, 0, 0, -1});
    t["H"] = Matrix(2, {r, r, r, -r});
    t["S"] = Matrix(2, {1, 0, 0, i});
    t["T"] = Matrix(2, {1, 0, 0, std::polar(1.0, M_PI / 4)});
    t["CNOT"] = permutation_matrix(4, {0, 1, 3, 2});
    t["CZ"] = Matrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    t["SWAP"] = permutation_matrix(4, {0, 2, 1, 3});
    t["Toffoli"] = permutation_matrix(8, {0, 1, 2, 3, 4, 5, 7, 6});
    return t;
}

const std::map<std::string, Matrix> &gate_table() {
    static const std::map<std::string, Matrix> table = build_gate_table();
    return table;
}

constexpr double kUnitaryTolerance = 1e-12;

}  // namespace

const Matrix &gate_table_matrix(const std::string &name) {
    auto it = gate_table().find(name);
    if (it == gate_table().end()) {
        throw std::invalid_argument("Unknown gate name '" + name + "'.");
    }
    return it->second;
}

bool is_table_gate(const std::string &name) {
    return gate_table().count(name) != 0;
}

bool is_clifford_gate_name(const std::string &name) {
    return name == "X" || name == "Y" || name == "Z" || name == "H" || name == "S" || name == "CNOT" || name == "CZ";
}

Matrix gaussian_gate_matrix(const GaussianGate &gate) {
    const std::size_t w = gate.window;
    const std::size_t dim = std::size_t{1} << w;
    const std::size_t modes = 2 * w;
    // Local Jordan-Wigner Majoranas; mode j of the window is bit (w-1-j) of the index.
    std::vector<Eigen::MatrixXcd> c(modes, Eigen::MatrixXcd::Zero(dim, dim));
    for (std::size_t j = 0; j < w; j++) {
        std::size_t bit = w - 1 - j;
        for (std::size_t col = 0; col < dim; col++) {
            double zsign = 1;
            for (std::size_t jj = 0; jj < j; jj++) {
                if ((col >> (w - 1 - jj)) & 1) {
                    zsign = -zsign;
                }
            }
            std::size_t row = col ^ (std::size_t{1} << bit);
            bool one = (col >> bit) & 1;
            c[2 * j](row, col) = zsign;                                               // X
            c[2 * j + 1](row, col) = zsign * (one ? Complex{0, -1} : Complex{0, 1});  // Y
        }
    }
    Eigen::MatrixXcd exponent = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t a = 0; a < modes; a++) {
        for (std::size_t b = 0; b < modes; b++) {
            if (gate.h(a, b) != 0) {
                exponent += 0.5 * gate.h(a, b) * c[a] * c[b];
            }
        }
    }
    Eigen::MatrixXcd u = exponent.exp();
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t col = 0; col < dim; col++) {
            m(r, col) = u(r, col);
        }
    }
    return m;
}

QuantumCircuit::QuantumCircuit(std::size_t num_qubits, std::size_t num_inputs, std::size_t output_qubit)
    : num_qubits_(num_qubits), num_inputs_(num_inputs), output_qubit_(output_qubit) {
    if (num_qubits == 0) {
        throw std::invalid_argument("QuantumCircuit: need at least one qubit.");
    }
    if (num_inputs > num_qubits) {
        throw std::invalid_argument("QuantumCircuit: more input bits than qubits.");
    }
    if (output_qubit >= num_qubits) {
        throw std::invalid_argument("QuantumCircuit: output qubit out of range.");
    }
}

void QuantumCircuit::check_targets(const std::vector<std::size_t> &targets) const {
    for (std::size_t i = 0; i < targets.size(); i++) {
        if (targets[i] >= num_qubits_) {
            throw std::out_of_range("Gate target qubit " + std::to_string(targets[i] + 1) + " out of range.");
        }
        for (std::size_t j = i + 1; j < targets.size(); j++) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("Gate targets must be distinct.");
            }
        }
    }
}

void QuantumCircuit::append(QuantumGate gate) {
    check_targets(gate.targets);
    if (gate.targets.empty() || gate.targets.size() > 3) {
        throw std::invalid_argument("Gates act on 1 to 3 qubits.");
    }
    if (gate.matrix.dim != (std::size_t{1} << gate.targets.size())) {
        throw std::invalid_argument("Gate '" + gate.name + "' matrix size does not match its target count.");
    }
    if (!gate.matrix.is_unitary(kUnitaryTolerance)) {
        throw std::invalid_argument("Gate '" + gate.name + "' is not unitary.");
    }
    gates_.push_back(std::move(gate));
}

void QuantumCircuit::add(const std::string &name, std::vector<std::size_t> targets) {
    const Matrix &m = gate_table_matrix(name);
    if (m.dim != (std::size_t{1} << targets.size())) {
        throw std::invalid_argument("Gate '" + name + "' takes " + std::to_string(qubit_count_of_dimension(m.dim)) +
                                    " targets.");
    }
    append({name, std::move(targets), m, std::nullopt});
}

void QuantumCircuit::add_matrix(std::vector<std::size_t> targets, Matrix matrix, std::string name) {
    append({std::move(name), std::move(targets), std::move(matrix), std::nullopt});
}

void QuantumCircuit::add_gaussian(GaussianGate gate) {
    std::size_t w = gate.window;
    if (w == 0 || gate.first_mode + w > num_qubits_) {
        throw std::invalid_argument("Gaussian gate window exceeds the mode count.");
    }
    if (gate.generator.size() != 4 * w * w) {
        throw std::invalid_argument("Gaussian gate generator must be 2w x 2w.");
    }
    for (std::size_t r = 0; r < 2 * w; r++) {
        for (std::size_t c = 0; c < 2 * w; c++) {
            if (gate.h(r, c) != -gate.h(c, r)) {
                throw std::invalid_argument("Gaussian gate generator is not antisymmetric.");
            }
        }
    }
    std::vector<std::size_t> targets;
    for (std::size_t k = 0; k < w; k++) {
        targets.push_back(gate.first_mode + k);
    }
    Matrix m = gaussian_gate_matrix(gate);
    append({"GAUSS", std::move(targets), std::move(m), std::move(gate)});
}

bool QuantumCircuit::is_clifford() const {
    return clifford_suffix_start() == 0;
}

bool QuantumCircuit::is_gaussian() const {
    return gaussian_suffix_start() == 0;
}

std::size_t QuantumCircuit::clifford_suffix_start() const {
    std::size_t k = gates_.size();
    while (k > 0 && !gates_[k - 1].gaussian && is_clifford_gate_name(gates_[k - 1].name)) {
        k--;
    }
    return k;
}

std::size_t QuantumCircuit::gaussian_suffix_start() const {
    std::size_t k = gates_.size();
    while (k > 0 && gates_[k - 1].gaussian) {
        k--;
    }
    return k;
}

std::optional<std::string> QuantumCircuit::first_non_clifford() const {
    for (const auto &g : gates_) {
        if (g.gaussian || !is_clifford_gate_name(g.name)) {
            return g.name;
        }
    }
    return std::nullopt;
}

QuantumCircuit QuantumCircuit::slice(std::size_t begin, std::size_t end) const {
    QuantumCircuit c(num_qubits_, num_inputs_, output_qubit_);
    for (std::size_t k = begin; k < end && k < gates_.size(); k++) {
        c.gates_.push_back(gates_[k]);
    }
    return c;
}

QuantumCircuit reversible_to_quantum(const ReversibleCircuit &circuit) {
    QuantumCircuit q(circuit.num_lines(), circuit.num_inputs(), circuit.result_line());
    for (const auto &g : circuit.gates()) {
        switch (g.kind) {
            case RevGateKind::Not:
                q.add("X", g.lines);
                break;
            case RevGateKind::Cnot:
                q.add("CNOT", g.lines);
                break;
            case RevGateKind::Toffoli:
                q.add("Toffoli", g.lines);
                break;
        }
    }
    return q;
}

}  // namespace tcount
