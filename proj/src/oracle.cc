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

#include "tcount/oracle.h"

#include <cmath>
#include <stdexcept>

namespace tcount {

namespace {

void check_qubits(std::size_t m, std::size_t limit, const char *who) {
    if (m > limit) {
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(m) + " qubits exceeds the budget of " +
                                    std::to_string(limit) + ".");
    }
}

}  // namespace

DenseState DenseState::basis(std::size_t num_qubits, std::uint64_t index) {
    check_qubits(num_qubits, max_qubits, "DenseState");
    DenseState s;
    s.num_qubits_ = num_qubits;
    s.amps_.assign(std::size_t{1} << num_qubits, 0.0);
    s.amps_.at(index) = 1.0;
    return s;
}

DenseState DenseState::product(const std::vector<std::array<Complex, 2>> &states) {
    check_qubits(states.size(), max_qubits, "DenseState");
    DenseState s;
    s.num_qubits_ = states.size();
    s.amps_.assign(std::size_t{1} << states.size(), 1.0);
    for (std::size_t i = 0; i < s.amps_.size(); i++) {
        for (std::size_t q = 0; q < states.size(); q++) {
            s.amps_[i] *= states[q][(i >> q) & 1];
        }
    }
    return s;
}

DenseState DenseState::from_amplitudes(std::vector<Complex> amplitudes) {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < amplitudes.size()) {
        m++;
    }
    if ((std::size_t{1} << m) != amplitudes.size()) {
        throw std::invalid_argument("DenseState: amplitude count must be a power of two.");
    }
    check_qubits(m, max_qubits, "DenseState");
    DenseState s;
    s.num_qubits_ = m;
    s.amps_ = std::move(amplitudes);
    return s;
}

void DenseState::apply(const Matrix &matrix, const std::vector<std::size_t> &targets) {
    std::size_t k = targets.size();
    if (matrix.dim != (std::size_t{1} << k)) {
        throw std::invalid_argument("DenseState::apply: matrix size does not match the targets.");
    }
    std::size_t mask = 0;
    for (auto t : targets) {
        if (t >= num_qubits_) {
            throw std::out_of_range("DenseState::apply: target out of range.");
        }
        mask |= std::size_t{1} << t;
    }
    std::vector<std::size_t> offsets(matrix.dim);
    for (std::size_t l = 0; l < matrix.dim; l++) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < k; j++) {
            if ((l >> (k - 1 - j)) & 1) {
                off |= std::size_t{1} << targets[j];
            }
        }
        offsets[l] = off;
    }
    std::vector<Complex> local(matrix.dim);
    for (std::size_t base = 0; base < amps_.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (std::size_t l = 0; l < matrix.dim; l++) {
            local[l] = amps_[base | offsets[l]];
        }
        for (std::size_t r = 0; r < matrix.dim; r++) {
            Complex v = 0;
            for (std::size_t c = 0; c < matrix.dim; c++) {
                v += matrix(r, c) * local[c];
            }
            amps_[base | offsets[r]] = v;
        }
    }
}

void DenseState::apply(const QuantumGate &gate) {
    double before = norm();
    apply(gate.matrix, gate.targets);
    if (std::abs(norm() - before) > 1e-10) {
        throw std::logic_error("DenseState: gate '" + gate.name + "' changed the norm.");
    }
}

double DenseState::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

double DenseState::probability_one(std::size_t qubit) const {
    double p = 0;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if ((i >> qubit) & 1) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

BigInt enumerate_count(const BooleanCircuit &circuit, std::size_t n, const Bits &suffix) {
    if (n != circuit.num_inputs()) {
        throw std::invalid_argument("enumerate_count: the circuit takes " + std::to_string(circuit.num_inputs()) +
                                    " inputs, not " + std::to_string(n) + ".");
    }
    if (n > 24) {
        throw std::invalid_argument("enumerate_count: n = " + std::to_string(n) + " exceeds the budget of 24.");
    }
    if (suffix.size() > n) {
        throw std::invalid_argument("enumerate_count: suffix longer than n.");
    }
    std::uint64_t low = suffix.to_integer();
    std::size_t free = n - suffix.size();
    BigInt count = 0;
    for (std::uint64_t high = 0; high < (std::uint64_t{1} << free); high++) {
        if (circuit.evaluate(Bits::from_integer((high << suffix.size()) | low, n))) {
            count += 1;
        }
    }
    return count;
}

std::vector<Bits> enumerate_solutions(const BooleanCircuit &circuit) {
    std::size_t n = circuit.num_inputs();
    if (n > 24) {
        throw std::invalid_argument("enumerate_solutions: n exceeds the budget of 24.");
    }
    std::vector<Bits> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v++) {
        Bits w = Bits::from_integer(v, n);
        if (circuit.evaluate(w)) {
            out.push_back(w);
        }
    }
    return out;
}

std::vector<std::array<Complex, 2>> counter_input_product(std::size_t n, const Bits &suffix, std::size_t num_qubits) {
    if (suffix.size() > n || n > num_qubits) {
        throw std::invalid_argument("counter_input_product: need |suffix| <= n <= N.");
    }
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<std::array<Complex, 2>> out;
    for (std::size_t q = 0; q < num_qubits; q++) {
        if (q >= n) {
            out.push_back({1.0, 0.0});
        } else if (q >= suffix.size()) {
            out.push_back({h, h});
        } else if (suffix.at(q + 1)) {
            out.push_back({0.0, 1.0});
        } else {
            out.push_back({1.0, 0.0});
        }
    }
    return out;
}

double dense_probability(const QuantumCircuit &circuit, const std::vector<std::array<Complex, 2>> &input) {
    if (input.size() != circuit.num_qubits()) {
        throw std::invalid_argument("dense_probability: one input state per qubit is required.");
    }
    DenseState s = DenseState::product(input);
    for (const auto &g : circuit.gates()) {
        s.apply(g);
    }
    return s.probability_one(circuit.output_qubit());
}

Matrix dense_operator(const QuantumCircuit &circuit) {
    check_qubits(circuit.num_qubits(), 6, "dense_operator");
    std::size_t dim = std::size_t{1} << circuit.num_qubits();
    Matrix u(dim);
    for (std::size_t col = 0; col < dim; col++) {
        DenseState s = DenseState::basis(circuit.num_qubits(), col);
        for (const auto &g : circuit.gates()) {
            s.apply(g);
        }
        for (std::size_t row = 0; row < dim; row++) {
            u(row, col) = s.amplitudes()[row];
        }
    }
    if (!u.is_unitary(1e-10)) {
        throw std::logic_error("dense_operator: product of gates is not unitary.");
    }
    return u;
}

Matrix dense_evolved_projector(const QuantumCircuit &circuit) {
    check_qubits(circuit.num_qubits(), 10, "dense_evolved_projector");
    std::size_t dim = std::size_t{1} << circuit.num_qubits();
    std::size_t out_bit = std::size_t{1} << circuit.output_qubit();
    Matrix r(dim);
    for (std::size_t col = 0; col < dim; col++) {
        DenseState s = DenseState::basis(circuit.num_qubits(), col);
        for (const auto &g : circuit.gates()) {
            s.apply(g.matrix, g.targets);
        }
        std::vector<Complex> amps = s.amplitudes();
        for (std::size_t i = 0; i < dim; i++) {
            if (!(i & out_bit)) {
                amps[i] = 0;
            }
        }
        DenseState t = DenseState::from_amplitudes(std::move(amps));
        const auto &gates = circuit.gates();
        for (std::size_t k = gates.size(); k-- > 0;) {
            t.apply(gates[k].matrix.adjoint(), gates[k].targets);
        }
        for (std::size_t row = 0; row < dim; row++) {
            r(row, col) = t.amplitudes()[row];
        }
    }
    return r;
}

Matrix dense_pauli(const PauliString &p) {
    check_qubits(p.size(), 10, "dense_pauli");
    std::size_t dim = std::size_t{1} << p.size();
    Matrix out(dim);
    for (std::size_t col = 0; col < dim; col++) {
        // Each letter maps a basis state to one basis state times a phase.
        std::size_t row = col;
        Complex v = p.phase_value();
        for (std::size_t q = 0; q < p.size(); q++) {
            const Matrix &m = pauli_letter_matrix(p[q]);
            std::size_t b = (col >> q) & 1;
            std::size_t ob = m(0, b) != Complex(0.0) ? 0 : 1;
            v *= m(ob, b);
            row = (row & ~(std::size_t{1} << q)) | (ob << q);
        }
        out(row, col) = v;
    }
    return out;
}

}  // namespace tcount
