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

#include "tcount/pauli.h"

#include <stdexcept>

namespace tcount {

namespace {

using L = PauliLetter;

// Product a * b of single-qubit letters as (letter, power of i).
std::pair<L, unsigned> letter_product(L a, L b) {
    static const std::pair<L, unsigned> table[4][4] = {
        {{L::I, 0}, {L::X, 0}, {L::Y, 0}, {L::Z, 0}},
        {{L::X, 0}, {L::I, 0}, {L::Z, 1}, {L::Y, 3}},
        {{L::Y, 0}, {L::Z, 3}, {L::I, 0}, {L::X, 1}},
        {{L::Z, 0}, {L::Y, 1}, {L::X, 3}, {L::I, 0}},
    };
    return table[static_cast<int>(a)][static_cast<int>(b)];
}

PauliString with_phase(PauliString p, unsigned k) {
    p.set_phase(p.phase() + k);
    return p;
}

// Image of X or Z on targets[j] under one gate.
PauliString gate_image(const QuantumGate &g, std::size_t m, std::size_t j, L letter, bool forward) {
    std::size_t q = g.targets[j];
    auto one = [&](L l) { return PauliString::single(m, q, l); };
    const std::string &n = g.name;
    bool is_x = letter == L::X;
    if (n == "X") {
        return is_x ? one(L::X) : with_phase(one(L::Z), 2);
    }
    if (n == "Y") {
        return with_phase(one(letter), 2);
    }
    if (n == "Z") {
        return is_x ? with_phase(one(L::X), 2) : one(L::Z);
    }
    if (n == "H") {
        return one(is_x ? L::Z : L::X);
    }
    if (n == "S") {
        if (!is_x) {
            return one(L::Z);
        }
        return forward ? one(L::Y) : with_phase(one(L::Y), 2);
    }
    if (n == "CNOT") {
        std::size_t c = g.targets[0], t = g.targets[1];
        PauliString r = one(letter);
        if (j == 0 && is_x) {
            r.set(t, L::X);
        } else if (j == 1 && !is_x) {
            r.set(c, L::Z);
        }
        return r;
    }
    if (n == "CZ") {
        PauliString r = one(letter);
        if (is_x) {
            r.set(g.targets[1 - j], L::Z);
        }
        return r;
    }
    throw std::invalid_argument("Gate '" + n + "' is not a Clifford gate of the table.");
}

void apply_gate(PauliString &p, const QuantumGate &g, bool forward) {
    if (!is_clifford_gate_name(g.name) || g.gaussian) {
        throw std::invalid_argument("Gate '" + g.name + "' is not a Clifford gate of the table.");
    }
    std::size_t m = p.size();
    std::vector<std::pair<std::size_t, L>> removed;
    for (std::size_t j = 0; j < g.targets.size(); j++) {
        L l = p[g.targets[j]];
        if (l != L::I) {
            removed.emplace_back(j, l);
            p.set(g.targets[j], L::I);
        }
    }
    for (const auto &[j, l] : removed) {
        if (l == L::Y) {
            PauliString y = gate_image(g, m, j, L::X, forward) * gate_image(g, m, j, L::Z, forward);
            p *= with_phase(y, 1);
        } else {
            p *= gate_image(g, m, j, l, forward);
        }
    }
}

}  // namespace

char pauli_letter_char(PauliLetter p) {
    return "IXYZ"[static_cast<int>(p)];
}

const Matrix &pauli_letter_matrix(PauliLetter p) {
    static const Matrix mats[4] = {
        Matrix::identity(2),
        gate_table_matrix("X"),
        gate_table_matrix("Y"),
        gate_table_matrix("Z"),
    };
    return mats[static_cast<int>(p)];
}

PauliString PauliString::parse(const std::string &text) {
    std::size_t k = 0;
    unsigned phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }
    PauliString p(text.size() - k);
    for (std::size_t q = 0; k < text.size(); k++, q++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set(q, L::X);
                break;
            case 'Y':
                p.set(q, L::Y);
                break;
            case 'Z':
                p.set(q, L::Z);
                break;
            default:
                throw std::invalid_argument("Bad Pauli letter in \"" + text + "\".");
        }
    }
    p.set_phase(phase);
    return p;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("PauliString::single: qubit out of range.");
    }
    PauliString p(num_qubits);
    p.set(qubit, letter);
    return p;
}

Complex PauliString::phase_value() const {
    static const Complex values[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return values[phase_];
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.size() != size()) {
        throw std::invalid_argument("PauliString: qubit counts differ.");
    }
    unsigned k = phase_ + rhs.phase_;
    for (std::size_t q = 0; q < size(); q++) {
        auto [l, e] = letter_product(letters_[q], rhs.letters_[q]);
        letters_[q] = l;
        k += e;
    }
    phase_ = k & 3u;
    return *this;
}

bool PauliString::is_identity_up_to_phase() const {
    for (auto l : letters_) {
        if (l != L::I) {
            return false;
        }
    }
    return true;
}

std::string PauliString::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    for (auto l : letters_) {
        s.push_back(pauli_letter_char(l));
    }
    return s;
}

PauliString conjugate_pauli(const QuantumCircuit &circuit, const PauliString &p) {
    if (p.size() != circuit.num_qubits()) {
        throw std::invalid_argument("conjugate_pauli: string and circuit qubit counts differ.");
    }
    PauliString r = p;
    const auto &gates = circuit.gates();
    for (std::size_t k = gates.size(); k-- > 0;) {
        apply_gate(r, gates[k], false);
    }
    return r;
}

PauliString conjugate_pauli_forward(const QuantumCircuit &circuit, const PauliString &p) {
    if (p.size() != circuit.num_qubits()) {
        throw std::invalid_argument("conjugate_pauli_forward: string and circuit qubit counts differ.");
    }
    PauliString r = p;
    for (const auto &g : circuit.gates()) {
        apply_gate(r, g, true);
    }
    return r;
}

}  // namespace tcount
