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

#include "tcount/lowering.h"

#include <cmath>

namespace tcount {

namespace {

template <typename T>
T from_complex(const Complex &x, const std::string &gate);

template <>
BigInt from_complex<BigInt>(const Complex &x, const std::string &gate) {
    double r = std::round(x.real());
    if (x.imag() != 0 || r != x.real()) {
        throw std::invalid_argument("Gate '" + gate + "' has non-integer entries; it needs a complex network.");
    }
    return BigInt(static_cast<long long>(r));
}

template <>
Dyadic from_complex<Dyadic>(const Complex &x, const std::string &gate) {
    return Dyadic(from_complex<BigInt>(x, gate));
}

}  // namespace

template <typename T>
Tensor<T> boolean_gate_tensor(BoolGateKind kind, const std::vector<Label> &labels) {
    std::size_t ins = gate_kind_arity(kind);
    if (labels.size() <= ins) {
        throw std::invalid_argument("boolean_gate_tensor: missing output labels.");
    }
    std::size_t outs = labels.size() - ins;
    if (kind != BoolGateKind::Fanout && outs != 1) {
        throw std::invalid_argument("boolean_gate_tensor: gate has exactly one output.");
    }
    std::vector<T> data(std::size_t{1} << labels.size(), ScalarTraits<T>::zero());
    for (std::size_t in = 0; in < (std::size_t{1} << ins); in++) {
        // in's bit (ins-1-k) is input k: the first index is most significant.
        auto bit = [&](std::size_t k) { return ((in >> (ins - 1 - k)) & 1) != 0; };
        bool v = false;
        switch (kind) {
            case BoolGateKind::And:
                v = bit(0) && bit(1);
                break;
            case BoolGateKind::Or:
                v = bit(0) || bit(1);
                break;
            case BoolGateKind::Xor:
                v = bit(0) != bit(1);
                break;
            case BoolGateKind::Not:
                v = !bit(0);
                break;
            case BoolGateKind::Const0:
                v = false;
                break;
            case BoolGateKind::Const1:
                v = true;
                break;
            case BoolGateKind::Fanout:
                v = bit(0);
                break;
        }
        std::size_t out = v ? (std::size_t{1} << outs) - 1 : 0;  // every output carries v
        data[(in << outs) | out] = ScalarTraits<T>::one();
    }
    return Tensor<T>(labels, std::vector<std::size_t>(labels.size(), 2), std::move(data));
}

template <typename T>
CheckerNetwork<T> lower_to_network(const BooleanCircuit &circuit) {
    CheckerNetwork<T> out;
    // Label of wire k is k + 1.
    auto label = [](std::size_t wire) { return static_cast<Label>(wire + 1); };
    std::vector<bool> consumed(circuit.num_wires(), false);
    for (const auto &g : circuit.gates()) {
        std::vector<Label> labels;
        for (auto w : g.inputs) {
            labels.push_back(label(w));
            consumed[w] = true;
        }
        for (auto w : g.outputs) {
            labels.push_back(label(w));
        }
        out.network.add(boolean_gate_tensor<T>(g.kind, labels));
    }
    // Keep fresh labels clear of wire labels even for wires no tensor mentions.
    out.network.reserve_labels(label(circuit.num_wires()));
    for (std::size_t k = 0; k < circuit.num_inputs(); k++) {
        out.inputs.push_back(label(k));
    }
    out.output = label(circuit.output());
    for (std::size_t w = 0; w < circuit.num_wires(); w++) {
        if (!consumed[w] && w != circuit.output()) {
            out.discards.push_back(label(w));
        }
    }
    return out;
}

namespace {

bool is_monomial(const Matrix &m) {
    for (std::size_t c = 0; c < m.dim; c++) {
        std::size_t nonzero = 0;
        for (std::size_t r = 0; r < m.dim; r++) {
            double a = std::abs(m(r, c));
            if (a > 1e-12) {
                nonzero++;
                if (std::abs(a - 1) > 1e-12) {
                    return false;
                }
            }
        }
        if (nonzero != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

template <typename T>
CheckerNetwork<T> lower_to_network(const QuantumCircuit &circuit) {
    CheckerNetwork<T> out;
    std::vector<Label> current;
    for (std::size_t q = 0; q < circuit.num_qubits(); q++) {
        current.push_back(out.network.fresh_label());
        (q < circuit.num_inputs() ? out.inputs : out.ancillas).push_back(current.back());
    }
    for (const auto &g : circuit.gates()) {
        std::vector<Label> labels;
        for (auto q : g.targets) {
            labels.push_back(current[q]);
        }
        for (auto q : g.targets) {
            current[q] = out.network.fresh_label();
            labels.push_back(current[q]);
        }
        out.monomial = out.monomial && is_monomial(g.matrix);
        Tensor<Complex> t = tensor_from_operator(g.matrix, labels);
        if constexpr (std::is_same_v<T, Complex>) {
            out.network.add(std::move(t));
        } else {
            std::vector<T> data;
            for (const auto &x : t.data()) {
                data.push_back(from_complex<T>(x, g.name));
            }
            out.network.add(Tensor<T>(t.labels(), t.dims(), std::move(data)));
        }
    }
    out.line_outputs = current;
    out.output = current[circuit.output_qubit()];
    for (std::size_t q = 0; q < circuit.num_qubits(); q++) {
        if (q != circuit.output_qubit()) {
            out.discards.push_back(current[q]);
        }
    }
    return out;
}

template Tensor<BigInt> boolean_gate_tensor<BigInt>(BoolGateKind, const std::vector<Label> &);
template Tensor<Complex> boolean_gate_tensor<Complex>(BoolGateKind, const std::vector<Label> &);
template Tensor<Dyadic> boolean_gate_tensor<Dyadic>(BoolGateKind, const std::vector<Label> &);
template CheckerNetwork<BigInt> lower_to_network<BigInt>(const BooleanCircuit &);
template CheckerNetwork<Complex> lower_to_network<Complex>(const BooleanCircuit &);
template CheckerNetwork<Dyadic> lower_to_network<Dyadic>(const BooleanCircuit &);
template CheckerNetwork<BigInt> lower_to_network<BigInt>(const QuantumCircuit &);
template CheckerNetwork<Complex> lower_to_network<Complex>(const QuantumCircuit &);
template CheckerNetwork<Dyadic> lower_to_network<Dyadic>(const QuantumCircuit &);

}  // namespace tcount
