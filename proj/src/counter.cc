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

#include "tcount/counter.h"

#include <cmath>
#include <random>
#include <set>

#include "tcount/geometric.h"

namespace tcount {

const char *mode_name(CountMode mode) {
    return mode == CountMode::Exact ? "exact" : "probability";
}

void CountQuery::validate() const {
    if (suffix.size() > n) {
        throw std::invalid_argument("Suffix \"" + suffix.str() + "\" is longer than the solution length " +
                                    std::to_string(n) + ".");
    }
    if (n > n_max) {
        throw std::invalid_argument("Solution length " + std::to_string(n) + " exceeds n_max = " +
                                    std::to_string(n_max) + ".");
    }
}

template <typename T>
std::vector<Tensor<T>> input_state_tensors(std::size_t n, const Bits &suffix, std::size_t num_qubits, CountMode mode) {
    if (suffix.size() > n) {
        throw std::invalid_argument("input_state_tensors: suffix longer than n.");
    }
    if (n > num_qubits) {
        throw std::invalid_argument("input_state_tensors: n exceeds the qubit count.");
    }
    const T zero = ScalarTraits<T>::zero();
    const T one = ScalarTraits<T>::one();
    T plus = one;
    if (mode == CountMode::Probability && suffix.size() < n) {
        if constexpr (std::is_same_v<T, Complex>) {
            plus = Complex(1.0 / std::sqrt(2.0), 0.0);
        } else {
            throw CountError(std::string("Probability-mode superposition inputs need complex numbers, not ") +
                             ScalarTraits<T>::name + ".");
        }
    }
    std::vector<Tensor<T>> out;
    for (std::size_t q = num_qubits; q >= 1; q--) {
        std::vector<T> c;
        if (q > n) {
            c = {one, zero};
        } else if (q > suffix.size()) {
            c = {plus, plus};
        } else if (suffix.at(q)) {
            c = {zero, one};
        } else {
            c = {one, zero};
        }
        out.push_back(Tensor<T>::vector(static_cast<Label>(q), std::move(c)));
    }
    return out;
}

template <typename T>
Tensor<T> projector_tensor(Label ket, Label bra) {
    const T zero = ScalarTraits<T>::zero();
    return Tensor<T>({ket, bra}, {2, 2}, {zero, zero, zero, ScalarTraits<T>::one()});
}

template <typename T>
Counter<T> build_two_layers(const CheckerNetwork<T> &checker, const std::vector<Tensor<T>> &states,
                            const std::vector<Label> &traced) {
    Counter<T> c;
    c.mode = CountMode::Probability;
    TensorNetwork<T> &net = c.network;
    net = checker.network;
    std::set<Label> shared(traced.begin(), traced.end());
    for (const auto &[label, where] : checker.network.label_positions()) {
        if (!shared.count(label)) {
            c.layout.bra_label[label] = 0;
        }
    }
    for (const auto &s : states) {
        for (auto l : s.labels()) {
            if (!shared.count(l)) {
                c.layout.bra_label.emplace(l, 0);
            }
        }
    }
    for (auto &[ket, bra] : c.layout.bra_label) {
        bra = net.fresh_label();
    }
    auto bra_copy = [&](const Tensor<T> &t) {
        std::vector<Label> labels;
        for (auto l : t.labels()) {
            auto it = c.layout.bra_label.find(l);
            labels.push_back(it == c.layout.bra_label.end() ? l : it->second);
        }
        return t.relabeled(std::move(labels)).conjugated();
    };
    std::size_t gates = checker.network.size();
    for (std::size_t k = 0; k < gates; k++) {
        c.layout.mirrors.emplace_back(k, net.add(bra_copy(checker.network[k])));
    }
    // A Boolean checker has no final input wires to trace, so its inputs are
    // dephased explicitly: one diagonal bridge diag(|a_0|^2, |a_1|^2) per input.
    const bool classical = checker.line_outputs.empty();
    for (const auto &s : states) {
        if (classical && s.rank() == 1 && c.layout.bra_label.count(s.labels()[0])) {
            Label ket = s.labels()[0];
            const T zero = ScalarTraits<T>::zero();
            std::vector<T> diag{s.data()[0] * ScalarTraits<T>::conj(s.data()[0]), zero, zero,
                                s.data()[1] * ScalarTraits<T>::conj(s.data()[1])};
            std::size_t pos = net.add(Tensor<T>({ket, c.layout.bra_label.at(ket)}, {2, 2}, std::move(diag)));
            c.layout.bridges.push_back(pos);
            c.layout.inputs.push_back(pos);
            continue;
        }
        std::size_t ket = net.add(s);
        std::size_t bra = net.add(bra_copy(s));
        c.layout.mirrors.emplace_back(ket, bra);
        c.layout.inputs.push_back(ket);
        c.layout.inputs.push_back(bra);
    }
    return c;
}

template <typename T>
std::vector<Tensor<T>> label_input_states(const CheckerNetwork<T> &checker, std::vector<Tensor<T>> states) {
    std::size_t n = checker.inputs.size();
    for (auto &s : states) {
        std::size_t q = static_cast<std::size_t>(s.labels()[0]);
        Label target = q <= n ? checker.inputs.at(q - 1) : checker.ancillas.at(q - n - 1);
        s = s.relabeled({target});
    }
    return states;
}

template <typename T>
Counter<T> build_counter(const CheckerNetwork<T> &checker, const CountQuery &query, CountMode mode) {
    query.validate();
    if (query.n != checker.inputs.size()) {
        throw std::invalid_argument("build_counter: checker has " + std::to_string(checker.inputs.size()) +
                                    " inputs but the query asks for length " + std::to_string(query.n) + ".");
    }
    std::size_t num_qubits = checker.inputs.size() + checker.ancillas.size();
    auto states = label_input_states(checker, input_state_tensors<T>(query.n, query.suffix, num_qubits, mode));
    Counter<T> c;
    if (mode == CountMode::Exact) {
        if constexpr (!ScalarTraits<T>::exact) {
            throw CountError("Exact counting needs an exact number system.");
        } else {
            c.network = checker.network;
            c.mode = mode;
            for (auto &s : states) {
                c.layout.inputs.push_back(c.network.add(std::move(s)));
            }
            const T zero = ScalarTraits<T>::zero();
            const T one = ScalarTraits<T>::one();
            c.layout.projector = c.network.add(Tensor<T>::vector(checker.output, {zero, one}));
            for (auto l : checker.discards) {
                c.network.add(Tensor<T>::vector(l, {one, one}));
            }
        }
    } else {
        c = build_two_layers(checker, states, checker.discards);
        Label out = checker.output;
        std::size_t p = c.network.add(projector_tensor<T>(out, c.layout.bra_label.at(out)));
        c.layout.projector = p;
        c.layout.bridges.push_back(p);
        c.layout.diagonal = checker.monomial;
    }
    c.norm_exponent = query.n - query.suffix.size();
    c.network.validate();
    if (!c.network.closed()) {
        throw CountError("build_counter: the counter still has open indices.");
    }
    return c;
}

BigInt count_from_value(const BigInt &value) {
    if (value < 0) {
        throw CountError("Negative count " + value.str() + ".");
    }
    return value;
}

double scaled_probability(const Complex &value, const CountQuery &query) {
    return std::ldexp(value.real(), static_cast<int>(query.n - query.suffix.size()));
}

BigInt count_from_value(const Complex &value, const CountQuery &query) {
    if (value.real() < -1e-9) {
        throw CountError("Negative probability " + format_significant(value.real(), 12) + ".");
    }
    double scaled = scaled_probability(value, query);
    double imag = std::ldexp(std::abs(value.imag()), static_cast<int>(query.n - query.suffix.size()));
    double rounded = std::round(std::max(scaled, 0.0));
    if (std::abs(scaled - rounded) >= 1e-6 || imag >= 1e-6) {
        throw CountError("Scaled probability " + format_significant(scaled, 12) +
                         " is not within 1e-6 of an integer; the precision is exhausted or the checker is invalid.");
    }
    return BigInt(rounded);
}

template <typename T>
CheckerReport verify_checker(const CheckerNetwork<T> &checker, std::size_t budget, std::uint64_t seed) {
    CheckerReport report;
    std::size_t n = checker.inputs.size();
    std::size_t num_qubits = n + checker.ancillas.size();
    std::vector<Bits> samples;
    if (n < 63 && (std::uint64_t{1} << n) <= budget) {
        report.exhaustive = true;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v++) {
            samples.push_back(Bits::from_integer(v, n));
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < budget; k++) {
            std::string text;
            for (std::size_t b = 0; b < n; b++) {
                text.push_back((rng() & 1) ? '1' : '0');
            }
            samples.push_back(Bits::parse(text));
        }
    }
    std::optional<ContractionOrder> order;
    for (const auto &w : samples) {
        auto states = label_input_states(checker, input_state_tensors<T>(n, w, num_qubits, CountMode::Probability));
        Counter<T> c = build_two_layers(checker, states, checker.discards);
        Label out = checker.output;
        std::size_t p = c.network.add(projector_tensor<T>(out, c.layout.bra_label.at(out)));
        c.layout.projector = p;
        c.layout.bridges.push_back(p);
        c.layout.diagonal = checker.monomial;
        TensorNetwork<T> prepared = prepare_geometric(c);
        if (!order) {
            order = choose_order(NetworkShape::of(prepared), OrderHeuristic::Auto);
        }
        double v = ScalarTraits<T>::to_complex(contract_network(prepared, *order).value()).real();
        report.checked++;
        if (std::abs(v - 1) <= 1e-9) {
            report.solutions.push_back(w);
        } else if (std::abs(v) > 1e-9) {
            report.violations.push_back({w, v});
        }
    }
    return report;
}

#define TCOUNT_INSTANTIATE(T)                                                                                     \
    template std::vector<Tensor<T>> input_state_tensors<T>(std::size_t, const Bits &, std::size_t, CountMode); \
    template std::vector<Tensor<T>> label_input_states<T>(const CheckerNetwork<T> &, std::vector<Tensor<T>>); \
    template Tensor<T> projector_tensor<T>(Label, Label);                                                       \
    template Counter<T> build_two_layers<T>(const CheckerNetwork<T> &, const std::vector<Tensor<T>> &,           \
                                            const std::vector<Label> &);                                         \
    template Counter<T> build_counter<T>(const CheckerNetwork<T> &, const CountQuery &, CountMode);             \
    template CheckerReport verify_checker<T>(const CheckerNetwork<T> &, std::size_t, std::uint64_t);

TCOUNT_INSTANTIATE(BigInt)
TCOUNT_INSTANTIATE(Complex)
TCOUNT_INSTANTIATE(Dyadic)

#undef TCOUNT_INSTANTIATE

}  // namespace tcount
