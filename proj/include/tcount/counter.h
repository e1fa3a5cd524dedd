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

#ifndef TCOUNT_COUNTER_H
#define TCOUNT_COUNTER_H

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tcount/bits.h"
#include "tcount/lowering.h"

namespace tcount {

/// exact: one layer of 0/1 tensors, unnormalized inputs, value = count.
/// probability: ket and bra layers around the projector, value = P.
enum class CountMode { Exact, Probability };

const char *mode_name(CountMode mode);

/// Count the length-n solutions ending in `suffix` (n' = suffix.size() <= n <= n_max).
struct CountQuery {
    std::size_t n = 0;
    Bits suffix;
    std::size_t n_max = 0;

    void validate() const;
};

/// Numerical or structural failure while turning a contraction into a count.
class CountError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The N single-qubit input tensors, ordered from qubit N down to qubit 1; the
/// tensor of qubit q carries label q. Qubits above n get |0>, qubits n'+1..n get
/// the superposition (normalized in probability mode, (1, 1) in exact mode), and
/// qubits 1..n' the suffix bits.
template <typename T>
std::vector<Tensor<T>> input_state_tensors(std::size_t n, const Bits &suffix, std::size_t num_qubits, CountMode mode);

/// Moves qubit-labelled input states onto the checker's input and ancilla indices.
template <typename T>
std::vector<Tensor<T>> label_input_states(const CheckerNetwork<T> &checker, std::vector<Tensor<T>> states);

/// |1><1| between the given indices.
template <typename T>
Tensor<T> projector_tensor(Label ket, Label bra);

/// Where each tensor of a counter came from; fold_and_merge relies on this.
struct CounterLayout {
    /// (ket position, bra position) mirror pairs: gates and input states.
    std::vector<std::pair<std::size_t, std::size_t>> mirrors;
    /// Tensors spanning both layers (projector, operator sites).
    std::vector<std::size_t> bridges;
    /// Label of the bra copy of each ket label that was duplicated.
    std::map<Label, Label> bra_label;
    std::vector<std::size_t> inputs;
    std::optional<std::size_t> projector;
    /// Set for checkers whose gates map basis states to basis states: every
    /// non-zero term of the sum then has equal ket and bra values on each
    /// duplicated index (inputs are dephased or all other outputs traced), so
    /// folding may keep only the diagonal.
    bool diagonal = false;
};

template <typename T>
struct Counter {
    TensorNetwork<T> network;
    CountMode mode = CountMode::Exact;
    /// n - n'. In probability mode P = 2^-(n - n') * count.
    std::size_t norm_exponent = 0;
    CounterLayout layout;
};

/// Ket layer, conjugated bra layer and input states on both, with every label in
/// `traced` shared by the two layers (summed as bra-to-ket bonds). The caller
/// closes the remaining outputs.
template <typename T>
Counter<T> build_two_layers(const CheckerNetwork<T> &checker, const std::vector<Tensor<T>> &states,
                            const std::vector<Label> &traced);

/// Closed tensor counter for the query. Exact mode needs a deterministic checker
/// in an exact number system; probability mode needs complex numbers unless the
/// suffix fixes every bit.
template <typename T>
Counter<T> build_counter(const CheckerNetwork<T> &checker, const CountQuery &query, CountMode mode);

BigInt count_from_value(const BigInt &value);
/// round(P * 2^(n - n')), rejecting residues above 1e-6 and values below -1e-9.
BigInt count_from_value(const Complex &value, const CountQuery &query);
/// P * 2^(n - n') before rounding.
double scaled_probability(const Complex &value, const CountQuery &query);

struct CheckerViolation {
    Bits input;
    double value;
};

struct CheckerReport {
    bool exhaustive = false;
    std::size_t checked = 0;
    std::vector<Bits> solutions;
    std::vector<CheckerViolation> violations;

    bool ok() const {
        return violations.empty();
    }
};

/// For each sampled w (all of them when 2^n <= budget): fixes the inputs to w and
/// the output to 1, sums |.|^2 over the other outputs, and records anything not
/// within 1e-9 of 0 or 1.
template <typename T>
CheckerReport verify_checker(const CheckerNetwork<T> &checker, std::size_t budget = 1u << 12,
                             std::uint64_t seed = 1);

}  // namespace tcount

#endif
