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

#ifndef TCOUNT_TENSOR_NETWORK_H
#define TCOUNT_TENSOR_NETWORK_H

#include <cmath>
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "tcount/tensor.h"

namespace tcount {

/// A bond: the label shared by the tensors at positions `lhs` < `rhs`.
struct Bond {
    std::size_t lhs;
    std::size_t rhs;
    Label label;
    bool operator==(const Bond &) const = default;
};

/// Tensors bonded wherever two of them share a label. A label may occur in at
/// most two tensors; labels occurring once are open.
template <typename T>
class TensorNetwork {
   public:
    TensorNetwork() = default;

    std::size_t add(Tensor<T> tensor) {
        for (auto l : tensor.labels()) {
            next_label_ = std::max(next_label_, l + 1);
        }
        tensors_.push_back(std::move(tensor));
        return tensors_.size() - 1;
    }

    /// Makes every label below `next` unavailable to fresh_label().
    void reserve_labels(Label next) {
        next_label_ = std::max(next_label_, next);
    }

    /// Issues a label not used by any tensor added so far.
    Label fresh_label() {
        return next_label_++;
    }

    std::size_t size() const {
        return tensors_.size();
    }
    const std::vector<Tensor<T>> &tensors() const {
        return tensors_;
    }
    const Tensor<T> &operator[](std::size_t k) const {
        return tensors_[k];
    }
    Tensor<T> &operator[](std::size_t k) {
        return tensors_[k];
    }

    /// Positions holding each label.
    std::map<Label, std::vector<std::size_t>> label_positions() const {
        std::map<Label, std::vector<std::size_t>> m;
        for (std::size_t k = 0; k < tensors_.size(); k++) {
            for (auto l : tensors_[k].labels()) {
                m[l].push_back(k);
            }
        }
        return m;
    }

    /// Checks that labels occur at most twice and bonded dimensions agree.
    void validate() const {
        for (const auto &[label, where] : label_positions()) {
            if (where.size() > 2) {
                throw std::invalid_argument("TensorNetwork: label " + std::to_string(label) + " occurs in " +
                                            std::to_string(where.size()) + " tensors.");
            }
            if (where.size() == 2 && tensors_[where[0]].dim_of(label) != tensors_[where[1]].dim_of(label)) {
                throw std::invalid_argument("TensorNetwork: bond " + std::to_string(label) +
                                            " joins indices of different dimension.");
            }
        }
    }

    std::vector<Bond> bonds() const {
        std::vector<Bond> out;
        for (const auto &[label, where] : label_positions()) {
            if (where.size() == 2) {
                out.push_back({std::min(where[0], where[1]), std::max(where[0], where[1]), label});
            }
        }
        return out;
    }

    std::vector<Label> open_labels() const {
        std::vector<Label> out;
        for (const auto &[label, where] : label_positions()) {
            if (where.size() == 1) {
                out.push_back(label);
            }
        }
        return out;
    }

    bool closed() const {
        return open_labels().empty();
    }

   private:
    std::vector<Tensor<T>> tensors_;
    Label next_label_ = 1;
};

/// One pairwise merge. Inputs occupy positions [0, T); the result of step s is
/// placed at position T + s.
struct MergeStep {
    std::size_t lhs;
    std::size_t rhs;
    bool operator==(const MergeStep &) const = default;
};

/// A binary merge schedule plus the estimates attached by whoever built it.
struct ContractionOrder {
    std::vector<MergeStep> steps;
    /// log2 of the largest component count of any tensor alive during the contraction.
    double width = 0;
    /// Total multiply-add count.
    double cost = 0;
};

/// Throws unless `order` consumes every position exactly once and leaves a single survivor.
void validate_order(std::size_t tensor_count, const ContractionOrder &order);

struct ContractionStats {
    /// Largest component count of any merge result.
    std::size_t peak_intermediate = 0;
    double multiply_adds = 0;
};

namespace detail {

template <typename T>
Tensor<T> contract_all(const TensorNetwork<T> &net, const ContractionOrder &order, ContractionStats *stats) {
    if (net.size() == 0) {
        throw std::invalid_argument("contract_network: empty network.");
    }
    validate_order(net.size(), order);
    std::vector<std::optional<Tensor<T>>> live;
    live.reserve(net.size() + order.steps.size());
    for (const auto &t : net.tensors()) {
        live.emplace_back(t);
    }
    ContractionStats local;
    for (const auto &step : order.steps) {
        Tensor<T> &a = *live[step.lhs];
        Tensor<T> &b = *live[step.rhs];
        double work = static_cast<double>(a.size()) * static_cast<double>(b.size());
        std::size_t shared = 1;
        for (auto l : a.labels()) {
            if (b.has_label(l)) {
                shared *= a.dim_of(l);
            }
        }
        local.multiply_adds += work / static_cast<double>(shared);
        Tensor<T> merged = contract_shared(a, b);
        local.peak_intermediate = std::max(local.peak_intermediate, merged.size());
        live[step.lhs].reset();
        live[step.rhs].reset();
        live.emplace_back(std::move(merged));
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return std::move(*live.back());
}

/// Copy on machine words, or nothing if some component is too large.
std::optional<TensorNetwork<std::int64_t>> to_words(const TensorNetwork<BigInt> &net);
Tensor<BigInt> from_words(const Tensor<std::int64_t> &t);

}  // namespace detail

/// Integer networks are contracted on machine words first and redone with
/// BigInt only if some intermediate overflows.
template <typename T>
Tensor<T> contract_network(const TensorNetwork<T> &net, const ContractionOrder &order,
                           ContractionStats *stats = nullptr) {
    if constexpr (std::is_same_v<T, BigInt>) {
        if (auto words = detail::to_words(net)) {
            try {
                return detail::from_words(detail::contract_all(*words, order, stats));
            } catch (const detail::WordOverflow &) {
            }
        }
    }
    return detail::contract_all(net, order, stats);
}

/// Merges tensors left to right: ((t0 t1) t2) ...
ContractionOrder sequential_order(std::size_t tensor_count);

/// Golden-file form: a `dims: d1 d2 ...` line then whitespace-separated components.
template <typename T>
std::string serialize_tensor(const Tensor<T> &t) {
    std::string out = "dims:";
    for (auto d : t.dims()) {
        out += " " + std::to_string(d);
    }
    out += "\n";
    for (std::size_t k = 0; k < t.data().size(); k++) {
        out += (k == 0 ? "" : " ") + ScalarTraits<T>::str(t.data()[k]);
    }
    out += "\n";
    return out;
}

Tensor<BigInt> parse_integer_tensor(const std::string &text);
Tensor<Complex> parse_complex_tensor(const std::string &text);

}  // namespace tcount

#endif
