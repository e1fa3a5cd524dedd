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

#include "tcount/tensor_network.h"

#include <sstream>

namespace tcount {

void validate_order(std::size_t tensor_count, const ContractionOrder &order) {
    if (tensor_count == 0) {
        throw std::invalid_argument("Contraction order: no tensors to contract.");
    }
    if (order.steps.size() != tensor_count - 1) {
        throw std::invalid_argument("Contraction order is incomplete: " + std::to_string(order.steps.size()) +
                                    " merges for " + std::to_string(tensor_count) + " tensors.");
    }
    std::vector<bool> consumed(tensor_count + order.steps.size(), false);
    for (std::size_t s = 0; s < order.steps.size(); s++) {
        std::size_t available = tensor_count + s;
        for (auto p : {order.steps[s].lhs, order.steps[s].rhs}) {
            if (p >= available) {
                throw std::invalid_argument("Contraction order step " + std::to_string(s) +
                                            " references missing position " + std::to_string(p) + ".");
            }
            if (consumed[p]) {
                throw std::invalid_argument("Contraction order step " + std::to_string(s) + " reuses position " +
                                            std::to_string(p) + ".");
            }
            consumed[p] = true;
        }
        if (order.steps[s].lhs == order.steps[s].rhs) {
            throw std::invalid_argument("Contraction order step merges a position with itself.");
        }
    }
}

ContractionOrder sequential_order(std::size_t tensor_count) {
    ContractionOrder order;
    if (tensor_count < 2) {
        return order;
    }
    order.steps.push_back({0, 1});
    for (std::size_t k = 2; k < tensor_count; k++) {
        order.steps.push_back({tensor_count + k - 2, k});
    }
    return order;
}

namespace detail {

std::optional<TensorNetwork<std::int64_t>> to_words(const TensorNetwork<BigInt> &net) {
    const BigInt limit = BigInt(1) << 62;
    TensorNetwork<std::int64_t> out;
    for (const auto &t : net.tensors()) {
        std::vector<std::int64_t> data;
        data.reserve(t.size());
        for (const auto &x : t.data()) {
            if (x >= limit || -x >= limit) {
                return std::nullopt;
            }
            data.push_back(static_cast<std::int64_t>(x));
        }
        out.add(Tensor<std::int64_t>(t.labels(), t.dims(), std::move(data)));
    }
    return out;
}

Tensor<BigInt> from_words(const Tensor<std::int64_t> &t) {
    return Tensor<BigInt>(t.labels(), t.dims(), std::vector<BigInt>(t.data().begin(), t.data().end()));
}

}  // namespace detail

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::string>> split_golden(const std::string &text) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head != "dims:") {
        throw std::invalid_argument("Tensor file must start with 'dims:'.");
    }
    std::string line;
    std::getline(in, line);
    std::istringstream dim_line(line);
    std::vector<std::size_t> dims;
    std::size_t d;
    while (dim_line >> d) {
        dims.push_back(d);
    }
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) {
        tokens.push_back(tok);
    }
    return {dims, tokens};
}

std::vector<Label> default_labels(std::size_t n) {
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label{0});
    return labels;
}

}  // namespace

Tensor<BigInt> parse_integer_tensor(const std::string &text) {
    auto [dims, tokens] = split_golden(text);
    std::vector<BigInt> data;
    for (const auto &t : tokens) {
        data.emplace_back(t);
    }
    return Tensor<BigInt>(default_labels(dims.size()), dims, std::move(data));
}

Tensor<Complex> parse_complex_tensor(const std::string &text) {
    auto [dims, tokens] = split_golden(text);
    std::vector<Complex> data;
    for (const auto &t : tokens) {
        auto comma = t.find(',');
        if (comma == std::string::npos) {
            data.emplace_back(std::stod(t), 0.0);
        } else {
            data.emplace_back(std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1)));
        }
    }
    return Tensor<Complex>(default_labels(dims.size()), dims, std::move(data));
}

}  // namespace tcount
