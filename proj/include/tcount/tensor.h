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

#ifndef TCOUNT_TENSOR_H
#define TCOUNT_TENSOR_H

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tcount/scalar.h"

namespace tcount {

/// Opaque index identifier. Two tensors sharing a label are bonded on it.
using Label = std::uint64_t;

/// Dense tensor over the number system T. Components are stored row-major over
/// the declared index order.
template <typename T>
class Tensor {
   public:
    /// Rank-0 tensor holding zero.
    Tensor() : data_{ScalarTraits<T>::zero()} {
    }

    Tensor(std::vector<Label> labels, std::vector<std::size_t> dims, std::vector<T> data)
        : labels_(std::move(labels)), dims_(std::move(dims)), data_(std::move(data)) {
        if (labels_.size() != dims_.size()) {
            throw std::invalid_argument("Tensor: label count does not match dimension count.");
        }
        std::size_t expected = 1;
        for (auto d : dims_) {
            if (d == 0) {
                throw std::invalid_argument("Tensor: index dimensions must be at least 1.");
            }
            expected *= d;
        }
        if (data_.size() != expected) {
            throw std::invalid_argument(
                "Tensor: component count " + std::to_string(data_.size()) + " != product of dimensions " +
                std::to_string(expected) + ".");
        }
        for (std::size_t i = 0; i < labels_.size(); i++) {
            for (std::size_t j = i + 1; j < labels_.size(); j++) {
                if (labels_[i] == labels_[j]) {
                    throw std::invalid_argument("Tensor: duplicate index label " + std::to_string(labels_[i]) + ".");
                }
            }
        }
    }

    static Tensor scalar(T value) {
        return Tensor({}, {}, {std::move(value)});
    }

    /// Rank-1 tensor with a single label.
    static Tensor vector(Label label, std::vector<T> components) {
        std::size_t n = components.size();
        return Tensor({label}, {n}, std::move(components));
    }

    const std::vector<Label> &labels() const {
        return labels_;
    }
    const std::vector<std::size_t> &dims() const {
        return dims_;
    }
    const std::vector<T> &data() const {
        return data_;
    }
    std::vector<T> &mutable_data() {
        return data_;
    }
    std::size_t rank() const {
        return labels_.size();
    }
    std::size_t size() const {
        return data_.size();
    }

    bool has_label(Label label) const {
        return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
    }
    std::size_t axis_of(Label label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) {
            throw std::invalid_argument("Tensor: no index labelled " + std::to_string(label) + ".");
        }
        return static_cast<std::size_t>(it - labels_.begin());
    }
    std::size_t dim_of(Label label) const {
        return dims_[axis_of(label)];
    }

    /// Row-major strides of the declared index order.
    std::vector<std::size_t> strides() const {
        std::vector<std::size_t> s(dims_.size(), 1);
        for (std::size_t k = dims_.size(); k-- > 1;) {
            s[k - 1] = s[k] * dims_[k];
        }
        return s;
    }

    const T &at(std::span<const std::size_t> index) const {
        return data_[flat_index(index)];
    }
    T &at(std::span<const std::size_t> index) {
        return data_[flat_index(index)];
    }
    const T &at(std::initializer_list<std::size_t> index) const {
        return at(std::span<const std::size_t>(index.begin(), index.size()));
    }

    /// The scalar value of a rank-0 tensor.
    const T &value() const {
        if (!labels_.empty()) {
            throw std::invalid_argument("Tensor::value: tensor still has open indices.");
        }
        return data_[0];
    }

    Tensor relabeled(std::vector<Label> labels) const {
        return Tensor(std::move(labels), dims_, data_);
    }

    Tensor conjugated() const {
        Tensor r = *this;
        for (auto &x : r.data_) {
            x = ScalarTraits<T>::conj(x);
        }
        return r;
    }

    /// Reorders the indices to the given label order.
    Tensor permuted(const std::vector<Label> &order) const {
        if (order.size() != labels_.size()) {
            throw std::invalid_argument("Tensor::permuted: order must name every index exactly once.");
        }
        std::vector<std::size_t> axes;
        axes.reserve(order.size());
        for (auto l : order) {
            axes.push_back(axis_of(l));
        }
        return permuted_axes(axes);
    }

    /// result axis k is source axis axes[k].
    Tensor permuted_axes(const std::vector<std::size_t> &axes) const {
        std::vector<Label> new_labels;
        std::vector<std::size_t> new_dims;
        for (auto a : axes) {
            new_labels.push_back(labels_[a]);
            new_dims.push_back(dims_[a]);
        }
        bool identity = true;
        for (std::size_t k = 0; k < axes.size(); k++) {
            identity &= axes[k] == k;
        }
        if (identity) {
            return Tensor(std::move(new_labels), std::move(new_dims), data_);
        }
        auto src_strides = strides();
        std::vector<std::size_t> gather(axes.size());
        for (std::size_t k = 0; k < axes.size(); k++) {
            gather[k] = src_strides[axes[k]];
        }
        std::vector<T> out;
        out.reserve(data_.size());
        std::vector<std::size_t> counter(axes.size(), 0);
        std::size_t src = 0;
        for (std::size_t n = 0; n < data_.size(); n++) {
            out.push_back(data_[src]);
            for (std::size_t k = axes.size(); k-- > 0;) {
                counter[k]++;
                src += gather[k];
                if (counter[k] < new_dims[k]) {
                    break;
                }
                src -= gather[k] * counter[k];
                counter[k] = 0;
            }
        }
        return Tensor(std::move(new_labels), std::move(new_dims), std::move(out));
    }

    bool operator==(const Tensor &other) const = default;

   private:
    std::size_t flat_index(std::span<const std::size_t> index) const {
        if (index.size() != dims_.size()) {
            throw std::invalid_argument("Tensor::at: wrong number of index values.");
        }
        std::size_t flat = 0;
        for (std::size_t k = 0; k < dims_.size(); k++) {
            if (index[k] >= dims_[k]) {
                throw std::out_of_range("Tensor::at: index value out of range.");
            }
            flat = flat * dims_[k] + index[k];
        }
        return flat;
    }

    std::vector<Label> labels_;
    std::vector<std::size_t> dims_;
    std::vector<T> data_;
};

namespace detail {

/// (rows x inner) * (inner x cols), both row-major.
template <typename T>
std::vector<T> multiply_dense(const std::vector<T> &ad, const std::vector<T> &bd, std::size_t rows, std::size_t inner,
                        std::size_t cols) {
    std::vector<T> out(rows * cols, ScalarTraits<T>::zero());
    const T zero = ScalarTraits<T>::zero();
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t k = 0; k < inner; k++) {
            const T &x = ad[r * inner + k];
            if (x == zero) {
                continue;
            }
            T *dst = out.data() + r * cols;
            const T *src = bd.data() + k * cols;
            for (std::size_t c = 0; c < cols; c++) {
                dst[c] += x * src[c];
            }
        }
    }
    return out;
}

template <typename T>
std::vector<T> multiply(const std::vector<T> &ad, const std::vector<T> &bd, std::size_t rows, std::size_t inner,
                        std::size_t cols) {
    return multiply_dense(ad, bd, rows, inner, cols);
}

/// Thrown by the machine-word kernel when a result leaves the int64 range.
struct WordOverflow {};

template <>
inline std::vector<std::int64_t> multiply(const std::vector<std::int64_t> &ad, const std::vector<std::int64_t> &bd,
                                          std::size_t rows, std::size_t inner, std::size_t cols) {
    std::vector<std::int64_t> out(rows * cols, 0);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t k = 0; k < inner; k++) {
            std::int64_t x = ad[r * inner + k];
            if (x == 0) {
                continue;
            }
            std::int64_t *dst = out.data() + r * cols;
            const std::int64_t *src = bd.data() + k * cols;
            bool overflow = false;
            for (std::size_t c = 0; c < cols; c++) {
                std::int64_t p;
                overflow |= __builtin_mul_overflow(x, src[c], &p);
                overflow |= __builtin_add_overflow(dst[c], p, &dst[c]);
            }
            if (overflow) {
                throw WordOverflow{};
            }
        }
    }
    return out;
}

}  // namespace detail

/// Sums over every listed (label-in-a, label-in-b) pair. The surviving indices of
/// `a` come first, then those of `b`, each in their original order.
template <typename T>
Tensor<T> contract_pair(const Tensor<T> &a, const Tensor<T> &b, std::span<const std::pair<Label, Label>> pairs) {
    std::vector<std::size_t> a_sum, b_sum;
    for (const auto &[la, lb] : pairs) {
        std::size_t ia = a.axis_of(la);
        std::size_t ib = b.axis_of(lb);
        if (a.dims()[ia] != b.dims()[ib]) {
            throw std::invalid_argument(
                "contract_pair: dimension mismatch on pair (" + std::to_string(la) + ", " + std::to_string(lb) + ").");
        }
        if (std::find(a_sum.begin(), a_sum.end(), ia) != a_sum.end() ||
            std::find(b_sum.begin(), b_sum.end(), ib) != b_sum.end()) {
            throw std::invalid_argument("contract_pair: an index appears in more than one pair.");
        }
        a_sum.push_back(ia);
        b_sum.push_back(ib);
    }

    std::vector<std::size_t> a_free, b_free;
    for (std::size_t k = 0; k < a.rank(); k++) {
        if (std::find(a_sum.begin(), a_sum.end(), k) == a_sum.end()) {
            a_free.push_back(k);
        }
    }
    for (std::size_t k = 0; k < b.rank(); k++) {
        if (std::find(b_sum.begin(), b_sum.end(), k) == b_sum.end()) {
            b_free.push_back(k);
        }
    }

    std::vector<Label> out_labels;
    std::vector<std::size_t> out_dims;
    std::size_t rows = 1, cols = 1, inner = 1;
    for (auto k : a_free) {
        out_labels.push_back(a.labels()[k]);
        out_dims.push_back(a.dims()[k]);
        rows *= a.dims()[k];
    }
    for (auto k : b_free) {
        Label l = b.labels()[k];
        if (std::find(out_labels.begin(), out_labels.end(), l) != out_labels.end()) {
            throw std::invalid_argument("contract_pair: surviving label " + std::to_string(l) + " appears twice.");
        }
        out_labels.push_back(l);
        out_dims.push_back(b.dims()[k]);
        cols *= b.dims()[k];
    }
    for (auto k : a_sum) {
        inner *= a.dims()[k];
    }

    // Lay a out as (rows x inner) and b as (inner x cols), then multiply.
    std::vector<std::size_t> a_axes = a_free;
    a_axes.insert(a_axes.end(), a_sum.begin(), a_sum.end());
    std::vector<std::size_t> b_axes = b_sum;
    b_axes.insert(b_axes.end(), b_free.begin(), b_free.end());
    Tensor<T> am = a.permuted_axes(a_axes);
    Tensor<T> bm = b.permuted_axes(b_axes);
    const auto &ad = am.data();
    const auto &bd = bm.data();

    std::vector<T> out = detail::multiply(ad, bd, rows, inner, cols);
    return Tensor<T>(std::move(out_labels), std::move(out_dims), std::move(out));
}

/// Contracts every label the two tensors have in common.
template <typename T>
Tensor<T> contract_shared(const Tensor<T> &a, const Tensor<T> &b) {
    std::vector<std::pair<Label, Label>> pairs;
    for (auto l : a.labels()) {
        if (b.has_label(l)) {
            pairs.emplace_back(l, l);
        }
    }
    return contract_pair<T>(a, b, pairs);
}

/// Multiplies every component by `factor`.
template <typename T>
Tensor<T> scaled(Tensor<T> t, const T &factor) {
    for (auto &x : t.mutable_data()) {
        x *= factor;
    }
    return t;
}

/// Dense square matrix, row-major. Used for gate matrices and small operators.
struct Matrix {
    std::size_t dim = 0;
    std::vector<Complex> data;

    Matrix() = default;
    explicit Matrix(std::size_t d) : dim(d), data(d * d) {
    }
    Matrix(std::size_t d, std::vector<Complex> entries);

    static Matrix identity(std::size_t d);

    Complex &operator()(std::size_t r, std::size_t c) {
        return data[r * dim + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data[r * dim + c];
    }

    Matrix adjoint() const;
    Matrix operator*(const Matrix &other) const;
    Matrix operator+(const Matrix &other) const;
    Matrix operator*(Complex s) const;
    /// Largest absolute entry of (this - other).
    double max_abs_diff(const Matrix &other) const;
    bool is_unitary(double tol) const;
};

/// The tensor of a k-qubit operator. Indices [0, k) attach to the incoming state
/// (matrix column bits), indices [k, 2k) are the outgoing state (matrix row bits);
/// within each group the first index is the most significant bit. Component
/// (in..., out...) equals matrix(out, in).
Tensor<Complex> tensor_from_operator(const Matrix &matrix, std::span<const Label> labels);
Tensor<Complex> tensor_from_operator(const Matrix &matrix);

/// Number of qubits k with 2^k == dim, or throws.
std::size_t qubit_count_of_dimension(std::size_t dim);

}  // namespace tcount

#endif
