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

#include "tcount/tensor.h"

#include <cmath>

namespace tcount {

Matrix::Matrix(std::size_t d, std::vector<Complex> entries) : dim(d), data(std::move(entries)) {
    if (data.size() != d * d) {
        throw std::invalid_argument("Matrix: expected " + std::to_string(d * d) + " entries.");
    }
}

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t k = 0; k < d; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix r(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (other.dim != dim) {
        throw std::invalid_argument("Matrix::operator*: dimension mismatch.");
    }
    Matrix r(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t k = 0; k < dim; k++) {
            Complex x = (*this)(i, k);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; j++) {
                r(i, j) += x * other(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix &other) const {
    if (other.dim != dim) {
        throw std::invalid_argument("Matrix::operator+: dimension mismatch.");
    }
    Matrix r = *this;
    for (std::size_t k = 0; k < data.size(); k++) {
        r.data[k] += other.data[k];
    }
    return r;
}

Matrix Matrix::operator*(Complex s) const {
    Matrix r = *this;
    for (auto &x : r.data) {
        x *= s;
    }
    return r;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (other.dim != dim) {
        throw std::invalid_argument("Matrix::max_abs_diff: dimension mismatch.");
    }
    double m = 0;
    for (std::size_t k = 0; k < data.size(); k++) {
        m = std::max(m, std::abs(data[k] - other.data[k]));
    }
    return m;
}

bool Matrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim)) <= tol;
}

std::size_t qubit_count_of_dimension(std::size_t dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("Operator dimension " + std::to_string(dim) + " is not a power of two >= 2.");
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < dim) {
        k++;
    }
    return k;
}

Tensor<Complex> tensor_from_operator(const Matrix &matrix, std::span<const Label> labels) {
    std::size_t k = qubit_count_of_dimension(matrix.dim);
    if (labels.size() != 2 * k) {
        throw std::invalid_argument("tensor_from_operator: need 2k labels for a k-qubit operator.");
    }
    std::size_t d = matrix.dim;
    std::vector<Complex> data(d * d);
    for (std::size_t in = 0; in < d; in++) {
        for (std::size_t out = 0; out < d; out++) {
            data[in * d + out] = matrix(out, in);
        }
    }
    return Tensor<Complex>(std::vector<Label>(labels.begin(), labels.end()), std::vector<std::size_t>(2 * k, 2),
                           std::move(data));
}

Tensor<Complex> tensor_from_operator(const Matrix &matrix) {
    std::size_t k = qubit_count_of_dimension(matrix.dim);
    std::vector<Label> labels(2 * k);
    std::iota(labels.begin(), labels.end(), Label{0});
    return tensor_from_operator(matrix, labels);
}

}  // namespace tcount
