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

#ifndef TCOUNT_MPO_H
#define TCOUNT_MPO_H

#include <array>
#include <vector>

#include "tcount/pauli.h"
#include "tcount/tensor.h"

namespace tcount {

/// One MPO site: components indexed [left][right][bra][ket], physical dimension 2.
struct MpoSite {
    std::size_t left = 1;
    std::size_t right = 1;
    std::vector<Complex> data;

    MpoSite() = default;
    MpoSite(std::size_t l, std::size_t r) : left(l), right(r), data(l * r * 4) {
    }

    Complex &at(std::size_t l, std::size_t r, std::size_t bra, std::size_t ket) {
        return data[((l * right + r) * 2 + bra) * 2 + ket];
    }
    const Complex &at(std::size_t l, std::size_t r, std::size_t bra, std::size_t ket) const {
        return data[((l * right + r) * 2 + bra) * 2 + ket];
    }
};

/// Matrix product operator on m qubits; site s acts on qubit s. The operator's
/// matrix element <o|O|i> is the bond-contracted product of site(bra = o_s, ket = i_s).
class MatrixProductOperator {
   public:
    MatrixProductOperator() = default;
    explicit MatrixProductOperator(std::vector<MpoSite> sites);

    static MatrixProductOperator identity(std::size_t num_sites);
    static MatrixProductOperator zero(std::size_t num_sites);

    std::size_t size() const {
        return sites_.size();
    }
    const std::vector<MpoSite> &sites() const {
        return sites_;
    }
    const MpoSite &site(std::size_t s) const {
        return sites_[s];
    }

    /// Largest internal bond dimension (1 for a single site).
    std::size_t bond_dimension() const;

    /// <bra|O|ket> for basis states given as integers (bit s = qubit s).
    Complex element(std::uint64_t bra, std::uint64_t ket) const;
    /// sum_{o,i} conj(psi_o) O_{o i} psi_i for the product state psi = (x) states[s].
    Complex expectation(const std::vector<std::array<Complex, 2>> &states) const;
    /// Full 2^m x 2^m matrix with row/column bit s = qubit s. Requires m <= 12.
    Matrix to_dense() const;

   private:
    void validate() const;

    std::vector<MpoSite> sites_;
};

/// Bond dimension 1; the phase multiplies the first site.
MatrixProductOperator pauli_to_mpo(const PauliString &p);
/// Block direct sum of the bonds.
MatrixProductOperator mpo_add(const MatrixProductOperator &a, const MatrixProductOperator &b);
/// Operator product a * b with Kronecker bonds.
MatrixProductOperator mpo_multiply(const MatrixProductOperator &a, const MatrixProductOperator &b);
MatrixProductOperator mpo_scale(MatrixProductOperator a, Complex factor);

}  // namespace tcount

#endif
