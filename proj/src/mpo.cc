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

#include "tcount/mpo.h"

#include <stdexcept>

namespace tcount {

MatrixProductOperator::MatrixProductOperator(std::vector<MpoSite> sites) : sites_(std::move(sites)) {
    validate();
}

void MatrixProductOperator::validate() const {
    if (sites_.empty()) {
        throw std::invalid_argument("MatrixProductOperator: needs at least one site.");
    }
    if (sites_.front().left != 1 || sites_.back().right != 1) {
        throw std::invalid_argument("MatrixProductOperator: boundary bonds must have dimension 1.");
    }
    for (std::size_t s = 0; s < sites_.size(); s++) {
        const auto &site = sites_[s];
        if (site.data.size() != site.left * site.right * 4) {
            throw std::invalid_argument("MatrixProductOperator: site data has the wrong size.");
        }
        if (s + 1 < sites_.size() && site.right != sites_[s + 1].left) {
            throw std::invalid_argument("MatrixProductOperator: adjacent bond dimensions differ.");
        }
    }
}

MatrixProductOperator MatrixProductOperator::identity(std::size_t num_sites) {
    return pauli_to_mpo(PauliString(num_sites));
}

MatrixProductOperator MatrixProductOperator::zero(std::size_t num_sites) {
    return mpo_scale(identity(num_sites), 0.0);
}

std::size_t MatrixProductOperator::bond_dimension() const {
    std::size_t chi = 1;
    for (std::size_t s = 0; s + 1 < sites_.size(); s++) {
        chi = std::max(chi, sites_[s].right);
    }
    return chi;
}

Complex MatrixProductOperator::element(std::uint64_t bra, std::uint64_t ket) const {
    std::vector<Complex> row{1.0};
    for (std::size_t s = 0; s < sites_.size(); s++) {
        const auto &site = sites_[s];
        std::size_t o = (bra >> s) & 1, i = (ket >> s) & 1;
        std::vector<Complex> next(site.right);
        for (std::size_t l = 0; l < site.left; l++) {
            for (std::size_t r = 0; r < site.right; r++) {
                next[r] += row[l] * site.at(l, r, o, i);
            }
        }
        row = std::move(next);
    }
    return row[0];
}

Complex MatrixProductOperator::expectation(const std::vector<std::array<Complex, 2>> &states) const {
    if (states.size() != sites_.size()) {
        throw std::invalid_argument("MatrixProductOperator::expectation: one state per site is required.");
    }
    std::vector<Complex> row{1.0};
    for (std::size_t s = 0; s < sites_.size(); s++) {
        const auto &site = sites_[s];
        std::vector<Complex> next(site.right);
        for (std::size_t l = 0; l < site.left; l++) {
            for (std::size_t r = 0; r < site.right; r++) {
                Complex local = 0;
                for (std::size_t o = 0; o < 2; o++) {
                    for (std::size_t i = 0; i < 2; i++) {
                        local += std::conj(states[s][o]) * site.at(l, r, o, i) * states[s][i];
                    }
                }
                next[r] += row[l] * local;
            }
        }
        row = std::move(next);
    }
    return row[0];
}

Matrix MatrixProductOperator::to_dense() const {
    if (sites_.size() > 12) {
        throw std::invalid_argument("MatrixProductOperator::to_dense: at most 12 sites.");
    }
    std::size_t dim = std::size_t{1} << sites_.size();
    Matrix out(dim);
    for (std::size_t o = 0; o < dim; o++) {
        for (std::size_t i = 0; i < dim; i++) {
            out(o, i) = element(o, i);
        }
    }
    return out;
}

MatrixProductOperator pauli_to_mpo(const PauliString &p) {
    if (p.size() == 0) {
        throw std::invalid_argument("pauli_to_mpo: empty Pauli string.");
    }
    std::vector<MpoSite> sites;
    for (std::size_t s = 0; s < p.size(); s++) {
        MpoSite site(1, 1);
        const Matrix &m = pauli_letter_matrix(p[s]);
        Complex f = s == 0 ? p.phase_value() : Complex(1.0);
        for (std::size_t o = 0; o < 2; o++) {
            for (std::size_t i = 0; i < 2; i++) {
                site.at(0, 0, o, i) = f * m(o, i);
            }
        }
        sites.push_back(std::move(site));
    }
    return MatrixProductOperator(std::move(sites));
}

MatrixProductOperator mpo_add(const MatrixProductOperator &a, const MatrixProductOperator &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("mpo_add: site counts differ.");
    }
    std::size_t m = a.size();
    std::vector<MpoSite> sites;
    for (std::size_t s = 0; s < m; s++) {
        const auto &x = a.site(s), &y = b.site(s);
        bool first = s == 0, last = s + 1 == m;
        std::size_t left = first ? 1 : x.left + y.left;
        std::size_t right = last ? 1 : x.right + y.right;
        MpoSite site(left, right);
        for (std::size_t o = 0; o < 2; o++) {
            for (std::size_t i = 0; i < 2; i++) {
                for (std::size_t l = 0; l < x.left; l++) {
                    for (std::size_t r = 0; r < x.right; r++) {
                        site.at(l, r, o, i) += x.at(l, r, o, i);
                    }
                }
                for (std::size_t l = 0; l < y.left; l++) {
                    for (std::size_t r = 0; r < y.right; r++) {
                        site.at(first ? l : x.left + l, last ? r : x.right + r, o, i) += y.at(l, r, o, i);
                    }
                }
            }
        }
        sites.push_back(std::move(site));
    }
    return MatrixProductOperator(std::move(sites));
}

MatrixProductOperator mpo_multiply(const MatrixProductOperator &a, const MatrixProductOperator &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("mpo_multiply: site counts differ.");
    }
    std::vector<MpoSite> sites;
    for (std::size_t s = 0; s < a.size(); s++) {
        const auto &x = a.site(s), &y = b.site(s);
        MpoSite site(x.left * y.left, x.right * y.right);
        for (std::size_t la = 0; la < x.left; la++) {
            for (std::size_t lb = 0; lb < y.left; lb++) {
                for (std::size_t ra = 0; ra < x.right; ra++) {
                    for (std::size_t rb = 0; rb < y.right; rb++) {
                        for (std::size_t o = 0; o < 2; o++) {
                            for (std::size_t i = 0; i < 2; i++) {
                                Complex v = 0;
                                for (std::size_t k = 0; k < 2; k++) {
                                    v += x.at(la, ra, o, k) * y.at(lb, rb, k, i);
                                }
                                site.at(la * y.left + lb, ra * y.right + rb, o, i) = v;
                            }
                        }
                    }
                }
            }
        }
        sites.push_back(std::move(site));
    }
    return MatrixProductOperator(std::move(sites));
}

MatrixProductOperator mpo_scale(MatrixProductOperator a, Complex factor) {
    std::vector<MpoSite> sites = a.sites();
    for (auto &x : sites[0].data) {
        x *= factor;
    }
    return MatrixProductOperator(std::move(sites));
}

}  // namespace tcount
