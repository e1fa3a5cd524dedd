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

#include "tcount/algebraic.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "tcount/geometric.h"

namespace tcount {

RotationMatrix RotationMatrix::identity(std::size_t modes) {
    RotationMatrix r{modes, std::vector<double>(4 * modes * modes, 0.0)};
    for (std::size_t k = 0; k < 2 * modes; k++) {
        r(k, k) = 1;
    }
    return r;
}

double RotationMatrix::orthogonality_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < dim(); i++) {
        for (std::size_t j = 0; j < dim(); j++) {
            double s = 0;
            for (std::size_t k = 0; k < dim(); k++) {
                s += (*this)(k, i) * (*this)(k, j);
            }
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

PauliString majorana_pauli(std::size_t num_modes, std::size_t mu) {
    if (mu == 0 || mu > 2 * num_modes) {
        throw std::out_of_range("majorana_pauli: index out of range.");
    }
    std::size_t q = (mu - 1) / 2;
    PauliString p(num_modes);
    for (std::size_t j = 0; j < q; j++) {
        p.set(j, PauliLetter::Z);
    }
    p.set(q, mu % 2 == 1 ? PauliLetter::X : PauliLetter::Y);
    return p;
}

RotationMatrix gaussian_rotation(const QuantumCircuit &circuit) {
    std::size_t m = circuit.num_qubits();
    std::size_t d = 2 * m;
    Eigen::MatrixXd total = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (const auto &g : circuit.gates()) {
        if (!g.gaussian) {
            throw std::invalid_argument("gaussian_rotation: gate '" + g.name + "' is not Gaussian.");
        }
        const GaussianGate &gg = *g.gaussian;
        auto w = static_cast<Eigen::Index>(2 * gg.window);
        Eigen::MatrixXd h(w, w);
        for (Eigen::Index r = 0; r < w; r++) {
            for (Eigen::Index c = 0; c < w; c++) {
                h(r, c) = gg.h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                if (std::abs(gg.h(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) +
                             gg.h(static_cast<std::size_t>(c), static_cast<std::size_t>(r))) > 1e-12) {
                    throw std::invalid_argument("gaussian_rotation: generator block is not antisymmetric.");
                }
            }
        }
        Eigen::MatrixXd block = (2.0 * h).exp();
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        r.block(static_cast<Eigen::Index>(2 * gg.first_mode), static_cast<Eigen::Index>(2 * gg.first_mode), w, w) =
            block;
        total = r * total;
    }
    RotationMatrix out = RotationMatrix::identity(m);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            out(r, c) = total(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

MatrixProductOperator evolve_projector_stabiliser(const QuantumCircuit &circuit) {
    if (auto bad = circuit.first_non_clifford()) {
        throw std::invalid_argument("evolve_projector_stabiliser: gate '" + *bad + "' is not Clifford.");
    }
    std::size_t m = circuit.num_qubits();
    PauliString z = PauliString::single(m, circuit.output_qubit(), PauliLetter::Z);
    PauliString evolved = conjugate_pauli(circuit, z);
    return mpo_add(mpo_scale(MatrixProductOperator::identity(m), 0.5), mpo_scale(pauli_to_mpo(evolved), -0.5));
}

MatrixProductOperator evolve_projector_gaussian(const QuantumCircuit &circuit) {
    std::size_t m = circuit.num_qubits();
    if (circuit.output_qubit() + 1 != m) {
        throw std::invalid_argument("evolve_projector_gaussian: the output qubit must be the last mode.");
    }
    RotationMatrix r = gaussian_rotation(circuit);
    auto majorana_sum = [&](std::size_t row) {
        std::optional<MatrixProductOperator> acc;
        for (std::size_t nu = 1; nu <= 2 * m; nu++) {
            auto term = mpo_scale(pauli_to_mpo(majorana_pauli(m, nu)), r(row, nu - 1));
            acc = acc ? mpo_add(*acc, term) : term;
        }
        return *acc;
    };
    MatrixProductOperator a = majorana_sum(2 * m - 2);
    MatrixProductOperator b = majorana_sum(2 * m - 1);
    MatrixProductOperator out = mpo_add(mpo_scale(MatrixProductOperator::identity(m), 0.5),
                                        mpo_scale(mpo_multiply(a, b), Complex(0.0, 0.5)));
    if (out.bond_dimension() > 4 * m * m + 1) {
        throw std::logic_error("evolve_projector_gaussian: bond dimension exceeds (2m)^2 + 1.");
    }
    return out;
}

Counter<Complex> build_concatenated_counter(const CheckerNetwork<Complex> &front,
                                            const MatrixProductOperator &evolved,
                                            const std::vector<Tensor<Complex>> &inputs) {
    if (front.line_outputs.size() != evolved.size()) {
        throw std::invalid_argument("contract_concatenated: front has " + std::to_string(front.line_outputs.size()) +
                                    " outputs but the operator has " + std::to_string(evolved.size()) + " sites.");
    }
    Counter<Complex> c = build_two_layers(front, inputs, {});
    std::vector<Label> bonds;
    for (std::size_t s = 0; s + 1 < evolved.size(); s++) {
        bonds.push_back(c.network.fresh_label());
    }
    for (std::size_t s = 0; s < evolved.size(); s++) {
        const MpoSite &site = evolved.site(s);
        Label ket = front.line_outputs[s];
        Label bra = c.layout.bra_label.at(ket);
        std::vector<Label> labels;
        std::vector<std::size_t> dims;
        if (s > 0) {
            labels.push_back(bonds[s - 1]);
            dims.push_back(site.left);
        }
        if (s + 1 < evolved.size()) {
            labels.push_back(bonds[s]);
            dims.push_back(site.right);
        }
        labels.push_back(bra);
        labels.push_back(ket);
        dims.push_back(2);
        dims.push_back(2);
        c.layout.bridges.push_back(c.network.add(Tensor<Complex>(labels, dims, site.data)));
    }
    c.network.validate();
    if (!c.network.closed()) {
        throw CountError("contract_concatenated: the counter still has open indices.");
    }
    return c;
}

Complex contract_concatenated(const CheckerNetwork<Complex> &front, const MatrixProductOperator &evolved,
                              const std::vector<Tensor<Complex>> &inputs) {
    Counter<Complex> c = build_concatenated_counter(front, evolved, inputs);
    TensorNetwork<Complex> prepared = prepare_geometric(c);
    ContractionOrder order = choose_order(NetworkShape::of(prepared), OrderHeuristic::Auto);
    return contract_network(prepared, order).value();
}

}  // namespace tcount
