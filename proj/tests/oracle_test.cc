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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "tcount/oracle.h"
#include "tcount/parsers.h"
#include "tcount/reversible_circuit.h"
#include "test_util.h"

using namespace tcount;

namespace {

const char *unique1001 = "p cnf 4 4\n4 0\n-3 0\n-2 0\n1 0\n";

QuantumCircuit unique_quantum() {
    return reversible_to_quantum(make_reversible(parse_dimacs(unique1001)));
}

}  // namespace

TEST(enumerate_count, examples) {
    ASSERT_EQ(enumerate_count(parse_dimacs("p cnf 3 0\n"), 3, Bits::parse("")), 8);
    BooleanCircuit unique = parse_dimacs(unique1001);
    ASSERT_EQ(enumerate_count(unique, 4, Bits::parse("")), 1);
    ASSERT_EQ(enumerate_count(unique, 4, Bits::parse("01")), 1);
    ASSERT_EQ(enumerate_count(unique, 4, Bits::parse("0")), 0);
    auto solutions = enumerate_solutions(unique);
    ASSERT_EQ(solutions.size(), 1u);
    ASSERT_EQ(solutions[0].str(), "1001");
}

TEST(enumerate_count, matches_formula_evaluation) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; trial++) {
        std::string text = testutil::random_cnf_text(rng, 10, 20 + rng() % 20);
        BooleanCircuit c = parse_dimacs(text);
        BigInt expected = 0;
        for (std::uint64_t v = 0; v < 1024; v++) {
            expected += testutil::evaluate_cnf_text(text, Bits::from_integer(v, 10)) ? 1 : 0;
        }
        ASSERT_EQ(enumerate_count(c, 10, Bits::parse("")), expected);
    }
}

TEST(enumerate_count, sixteen_variables_and_leaf_additivity) {
    std::mt19937_64 rng(12);
    BooleanCircuit c = testutil::random_cnf(rng, 16, 40);
    BigInt total = enumerate_count(c, 16, Bits::parse(""));
    BigInt leaves = 0;
    for (const char *s : {"00", "01", "10", "11"}) {
        leaves += enumerate_count(c, 16, Bits::parse(s));
    }
    ASSERT_EQ(total, leaves);
    ASSERT_EQ(total, BigInt(enumerate_solutions(c).size()));
}

TEST(enumerate_count, budget_and_argument_errors) {
    BooleanCircuit wide = parse_dimacs("p cnf 25 0\n");
    ASSERT_THROW(enumerate_count(wide, 25, Bits::parse("")), std::invalid_argument);
    ASSERT_THROW(enumerate_solutions(wide), std::invalid_argument);
    BooleanCircuit unique = parse_dimacs(unique1001);
    ASSERT_THROW(enumerate_count(unique, 3, Bits::parse("")), std::invalid_argument);
    ASSERT_THROW(enumerate_count(unique, 4, Bits::parse("10101")), std::invalid_argument);
}

TEST(dense_state, construction_and_norm) {
    DenseState b = DenseState::basis(3, 5);
    ASSERT_EQ(b.amplitudes()[5], Complex(1));
    ASSERT_NEAR(b.norm(), 1.0, 1e-15);
    ASSERT_NEAR(b.probability_one(0), 1.0, 1e-15);
    ASSERT_NEAR(b.probability_one(1), 0.0, 1e-15);
    ASSERT_NEAR(b.probability_one(2), 1.0, 1e-15);
    const double r = std::sqrt(0.5);
    DenseState p = DenseState::product({{1, 0}, {r, r}});
    ASSERT_NEAR(p.probability_one(1), 0.5, 1e-15);
    ASSERT_NEAR(p.probability_one(0), 0.0, 1e-15);
    ASSERT_THROW(DenseState::basis(13, 0), std::invalid_argument);
    ASSERT_THROW(DenseState::from_amplitudes(std::vector<Complex>(3)), std::invalid_argument);
}

TEST(dense_state, gates_preserve_norm) {
    std::mt19937_64 rng(13);
    QuantumCircuit c = testutil::random_clifford(rng, 6, 40, 6, 0);
    c.add("T", {2});
    c.add("Toffoli", {0, 1, 3});
    std::vector<std::array<Complex, 2>> input(6, {Complex(0.6), Complex(0, 0.8)});
    DenseState s = DenseState::product(input);
    for (const auto &g : c.gates()) {
        s.apply(g);
        ASSERT_NEAR(s.norm(), 1.0, 1e-10);
    }
}

TEST(dense_probability, examples) {
    QuantumCircuit empty(1, 1, 0);
    ASSERT_NEAR(dense_probability(empty, {{0, 1}}), 1.0, 1e-15);
    const double r = std::sqrt(0.5);
    ASSERT_NEAR(dense_probability(empty, {{r, r}}), 0.5, 1e-15);
    QuantumCircuit q = unique_quantum();
    ASSERT_NEAR(dense_probability(q, counter_input_product(4, Bits::parse(""), q.num_qubits())), 1.0 / 16, 1e-12);
    ASSERT_NEAR(dense_probability(q, counter_input_product(4, Bits::parse("1001"), q.num_qubits())), 1.0, 1e-12);
    ASSERT_NEAR(dense_probability(q, counter_input_product(4, Bits::parse("0"), q.num_qubits())), 0.0, 1e-12);
    ASSERT_THROW(dense_probability(empty, {{1, 0}, {1, 0}}), std::invalid_argument);
}

TEST(dense_probability, equals_weight_on_accepting_amplitudes) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 10; trial++) {
        QuantumCircuit c = testutil::random_front(rng, 5, 12, 5, rng() % 5);
        std::vector<std::array<Complex, 2>> input;
        for (std::size_t q = 0; q < 5; q++) {
            Complex a(u(rng), u(rng)), b(u(rng), u(rng));
            double n = std::sqrt(std::norm(a) + std::norm(b));
            input.push_back({a / n, b / n});
        }
        DenseState s = DenseState::product(input);
        for (const auto &g : c.gates()) {
            s.apply(g);
        }
        double weight = 0;
        for (std::size_t k = 0; k < s.amplitudes().size(); k++) {
            if ((k >> c.output_qubit()) & 1) {
                weight += std::norm(s.amplitudes()[k]);
            }
        }
        ASSERT_NEAR(dense_probability(c, input), weight, 1e-12);
    }
}

TEST(counter_input_product, layout) {
    auto states = counter_input_product(4, Bits::parse("01"), 6);
    ASSERT_EQ(states.size(), 6u);
    const double r = std::sqrt(0.5);
    // Suffix "01" fixes w_1 = 1 and w_2 = 0; w_3, w_4 free; ancillas 0.
    ASSERT_EQ(states[0][1], Complex(1));
    ASSERT_EQ(states[1][0], Complex(1));
    ASSERT_NEAR(std::abs(states[2][0] - r), 0.0, 1e-15);
    ASSERT_NEAR(std::abs(states[3][1] - r), 0.0, 1e-15);
    ASSERT_EQ(states[4][0], Complex(1));
    ASSERT_EQ(states[5][1], Complex(0));
    ASSERT_THROW(counter_input_product(4, Bits::parse("01"), 3), std::invalid_argument);
}

TEST(dense_operator, examples) {
    QuantumCircuit empty(2, 2, 0);
    ASSERT_LT(dense_operator(empty).max_abs_diff(Matrix::identity(4)), 1e-15);
    QuantumCircuit x(1, 1, 0);
    x.add("X", {0});
    ASSERT_LT(dense_operator(x).max_abs_diff(pauli_letter_matrix(PauliLetter::X)), 1e-15);
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; trial++) {
        Matrix u = dense_operator(testutil::random_clifford(rng, 4, 30, 4, 0));
        ASSERT_LT((u.adjoint() * u).max_abs_diff(Matrix::identity(16)), 1e-10);
    }
    ASSERT_THROW(dense_operator(QuantumCircuit(7, 7, 0)), std::invalid_argument);
}

TEST(dense_operator, cnot_control_is_first_target) {
    QuantumCircuit c(2, 2, 0);
    c.add("CNOT", {0, 1});
    Matrix u = dense_operator(c);
    // Bit q of the index is qubit q: |q0=1, q1=0> (index 1) maps to index 3.
    ASSERT_EQ(u(3, 1), Complex(1));
    ASSERT_EQ(u(2, 2), Complex(1));
    ASSERT_EQ(u(1, 3), Complex(1));
}
