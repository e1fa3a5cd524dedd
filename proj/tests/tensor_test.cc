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

#include <random>

#include "gtest/gtest.h"
#include "tcount/tensor_network.h"
#include "test_util.h"

using namespace tcount;

TEST(scalar, dyadic_normalizes_and_multiplies) {
    Dyadic half = Dyadic::half_power(1);
    ASSERT_EQ(half + half, Dyadic(1));
    ASSERT_EQ(half * half, Dyadic::half_power(2));
    ASSERT_EQ(Dyadic(BigInt(6), 2), Dyadic(BigInt(3), 1));
    ASSERT_EQ((Dyadic(3) - Dyadic::half_power(1)).str(), "5/2^1");
    ASSERT_DOUBLE_EQ(Dyadic(BigInt(3), 3).to_double(), 0.375);
}

TEST(scalar, format_significant) {
    ASSERT_EQ(format_significant(0.0625, 12), "0.0625");
    ASSERT_EQ(format_significant(1.0 / 3.0, 12), "0.333333333333");
}

TEST(tensor, validates_shape) {
    ASSERT_THROW(Tensor<BigInt>({1, 2}, {2}, {1, 2}), std::invalid_argument);
    ASSERT_THROW(Tensor<BigInt>({1}, {2}, {1, 2, 3}), std::invalid_argument);
    ASSERT_THROW(Tensor<BigInt>({1, 1}, {2, 2}, {1, 2, 3, 4}), std::invalid_argument);
    ASSERT_THROW(Tensor<BigInt>({1}, {0}, {}), std::invalid_argument);
}

TEST(tensor, permute_is_row_major) {
    Tensor<BigInt> t({1, 2}, {2, 3}, {0, 1, 2, 3, 4, 5});
    Tensor<BigInt> p = t.permuted({2, 1});
    ASSERT_EQ(p.dims(), (std::vector<std::size_t>{3, 2}));
    ASSERT_EQ(p.data(), (std::vector<BigInt>{0, 3, 1, 4, 2, 5}));
    ASSERT_EQ(p.at({2, 1}), 5);
}

TEST(contract_pair, identity_matrix_with_vector) {
    Tensor<BigInt> id({1, 2}, {2, 2}, {1, 0, 0, 1});
    Tensor<BigInt> v = Tensor<BigInt>::vector(3, {3, 5});
    std::pair<Label, Label> pairs[] = {{2, 3}};
    Tensor<BigInt> r = contract_pair<BigInt>(id, v, pairs);
    ASSERT_EQ(r.labels(), (std::vector<Label>{1}));
    ASSERT_EQ(r.data(), (std::vector<BigInt>{3, 5}));
}

TEST(contract_pair, vector_dot_vector) {
    auto a = Tensor<BigInt>::vector(1, {1, 1});
    auto b = Tensor<BigInt>::vector(2, {1, 1});
    std::pair<Label, Label> pairs[] = {{1, 2}};
    ASSERT_EQ(contract_pair<BigInt>(a, b, pairs).value(), 2);
}

TEST(contract_pair, matches_nested_loop_reference) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<BigInt> ad, bd;
        for (int k = 0; k < 8; k++) {
            ad.push_back(static_cast<int>(rng() % 11) - 5);
            bd.push_back(static_cast<int>(rng() % 11) - 5);
        }
        Tensor<BigInt> a({1, 2, 3}, {2, 2, 2}, ad);
        Tensor<BigInt> b({4, 5, 6}, {2, 2, 2}, bd);
        // Contract a's middle index with b's last index.
        std::pair<Label, Label> pairs[] = {{2, 6}};
        Tensor<BigInt> r = contract_pair<BigInt>(a, b, pairs);
        ASSERT_EQ(r.labels(), (std::vector<Label>{1, 3, 4, 5}));
        for (std::size_t i = 0; i < 2; i++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    for (std::size_t m = 0; m < 2; m++) {
                        BigInt s = 0;
                        for (std::size_t j = 0; j < 2; j++) {
                            s += ad[i * 4 + j * 2 + k] * bd[l * 4 + m * 2 + j];
                        }
                        ASSERT_EQ(r.at({i, k, l, m}), s);
                    }
                }
            }
        }
    }
}

TEST(contract_pair, errors) {
    auto a = Tensor<BigInt>::vector(1, {1, 1});
    auto b = Tensor<BigInt>::vector(2, {1, 1, 1});
    std::pair<Label, Label> pairs[] = {{1, 2}};
    ASSERT_THROW(contract_pair<BigInt>(a, b, pairs), std::invalid_argument);
    Tensor<BigInt> c({1, 7}, {2, 2}, {1, 0, 0, 1});
    Tensor<BigInt> d({8, 7}, {2, 2}, {1, 0, 0, 1});
    std::pair<Label, Label> cd[] = {{1, 8}};
    ASSERT_THROW(contract_pair<BigInt>(c, d, cd), std::invalid_argument);
}

TEST(contract_pair, associativity) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    auto rand = [&](std::vector<Label> labels) {
        std::vector<Complex> data;
        for (int k = 0; k < 4; k++) {
            data.emplace_back(g(rng), g(rng));
        }
        return Tensor<Complex>(labels, {2, 2}, data);
    };
    auto a = rand({1, 2}), b = rand({2, 3}), c = rand({3, 4});
    auto left = contract_shared(contract_shared(a, b), c);
    auto right = contract_shared(a, contract_shared(b, c));
    for (std::size_t k = 0; k < 4; k++) {
        ASSERT_NEAR(std::abs(left.data()[k] - right.data()[k]), 0.0, 1e-12);
    }
}

TEST(contract_network, single_tensor_empty_order) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>::vector(1, {4, 2}));
    Tensor<BigInt> r = contract_network(net, ContractionOrder{});
    ASSERT_EQ(r.data(), (std::vector<BigInt>{4, 2}));
}

TEST(contract_network, trace_of_matrix_chain_two_orders) {
    std::vector<BigInt> a{1, 2, 3, 4}, b{0, 1, -1, 2}, c{5, -2, 1, 1};
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>({1, 2}, {2, 2}, a));
    net.add(Tensor<BigInt>({2, 3}, {2, 2}, b));
    net.add(Tensor<BigInt>({3, 1}, {2, 2}, c));
    // Direct trace of A*B*C.
    BigInt trace = 0;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                trace += a[i * 2 + j] * b[j * 2 + k] * c[k * 2 + i];
            }
        }
    }
    ContractionOrder first{{{0, 1}, {3, 2}}};
    ContractionOrder second{{{1, 2}, {0, 3}}};
    ASSERT_EQ(contract_network(net, first).value(), trace);
    ASSERT_EQ(contract_network(net, second).value(), trace);
}

TEST(contract_network, invalid_orders) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>::vector(1, {1, 1}));
    net.add(Tensor<BigInt>::vector(1, {1, 1}));
    net.add(Tensor<BigInt>::scalar(3));
    ASSERT_THROW(contract_network(net, ContractionOrder{{{0, 1}}}), std::invalid_argument);
    ASSERT_THROW(contract_network(net, ContractionOrder{{{0, 1}, {0, 2}}}), std::invalid_argument);
    ASSERT_THROW(contract_network(net, ContractionOrder{{{0, 1}, {5, 2}}}), std::invalid_argument);
    ASSERT_EQ(contract_network(net, ContractionOrder{{{0, 1}, {3, 2}}}).value(), 6);
}

TEST(contract_network, stats_report_peak_and_work) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>({1, 2}, {2, 2}, {1, 0, 0, 1}));
    net.add(Tensor<BigInt>({2, 3}, {2, 2}, {1, 0, 0, 1}));
    net.add(Tensor<BigInt>({3, 1}, {2, 2}, {1, 0, 0, 1}));
    ContractionStats stats;
    ASSERT_EQ(contract_network(net, sequential_order(3), &stats).value(), 2);
    ASSERT_EQ(stats.peak_intermediate, 4u);
    ASSERT_EQ(stats.multiply_adds, 8 + 4);
}

TEST(tensor_network, validate_rejects_triple_labels_and_dim_mismatch) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>::vector(1, {1, 1}));
    net.add(Tensor<BigInt>::vector(1, {1, 1}));
    net.add(Tensor<BigInt>::vector(1, {1, 1}));
    ASSERT_THROW(net.validate(), std::invalid_argument);
    TensorNetwork<BigInt> bad;
    bad.add(Tensor<BigInt>::vector(1, {1, 1}));
    bad.add(Tensor<BigInt>::vector(1, {1, 1, 1}));
    ASSERT_THROW(bad.validate(), std::invalid_argument);
}

TEST(tensor_network, bonds_and_open_labels) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>({1, 2}, {2, 2}, {1, 0, 0, 1}));
    net.add(Tensor<BigInt>::vector(2, {1, 1}));
    ASSERT_EQ(net.bonds(), (std::vector<Bond>{{0, 1, 2}}));
    ASSERT_EQ(net.open_labels(), (std::vector<Label>{1}));
    ASSERT_FALSE(net.closed());
    Label f = net.fresh_label();
    ASSERT_GT(f, 2u);
}

TEST(tensor_from_operator, identity_not_and_hadamard) {
    Tensor<Complex> id = tensor_from_operator(Matrix::identity(2));
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t o = 0; o < 2; o++) {
            ASSERT_EQ(id.at({i, o}), Complex(i == o ? 1.0 : 0.0));
        }
    }
    Tensor<Complex> x = tensor_from_operator(gate_table_matrix("X"));
    ASSERT_EQ(x.at({0, 1}), Complex(1.0));
    ASSERT_EQ(x.at({1, 0}), Complex(1.0));
    ASSERT_EQ(x.at({0, 0}), Complex(0.0));
    // Component (i, o) is <o|H|i>.
    const Matrix &h = gate_table_matrix("H");
    Tensor<Complex> ht = tensor_from_operator(h);
    double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t o = 0; o < 2; o++) {
            double expected = (i == 1 && o == 1) ? -s : s;
            ASSERT_NEAR(ht.at({i, o}).real(), expected, 1e-15);
        }
    }
    ASSERT_THROW(tensor_from_operator(Matrix(3)), std::invalid_argument);
}

TEST(tensor_from_operator, two_qubit_index_order) {
    // CNOT: control is the first target. Component (i0, i1, o0, o1) = <o|CNOT|i>.
    Tensor<Complex> t = tensor_from_operator(gate_table_matrix("CNOT"));
    ASSERT_EQ(t.at({1, 0, 1, 1}), Complex(1.0));
    ASSERT_EQ(t.at({1, 1, 1, 0}), Complex(1.0));
    ASSERT_EQ(t.at({0, 1, 0, 1}), Complex(1.0));
    ASSERT_EQ(t.at({1, 0, 1, 0}), Complex(0.0));
}

TEST(golden_tensor, round_trip) {
    Tensor<BigInt> t({1, 2}, {2, 3}, {0, 1, 2, 3, 4, -5});
    std::string text = serialize_tensor(t);
    ASSERT_EQ(text, "dims: 2 3\n0 1 2 3 4 -5\n");
    ASSERT_EQ(parse_integer_tensor(text).data(), t.data());
    Tensor<Complex> c({1}, {2}, {Complex(0.5, -1), Complex(0.25, 0)});
    Tensor<Complex> back = parse_complex_tensor(serialize_tensor(c));
    ASSERT_EQ(back.data(), c.data());
}

TEST(order_invariance, random_small_networks_all_orders) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; trial++) {
        auto net = testutil::random_integer_network(rng, 5, 0.5);
        auto orders = testutil::all_orders(net.size());
        BigInt first = contract_network(net, orders[0]).value();
        for (const auto &o : orders) {
            ASSERT_EQ(contract_network(net, o).value(), first);
        }
    }
}
