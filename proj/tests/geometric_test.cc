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
#include "tcount/counter.h"
#include "tcount/geometric.h"
#include "tcount/oracle.h"
#include "tcount/parsers.h"
#include "tcount/reversible_circuit.h"
#include "test_util.h"

using namespace tcount;

namespace {

const char *unique1001 = "p cnf 4 4\n4 0\n-3 0\n-2 0\n1 0\n";

Complex random_complex(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    return {u(rng), u(rng)};
}

/// Random tree: tensor k > 0 bonds to a random earlier tensor.
TensorNetwork<Complex> random_tree(std::mt19937_64 &rng, std::size_t count, std::size_t dim) {
    std::vector<std::vector<Label>> labels(count);
    Label next = 1;
    for (std::size_t k = 1; k < count; k++) {
        std::size_t parent = rng() % k;
        labels[k].push_back(next);
        labels[parent].push_back(next);
        next++;
    }
    TensorNetwork<Complex> net;
    for (const auto &ls : labels) {
        std::vector<std::size_t> dims(ls.size(), dim);
        std::size_t size = 1;
        for (auto d : dims) {
            size *= d;
        }
        std::vector<Complex> data;
        for (std::size_t k = 0; k < size; k++) {
            data.push_back(random_complex(rng));
        }
        net.add(Tensor<Complex>(ls, dims, data));
    }
    return net;
}

/// rows x cols grid, bond dimension 2, random entries.
TensorNetwork<Complex> grid(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
    auto h = [&](std::size_t r, std::size_t c) { return Label(1 + r * cols + c); };
    auto v = [&](std::size_t r, std::size_t c) { return Label(1000 + r * cols + c); };
    TensorNetwork<Complex> net;
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            std::vector<Label> ls;
            if (c > 0) {
                ls.push_back(h(r, c - 1));
            }
            if (c + 1 < cols) {
                ls.push_back(h(r, c));
            }
            if (r > 0) {
                ls.push_back(v(r - 1, c));
            }
            if (r + 1 < rows) {
                ls.push_back(v(r, c));
            }
            std::vector<std::size_t> dims(ls.size(), 2);
            std::vector<Complex> data(std::size_t{1} << ls.size());
            for (auto &x : data) {
                x = random_complex(rng);
            }
            net.add(Tensor<Complex>(ls, dims, data));
        }
    }
    return net;
}

double relative_gap(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

Counter<Complex> quantum_counter(const QuantumCircuit &q, const std::string &suffix) {
    return build_counter(lower_to_network<Complex>(q), CountQuery{q.num_inputs(), Bits::parse(suffix), q.num_inputs()},
                         CountMode::Probability);
}

Complex unfolded_value(const Counter<Complex> &c) {
    return contract_network(c.network, minfill_order(c.network)).value();
}

}  // namespace

TEST(order_heuristic, names) {
    for (auto h : {OrderHeuristic::Tree, OrderHeuristic::MinFill, OrderHeuristic::Sweep, OrderHeuristic::Auto}) {
        ASSERT_EQ(parse_order_heuristic(order_heuristic_name(h)), h);
    }
    ASSERT_THROW(parse_order_heuristic("greedy"), std::invalid_argument);
}

TEST(line_graph_view, mirrors_bonds) {
    std::mt19937_64 rng(2);
    auto net = testutil::random_complex_network(rng, 7, 0.5);
    LineGraphView g = LineGraphView::of(NetworkShape::of(net));
    ASSERT_EQ(g.vertex_count(), net.size());
    std::map<std::pair<std::size_t, std::size_t>, double> expected;
    for (const auto &b : net.bonds()) {
        expected[{b.lhs, b.rhs}] += std::log2(static_cast<double>(net[b.lhs].dim_of(b.label)));
    }
    ASSERT_EQ(g.edge_count(), expected.size());
    for (const auto &[edge, w] : expected) {
        ASSERT_DOUBLE_EQ(g.adjacency[edge.first].at(edge.second), w);
        ASSERT_DOUBLE_EQ(g.adjacency[edge.second].at(edge.first), w);
    }
}

TEST(fold_and_merge, single_hadamard_counter) {
    QuantumCircuit q(1, 1, 0);
    q.add("H", {0});
    Counter<Complex> c = quantum_counter(q, "0");
    TensorNetwork<Complex> folded = fold_and_merge(c);
    ASSERT_EQ(folded.size(), 3u);
    std::multiset<std::vector<std::size_t>> shapes;
    for (const auto &t : folded.tensors()) {
        shapes.insert(t.dims());
    }
    ASSERT_EQ(shapes, (std::multiset<std::vector<std::size_t>>{{4}, {4}, {4, 4}}));
    Complex v = contract_network(folded, sequential_order(3)).value();
    ASSERT_NEAR(std::abs(v - 0.5), 0.0, 1e-12);
    ASSERT_NEAR(std::abs(unfolded_value(c) - 0.5), 0.0, 1e-12);
}

TEST(fold_and_merge, identity_circuit_gives_identities) {
    QuantumCircuit q(2, 2, 1);
    q.add_matrix({0}, Matrix::identity(2), "I");
    q.add_matrix({1}, Matrix::identity(2), "I");
    Counter<Complex> c = quantum_counter(q, "1");
    TensorNetwork<Complex> folded = fold_and_merge(c);
    // The measured line keeps a doubled 4x4 identity; the traced line's doubled
    // gate is closed on its output and becomes the vectorized identity.
    std::size_t doubled = 0, traced = 0;
    for (const auto &t : folded.tensors()) {
        if (t.dims() == std::vector<std::size_t>{4, 4}) {
            doubled++;
            for (std::size_t a = 0; a < 4; a++) {
                for (std::size_t b = 0; b < 4; b++) {
                    ASSERT_EQ(t.at({a, b}), Complex(a == b ? 1.0 : 0.0));
                }
            }
        }
        if (t.rank() == 1 && t.data() == std::vector<Complex>{1, 0, 0, 1}) {
            traced++;
        }
    }
    ASSERT_EQ(doubled, 1u);
    ASSERT_EQ(traced, 1u);
    Complex v = contract_network(folded, minfill_order(folded)).value();
    ASSERT_LT(relative_gap(v, unfolded_value(c)), 1e-10);
    ASSERT_NEAR(v.real(), 0.5, 1e-12);
}

TEST(fold_and_merge, unique_instance_quantum_checker) {
    QuantumCircuit q = reversible_to_quantum(make_reversible(parse_dimacs(unique1001)));
    for (const std::string suffix : {"", "1", "01", "1001", "0001"}) {
        Counter<Complex> c = quantum_counter(q, suffix);
        TensorNetwork<Complex> folded = fold_and_merge(c);
        // One doubled tensor per gate plus one boundary per qubit and the projector.
        ASSERT_EQ(folded.size(), q.gates().size() + q.num_qubits() + 1);
        Complex v = contract_network(folded, minfill_order(folded)).value();
        ASSERT_LT(relative_gap(v, unfolded_value(c)), 1e-10);
        TensorNetwork<Complex> prepared = prepare_geometric(c);
        Complex p = contract_network(prepared, choose_order(NetworkShape::of(prepared), OrderHeuristic::Auto)).value();
        ASSERT_LT(relative_gap(p, v), 1e-10);
    }
}

TEST(fold_and_merge, single_layer_is_returned_unchanged) {
    auto c = build_counter(lower_to_network<BigInt>(parse_dimacs(unique1001)), CountQuery{4, Bits(), 4},
                           CountMode::Exact);
    ASSERT_EQ(fold_and_merge(c).tensors(), c.network.tensors());
}

TEST(keep_diagonal, preserves_values_of_basis_permuting_checkers) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; trial++) {
        BooleanCircuit b = testutil::random_cnf(rng, 5, 6);
        QuantumCircuit q = reversible_to_quantum(make_reversible(b));
        Counter<Complex> c = quantum_counter(q, "1");
        ASSERT_TRUE(c.layout.diagonal);
        TensorNetwork<Complex> folded = fold_and_merge(c);
        TensorNetwork<Complex> diag = keep_diagonal(folded, c.layout.bra_label);
        for (const auto &t : diag.tensors()) {
            for (auto d : t.dims()) {
                ASSERT_EQ(d, 2u);
            }
        }
        Complex a = contract_network(folded, choose_order(NetworkShape::of(folded), OrderHeuristic::Auto)).value();
        Complex d = contract_network(diag, choose_order(NetworkShape::of(diag), OrderHeuristic::Auto)).value();
        ASSERT_LT(relative_gap(a, d), 1e-10);
        ASSERT_NEAR(std::ldexp(d.real(), 4), enumerate_count(b, 5, Bits::parse("1")).convert_to<double>(), 1e-9);
    }
}

TEST(keep_diagonal, not_used_for_general_gates) {
    QuantumCircuit q(1, 1, 0);
    q.add("H", {0});
    ASSERT_FALSE(quantum_counter(q, "0").layout.diagonal);
}

TEST(absorb_boundaries, removes_vectors_and_keeps_value) {
    std::mt19937_64 rng(9);
    auto c = build_counter(lower_to_network<BigInt>(testutil::random_cnf(rng, 6, 8)), CountQuery{6, Bits::parse("10"), 6},
                           CountMode::Exact);
    auto absorbed = absorb_boundaries(c.network);
    ASSERT_LT(absorbed.size(), c.network.size());
    std::size_t vectors_before = 0;
    for (const auto &t : c.network.tensors()) {
        vectors_before += t.rank() <= 1;
    }
    ASSERT_EQ(absorbed.size() + vectors_before, c.network.size());
    ASSERT_EQ(contract_network(absorbed, minfill_order(absorbed)).value(),
              contract_network(c.network, minfill_order(c.network)).value());
}

TEST(tree_order, path_width_bounded_by_one_tensor) {
    TensorNetwork<Complex> net;
    std::mt19937_64 rng(1);
    for (Label k = 0; k < 5; k++) {
        std::vector<Label> ls;
        if (k > 0) {
            ls.push_back(k);
        }
        if (k < 4) {
            ls.push_back(k + 1);
        }
        std::vector<std::size_t> dims(ls.size(), 3);
        std::vector<Complex> data(ls.size() == 1 ? 3 : 9);
        for (auto &x : data) {
            x = random_complex(rng);
        }
        net.add(Tensor<Complex>(ls, dims, data));
    }
    ContractionOrder o = tree_order(net);
    ASSERT_EQ(o.steps.size(), 4u);
    ASSERT_LE(o.width, std::log2(9.0) + 1e-12);
    ContractionStats stats;
    Complex v = contract_network(net, o, &stats).value();
    ASSERT_LE(stats.peak_intermediate, 9u);
    ASSERT_LT(relative_gap(v, contract_network(net, sequential_order(5)).value()), 1e-10);
}

TEST(tree_order, star_absorbs_leaves_into_center) {
    TensorNetwork<Complex> net;
    net.add(Tensor<Complex>({1, 2, 3, 4}, {2, 2, 2, 2}, std::vector<Complex>(16, 1.0)));
    for (Label l = 1; l <= 4; l++) {
        net.add(Tensor<Complex>::vector(l, {1.0, 2.0}));
    }
    ContractionOrder o = tree_order(net);
    ASSERT_EQ(o.steps.size(), 4u);
    std::size_t center = 0;
    for (std::size_t s = 0; s < o.steps.size(); s++) {
        const auto &step = o.steps[s];
        ASSERT_TRUE(step.lhs == center || step.rhs == center);
        std::size_t leaf = step.lhs == center ? step.rhs : step.lhs;
        ASSERT_GE(leaf, 1u);
        ASSERT_LE(leaf, 4u);
        center = 5 + s;
    }
    ASSERT_NEAR(contract_network(net, o).value().real(), 81.0, 1e-12);
}

TEST(tree_order, random_tree_matches_minfill_value) {
    std::mt19937_64 rng(3);
    auto net = random_tree(rng, 20, 4);
    Complex a = contract_network(net, tree_order(net)).value();
    Complex b = contract_network(net, minfill_order(net)).value();
    ASSERT_LT(relative_gap(a, b), 1e-10);
}

TEST(tree_order, rejects_cycles) {
    TensorNetwork<Complex> net;
    net.add(Tensor<Complex>({1, 2}, {2, 2}, std::vector<Complex>(4, 1.0)));
    net.add(Tensor<Complex>({2, 3}, {2, 2}, std::vector<Complex>(4, 1.0)));
    net.add(Tensor<Complex>({3, 1}, {2, 2}, std::vector<Complex>(4, 1.0)));
    ASSERT_THROW(tree_order(net), std::invalid_argument);
    ASSERT_NO_THROW(minfill_order(net));
}

TEST(minfill_order, equals_tree_width_on_trees) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; trial++) {
        auto net = random_tree(rng, 3 + rng() % 15, 2 + rng() % 3);
        ContractionOrder t = tree_order(net);
        ContractionOrder m = minfill_order(net);
        ASSERT_DOUBLE_EQ(t.width, m.width);
        // Largest tensor alive is at most the largest input: no intermediate
        // is wider than the widest tensor of the tree.
        double widest = 0;
        for (const auto &x : net.tensors()) {
            widest = std::max(widest, std::log2(static_cast<double>(x.size())));
        }
        ASSERT_LE(t.width, widest + 1e-12);
    }
}

TEST(minfill_order, three_by_three_grid) {
    std::mt19937_64 rng(6);
    auto net = grid(rng, 3, 3);
    // Best possible largest merge result over every binary merge tree, by a
    // dynamic program over subsets: a merged subset keeps its cut bonds open.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto &b : net.bonds()) {
        edges.emplace_back(b.lhs, b.rhs);
    }
    const std::uint32_t full = (1u << 9) - 1;
    std::vector<int> best(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; s++) {
        if ((s & (s - 1)) == 0) {
            continue;
        }
        int cut = 0;
        for (auto [a, b] : edges) {
            cut += ((s >> a) & 1) != ((s >> b) & 1);
        }
        int inner = 100;
        for (std::uint32_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
            inner = std::min(inner, std::max(best[sub], best[s ^ sub]));
        }
        best[s] = std::max(inner, cut);
    }
    ASSERT_EQ(best[full], 4);
    ContractionOrder o = minfill_order(net);
    ContractionStats stats;
    Complex v = contract_network(net, o, &stats).value();
    ASSERT_EQ(stats.peak_intermediate, std::size_t{1} << best[full]);
    ASSERT_LE(o.width, 4.0 + 1e-12);
    ASSERT_LT(relative_gap(v, contract_network(net, sequential_order(9)).value()), 1e-10);
}

TEST(minfill_order, disconnected_components_multiply) {
    TensorNetwork<Complex> net;
    net.add(Tensor<Complex>::vector(1, {1.0, 2.0}));
    net.add(Tensor<Complex>::vector(1, {3.0, 4.0}));
    net.add(Tensor<Complex>::vector(2, {1.0, 1.0}));
    net.add(Tensor<Complex>::vector(2, {2.0, 5.0}));
    ContractionOrder o = minfill_order(net);
    ASSERT_EQ(o.steps.size(), 3u);
    ASSERT_NEAR(contract_network(net, o).value().real(), 11.0 * 7.0, 1e-12);
}

TEST(sweep_order, valid_and_value_preserving) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; trial++) {
        auto net = testutil::random_integer_network(rng, 2 + rng() % 7, 0.5);
        ContractionOrder o = sweep_order(net);
        ASSERT_NO_THROW(validate_order(net.size(), o));
        ASSERT_EQ(contract_network(net, o).value(), contract_network(net, minfill_order(net)).value());
    }
}

TEST(choose_order, auto_uses_tree_on_forests_and_cheapest_otherwise) {
    std::mt19937_64 rng(8);
    auto tree = random_tree(rng, 12, 2);
    ASSERT_EQ(choose_order(NetworkShape::of(tree), OrderHeuristic::Auto).steps, tree_order(tree).steps);
    auto g = grid(rng, 3, 4);
    auto shape = NetworkShape::of(g);
    double chosen = order_cost(shape, choose_order(shape, OrderHeuristic::Auto)).total_cost;
    ASSERT_LE(chosen, order_cost(shape, minfill_order(shape)).total_cost);
    ASSERT_LE(chosen, order_cost(shape, sweep_order(shape)).total_cost);
}

TEST(order_cost, matrix_chain) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>({1, 2}, {2, 2}, {1, 2, 3, 4}));
    net.add(Tensor<BigInt>({2, 3}, {2, 2}, {1, 0, 1, 1}));
    net.add(Tensor<BigInt>({3, 4}, {2, 2}, {2, 1, 0, 1}));
    CostReport r = order_cost(net, sequential_order(3));
    ASSERT_EQ(r.rows.size(), 2u);
    for (const auto &row : r.rows) {
        ASSERT_EQ(row.cost, 8.0);
    }
    ASSERT_EQ(r.total_cost, 16.0);
    ASSERT_EQ(r.tsv().substr(0, r.tsv().find('\n')), "step\tlhs\trhs\tcost\tpeak");
}

TEST(order_cost, orders_differ_in_cost_not_value) {
    TensorNetwork<BigInt> net;
    net.add(Tensor<BigInt>({1, 2}, {2, 8}, std::vector<BigInt>(16, 1)));
    net.add(Tensor<BigInt>({2, 3}, {8, 2}, std::vector<BigInt>(16, 2)));
    net.add(Tensor<BigInt>({3, 4}, {2, 8}, std::vector<BigInt>(16, 3)));
    ContractionOrder left = sequential_order(3);
    ContractionOrder right;
    right.steps = {{1, 2}, {0, 3}};
    ASSERT_EQ(order_cost(net, left).total_cost, 64.0);
    ASSERT_EQ(order_cost(net, right).total_cost, 256.0);
    ASSERT_EQ(contract_network(net, left), contract_network(net, right));
}

TEST(order_cost, unique_instance_peak_below_full_state) {
    QuantumCircuit q = reversible_to_quantum(make_reversible(parse_dimacs(unique1001)));
    Counter<Complex> c = quantum_counter(q, "");
    TensorNetwork<Complex> prepared = prepare_geometric(c);
    CostReport r = order_cost(prepared, minfill_order(prepared));
    ASSERT_LT(r.peak_intermediate, std::pow(2.0, static_cast<double>(q.num_qubits())));
}

TEST(order_cost, replay_matches_numeric_peak) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; trial++) {
        auto net = testutil::random_complex_network(rng, 2 + rng() % 7, 0.4);
        for (const auto &o : {minfill_order(net), sweep_order(net), sequential_order(net.size())}) {
            ContractionStats stats;
            contract_network(net, o, &stats);
            CostReport r = order_cost(net, o);
            ASSERT_EQ(r.peak_intermediate, static_cast<double>(stats.peak_intermediate));
            ASSERT_DOUBLE_EQ(r.total_cost, stats.multiply_adds);
        }
    }
}

TEST(geometric_properties, fold_correctness_on_random_quantum_checkers) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t qubits = 2 + rng() % 4;
        QuantumCircuit q = testutil::random_front(rng, qubits, 3 + rng() % 8, 1 + rng() % qubits, qubits - 1);
        testutil::append_random_clifford(rng, q, rng() % 5);
        std::string suffix = Bits::from_integer(rng(), rng() % (q.num_inputs() + 1)).str();
        Counter<Complex> c = quantum_counter(q, suffix);
        TensorNetwork<Complex> folded = fold_and_merge(c);
        Complex a = contract_network(folded, minfill_order(folded)).value();
        ASSERT_LT(relative_gap(a, unfolded_value(c)), 1e-10);
        double dense = dense_probability(q, counter_input_product(q.num_inputs(), Bits::parse(suffix), qubits));
        ASSERT_NEAR(a.real(), dense, 1e-10);
    }
}
