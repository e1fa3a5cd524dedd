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
#include "tcount/algebraic.h"
#include "tcount/counter.h"
#include "tcount/geometric.h"
#include "tcount/oracle.h"
#include "tcount/parsers.h"
#include "tcount/reversible_circuit.h"
#include "tcount/search.h"
#include "test_util.h"

using namespace tcount;

namespace {

MatrixProductOperator random_mpo(std::mt19937_64 &rng, std::size_t m, std::size_t chi) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<MpoSite> sites;
    for (std::size_t s = 0; s < m; s++) {
        MpoSite site(s == 0 ? 1 : chi, s + 1 == m ? 1 : chi);
        for (auto &x : site.data) {
            x = {u(rng), u(rng)};
        }
        sites.push_back(site);
    }
    return MatrixProductOperator(sites);
}

BigInt exact_count(const BooleanCircuit &c, const CountQuery &q, OrderHeuristic h) {
    auto net = prepare_geometric(build_counter(lower_to_network<BigInt>(c), q, CountMode::Exact));
    return count_from_value(contract_network(net, choose_order(NetworkShape::of(net), h)).value());
}

}  // namespace

TEST(exactness, word_overflow_falls_back_to_big_integers) {
    // Chain of matrices [[2^40, 1], [1, 2^40]] closed into a trace.
    BigInt big = BigInt(1) << 40;
    TensorNetwork<BigInt> net;
    const std::size_t links = 4;
    for (std::size_t k = 0; k < links; k++) {
        net.add(Tensor<BigInt>({Label(k), Label((k + 1) % links + links)}, {2, 2}, {big, 1, 1, big}));
    }
    // Identity tensors close label k + links onto label k + 1.
    TensorNetwork<BigInt> closed;
    for (std::size_t k = 0; k < links; k++) {
        closed.add(net[k]);
        closed.add(Tensor<BigInt>({Label((k + 1) % links + links), Label((k + 1) % links)}, {2, 2}, {1, 0, 0, 1}));
    }
    BigInt value = contract_network(closed, sequential_order(closed.size())).value();
    // Trace of M^4 with eigenvalues big + 1 and big - 1.
    BigInt expected = 1;
    BigInt other = 1;
    for (std::size_t k = 0; k < links; k++) {
        expected *= big + 1;
        other *= big - 1;
    }
    ASSERT_EQ(value, expected + other);
    ASSERT_GT(value, BigInt(1) << 160);
}

TEST(exactness, word_and_big_paths_agree) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; trial++) {
        TensorNetwork<BigInt> net = testutil::random_integer_network(rng, 6, 0.5);
        ContractionOrder order = minfill_order(net);
        ASSERT_EQ(contract_network(net, order).value(), detail::contract_all(net, order, nullptr).value());
    }
}

TEST(search_properties, soundness_budget_and_additivity) {
    std::mt19937_64 rng(32);
    int solved = 0;
    for (int trial = 0; trial < 12; trial++) {
        std::size_t n = 6 + rng() % 5;
        BooleanCircuit c = testutil::random_cnf(rng, n, n * (2 + rng() % 3));
        Circuit checker(c);
        for (bool paranoid : {false, true}) {
            CountEngine engine;
            SearchOutcome out = find(fixed_length_family(checker), n, engine, SearchOptions{paranoid});
            ASSERT_EQ(out.found, enumerate_count(c, n, Bits::parse("")) > 0);
            if (!out.found) {
                continue;
            }
            solved += paranoid ? 0 : 1;
            ASSERT_TRUE(c.evaluate(out.solution));
            auto report = verify_checker(lower_to_network<BigInt>(c));
            ASSERT_TRUE(report.ok());
            ASSERT_LE(out.total_queries(), paranoid ? n + 2 * n : 2 * n);
            for (const auto &row : out.trace) {
                ASSERT_EQ(row.count, enumerate_count(c, n, row.suffix)) << row.suffix.str();
            }
        }
    }
    ASSERT_GT(solved, 3);
}

TEST(search_properties, suffix_additivity_over_full_tree) {
    std::mt19937_64 rng(33);
    BooleanCircuit c = testutil::random_cnf(rng, 7, 12);
    Circuit checker(c);
    CountEngine exact;
    CountEngine probability;
    std::vector<std::string> level{""};
    for (std::size_t depth = 0; depth < 7; depth++) {
        std::vector<std::string> next;
        for (const auto &s : level) {
            CountQuery parent{7, Bits::parse(s), 7};
            BigInt total = exact.count(checker, parent).count;
            ASSERT_EQ(probability.probability(checker, parent).count, total);
            BigInt children = 0;
            for (const char *bit : {"0", "1"}) {
                next.push_back(bit + s);
                children += exact.count(checker, CountQuery{7, Bits::parse(bit + s), 7}).count;
            }
            ASSERT_EQ(children, total) << s;
        }
        level = next;
    }
}

TEST(geometric_properties, and_tree_peak_is_constant_under_tree_order) {
    std::optional<std::size_t> peak;
    for (std::size_t n : {8, 16, 32, 64}) {
        BooleanCircuit c = testutil::and_tree(n);
        auto net = prepare_geometric(build_counter(lower_to_network<BigInt>(c), CountQuery{n, Bits::parse(""), n},
                                                   CountMode::Exact));
        ContractionOrder order = tree_order(net);
        ContractionStats stats;
        ASSERT_EQ(contract_network(net, order, &stats).value(), 1);
        if (!peak) {
            peak = stats.peak_intermediate;
        }
        ASSERT_EQ(stats.peak_intermediate, *peak) << n;
        ASSERT_LE(order.width, 3.0);
    }
}

TEST(geometric_properties, heuristics_agree_on_counts) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t n = 5 + rng() % 6;
        BooleanCircuit c = testutil::random_cnf(rng, n, n * 3);
        CountQuery q{n, Bits::parse(trial % 2 ? "1" : ""), n};
        BigInt expected = enumerate_count(c, n, q.suffix);
        for (auto h : {OrderHeuristic::MinFill, OrderHeuristic::Sweep, OrderHeuristic::Auto}) {
            ASSERT_EQ(exact_count(c, q, h), expected);
        }
    }
}

TEST(algebraic_properties, mpo_algebra_is_exact) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 10; trial++) {
        std::size_t m = 1 + rng() % 4;
        MatrixProductOperator a = random_mpo(rng, m, 2), b = random_mpo(rng, m, 2), c = random_mpo(rng, m, 3);
        Matrix lhs = mpo_multiply(a, mpo_add(b, c)).to_dense();
        Matrix rhs = mpo_add(mpo_multiply(a, b), mpo_multiply(a, c)).to_dense();
        ASSERT_LT(lhs.max_abs_diff(rhs), 1e-12);
        ASSERT_LT(lhs.max_abs_diff(a.to_dense() * (b.to_dense() + c.to_dense())), 1e-12);
        Matrix scaled = mpo_scale(a, Complex(0, 2)).to_dense();
        ASSERT_LT(scaled.max_abs_diff(a.to_dense() * Complex(0, 2)), 1e-12);
    }
}

TEST(algebraic_properties, evolved_projector_is_a_projector) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; trial++) {
        QuantumCircuit c = testutil::random_clifford(rng, 4, 20, 4, rng() % 4);
        MatrixProductOperator p = evolve_projector_stabiliser(c);
        ASSERT_LT(mpo_multiply(p, p).to_dense().max_abs_diff(p.to_dense()), 1e-12);
        QuantumCircuit g = testutil::random_gaussian(rng, 3, 5);
        MatrixProductOperator e = evolve_projector_gaussian(g);
        ASSERT_LT(mpo_multiply(e, e).to_dense().max_abs_diff(e.to_dense()), 1e-9);
    }
}

TEST(algebraic_properties, concatenation_matches_geometric_counts) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; trial++) {
        QuantumCircuit c = testutil::random_front(rng, 6, 8, 3, 5);
        testutil::append_random_clifford(rng, c, 10);
        CountEngine geometric(EngineOptions{Strategy::Geometric, OrderHeuristic::Auto, std::nullopt});
        CountEngine concat(EngineOptions{Strategy::Concat, OrderHeuristic::Auto, std::nullopt});
        for (const char *s : {"", "1", "01"}) {
            CountQuery q{3, Bits::parse(s), 6};
            double expected = dense_probability(c, counter_input_product(3, q.suffix, 6));
            ASSERT_NEAR(*geometric.probability(Circuit(c), q).probability, expected, 1e-10);
            ASSERT_NEAR(*concat.probability(Circuit(c), q).probability, expected, 1e-10);
        }
    }
}
