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

#include "tcount/search.h"

#include <cmath>

#include "tcount/algebraic.h"
#include "tcount/lowering.h"
#include "tcount/reversible_circuit.h"

namespace tcount {

Strategy parse_strategy(const std::string &name) {
    if (name == "geometric") {
        return Strategy::Geometric;
    }
    if (name == "stabiliser" || name == "stabilizer") {
        return Strategy::Stabiliser;
    }
    if (name == "gaussian") {
        return Strategy::Gaussian;
    }
    if (name == "concat") {
        return Strategy::Concat;
    }
    if (name == "auto") {
        return Strategy::Auto;
    }
    throw std::invalid_argument("Unknown strategy \"" + name +
                                "\" (expected geometric, stabiliser, gaussian, concat or auto).");
}

const char *strategy_name(Strategy strategy) {
    switch (strategy) {
        case Strategy::Geometric:
            return "geometric";
        case Strategy::Stabiliser:
            return "stabiliser";
        case Strategy::Gaussian:
            return "gaussian";
        case Strategy::Concat:
            return "concat";
        default:
            return "auto";
    }
}

std::size_t checker_inputs(const Circuit &checker) {
    return std::visit([](const auto &c) { return c.num_inputs(); }, checker);
}

CheckerFamily fixed_length_family(Circuit checker) {
    return [checker = std::move(checker)](std::size_t n) -> std::optional<Circuit> {
        if (n == checker_inputs(checker)) {
            return checker;
        }
        return std::nullopt;
    };
}

namespace {

std::optional<std::string> first_non_gaussian(const QuantumCircuit &c) {
    for (const auto &g : c.gates()) {
        if (!g.gaussian) {
            return g.name;
        }
    }
    return std::nullopt;
}

bool output_is_last(const QuantumCircuit &c) {
    return c.output_qubit() + 1 == c.num_qubits();
}

std::vector<std::array<Complex, 2>> product_input(const CountQuery &q, std::size_t num_qubits) {
    auto tensors = input_state_tensors<Complex>(q.n, q.suffix, num_qubits, CountMode::Probability);
    std::vector<std::array<Complex, 2>> out(num_qubits);
    for (const auto &t : tensors) {
        out[static_cast<std::size_t>(t.labels()[0]) - 1] = {t.data()[0], t.data()[1]};
    }
    return out;
}

template <typename T>
TensorNetwork<T> geometric_network(const CheckerNetwork<T> &checker, const CountQuery &query, CountMode mode) {
    return prepare_geometric(build_counter(checker, query, mode));
}

}  // namespace

CountEngine::CountEngine(EngineOptions options) : options_(options) {
}

CountEngine::Plan CountEngine::plan(const Circuit &checker, std::optional<CountMode> mode) const {
    Plan p;
    p.strategy = options_.strategy;
    if (const auto *b = std::get_if<BooleanCircuit>(&checker)) {
        if (p.strategy == Strategy::Auto || p.strategy == Strategy::Geometric) {
            p.strategy = Strategy::Geometric;
            p.mode = mode.value_or(CountMode::Exact);
            return p;
        }
        if (mode == CountMode::Exact) {
            throw StrategyError(std::string("The ") + strategy_name(p.strategy) +
                                " strategy works in probability mode only.");
        }
        p.quantum = reversible_to_quantum(make_reversible(*b));
    } else {
        if (mode == CountMode::Exact) {
            throw StrategyError("Exact mode requires a Boolean checker.");
        }
        p.quantum = std::get<QuantumCircuit>(checker);
    }
    p.mode = CountMode::Probability;
    const QuantumCircuit &c = *p.quantum;
    std::size_t end = c.gates().size();
    std::size_t cliff = c.clifford_suffix_start();
    std::size_t gauss = output_is_last(c) ? c.gaussian_suffix_start() : end;
    switch (p.strategy) {
        case Strategy::Geometric:
            break;
        case Strategy::Stabiliser:
            if (auto bad = c.first_non_clifford()) {
                throw StrategyError("Stabiliser strategy: gate '" + *bad + "' is not Clifford.");
            }
            break;
        case Strategy::Gaussian:
            if (auto bad = first_non_gaussian(c)) {
                throw StrategyError("Gaussian strategy: gate '" + *bad + "' is not Gaussian.");
            }
            if (!output_is_last(c)) {
                throw StrategyError("Gaussian strategy: the output qubit must be the last qubit.");
            }
            break;
        case Strategy::Concat:
            if (std::min(cliff, gauss) == end) {
                throw StrategyError("Concat strategy: the circuit does not end in a Clifford or Gaussian gate.");
            }
            p.gaussian_back = gauss < cliff;
            p.split = std::min(cliff, gauss);
            break;
        default:
            if (cliff == 0) {
                p.strategy = Strategy::Stabiliser;
            } else if (gauss == 0) {
                p.strategy = Strategy::Gaussian;
            } else if (std::min(cliff, gauss) < end) {
                p.strategy = Strategy::Concat;
                p.gaussian_back = gauss < cliff;
                p.split = std::min(cliff, gauss);
            } else {
                p.strategy = Strategy::Geometric;
            }
    }
    return p;
}

const ContractionOrder &CountEngine::order_for(const NetworkShape &shape) {
    auto key = std::make_pair(shape.labels, shape.dims);
    auto it = orders_.find(key);
    if (it == orders_.end()) {
        it = orders_.emplace(std::move(key), choose_order(shape, options_.order)).first;
    }
    return it->second;
}

template <typename T>
CountResult CountEngine::run_geometric(const CheckerNetwork<T> &checker, const CountQuery &query, CountMode mode) {
    TensorNetwork<T> net = geometric_network(checker, query, mode);
    const ContractionOrder &order = order_for(NetworkShape::of(net));
    T value = contract_network(net, order).value();
    CountResult r;
    r.strategy = Strategy::Geometric;
    r.mode = mode;
    r.width = order.width;
    r.cost = order.cost;
    if constexpr (std::is_same_v<T, Complex>) {
        r.probability = value.real();
        r.count = count_from_value(value, query);
    } else {
        r.count = count_from_value(value);
    }
    return r;
}

CountResult CountEngine::run_algebraic(const Plan &plan, const CountQuery &query) {
    const QuantumCircuit &c = *plan.quantum;
    MatrixProductOperator mpo =
        plan.strategy == Strategy::Stabiliser ? evolve_projector_stabiliser(c) : evolve_projector_gaussian(c);
    Complex value = mpo.expectation(product_input(query, c.num_qubits()));
    CountResult r;
    r.strategy = plan.strategy;
    r.mode = CountMode::Probability;
    r.probability = value.real();
    r.count = count_from_value(value, query);
    std::size_t chi = mpo.bond_dimension();
    r.bond_dimension = chi;
    r.width = std::log2(4.0 * static_cast<double>(chi * chi));
    r.cost = 4.0 * static_cast<double>(chi * chi * mpo.size());
    return r;
}

CountResult CountEngine::run_concat(const Plan &plan, const CountQuery &query) {
    const QuantumCircuit &c = *plan.quantum;
    QuantumCircuit front = c.slice(0, plan.split);
    QuantumCircuit back = c.slice(plan.split, c.gates().size());
    MatrixProductOperator mpo = plan.gaussian_back ? evolve_projector_gaussian(back) : evolve_projector_stabiliser(back);
    CheckerNetwork<Complex> lowered = lower_to_network<Complex>(front);
    auto states = label_input_states(
        lowered, input_state_tensors<Complex>(query.n, query.suffix, c.num_qubits(), CountMode::Probability));
    TensorNetwork<Complex> net = prepare_geometric(build_concatenated_counter(lowered, mpo, states));
    const ContractionOrder &order = order_for(NetworkShape::of(net));
    Complex value = contract_network(net, order).value();
    CountResult r;
    r.strategy = Strategy::Concat;
    r.mode = CountMode::Probability;
    r.probability = value.real();
    r.count = count_from_value(value, query);
    r.width = order.width;
    r.cost = order.cost;
    r.bond_dimension = mpo.bond_dimension();
    return r;
}

CountResult CountEngine::run(const Plan &plan, const Circuit &checker, const CountQuery &query) {
    query.validate();
    if (query.n != checker_inputs(checker)) {
        throw std::invalid_argument("The checker takes " + std::to_string(checker_inputs(checker)) +
                                    " input bits, not n = " + std::to_string(query.n) + ".");
    }
    switch (plan.strategy) {
        case Strategy::Stabiliser:
        case Strategy::Gaussian:
            return run_algebraic(plan, query);
        case Strategy::Concat:
            return run_concat(plan, query);
        default:
            break;
    }
    if (plan.quantum) {
        return run_geometric(lower_to_network<Complex>(*plan.quantum), query, CountMode::Probability);
    }
    const auto &b = std::get<BooleanCircuit>(checker);
    if (plan.mode == CountMode::Exact) {
        return run_geometric(lower_to_network<BigInt>(b), query, CountMode::Exact);
    }
    return run_geometric(lower_to_network<Complex>(b), query, CountMode::Probability);
}

CountResult CountEngine::count(const Circuit &checker, const CountQuery &query) {
    return run(plan(checker, options_.mode), checker, query);
}

CountResult CountEngine::probability(const Circuit &checker, const CountQuery &query) {
    return run(plan(checker, CountMode::Probability), checker, query);
}

CostReport CountEngine::cost(const Circuit &checker, const CountQuery &query) {
    query.validate();
    Plan p = plan(checker, options_.mode);
    if (p.strategy == Strategy::Concat) {
        const QuantumCircuit &c = *p.quantum;
        QuantumCircuit back = c.slice(p.split, c.gates().size());
        MatrixProductOperator mpo =
            p.gaussian_back ? evolve_projector_gaussian(back) : evolve_projector_stabiliser(back);
        CheckerNetwork<Complex> lowered = lower_to_network<Complex>(c.slice(0, p.split));
        auto states = label_input_states(
            lowered, input_state_tensors<Complex>(query.n, query.suffix, c.num_qubits(), CountMode::Probability));
        auto net = prepare_geometric(build_concatenated_counter(lowered, mpo, states));
        NetworkShape shape = NetworkShape::of(net);
        return order_cost(shape, order_for(shape));
    }
    NetworkShape shape;
    if (p.quantum) {
        shape = NetworkShape::of(
            geometric_network(lower_to_network<Complex>(*p.quantum), query, CountMode::Probability));
    } else if (p.mode == CountMode::Exact) {
        shape = NetworkShape::of(
            geometric_network(lower_to_network<BigInt>(std::get<BooleanCircuit>(checker)), query, CountMode::Exact));
    } else {
        shape = NetworkShape::of(geometric_network(lower_to_network<Complex>(std::get<BooleanCircuit>(checker)), query,
                                                   CountMode::Probability));
    }
    return order_cost(shape, order_for(shape));
}

std::string SearchOutcome::trace_tsv() const {
    std::string out = "n\tsuffix\tcount\tsource\n";
    for (const auto &row : trace) {
        out += std::to_string(row.n) + "\t" + row.suffix.str() + "\t" + row.count.str() + "\t" +
               (row.source == TraceSource::Queried ? "queried" : "inferred") + "\n";
    }
    return out;
}

namespace {

bool accepts(const Circuit &checker, const Bits &w, std::size_t n_max, CountEngine &engine) {
    if (const auto *b = std::get_if<BooleanCircuit>(&checker)) {
        return b->evaluate(w);
    }
    return engine.count(checker, CountQuery{w.size(), w, n_max}).count == 1;
}

}  // namespace

SearchOutcome find(const CheckerFamily &family, std::size_t n_max, CountEngine &engine, SearchOptions options) {
    if (n_max < 1) {
        throw std::invalid_argument("find: n_max must be at least 1.");
    }
    SearchOutcome out;
    for (std::size_t n = 1; n <= n_max; n++) {
        std::optional<Circuit> checker = family(n);
        if (!checker) {
            continue;
        }
        auto query = [&](const Bits &suffix) {
            return engine.count(*checker, CountQuery{n, suffix, n_max}).count;
        };
        BigInt total = query(Bits());
        out.length_queries++;
        out.trace.push_back({n, Bits(), total, TraceSource::Queried});
        if (total == 0) {
            continue;
        }
        Bits suffix;
        BigInt parent = total;
        for (std::size_t b = 1; b <= n; b++) {
            Bits zero = suffix.extended(false);
            Bits one = suffix.extended(true);
            BigInt c0 = query(zero);
            out.suffix_queries++;
            out.trace.push_back({n, zero, c0, TraceSource::Queried});
            BigInt c1 = parent - c0;
            if (options.paranoid) {
                c1 = query(one);
                out.suffix_queries++;
                out.trace.push_back({n, one, c1, TraceSource::Queried});
                if (c0 + c1 != parent) {
                    throw CountError("Suffix counts are not additive at \"" + suffix.str() + "\": " + c0.str() +
                                     " + " + c1.str() + " != " + parent.str() + ".");
                }
            }
            if (c0 > 0) {
                suffix = zero;
                parent = c0;
                continue;
            }
            if (!options.paranoid) {
                out.trace.push_back({n, one, c1, TraceSource::Inferred});
            }
            parent = c1;
            suffix = one;
        }
        if (!accepts(*checker, suffix, n_max, engine)) {
            throw CountError("The checker rejects the solution " + suffix.str() + " found by counting.");
        }
        out.found = true;
        out.solution = suffix;
        return out;
    }
    return out;
}

}  // namespace tcount
