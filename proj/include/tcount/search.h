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

#ifndef TCOUNT_SEARCH_H
#define TCOUNT_SEARCH_H

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcount/counter.h"
#include "tcount/geometric.h"
#include "tcount/parsers.h"

namespace tcount {

enum class Strategy { Geometric, Stabiliser, Gaussian, Concat, Auto };

Strategy parse_strategy(const std::string &name);
const char *strategy_name(Strategy strategy);

/// The checker asked for is incompatible with the chosen strategy or mode.
class StrategyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Checker for solution length n, or nothing when the family has none.
using CheckerFamily = std::function<std::optional<Circuit>(std::size_t n)>;

/// A single checker, offered only for its own input count.
CheckerFamily fixed_length_family(Circuit checker);
std::size_t checker_inputs(const Circuit &checker);

struct EngineOptions {
    Strategy strategy = Strategy::Auto;
    OrderHeuristic order = OrderHeuristic::Auto;
    /// Unset: exact for Boolean checkers on the geometric strategy, else probability.
    std::optional<CountMode> mode;
};

struct CountResult {
    BigInt count;
    /// The strategy actually used (never Auto).
    Strategy strategy = Strategy::Geometric;
    CountMode mode = CountMode::Exact;
    /// Probability mode only: the contraction value P.
    std::optional<double> probability;
    /// Geometric and concatenated strategies: estimates of the contraction order used.
    double width = 0;
    double cost = 0;
    /// Algebraic strategies: bond dimension of the evolved projector.
    std::optional<std::size_t> bond_dimension;
};

/// Evaluates count queries. Contraction orders depend only on network structure,
/// so they are cached and reused across suffixes.
class CountEngine {
   public:
    explicit CountEngine(EngineOptions options = {});

    const EngineOptions &options() const {
        return options_;
    }

    CountResult count(const Circuit &checker, const CountQuery &query);
    /// The same query forced into probability mode.
    CountResult probability(const Circuit &checker, const CountQuery &query);
    /// Order report of the geometric network the query would contract.
    CostReport cost(const Circuit &checker, const CountQuery &query);

    std::size_t cached_orders() const {
        return orders_.size();
    }

   private:
    struct Plan {
        Strategy strategy;
        CountMode mode;
        /// Set when the strategy needs a quantum circuit (compiled from a Boolean one if necessary).
        std::optional<QuantumCircuit> quantum;
        /// Concatenation: first gate of the algebraic back part, and its kind.
        std::size_t split = 0;
        bool gaussian_back = false;
    };
    Plan plan(const Circuit &checker, std::optional<CountMode> mode) const;
    CountResult run(const Plan &plan, const Circuit &checker, const CountQuery &query);
    template <typename T>
    CountResult run_geometric(const CheckerNetwork<T> &checker, const CountQuery &query, CountMode mode);
    CountResult run_algebraic(const Plan &plan, const CountQuery &query);
    CountResult run_concat(const Plan &plan, const CountQuery &query);
    const ContractionOrder &order_for(const NetworkShape &shape);

    EngineOptions options_;
    std::map<std::pair<std::vector<std::vector<Label>>, std::vector<std::vector<std::size_t>>>, ContractionOrder>
        orders_;
};

enum class TraceSource { Queried, Inferred };

struct TraceRow {
    std::size_t n;
    Bits suffix;
    BigInt count;
    TraceSource source;
};

struct SearchOutcome {
    bool found = false;
    Bits solution;
    std::vector<TraceRow> trace;
    /// Empty-suffix queries of the length sweep.
    std::size_t length_queries = 0;
    /// Queries issued while fixing bits.
    std::size_t suffix_queries = 0;

    std::size_t total_queries() const {
        return length_queries + suffix_queries;
    }
    /// `n suffix count source` rows, tab-separated, with a header.
    std::string trace_tsv() const;
};

struct SearchOptions {
    /// Query both extensions at every bit and check that they add up to the parent.
    bool paranoid = false;
};

/// Length sweep n = 1 .. n_max, then one bit at a time from w_1 upward: the
/// 0-extension is queried and, when it counts zero, the 1-extension is taken
/// with the parent's count. The solution is re-checked before returning.
SearchOutcome find(const CheckerFamily &family, std::size_t n_max, CountEngine &engine, SearchOptions options = {});

}  // namespace tcount

#endif
