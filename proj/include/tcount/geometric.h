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

#ifndef TCOUNT_GEOMETRIC_H
#define TCOUNT_GEOMETRIC_H

#include <map>
#include <string>
#include <vector>

#include "tcount/counter.h"
#include "tcount/tensor_network.h"

namespace tcount {

enum class OrderHeuristic { Tree, MinFill, Sweep, Auto };

OrderHeuristic parse_order_heuristic(const std::string &name);
const char *order_heuristic_name(OrderHeuristic heuristic);

/// Labels and dimensions of a network; ordering works on shape alone.
struct NetworkShape {
    std::vector<std::vector<Label>> labels;
    std::vector<std::vector<std::size_t>> dims;

    template <typename T>
    static NetworkShape of(const TensorNetwork<T> &net) {
        NetworkShape s;
        for (const auto &t : net.tensors()) {
            s.labels.push_back(t.labels());
            s.dims.push_back(t.dims());
        }
        return s;
    }
    std::size_t size() const {
        return labels.size();
    }
};

/// Tensors as vertices, bonds as edges weighted by log2 of the bond dimension
/// (parallel bonds add up).
struct LineGraphView {
    std::vector<std::map<std::size_t, double>> adjacency;

    static LineGraphView of(const NetworkShape &shape);
    std::size_t vertex_count() const {
        return adjacency.size();
    }
    std::size_t edge_count() const;
    bool is_forest() const;
    bool is_connected() const;
};

/// Merges each ket/bra mirror pair into one doubled tensor and fuses every
/// (ket, bra) index pair into a single index of squared dimension. The result
/// has the geometry of the checker. Single-layer counters are returned as-is.
template <typename T>
TensorNetwork<T> fold_and_merge(const Counter<T> &counter);

/// Merges every tensor that starts out with rank <= 1 (boundary vectors and
/// scalars) into a neighbour. Never grows a tensor.
template <typename T>
TensorNetwork<T> absorb_boundaries(const TensorNetwork<T> &net);

/// Restricts every fused (ket, bra) index of a folded counter to its diagonal
/// ket = bra, shrinking dimension d*d to d. Valid when the counter's layout is
/// marked `diagonal`.
template <typename T>
TensorNetwork<T> keep_diagonal(const TensorNetwork<T> &folded, const std::map<Label, Label> &bra_label);

/// Leaf-first schedule for networks whose bond graph is a forest.
ContractionOrder tree_order(const NetworkShape &shape);
/// Min-fill elimination over bond indices (ties: smaller neighbourhood weight,
/// then smaller label), replayed as pairwise merges. Components are finished
/// separately and then multiplied together.
ContractionOrder minfill_order(const NetworkShape &shape);
/// Eliminates bond labels in the given order: each one merges the two tensors
/// holding it (skipped if already contracted). Survivors are merged at the end.
ContractionOrder elimination_order(const NetworkShape &shape, const std::vector<Label> &elimination);
/// Walks the positions in blocks of six: bonds inside a block are eliminated
/// first, then the bonds joining it to earlier blocks (by later, then earlier
/// position). Suits networks laid out as a sweep over a circuit.
ContractionOrder sweep_order(const NetworkShape &shape);
/// Auto: tree_order on forests, otherwise the cheaper of minfill_order and
/// sweep_order.
ContractionOrder choose_order(const NetworkShape &shape, OrderHeuristic heuristic);

struct CostRow {
    std::size_t step;
    std::size_t lhs;
    std::size_t rhs;
    double cost;         // multiply-adds
    double result_size;  // components of the merge result
    double peak;         // largest merge result so far
};

struct CostReport {
    std::vector<CostRow> rows;
    double total_cost = 0;
    double peak_intermediate = 0;
    /// log2 of the largest tensor alive at any point, inputs included.
    double width = 0;

    /// Tab-separated `step lhs rhs cost peak` rows.
    std::string tsv() const;
};

/// Symbolic replay of the schedule; no numeric work.
CostReport order_cost(const NetworkShape &shape, const ContractionOrder &order);

template <typename T>
ContractionOrder tree_order(const TensorNetwork<T> &net) {
    return tree_order(NetworkShape::of(net));
}
template <typename T>
ContractionOrder minfill_order(const TensorNetwork<T> &net) {
    return minfill_order(NetworkShape::of(net));
}
template <typename T>
ContractionOrder sweep_order(const TensorNetwork<T> &net) {
    return sweep_order(NetworkShape::of(net));
}
template <typename T>
CostReport order_cost(const TensorNetwork<T> &net, const ContractionOrder &order) {
    return order_cost(NetworkShape::of(net), order);
}

/// fold_and_merge (two-layer counters) followed by absorb_boundaries.
template <typename T>
TensorNetwork<T> prepare_geometric(const Counter<T> &counter) {
    if (counter.layout.mirrors.empty()) {
        return absorb_boundaries(counter.network);
    }
    TensorNetwork<T> folded = fold_and_merge(counter);
    return absorb_boundaries(counter.layout.diagonal ? keep_diagonal(folded, counter.layout.bra_label) : folded);
}

}  // namespace tcount

#endif
