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

#include "tcount/geometric.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <iostream>
#include <set>
#include <tuple>

namespace tcount {

OrderHeuristic parse_order_heuristic(const std::string &name) {
    if (name == "tree") {
        return OrderHeuristic::Tree;
    }
    if (name == "minfill") {
        return OrderHeuristic::MinFill;
    }
    if (name == "sweep") {
        return OrderHeuristic::Sweep;
    }
    if (name == "auto") {
        return OrderHeuristic::Auto;
    }
    throw std::invalid_argument("Unknown order heuristic \"" + name + "\" (expected tree, minfill, sweep or auto).");
}

const char *order_heuristic_name(OrderHeuristic heuristic) {
    switch (heuristic) {
        case OrderHeuristic::Tree:
            return "tree";
        case OrderHeuristic::MinFill:
            return "minfill";
        case OrderHeuristic::Sweep:
            return "sweep";
        default:
            return "auto";
    }
}

namespace {

std::map<Label, std::vector<std::size_t>> positions_of(const NetworkShape &shape) {
    std::map<Label, std::vector<std::size_t>> where;
    for (std::size_t k = 0; k < shape.size(); k++) {
        for (auto l : shape.labels[k]) {
            where[l].push_back(k);
        }
    }
    return where;
}

std::size_t dim_in(const NetworkShape &shape, std::size_t k, Label l) {
    const auto &ls = shape.labels[k];
    return shape.dims[k][static_cast<std::size_t>(std::find(ls.begin(), ls.end(), l) - ls.begin())];
}

// Union-find root with path halving.
std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::size_t component_count(const LineGraphView &g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::size_t count = g.vertex_count();
    for (std::size_t a = 0; a < g.vertex_count(); a++) {
        for (const auto &[b, w] : g.adjacency[a]) {
            std::size_t ra = find_root(parent, a);
            std::size_t rb = find_root(parent, b);
            if (ra != rb) {
                parent[ra] = rb;
                count--;
            }
        }
    }
    return count;
}

}  // namespace

LineGraphView LineGraphView::of(const NetworkShape &shape) {
    LineGraphView g;
    g.adjacency.resize(shape.size());
    for (const auto &[label, where] : positions_of(shape)) {
        if (where.size() > 2) {
            throw std::invalid_argument("LineGraphView: label " + std::to_string(label) + " occurs more than twice.");
        }
        if (where.size() == 2) {
            double w = std::log2(static_cast<double>(dim_in(shape, where[0], label)));
            g.adjacency[where[0]][where[1]] += w;
            g.adjacency[where[1]][where[0]] += w;
        }
    }
    return g;
}

std::size_t LineGraphView::edge_count() const {
    std::size_t twice = 0;
    for (const auto &a : adjacency) {
        twice += a.size();
    }
    return twice / 2;
}

bool LineGraphView::is_forest() const {
    return edge_count() + component_count(*this) == vertex_count();
}

bool LineGraphView::is_connected() const {
    return component_count(*this) <= 1;
}

template <typename T>
TensorNetwork<T> fold_and_merge(const Counter<T> &counter) {
    if (counter.layout.mirrors.empty()) {
        std::cerr << "warning: fold_and_merge called on a single-layer counter; returning it unchanged.\n";
        return counter.network;
    }
    const auto &net = counter.network;
    const auto &bra_of = counter.layout.bra_label;
    std::map<Label, Label> ket_of;
    for (const auto &[ket, bra] : bra_of) {
        ket_of[bra] = ket;
    }
    auto fuse = [&](const Tensor<T> &t) {
        std::vector<Label> order, labels;
        std::vector<std::size_t> dims;
        for (auto l : t.labels()) {
            auto b = bra_of.find(l);
            if (b != bra_of.end() && t.has_label(b->second)) {
                order.push_back(l);
                order.push_back(b->second);
                labels.push_back(l);
                dims.push_back(t.dim_of(l) * t.dim_of(b->second));
                continue;
            }
            auto k = ket_of.find(l);
            if (k != ket_of.end() && t.has_label(k->second)) {
                continue;
            }
            order.push_back(l);
            labels.push_back(l);
            dims.push_back(t.dim_of(l));
        }
        Tensor<T> p = t.permuted(order);
        return Tensor<T>(std::move(labels), std::move(dims), p.data());
    };

    TensorNetwork<T> out;
    std::vector<bool> used(net.size(), false);
    for (const auto &[ket, bra] : counter.layout.mirrors) {
        out.add(fuse(contract_shared(net[ket], net[bra])));
        used[ket] = used[bra] = true;
    }
    for (auto b : counter.layout.bridges) {
        out.add(fuse(net[b]));
        used[b] = true;
    }
    for (std::size_t k = 0; k < net.size(); k++) {
        if (!used[k]) {
            out.add(fuse(net[k]));
        }
    }
    out.validate();
    return out;
}

template <typename T>
TensorNetwork<T> keep_diagonal(const TensorNetwork<T> &folded, const std::map<Label, Label> &bra_label) {
    TensorNetwork<T> out;
    for (const auto &t : folded.tensors()) {
        std::vector<std::size_t> dims(t.dims()), step(t.rank(), 1);
        for (std::size_t k = 0; k < t.rank(); k++) {
            std::size_t d = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(dims[k]))));
            if (bra_label.count(t.labels()[k]) && d * d == dims[k] && d > 1) {
                dims[k] = d;
                step[k] = d + 1;
            }
        }
        std::size_t total = 1;
        for (auto d : dims) {
            total *= d;
        }
        std::vector<T> data;
        data.reserve(total);
        std::vector<std::size_t> index(dims.size(), 0), source(dims.size());
        for (std::size_t flat = 0; flat < total; flat++) {
            for (std::size_t k = 0; k < dims.size(); k++) {
                source[k] = index[k] * step[k];
            }
            data.push_back(t.at(std::span<const std::size_t>(source)));
            for (std::size_t k = dims.size(); k-- > 0;) {
                if (++index[k] < dims[k]) {
                    break;
                }
                index[k] = 0;
            }
        }
        out.add(Tensor<T>(t.labels(), std::move(dims), std::move(data)));
    }
    out.validate();
    return out;
}

template <typename T>
TensorNetwork<T> absorb_boundaries(const TensorNetwork<T> &net) {
    std::vector<std::optional<Tensor<T>>> live(net.tensors().begin(), net.tensors().end());
    auto where = net.label_positions();
    std::size_t alive = live.size();
    std::deque<std::size_t> work;
    for (std::size_t k = 0; k < live.size(); k++) {
        if (live[k]->rank() <= 1) {
            work.push_back(k);
        }
    }
    while (!work.empty() && alive > 1) {
        std::size_t k = work.front();
        work.pop_front();
        if (!live[k] || live[k]->rank() > 1) {
            continue;
        }
        std::optional<std::size_t> partner;
        if (live[k]->rank() == 1) {
            for (auto p : where[live[k]->labels()[0]]) {
                if (p != k) {
                    partner = p;
                }
            }
            if (!partner) {
                continue;
            }
            where.erase(live[k]->labels()[0]);
            live[*partner] = contract_shared(*live[*partner], *live[k]);
        } else {
            for (std::size_t p = 0; p < live.size() && !partner; p++) {
                if (p != k && live[p]) {
                    partner = p;
                }
            }
            live[*partner] = scaled(std::move(*live[*partner]), live[k]->value());
        }
        live[k].reset();
        alive--;
    }
    TensorNetwork<T> out;
    for (auto &t : live) {
        if (t) {
            out.add(std::move(*t));
        }
    }
    return out;
}

namespace {

ContractionOrder with_estimates(const NetworkShape &shape, ContractionOrder order) {
    CostReport r = order_cost(shape, order);
    order.width = r.width;
    order.cost = r.total_cost;
    return order;
}

}  // namespace

ContractionOrder tree_order(const NetworkShape &shape) {
    LineGraphView g = LineGraphView::of(shape);
    if (!g.is_forest()) {
        throw std::invalid_argument("tree_order: the bond graph contains a cycle.");
    }
    std::size_t count = shape.size();
    std::vector<std::set<std::size_t>> adj(count);
    for (std::size_t a = 0; a < count; a++) {
        for (const auto &[b, w] : g.adjacency[a]) {
            adj[a].insert(b);
        }
    }
    std::vector<std::size_t> pos(count);
    std::iota(pos.begin(), pos.end(), 0);
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < count; v++) {
        if (adj[v].size() == 1) {
            leaves.insert(v);
        }
    }
    ContractionOrder order;
    std::vector<bool> removed(count, false);
    while (!leaves.empty()) {
        std::size_t v = *leaves.begin();
        leaves.erase(leaves.begin());
        if (adj[v].size() != 1) {
            continue;
        }
        std::size_t u = *adj[v].begin();
        order.steps.push_back({pos[u], pos[v]});
        pos[u] = count + order.steps.size() - 1;
        adj[u].erase(v);
        adj[v].clear();
        removed[v] = true;
        leaves.erase(u);
        if (adj[u].size() == 1) {
            leaves.insert(u);
        }
    }
    std::optional<std::size_t> acc;
    for (std::size_t v = 0; v < count; v++) {
        if (removed[v]) {
            continue;
        }
        if (acc) {
            order.steps.push_back({*acc, pos[v]});
            acc = count + order.steps.size() - 1;
        } else {
            acc = pos[v];
        }
    }
    return with_estimates(shape, std::move(order));
}

ContractionOrder elimination_order(const NetworkShape &shape, const std::vector<Label> &elimination) {
    auto where = positions_of(shape);
    std::size_t count = shape.size();
    std::vector<std::vector<Label>> held(shape.labels);
    std::map<Label, std::vector<std::size_t>> live_at = where;
    std::vector<bool> alive(count, true);
    ContractionOrder order;
    for (auto l : elimination) {
        const auto &ps = live_at[l];
        if (ps.size() != 2) {
            continue;
        }
        std::size_t a = std::min(ps[0], ps[1]);
        std::size_t b = std::max(ps[0], ps[1]);
        std::size_t c = count + order.steps.size();
        order.steps.push_back({a, b});
        std::vector<Label> merged;
        for (auto x : held[a]) {
            if (std::find(held[b].begin(), held[b].end(), x) == held[b].end()) {
                merged.push_back(x);
            }
        }
        for (auto x : held[b]) {
            if (std::find(held[a].begin(), held[a].end(), x) == held[a].end()) {
                merged.push_back(x);
            }
        }
        for (std::size_t src : {a, b}) {
            for (auto x : held[src]) {
                auto &v = live_at[x];
                v.erase(std::remove(v.begin(), v.end(), src), v.end());
            }
        }
        for (auto x : merged) {
            live_at[x].push_back(c);
        }
        held.push_back(std::move(merged));
        alive.push_back(true);
        alive[a] = alive[b] = false;
    }
    std::optional<std::size_t> acc;
    for (std::size_t p = 0; p < alive.size(); p++) {
        if (!alive[p]) {
            continue;
        }
        if (acc) {
            std::size_t c = count + order.steps.size();
            order.steps.push_back({*acc, p});
            alive.push_back(false);
            acc = c;
        } else {
            acc = p;
        }
    }
    return with_estimates(shape, std::move(order));
}

ContractionOrder minfill_order(const NetworkShape &shape) {
    // Bond labels get dense ids; adjacency is kept as bitsets.
    std::vector<Label> label_of;
    std::vector<double> weight;
    std::map<Label, std::size_t> id;
    for (const auto &[label, ps] : positions_of(shape)) {
        if (ps.size() == 2) {
            id[label] = label_of.size();
            label_of.push_back(label);
            weight.push_back(std::log2(static_cast<double>(dim_in(shape, ps[0], label))));
        }
    }
    const std::size_t count = label_of.size();
    const std::size_t words = (count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(count, std::vector<std::uint64_t>(words, 0));
    auto set_edge = [&](std::size_t a, std::size_t b) { adj[a][b / 64] |= std::uint64_t{1} << (b % 64); };
    auto clear_edge = [&](std::size_t a, std::size_t b) { adj[a][b / 64] &= ~(std::uint64_t{1} << (b % 64)); };
    auto neighbours = [&](std::size_t v) {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words; w++) {
            for (std::uint64_t bits = adj[v][w]; bits != 0; bits &= bits - 1) {
                out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            }
        }
        return out;
    };
    for (const auto &labels : shape.labels) {
        for (auto a : labels) {
            for (auto b : labels) {
                if (a != b && id.count(a) && id.count(b)) {
                    set_edge(id[a], id[b]);
                }
            }
        }
    }

    using Key = std::tuple<std::size_t, double, Label>;
    auto key_of = [&](std::size_t v) {
        std::size_t missing = 0;
        double w = weight[v];
        for (auto a : neighbours(v)) {
            w += weight[a];
            for (std::size_t k = 0; k < words; k++) {
                missing += static_cast<std::size_t>(__builtin_popcountll(adj[v][k] & ~adj[a][k]));
            }
            missing--;  // a itself
        }
        return Key{missing / 2, w, label_of[v]};
    };
    std::set<Key> queue;
    std::vector<Key> current(count);
    for (std::size_t v = 0; v < count; v++) {
        current[v] = key_of(v);
        queue.insert(current[v]);
    }

    std::vector<Label> elimination;
    while (!queue.empty()) {
        std::size_t v = id.at(std::get<2>(*queue.begin()));
        queue.erase(queue.begin());
        elimination.push_back(label_of[v]);
        auto nb = neighbours(v);
        for (auto a : nb) {
            clear_edge(a, v);
            for (auto b : nb) {
                if (a != b) {
                    set_edge(a, b);
                }
            }
        }
        std::fill(adj[v].begin(), adj[v].end(), 0);
        std::vector<bool> affected(count, false);
        for (auto a : nb) {
            affected[a] = true;
            for (auto b : neighbours(a)) {
                affected[b] = true;
            }
        }
        for (std::size_t a = 0; a < count; a++) {
            if (affected[a] && queue.erase(current[a])) {
                current[a] = key_of(a);
                queue.insert(current[a]);
            }
        }
    }

    return elimination_order(shape, elimination);
}

ContractionOrder sweep_order(const NetworkShape &shape) {
    // Positions are taken in blocks; bonds inside a block go first, so each
    // block is contracted on its own before it joins the running result.
    constexpr std::size_t block = 6;
    std::vector<std::tuple<std::size_t, bool, std::size_t, std::size_t, Label>> keys;
    for (const auto &[label, ps] : positions_of(shape)) {
        if (ps.size() == 2) {
            std::size_t hi = std::max(ps[0], ps[1]), lo = std::min(ps[0], ps[1]);
            keys.emplace_back(hi / block, lo / block != hi / block, hi, lo, label);
        }
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Label> elimination;
    for (const auto &k : keys) {
        elimination.push_back(std::get<4>(k));
    }
    return elimination_order(shape, elimination);
}

ContractionOrder choose_order(const NetworkShape &shape, OrderHeuristic heuristic) {
    switch (heuristic) {
        case OrderHeuristic::Tree:
            return tree_order(shape);
        case OrderHeuristic::MinFill:
            return minfill_order(shape);
        case OrderHeuristic::Sweep:
            return sweep_order(shape);
        default:
            break;
    }
    if (LineGraphView::of(shape).is_forest()) {
        return tree_order(shape);
    }
    ContractionOrder fill = minfill_order(shape);
    ContractionOrder sweep = sweep_order(shape);
    return order_cost(shape, sweep).total_cost < order_cost(shape, fill).total_cost ? sweep : fill;
}

CostReport order_cost(const NetworkShape &shape, const ContractionOrder &order) {
    validate_order(shape.size(), order);
    std::vector<std::vector<Label>> labels(shape.labels);
    std::vector<std::vector<std::size_t>> dims(shape.dims);
    CostReport r;
    double largest = 1;
    for (const auto &d : dims) {
        double s = 1;
        for (auto x : d) {
            s *= static_cast<double>(x);
        }
        largest = std::max(largest, s);
    }
    for (std::size_t s = 0; s < order.steps.size(); s++) {
        const auto &step = order.steps[s];
        std::vector<Label> out_l;
        std::vector<std::size_t> out_d;
        double cost = 1, size = 1;
        const auto &la = labels[step.lhs], &lb = labels[step.rhs];
        for (std::size_t k = 0; k < la.size(); k++) {
            cost *= static_cast<double>(dims[step.lhs][k]);
            if (std::find(lb.begin(), lb.end(), la[k]) == lb.end()) {
                out_l.push_back(la[k]);
                out_d.push_back(dims[step.lhs][k]);
                size *= static_cast<double>(dims[step.lhs][k]);
            }
        }
        for (std::size_t k = 0; k < lb.size(); k++) {
            if (std::find(la.begin(), la.end(), lb[k]) == la.end()) {
                cost *= static_cast<double>(dims[step.rhs][k]);
                out_l.push_back(lb[k]);
                out_d.push_back(dims[step.rhs][k]);
                size *= static_cast<double>(dims[step.rhs][k]);
            }
        }
        r.total_cost += cost;
        r.peak_intermediate = std::max(r.peak_intermediate, size);
        largest = std::max(largest, size);
        r.rows.push_back({s, step.lhs, step.rhs, cost, size, r.peak_intermediate});
        labels.push_back(std::move(out_l));
        dims.push_back(std::move(out_d));
    }
    r.width = std::log2(largest);
    return r;
}

namespace {

std::string integral(double x) {
    if (x < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", x);
        return buf;
    }
    return format_significant(x, 12);
}

}  // namespace

std::string CostReport::tsv() const {
    std::string out = "step\tlhs\trhs\tcost\tpeak\n";
    for (const auto &row : rows) {
        out += std::to_string(row.step) + "\t" + std::to_string(row.lhs) + "\t" + std::to_string(row.rhs) + "\t" +
               integral(row.cost) + "\t" + integral(row.peak) + "\n";
    }
    return out;
}

#define TCOUNT_INSTANTIATE(T)                                            \
    template TensorNetwork<T> fold_and_merge<T>(const Counter<T> &); \
    template TensorNetwork<T> absorb_boundaries<T>(const TensorNetwork<T> &); \
    template TensorNetwork<T> keep_diagonal<T>(const TensorNetwork<T> &, const std::map<Label, Label> &);

TCOUNT_INSTANTIATE(BigInt)
TCOUNT_INSTANTIATE(Complex)
TCOUNT_INSTANTIATE(Dyadic)

#undef TCOUNT_INSTANTIATE

}  // namespace tcount
