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

#include "tcount/parsers.h"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace tcount {

ParseError::ParseError(const std::string &message, std::size_t line)
    : std::invalid_argument(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {
}

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

long long parse_int(const std::string &tok, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception &) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
    return v;
}

double parse_real(const std::string &tok, std::size_t line) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception &) {
        throw ParseError("expected a number, got '" + tok + "'", line);
    }
    if (used != tok.size()) {
        throw ParseError("expected a number, got '" + tok + "'", line);
    }
    return v;
}

Complex parse_complex(std::string tok, std::size_t line) {
    if (tok.size() >= 2 && tok.front() == '(' && tok.back() == ')') {
        tok = tok.substr(1, tok.size() - 2);
    }
    auto comma = tok.find(',');
    if (comma == std::string::npos) {
        return {parse_real(tok, line), 0.0};
    }
    return {parse_real(tok.substr(0, comma), line), parse_real(tok.substr(comma + 1), line)};
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    return lines;
}

std::size_t and_all(BooleanCircuitBuilder &b, const std::vector<std::size_t> &wires, BoolGateKind kind) {
    std::size_t acc = wires[0];
    for (std::size_t k = 1; k < wires.size(); k++) {
        acc = b.add(kind, {acc, wires[k]});
    }
    return acc;
}

}  // namespace

BooleanCircuit parse_dimacs(std::string_view text) {
    std::optional<long long> vars, declared_clauses;
    std::vector<std::vector<long long>> clauses;
    std::vector<long long> current;
    std::size_t lineno = 0;
    for (const auto &line : split_lines(text)) {
        lineno++;
        auto toks = tokenize(line);
        if (!toks.empty() && toks[0][0] == '%') {
            break;  // SATLIB end marker
        }
        if (toks.empty() || toks[0][0] == 'c') {
            continue;
        }
        if (toks[0] == "p") {
            if (vars) {
                throw ParseError("duplicate problem line", lineno);
            }
            if (toks.size() != 4 || toks[1] != "cnf") {
                throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", lineno);
            }
            vars = parse_int(toks[2], lineno);
            declared_clauses = parse_int(toks[3], lineno);
            if (*vars < 0 || *declared_clauses < 0) {
                throw ParseError("negative count in header", lineno);
            }
            continue;
        }
        if (!vars) {
            throw ParseError("clause before 'p cnf' header", lineno);
        }
        for (const auto &tok : toks) {
            long long lit = parse_int(tok, lineno);
            if (lit == 0) {
                clauses.push_back(current);
                current.clear();
                continue;
            }
            if (std::llabs(lit) > *vars) {
                throw ParseError("literal " + tok + " out of range for " + std::to_string(*vars) + " variables",
                                 lineno);
            }
            current.push_back(lit);
        }
    }
    if (!vars) {
        throw ParseError("missing 'p cnf' header");
    }
    if (!current.empty()) {
        clauses.push_back(current);
    }

    BooleanCircuitBuilder b(static_cast<std::size_t>(*vars));
    // Running conjunction: each clause is folded into the accumulator as soon as
    // it is built, so a sweep over the gates keeps at most one copy of each
    // variable open.
    std::optional<std::size_t> acc;
    for (const auto &clause : clauses) {
        std::size_t wire;
        if (clause.empty()) {
            wire = b.constant(false);
        } else {
            std::vector<std::size_t> lits;
            for (auto lit : clause) {
                std::size_t w = b.input(static_cast<std::size_t>(std::llabs(lit)));
                lits.push_back(lit > 0 ? w : b.add(BoolGateKind::Not, {w}));
            }
            wire = and_all(b, lits, BoolGateKind::Or);
        }
        acc = acc ? b.add(BoolGateKind::And, {*acc, wire}) : wire;
    }
    b.set_output(acc ? *acc : b.constant(true));
    return b.build();
}

namespace {

std::optional<BoolGateKind> bool_gate_kind(const std::string &name) {
    static const std::map<std::string, BoolGateKind> kinds = {
        {"AND", BoolGateKind::And},       {"OR", BoolGateKind::Or},         {"NOT", BoolGateKind::Not},
        {"XOR", BoolGateKind::Xor},       {"CONST0", BoolGateKind::Const0}, {"CONST1", BoolGateKind::Const1},
        {"FANOUT", BoolGateKind::Fanout},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) {
        return std::nullopt;
    }
    return it->second;
}

struct NetGate {
    BoolGateKind kind;
    std::vector<long long> ins;
    std::vector<long long> outs;
    std::size_t line;
};

BooleanCircuit parse_boolean_netlist(const std::vector<std::string> &lines) {
    std::optional<long long> n;
    long long ancillas = 0;
    std::optional<long long> out;
    std::size_t out_line = 0;
    std::vector<NetGate> gates;
    std::size_t lineno = 0;
    for (const auto &raw : lines) {
        lineno++;
        auto toks = tokenize(raw.substr(0, raw.find('#')));
        if (toks.empty()) {
            continue;
        }
        const auto &kw = toks[0];
        if (kw == "in") {
            if (toks.size() != 2) {
                throw ParseError("expected 'in <n>'", lineno);
            }
            n = parse_int(toks[1], lineno);
            if (*n < 0) {
                throw ParseError("negative input count", lineno);
            }
        } else if (kw == "anc") {
            if (toks.size() != 2) {
                throw ParseError("expected 'anc <k>'", lineno);
            }
            ancillas = parse_int(toks[1], lineno);
            if (ancillas < 0) {
                throw ParseError("negative ancilla count", lineno);
            }
        } else if (kw == "out") {
            if (toks.size() != 2) {
                throw ParseError("expected 'out <wire>'", lineno);
            }
            out = parse_int(toks[1], lineno);
            out_line = lineno;
        } else if (kw == "gate") {
            if (toks.size() < 3) {
                throw ParseError("expected 'gate <NAME> <in-wires> -> <out-wires>'", lineno);
            }
            auto kind = bool_gate_kind(toks[1]);
            if (!kind) {
                throw ParseError("unknown gate name '" + toks[1] + "'", lineno);
            }
            NetGate g{*kind, {}, {}, lineno};
            bool after_arrow = false;
            for (std::size_t k = 2; k < toks.size(); k++) {
                if (toks[k] == "->") {
                    if (after_arrow) {
                        throw ParseError("repeated '->'", lineno);
                    }
                    after_arrow = true;
                    continue;
                }
                (after_arrow ? g.outs : g.ins).push_back(parse_int(toks[k], lineno));
            }
            if (!after_arrow) {
                throw ParseError("gate is missing '->'", lineno);
            }
            std::size_t want_in = gate_kind_arity(*kind);
            bool outs_ok = *kind == BoolGateKind::Fanout ? g.outs.size() >= 1 : g.outs.size() == 1;
            if (g.ins.size() != want_in || !outs_ok) {
                throw ParseError("arity mismatch for " + toks[1] + ": takes " + std::to_string(want_in) +
                                     (*kind == BoolGateKind::Fanout ? " input and >= 1 outputs" : " inputs and 1 output"),
                                 lineno);
            }
            gates.push_back(std::move(g));
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno);
        }
    }
    if (!n) {
        throw ParseError("missing 'in <n>' line");
    }
    if (!out) {
        throw ParseError("missing 'out <wire>' line");
    }

    // Wire drivers: inputs, ancillas, then gate outputs.
    std::map<long long, std::optional<std::size_t>> driver;  // nullopt = primary source
    for (long long w = 1; w <= *n + ancillas; w++) {
        driver[w] = std::nullopt;
    }
    for (std::size_t g = 0; g < gates.size(); g++) {
        for (auto w : gates[g].outs) {
            if (driver.count(w)) {
                throw ParseError("wire " + std::to_string(w) + " is driven more than once", gates[g].line);
            }
            driver[w] = g;
        }
    }
    for (const auto &g : gates) {
        for (auto w : g.ins) {
            if (!driver.count(w)) {
                throw ParseError("wire " + std::to_string(w) + " is never driven", g.line);
            }
        }
    }
    if (!driver.count(*out)) {
        throw ParseError("output wire " + std::to_string(*out) + " is never driven", out_line);
    }

    // Topological order (Kahn); leftovers mean a cycle.
    std::vector<std::size_t> pending(gates.size(), 0);
    std::vector<std::vector<std::size_t>> consumers(gates.size());
    for (std::size_t g = 0; g < gates.size(); g++) {
        for (auto w : gates[g].ins) {
            if (auto d = driver[w]) {
                pending[g]++;
                consumers[*d].push_back(g);
            }
        }
    }
    std::vector<std::size_t> ready, order;
    for (std::size_t g = 0; g < gates.size(); g++) {
        if (pending[g] == 0) {
            ready.push_back(g);
        }
    }
    while (!ready.empty()) {
        // Smallest index first keeps the order stable for already-sorted files.
        auto it = std::min_element(ready.begin(), ready.end());
        std::size_t g = *it;
        ready.erase(it);
        order.push_back(g);
        for (auto c : consumers[g]) {
            if (--pending[c] == 0) {
                ready.push_back(c);
            }
        }
    }
    if (order.size() != gates.size()) {
        for (std::size_t g = 0; g < gates.size(); g++) {
            if (pending[g] != 0) {
                throw ParseError("cyclic wiring through gate " + gate_kind_name(gates[g].kind), gates[g].line);
            }
        }
    }

    BooleanCircuitBuilder b(static_cast<std::size_t>(*n));
    std::map<long long, std::size_t> wire;
    for (long long w = 1; w <= *n; w++) {
        wire[w] = b.input(static_cast<std::size_t>(w));
    }
    for (long long w = *n + 1; w <= *n + ancillas; w++) {
        wire[w] = b.constant(false);
    }
    for (auto g : order) {
        const auto &ng = gates[g];
        std::vector<std::size_t> ins;
        for (auto w : ng.ins) {
            ins.push_back(wire.at(w));
        }
        if (ng.kind == BoolGateKind::Fanout) {
            auto copies = b.fanout(ins[0], ng.outs.size());
            for (std::size_t k = 0; k < copies.size(); k++) {
                wire[ng.outs[k]] = copies[k];
            }
        } else {
            wire[ng.outs[0]] = b.add(ng.kind, ins);
        }
    }
    b.set_output(wire.at(*out));
    return b.build();
}

std::vector<std::size_t> parse_qubits(const std::vector<std::string> &toks, std::size_t begin, std::size_t count,
                                      std::size_t num_qubits, std::size_t line) {
    std::vector<std::size_t> out;
    for (std::size_t k = begin; k < begin + count; k++) {
        long long q = parse_int(toks[k], line);
        if (q < 1 || static_cast<std::size_t>(q) > num_qubits) {
            throw ParseError("qubit " + toks[k] + " out of range 1.." + std::to_string(num_qubits), line);
        }
        out.push_back(static_cast<std::size_t>(q - 1));
    }
    return out;
}

QuantumCircuit parse_quantum_netlist(const std::vector<std::string> &lines) {
    std::optional<std::size_t> num_qubits, num_inputs, output;
    std::vector<std::pair<std::vector<std::string>, std::size_t>> gate_lines;
    std::size_t lineno = 0;
    for (const auto &raw : lines) {
        lineno++;
        auto toks = tokenize(raw.substr(0, raw.find('#')));
        if (toks.empty()) {
            continue;
        }
        const auto &kw = toks[0];
        if (kw == "qubits" || kw == "in" || kw == "out") {
            if (toks.size() != 2) {
                throw ParseError("expected '" + kw + " <count>'", lineno);
            }
            long long v = parse_int(toks[1], lineno);
            if (v < 0 || (kw != "in" && v < 1)) {
                throw ParseError("invalid value for '" + kw + "'", lineno);
            }
            (kw == "qubits" ? num_qubits : kw == "in" ? num_inputs : output) = static_cast<std::size_t>(v);
        } else if (kw == "qgate" || kw == "ggate") {
            gate_lines.emplace_back(toks, lineno);
        } else {
            throw ParseError("unknown directive '" + kw + "'", lineno);
        }
    }
    if (!num_qubits) {
        throw ParseError("missing 'qubits <N>' line");
    }
    std::size_t nq = *num_qubits;
    std::size_t out_q = output.value_or(nq);
    if (out_q < 1 || out_q > nq) {
        throw ParseError("output qubit out of range");
    }
    if (num_inputs.value_or(nq) > nq) {
        throw ParseError("more input bits than qubits");
    }
    QuantumCircuit c(nq, num_inputs.value_or(nq), out_q - 1);
    for (const auto &[toks, line] : gate_lines) {
        try {
            if (toks[0] == "ggate") {
                if (toks.size() < 3) {
                    throw ParseError("expected 'ggate <first-mode> <entries>'", line);
                }
                long long first = parse_int(toks[1], line);
                std::size_t entries = toks.size() - 2;
                std::size_t side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries))));
                if (side * side != entries || side % 2 != 0 || side == 0) {
                    throw ParseError("ggate needs (2w)^2 generator entries", line);
                }
                GaussianGate g;
                if (first < 1) {
                    throw ParseError("mode numbers start at 1", line);
                }
                g.first_mode = static_cast<std::size_t>(first - 1);
                g.window = side / 2;
                for (std::size_t k = 2; k < toks.size(); k++) {
                    g.generator.push_back(parse_real(toks[k], line));
                }
                c.add_gaussian(std::move(g));
                continue;
            }
            if (toks.size() < 3) {
                throw ParseError("expected 'qgate <NAME> <targets>'", line);
            }
            const auto &name = toks[1];
            if (name == "MAT") {
                // targets until the entry count matches 4^k
                std::size_t rest = toks.size() - 2;
                std::optional<std::size_t> k;
                for (std::size_t t = 1; t <= 3; t++) {
                    if (t + (std::size_t{1} << (2 * t)) == rest) {
                        k = t;
                    }
                }
                if (!k) {
                    throw ParseError("MAT gate needs k targets followed by 4^k entries (k <= 3)", line);
                }
                auto targets = parse_qubits(toks, 2, *k, nq, line);
                std::size_t dim = std::size_t{1} << *k;
                std::vector<Complex> entries;
                for (std::size_t e = 2 + *k; e < toks.size(); e++) {
                    entries.push_back(parse_complex(toks[e], line));
                }
                c.add_matrix(std::move(targets), Matrix(dim, std::move(entries)));
                continue;
            }
            if (!is_table_gate(name)) {
                throw ParseError("unknown gate name '" + name + "'", line);
            }
            std::size_t arity = qubit_count_of_dimension(gate_table_matrix(name).dim);
            if (toks.size() - 2 != arity) {
                throw ParseError("arity mismatch: " + name + " takes " + std::to_string(arity) + " targets", line);
            }
            c.add(name, parse_qubits(toks, 2, arity, nq, line));
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            throw ParseError(e.what(), line);
        }
    }
    return c;
}

}  // namespace

Circuit parse_netlist(std::string_view text) {
    auto lines = split_lines(text);
    for (const auto &raw : lines) {
        auto toks = tokenize(raw.substr(0, raw.find('#')));
        if (!toks.empty() && toks[0] == "qubits") {
            return parse_quantum_netlist(lines);
        }
    }
    return parse_boolean_netlist(lines);
}

}  // namespace tcount
