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

#include "tcount/cli.h"

#include <cmath>
#include <ostream>
#include <sstream>

#include "tcount/lowering.h"
#include "tcount/oracle.h"
#include "tcount/parsers.h"

namespace tcount {

namespace {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

std::string fmt(double x) {
    return format_significant(x, 12);
}

bool ends_with(const std::string &s, const std::string &tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

bool looks_like_dimacs(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos || line[k] == 'c' || line[k] == '#') {
            continue;
        }
        return line.compare(k, 5, "p cnf") == 0;
    }
    return false;
}

Circuit parse_input(const RunConfig &config, const std::string &text) {
    InputFormat f = config.format;
    if (f == InputFormat::Auto) {
        const std::string &path = config.input_path;
        if (ends_with(path, ".cnf") || ends_with(path, ".dimacs")) {
            f = InputFormat::Dimacs;
        } else if (ends_with(path, ".net")) {
            f = InputFormat::Netlist;
        } else {
            f = looks_like_dimacs(text) ? InputFormat::Dimacs : InputFormat::Netlist;
        }
    }
    if (f == InputFormat::Dimacs) {
        return parse_dimacs(text);
    }
    return parse_netlist(text);
}

struct Resolved {
    Circuit checker;
    std::size_t n;
    std::size_t n_max;
    Bits suffix;
};

Resolved resolve(const RunConfig &config, const std::string &text) {
    Circuit checker = parse_input(config, text);
    std::size_t inputs = checker_inputs(checker);
    std::size_t n = config.n.value_or(inputs);
    if (n != inputs) {
        throw UsageError("The checker has " + std::to_string(inputs) + " input bits; --n " + std::to_string(n) +
                         " does not match.");
    }
    std::size_t n_max = config.n_max.value_or(n);
    if (n_max < n) {
        throw UsageError("--n-max must be at least n = " + std::to_string(n) + ".");
    }
    Bits suffix;
    try {
        suffix = Bits::parse(config.suffix);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (suffix.size() > n) {
        throw UsageError("Suffix \"" + config.suffix + "\" is longer than n = " + std::to_string(n) + ".");
    }
    if (config.mode == CountMode::Exact && std::holds_alternative<QuantumCircuit>(checker)) {
        throw UsageError("--mode exact requires a Boolean checker.");
    }
    return {std::move(checker), n, n_max, std::move(suffix)};
}

CountEngine make_engine(const RunConfig &config) {
    EngineOptions o;
    o.strategy = config.strategy;
    o.order = config.order;
    o.mode = config.mode;
    return CountEngine(o);
}

void print_count(const RunConfig &config, const Resolved &r, const CountResult &c, std::ostream &out) {
    std::string chi = c.bond_dimension ? std::to_string(*c.bond_dimension) : "-";
    if (config.output == OutputFormat::Tsv) {
        out << "n\tsuffix\tcount\tstrategy\tmode\twidth\tcost\tchi\n";
        out << r.n << "\t" << r.suffix.str() << "\t" << c.count.str() << "\t" << strategy_name(c.strategy) << "\t"
            << mode_name(c.mode) << "\t" << fmt(c.width) << "\t" << fmt(c.cost) << "\t" << chi << "\n";
        return;
    }
    out << "#(x," << r.n << "," << r.suffix.str() << ") = " << c.count.str() << "\n";
    out << "strategy " << strategy_name(c.strategy) << "  mode " << mode_name(c.mode) << "  width " << fmt(c.width)
        << "  cost " << fmt(c.cost);
    if (c.bond_dimension) {
        out << "  chi " << chi;
    }
    out << "\n";
}

int do_solve(const RunConfig &config, const Resolved &r, std::ostream &out) {
    CountEngine engine = make_engine(config);
    SearchOptions opts;
    opts.paranoid = config.paranoid;
    SearchOutcome s = find(fixed_length_family(r.checker), r.n_max, engine, opts);
    std::string headline =
        s.found ? "SOLUTION " + s.solution.str() : "UNSAT up to n_max = " + std::to_string(r.n_max);
    if (config.output == OutputFormat::Tsv) {
        out << "# " << headline << "\n" << s.trace_tsv();
        return exit_code::ok;
    }
    out << headline << "\n";
    out << "queries: length " << s.length_queries << ", suffix " << s.suffix_queries << ", total "
        << s.total_queries() << "\n";
    out << s.trace_tsv();
    return exit_code::ok;
}

struct VerifyRow {
    std::string check;
    std::string expected;
    std::string actual;
    bool pass;
};

int do_verify(const RunConfig &config, const Resolved &r, std::ostream &out) {
    std::vector<VerifyRow> rows;
    CountEngine engine = make_engine(config);
    const auto *boolean = std::get_if<BooleanCircuit>(&r.checker);
    const auto *quantum = std::get_if<QuantumCircuit>(&r.checker);

    CheckerReport report = boolean ? verify_checker(lower_to_network<BigInt>(*boolean), 1u << 12, config.seed)
                                   : verify_checker(lower_to_network<Complex>(*quantum), 1u << 12, config.seed);
    rows.push_back({std::string("checker condition (") + (report.exhaustive ? "exhaustive" : "sampled") + ", " +
                        std::to_string(report.checked) + " inputs)",
                    "0 violations", std::to_string(report.violations.size()) + " violations", report.ok()});

    std::size_t depth = std::min<std::size_t>(r.n, 2);
    for (std::size_t len = 0; len <= depth; len++) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); v++) {
            Bits suffix = Bits::from_integer(v, len);
            CountQuery q{r.n, suffix, r.n_max};
            std::string label = "count n=" + std::to_string(r.n) + " suffix=" + suffix.str();
            CountResult c = engine.count(r.checker, q);
            if (boolean) {
                if (r.n > 24) {
                    rows.push_back({label, "skipped (n > 24)", c.count.str(), true});
                    continue;
                }
                BigInt expected = enumerate_count(*boolean, r.n, suffix);
                rows.push_back({label, expected.str(), c.count.str(), expected == c.count});
            } else {
                if (quantum->num_qubits() > DenseState::max_qubits) {
                    rows.push_back({label, "skipped (N > 12)", c.count.str(), true});
                    continue;
                }
                double p = dense_probability(*quantum, counter_input_product(r.n, suffix, quantum->num_qubits()));
                double scaled = std::ldexp(p, static_cast<int>(r.n - suffix.size()));
                double rounded = std::round(scaled);
                bool ok = std::abs(scaled - rounded) < 1e-6 && BigInt(rounded) == c.count;
                rows.push_back({label, fmt(scaled), c.count.str(), ok});
            }
        }
    }

    bool all = true;
    if (config.output == OutputFormat::Tsv) {
        out << "check\texpected\tengine\tresult\n";
    }
    for (const auto &row : rows) {
        all &= row.pass;
        if (config.output == OutputFormat::Tsv) {
            out << row.check << "\t" << row.expected << "\t" << row.actual << "\t" << (row.pass ? "PASS" : "FAIL")
                << "\n";
        } else {
            out << (row.pass ? "PASS  " : "FAIL  ") << row.check << ": expected " << row.expected << ", engine "
                << row.actual << "\n";
        }
    }
    if (config.output == OutputFormat::Human) {
        out << (all ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all ? exit_code::ok : exit_code::engine_error;
}

int do_simulate(const RunConfig &config, const Resolved &r, std::ostream &out) {
    CountEngine engine = make_engine(config);
    CountResult c = engine.probability(r.checker, CountQuery{r.n, r.suffix, r.n_max});
    double p = c.probability.value_or(0.0);
    if (config.output == OutputFormat::Tsv) {
        out << "n\tsuffix\tP\n" << r.n << "\t" << r.suffix.str() << "\t" << fmt(p) << "\n";
    } else {
        out << "P = " << fmt(p) << "\n";
    }
    return exit_code::ok;
}

int do_cost(const RunConfig &config, const Resolved &r, std::ostream &out) {
    CountEngine engine = make_engine(config);
    CostReport report = engine.cost(r.checker, CountQuery{r.n, r.suffix, r.n_max});
    if (config.output == OutputFormat::Human) {
        out << "steps " << report.rows.size() << "  width " << fmt(report.width) << "  cost "
            << fmt(report.total_cost) << "  peak " << fmt(report.peak_intermediate) << "\n";
    }
    out << report.tsv();
    return exit_code::ok;
}

}  // namespace

Subcommand parse_subcommand(const std::string &name) {
    if (name == "count") {
        return Subcommand::Count;
    }
    if (name == "solve") {
        return Subcommand::Solve;
    }
    if (name == "verify") {
        return Subcommand::Verify;
    }
    if (name == "simulate") {
        return Subcommand::Simulate;
    }
    if (name == "cost") {
        return Subcommand::Cost;
    }
    throw std::invalid_argument("Unknown subcommand \"" + name + "\".");
}

InputFormat parse_input_format(const std::string &name) {
    if (name == "auto") {
        return InputFormat::Auto;
    }
    if (name == "dimacs") {
        return InputFormat::Dimacs;
    }
    if (name == "netlist") {
        return InputFormat::Netlist;
    }
    throw std::invalid_argument("Unknown input format \"" + name + "\" (expected dimacs or netlist).");
}

OutputFormat parse_output_format(const std::string &name) {
    if (name == "human") {
        return OutputFormat::Human;
    }
    if (name == "tsv") {
        return OutputFormat::Tsv;
    }
    throw std::invalid_argument("Unknown output format \"" + name + "\" (expected human or tsv).");
}

CountMode parse_mode(const std::string &name) {
    if (name == "exact") {
        return CountMode::Exact;
    }
    if (name == "probability") {
        return CountMode::Probability;
    }
    throw std::invalid_argument("Unknown mode \"" + name + "\" (expected exact or probability).");
}

int run(const RunConfig &config, const std::string &input, std::ostream &out, std::ostream &err) {
    std::optional<Resolved> r;
    try {
        r = resolve(config, input);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return exit_code::usage_error;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::usage_error;
    }
    try {
        switch (config.subcommand) {
            case Subcommand::Count: {
                CountEngine engine = make_engine(config);
                print_count(config, *r, engine.count(r->checker, CountQuery{r->n, r->suffix, r->n_max}), out);
                return exit_code::ok;
            }
            case Subcommand::Solve:
                return do_solve(config, *r, out);
            case Subcommand::Verify:
                return do_verify(config, *r, out);
            case Subcommand::Simulate:
                return do_simulate(config, *r, out);
            case Subcommand::Cost:
                return do_cost(config, *r, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::engine_error;
    }
    return exit_code::engine_error;
}

}  // namespace tcount
