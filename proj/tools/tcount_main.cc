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

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "tcount/cli.h"

namespace {

void add_common(CLI::App *cmd, std::string &input, std::string &format, std::string &strategy, std::string &order,
                std::string &mode, std::string &output) {
    cmd->add_option("input", input, "Checker file (DIMACS CNF or netlist), or - for standard input")->required();
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "netlist"}));
    cmd->add_option("--strategy", strategy, "Contraction strategy")
        ->check(CLI::IsMember({"geometric", "stabiliser", "stabilizer", "gaussian", "concat", "auto"}));
    cmd->add_option("--order", order, "Contraction order heuristic")->check(CLI::IsMember({"tree", "minfill", "sweep", "auto"}));
    cmd->add_option("--mode", mode, "Counting mode")->check(CLI::IsMember({"exact", "probability"}));
    cmd->add_option("--output", output, "Report format")->check(CLI::IsMember({"human", "tsv"}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"tcount: counting and searching with tensor counters"};
    app.require_subcommand(1);

    std::string input = "-", format = "auto", strategy = "auto", order = "auto", mode, output = "human", suffix;
    std::size_t n = 0, n_max = 0;
    std::uint64_t seed = 1;
    bool paranoid = false;

    const char *names[] = {"count", "solve", "verify", "simulate", "cost"};
    const char *help[] = {
        "Count the solutions of length n ending in a suffix",
        "Find a shortest solution by counting",
        "Compare engine counts against brute-force oracles",
        "Print the counter's acceptance probability",
        "Print the contraction order and its cost",
    };
    std::vector<CLI::App *> cmds;
    std::vector<CLI::Option *> n_opts, n_max_opts;
    for (int k = 0; k < 5; k++) {
        CLI::App *cmd = app.add_subcommand(names[k], help[k]);
        add_common(cmd, input, format, strategy, order, mode, output);
        cmd->add_option("--suffix", suffix, "Fixed low bits, most significant first");
        n_opts.push_back(cmd->add_option("--n", n, "Solution length"));
        n_max_opts.push_back(cmd->add_option("--n-max", n_max, "Largest solution length"));
        cmd->add_flag("--paranoid", paranoid, "Query inferred bits too");
        cmd->add_option("--seed", seed, "Seed for sampled checks");
        cmds.push_back(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : tcount::exit_code::usage_error;
    }

    tcount::RunConfig config;
    for (std::size_t k = 0; k < cmds.size(); k++) {
        if (cmds[k]->parsed()) {
            config.subcommand = tcount::parse_subcommand(names[k]);
            if (n_opts[k]->count() > 0) {
                config.n = n;
            }
            if (n_max_opts[k]->count() > 0) {
                config.n_max = n_max;
            }
        }
    }
    config.input_path = input;
    config.format = tcount::parse_input_format(format);
    config.strategy = tcount::parse_strategy(strategy);
    config.order = tcount::parse_order_heuristic(order);
    if (!mode.empty()) {
        config.mode = tcount::parse_mode(mode);
    }
    config.suffix = suffix;
    config.paranoid = paranoid;
    config.seed = seed;
    config.output = tcount::parse_output_format(output);

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(input, std::ios::binary);
        if (!f) {
            std::cerr << "usage error: cannot read " << input << "\n";
            return tcount::exit_code::usage_error;
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return tcount::run(config, text, std::cout, std::cerr);
}
