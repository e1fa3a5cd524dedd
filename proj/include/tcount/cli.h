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

#ifndef TCOUNT_CLI_H
#define TCOUNT_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "tcount/counter.h"
#include "tcount/geometric.h"
#include "tcount/search.h"

namespace tcount {

enum class Subcommand { Count, Solve, Verify, Simulate, Cost };
enum class InputFormat { Auto, Dimacs, Netlist };
enum class OutputFormat { Human, Tsv };

Subcommand parse_subcommand(const std::string &name);
InputFormat parse_input_format(const std::string &name);
OutputFormat parse_output_format(const std::string &name);
CountMode parse_mode(const std::string &name);

struct RunConfig {
    Subcommand subcommand = Subcommand::Count;
    std::string input_path = "-";
    InputFormat format = InputFormat::Auto;
    Strategy strategy = Strategy::Auto;
    OrderHeuristic order = OrderHeuristic::Auto;
    std::optional<CountMode> mode;
    std::string suffix;
    std::optional<std::size_t> n;
    std::optional<std::size_t> n_max;
    bool paranoid = false;
    std::uint64_t seed = 1;
    OutputFormat output = OutputFormat::Human;
};

namespace exit_code {
constexpr int ok = 0;
constexpr int engine_error = 1;
constexpr int usage_error = 2;
}  // namespace exit_code

/// Executes one command on the input text. Reports go to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 on engine errors (or failed verification),
/// 2 on usage and parse errors.
int run(const RunConfig &config, const std::string &input, std::ostream &out, std::ostream &err);

}  // namespace tcount

#endif
