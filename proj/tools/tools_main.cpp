/*
   Copyright 2026 modind contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modind/decomp.hpp"
#include "modind/serialize.hpp"

namespace {

constexpr std::uint64_t kOracleLimitCap = 20000000;

struct Args {
    std::string input;
    bool json = false;
    bool text = false;
    bool deep_verify = false;
    std::uint64_t seed = 0;
    std::uint64_t oracle_limit = 2000000;
};

void add_common(CLI::App* cmd, Args& a) {
    cmd->add_option("file", a.input, "instance JSON file")->required();
    cmd->add_flag("--json", a.json, "machine-readable JSON report");
    cmd->add_flag("--text", a.text, "plain-text report (default)");
    cmd->add_flag("--deep-verify", a.deep_verify,
                  "enumerate the represented group and verify the conjugation data");
    cmd->add_option("--seed", a.seed, "seed for the deterministic randomness stream");
    cmd->add_option("--oracle-limit", a.oracle_limit,
                    "size guard for the brute-force lattice comparison")
        ->check(CLI::Range(std::uint64_t{1}, kOracleLimitCap));
}

int run(const Args& a, const std::string& command) {
    auto in = modind::serialize::load_input(a.input);
    modind::decomp::Options opt;
    opt.seed = a.seed;
    opt.deep_verify = a.deep_verify;
    opt.oracle_limit = a.oracle_limit;
    opt.oracle = command == "oracle" ? modind::decomp::OracleMode::Require
                                     : modind::decomp::OracleMode::InRange;
    auto report = modind::decomp::decompose(in, opt);

    if (command == "verify") {
        if (a.json) {
            // Checklist only: reuse the full rendering but strip to the tail keys.
            modind::decomp::StructureReport slim;
            slim.tag = report.tag;
            slim.p = report.p;
            slim.d = report.d;
            slim.induced = report.induced;
            slim.checks = report.checks;
            slim.oracle_ran = report.oracle_ran;
            std::cout << modind::serialize::report_to_json(slim);
        } else {
            for (const auto& [name, ok] : report.checks)
                std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
            std::cout << (report.all_ok() ? "OK" : "FAILED") << "\n";
        }
    } else {
        std::cout << (a.json ? modind::serialize::report_to_json(report)
                             : modind::serialize::report_to_text(report));
    }
    return report.all_ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"submodule structure of induced modules over finite fields"};
    app.require_subcommand(1);

    Args args;
    auto* dec = app.add_subcommand("decompose", "full structure report");
    auto* ver = app.add_subcommand("verify", "verification checklist only");
    auto* ora = app.add_subcommand("oracle",
                                   "structure report with a required brute-force lattice comparison");
    for (auto* cmd : {dec, ver, ora}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);
    std::string command = app.get_subcommands().front()->get_name();

    try {
        return run(args, command);
    } catch (const modind::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const modind::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
