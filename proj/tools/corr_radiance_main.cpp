// Copyright 2026 The corr-radiance Authors
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

// corr-radiance: emits the data tables behind the radiance and photon
// statistics sweeps, and runs the oracle-equivalence suites.
//
// Exit codes: 0 success, 1 invalid arguments, 2 verification failure,
// 3 I/O error.

#include "corr_radiance/figures.hpp"
#include "corr_radiance/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kBadArgs = 1, kVerifyFailed = 2, kIoError = 3 };

int emit(const corr_radiance::Table &table, corr_radiance::OutputFormat format,
         const std::string &path) {
    std::ostringstream buffer;
    corr_radiance::write_table(table, format, buffer);
    if (path.empty() || path == "-") {
        std::cout << buffer.str() << std::flush;
        return std::cout ? kOk : kIoError;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kIoError;
    }
    out << buffer.str();
    out.close();
    if (!out) {
        std::cerr << "error: failed writing output file '" << path << "'\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace corr_radiance;

    CLI::App app{"Discord-induced superradiance and photon statistics of two atoms",
                 "corr-radiance"};
    app.require_subcommand(1);

    FigureConfig cfg;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;
    std::optional<double> tolerance_override;

    const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::Csv},
                                                      {"json", OutputFormat::Json}};
    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--kl", cfg.kl, "Dimensionless separation k*l (> 1)")
            ->capture_default_str();
        sub->add_option("--grid-d", cfg.grid_d, "Samples on the discord axis")
            ->capture_default_str();
        sub->add_option("--grid-b", cfg.grid_b, "Samples on the sin(beta) axis")
            ->capture_default_str();
        sub->add_option("--sin-beta", cfg.sin_beta, "Fixed sin(beta) for fig5/transition")
            ->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->default_str("csv");
        sub->add_option("--out", out_path, "Output file (default: stdout)");
    };

    struct Command {
        const char *name;
        const char *help;
        Table (*build)(const FigureConfig &);
    };
    const Command commands[] = {
        {"fig2", "Intensity over (D, sin beta)", &fig2_table},
        {"fig3", "Intensity versus D at sin beta = 1 and 0", &fig3_table},
        {"fig4", "g2(0) and photon statistics over (D, sin beta)", &fig4_table},
        {"fig5", "g2(0) versus D at fixed sin beta", &fig5_table},
        {"transition", "Photon-statistics transition point at fixed sin beta",
         &transition_table},
    };
    std::map<CLI::App *, const Command *> table_commands;
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        add_common(sub);
        table_commands[sub] = &c;
    }

    CLI::App *verify = app.add_subcommand("verify", "Run every oracle-equivalence suite");
    add_common(verify);
    verify->add_option("--tolerance-override", tolerance_override,
                       "Replace every suite tolerance (0 forces failures)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }

    try {
        for (const auto &[sub, command] : table_commands) {
            if (sub->parsed()) return emit(command->build(cfg), format, out_path);
        }
        VerifyOptions opts{cfg, tolerance_override};
        const auto results = run_verification(opts);
        const int rc = emit(verification_table(results, opts), format, out_path);
        if (rc != kOk) return rc;
        for (const auto &r : results) {
            if (!r.passed) std::cerr << "FAIL " << r.name << "\n";
        }
        return all_passed(results) ? kOk : kVerifyFailed;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }
}
