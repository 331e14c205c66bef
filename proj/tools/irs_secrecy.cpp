// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: link-level simulator for IRS-assisted downlink secrecy
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Runs a seeded sweep and writes one CSV row per (seed, method, set size, tau, UE).
// Exit codes: 0 success, 1 invalid configuration or I/O failure, 2 infeasible objective.

#include "irs/errors.hpp"
#include "irs/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char **argv)
{
    CLI::App app{"IRS permutation-switching secrecy simulator"};

    std::string config_path, output, seeds, tau, sizes, methods, delta;
    std::optional<double> r_min;
    bool quiet = false;
    app.add_option("--config", config_path, "Experiment file (key = value with [scenario]/[experiment] sections)");
    app.add_option("--output", output, "CSV output path");
    app.add_option("--seeds", seeds, "Seeds, e.g. 1..20");
    app.add_option("--tau", tau, "Dwell-time grid, e.g. 1..30");
    app.add_option("--sizes", sizes, "Permutation-set sizes, e.g. 5,10,20");
    app.add_option("--methods", methods, "Comma list of best_rate,uniform_irs,random");
    app.add_option("--delta", delta, "Eavesdropper scan time in time units, or 'auto' for the IRS count");
    app.add_option("--r-min", r_min, "Minimum average rate per UE in bit/s");
    app.add_flag("-q,--quiet", quiet, "Do not print the per-seed objective summary");
    CLI11_PARSE(app, argc, argv);

    try
    {
        std::string text;
        if (!config_path.empty())
        {
            std::ifstream in(config_path);
            if (!in)
                throw irs::IoError("cannot open config file " + config_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }

        // Flags override the file: appended as a trailing [experiment] section, later keys win
        std::string overrides;
        auto add = [&](const char *key, const std::string &value)
        {
            if (!value.empty())
                overrides += std::string(key) + " = " + value + "\n";
        };
        add("seeds", seeds);
        add("tau", tau);
        add("sizes", sizes);
        add("methods", methods);
        add("delta", delta);
        add("output", output);
        if (r_min)
            add("r_min", std::to_string(*r_min));
        if (!overrides.empty())
            text += "\n[experiment]\n" + overrides;

        const irs::ExperimentConfig cfg = irs::parse_config(text);

        const irs::ExperimentResult result = irs::run_experiment(cfg);
        irs::write_csv(result.rows, cfg.output_path);

        if (!quiet)
            for (const auto &o : result.objectives)
            {
                if (o.feasible)
                    std::cout << "seed " << o.seed << ": best " << irs::to_string(o.method) << " |P|=" << o.set_size
                              << " tau=" << o.tau << " min secrecy " << o.score << " bit/s\n";
                else
                    std::cout << "seed " << o.seed << ": infeasible\n";
            }
        std::cerr << result.rows.size() << " rows written to " << cfg.output_path;
        if (!result.skipped.empty())
            std::cerr << " (" << result.skipped.size() << " seeds skipped)";
        std::cerr << '\n';

        return result.any_infeasible() ? 2 : 0;
    }
    catch (const irs::ParseError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
    }
    catch (const irs::ValidationError &e)
    {
        std::cerr << "invalid configuration: " << e.what() << '\n';
    }
    catch (const irs::IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << '\n';
    }
    catch (const irs::SizeLimit &e)
    {
        std::cerr << "invalid configuration: " << e.what() << '\n';
    }
    return 1;
}
