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

#include "irs/errors.hpp"
#include "irs/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace irs
{
    std::vector<std::uint64_t> ExperimentConfig::default_seeds()
    {
        std::vector<std::uint64_t> s(20);
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = i + 1;
        return s;
    }

    std::vector<std::size_t> ExperimentConfig::default_tau_grid()
    {
        std::vector<std::size_t> t(30);
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] = i + 1;
        return t;
    }

    void ExperimentConfig::validate() const
    {
        scenario.validate();
        if (seeds.empty() || tau_grid.empty() || set_sizes.empty() || methods.empty())
            throw ValidationError("seeds, tau, sizes and methods must all be non-empty");
        if (std::any_of(tau_grid.begin(), tau_grid.end(), [](std::size_t t)
                        { return t < 1; }))
            throw ValidationError("tau values must be at least 1");
        if (delta && *delta < 1)
            throw ValidationError("delta must be at least 1");
        if (!(r_min >= 0.0) || !std::isfinite(r_min))
            throw ValidationError("r_min must be a finite non-negative rate");
        const auto total = permutation_count(scenario.num_irs, scenario.num_ues);
        if (!total)
            throw ValidationError("too many permutations for this scenario");
        for (std::size_t s : set_sizes)
            if (s < 1 || s > *total)
                throw ValidationError("set size " + std::to_string(s) + " outside [1, " + std::to_string(*total) + "]");
        for (auto m : methods)
            if (m == SelectionMethod::explicit_list)
                throw ValidationError("explicit sets cannot be swept from a config");
    }

    double dbm_to_watt(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
                if (pos == std::string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }

        template <typename T>
        bool parse_number(std::string_view s, T &out)
        {
            s = trim(s);
            if (s.empty())
                return false;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                return false;
            if constexpr (std::is_floating_point_v<T>)
                return std::isfinite(out);
            return true;
        }
    }

    std::vector<std::uint64_t> parse_integer_list(std::string_view text)
    {
        std::vector<std::uint64_t> out;
        for (auto item : split(text, ','))
        {
            const auto dots = item.find("..");
            if (dots == std::string_view::npos)
            {
                std::uint64_t v = 0;
                if (!parse_number(item, v))
                    throw ValidationError("'" + std::string(item) + "' is not a non-negative integer");
                out.push_back(v);
                continue;
            }
            std::uint64_t lo = 0, hi = 0;
            if (!parse_number(item.substr(0, dots), lo) || !parse_number(item.substr(dots + 2), hi) || lo > hi)
                throw ValidationError("'" + std::string(item) + "' is not a valid range a..b");
            if (hi - lo >= 10'000'000)
                throw ValidationError("range '" + std::string(item) + "' is too long");
            for (std::uint64_t v = lo; v <= hi; ++v)
                out.push_back(v);
        }
        return out;
    }

    ExperimentConfig parse_config(std::string_view text)
    {
        ExperimentConfig cfg;
        auto &sc = cfg.scenario;

        std::size_t line_no = 0;
        std::string section;

        auto real = [&](std::string_view v)
        {
            double x = 0.0;
            if (!parse_number(v, x))
                throw ParseError("expected a number, got '" + std::string(v) + "'", line_no);
            return x;
        };
        auto count = [&](std::string_view v)
        {
            std::size_t x = 0;
            if (!parse_number(v, x))
                throw ParseError("expected a non-negative integer, got '" + std::string(v) + "'", line_no);
            return x;
        };
        auto integers = [&](std::string_view v)
        {
            try
            {
                return parse_integer_list(v);
            }
            catch (const ValidationError &e)
            {
                throw ParseError(e.what(), line_no);
            }
        };
        auto sizes = [&](std::string_view v)
        {
            std::vector<std::size_t> out;
            for (auto x : integers(v))
                out.push_back(static_cast<std::size_t>(x));
            return out;
        };
        auto boolean = [&](std::string_view v)
        {
            if (v == "true" || v == "yes" || v == "1")
                return true;
            if (v == "false" || v == "no" || v == "0")
                return false;
            throw ParseError("expected true or false, got '" + std::string(v) + "'", line_no);
        };

        using Setter = std::function<void(std::string_view)>;
        const std::map<std::string, std::map<std::string, Setter>> keys{
            {"scenario",
             {
                 {"ues", [&](auto v) { sc.num_ues = count(v); }},
                 {"irs", [&](auto v) { sc.num_irs = count(v); }},
                 {"m_bs", [&](auto v) { sc.m_bs = count(v); }},
                 {"m_ue", [&](auto v) { sc.m_ue = count(v); }},
                 {"m_mn", [&](auto v) { sc.m_mn = count(v); }},
                 {"irs_side", [&](auto v) { sc.irs_sides = sizes(v); }},
                 {"wavelength_mm", [&](auto v) { sc.wavelength = real(v) * 1e-3; }},
                 {"bandwidth_ghz", [&](auto v) { sc.bandwidth = real(v) * 1e9; }},
                 {"tx_power_dbm", [&](auto v) { sc.tx_power = dbm_to_watt(real(v)); }},
                 {"noise_psd_dbm_hz", [&](auto v) { sc.noise_psd = dbm_to_watt(real(v)); }},
                 {"q_weights", [&](auto v)
                  {
                      sc.q_weights.clear();
                      for (auto item : split(v, ','))
                          sc.q_weights.push_back(real(item));
                  }},
                 {"victim", [&](auto v)
                  {
                      const std::size_t k = count(v);
                      if (k == 0)
                          throw ParseError("victim is 1-based", line_no);
                      sc.victim = k - 1;
                  }},
                 {"room_size_m", [&](auto v) { sc.room_size = real(v); }},
                 {"mn_radius_m", [&](auto v) { sc.mn_radius = real(v); }},
                 {"allow_nonidentity_q", [&](auto v) { cfg.link.allow_nonidentity_q = boolean(v); }},
             }},
            {"experiment",
             {
                 {"seeds", [&](auto v) { cfg.seeds = integers(v); }},
                 {"tau", [&](auto v) { cfg.tau_grid = sizes(v); }},
                 {"sizes", [&](auto v) { cfg.set_sizes = sizes(v); }},
                 {"methods", [&](auto v)
                  {
                      cfg.methods.clear();
                      for (auto item : split(v, ','))
                      {
                          try
                          {
                              cfg.methods.push_back(parse_selection_method(item));
                          }
                          catch (const ValidationError &e)
                          {
                              throw ParseError(e.what(), line_no);
                          }
                      }
                  }},
                 {"delta", [&](auto v)
                  {
                      if (v == "auto")
                          cfg.delta.reset();
                      else
                          cfg.delta = count(v);
                  }},
                 {"r_min", [&](auto v) { cfg.r_min = real(v); }},
                 {"r_min_gbps", [&](auto v) { cfg.r_min = real(v) * 1e9; }},
                 {"output", [&](auto v) { cfg.output_path = std::string(v); }},
             }},
        };

        std::istringstream in{std::string(text)};
        std::string raw;
        while (std::getline(in, raw))
        {
            ++line_no;
            std::string_view line = raw;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            if (line.front() == '[')
            {
                if (line.back() != ']')
                    throw ParseError("unterminated section header", line_no);
                section = std::string(trim(line.substr(1, line.size() - 2)));
                if (!keys.contains(section))
                    throw ParseError("unknown section [" + section + "]", line_no);
                continue;
            }

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected 'key = value'", line_no);
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (section.empty())
                throw ParseError("key '" + key + "' appears before any section header", line_no);
            const auto &table = keys.at(section);
            const auto it = table.find(key);
            if (it == table.end())
                throw ParseError("unknown key '" + key + "' in [" + section + "]", line_no);
            if (value.empty())
                throw ParseError("missing value for '" + key + "'", line_no);
            it->second(value);
        }

        // A single side length applies to every IRS
        if (sc.irs_sides.size() == 1 && sc.num_irs > 1)
            sc.irs_sides.assign(sc.num_irs, sc.irs_sides.front());

        cfg.validate();
        return cfg;
    }

    ExperimentConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot open config file " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config(buf.str());
    }
}
