// Copyright 2026 The dgrading Authors
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

#include "lab/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace lab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T v{};
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw ConfigError("key '" + key + "': cannot parse '" + text + "' as a number");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& text) { return parse_number<int>(key, text); }

double parse_double(const std::string& key, const std::string& text) {
    const double v = parse_number<double>(key, text);
    if (!std::isfinite(v)) throw ConfigError("key '" + key + "': value must be finite");
    return v;
}

std::map<int, std::complex<double>> parse_hopping(const std::string& text) {
    std::map<int, std::complex<double>> out;
    if (trim(text).empty()) return out;
    for (const auto& entry : split(text, ',')) {
        const auto parts = split(entry, ':');
        if (parts.size() < 2 || parts.size() > 3) {
            throw ConfigError("key 'hopping': entry '" + entry + "' is not offset:re[:im]");
        }
        const int x = parse_int("hopping", parts[0]);
        const double re = parse_double("hopping", parts[1]);
        const double im = parts.size() == 3 ? parse_double("hopping", parts[2]) : 0.0;
        if (!out.emplace(x, std::complex<double>(re, im)).second) {
            throw ConfigError("key 'hopping': offset " + std::to_string(x) + " listed twice");
        }
    }
    return out;
}

TimeGrid parse_grid(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ConfigError("key 't_grid': expected start,stop,count");
    TimeGrid g{parse_double("t_grid", parts[0]), parse_double("t_grid", parts[1]), parse_int("t_grid", parts[2])};
    if (g.count < 1) throw ConfigError("key 't_grid': count must be positive");
    if (g.stop < g.start) throw ConfigError("key 't_grid': stop before start");
    return g;
}

void validate(const ExperimentConfig& c) {
    if (c.d < 2) throw ConfigError("key 'd': must be at least 2");
    if (c.L < 1) throw ConfigError("key 'L': must be at least 1");
    if (c.grid_n < 2) throw ConfigError("key 'grid_n': must be at least 2");
    if (c.cap < 1) throw ConfigError("key 'cap': must be positive");
    if (c.block_k < 1) throw ConfigError("key 'block_k': must be positive");
    if (c.separation < 1) throw ConfigError("key 'separation': must be positive");
    if (c.fit_stop <= c.fit_start) throw ConfigError("key 'fit_stop': must exceed fit_start");
    for (const auto& [x, v] : c.hopping) {
        const auto it = c.hopping.find(-x);
        const std::complex<double> mirror = it == c.hopping.end() ? 0.0 : it->second;
        if (std::abs(v - std::conj(mirror)) > 1e-12) {
            throw ConfigError("key 'hopping': h(" + std::to_string(-x) + ") must be the conjugate of h(" +
                              std::to_string(x) + ")");
        }
    }
}

}  // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) return {start};
    for (int i = 0; i < count; ++i) out.push_back(start + (stop - start) * i / (count - 1));
    return out;
}

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::logic_error("format_double: buffer too small");
    return std::string(buf, ptr);
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig c;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");

        if (key == "d") c.d = parse_int(key, value);
        else if (key == "L") c.L = parse_int(key, value);
        else if (key == "j_plus") c.j_plus = parse_int(key, value);
        else if (key == "j_minus") c.j_minus = parse_int(key, value);
        else if (key == "hopping") c.hopping = parse_hopping(value);
        else if (key == "grid_n") c.grid_n = parse_int(key, value);
        else if (key == "t_grid") c.t_grid = parse_grid(value);
        else if (key == "experiment") c.experiment = value;
        else if (key == "output") c.output = value;
        else if (key == "cap") c.cap = parse_number<std::int64_t>(key, value);
        else if (key == "block_k") c.block_k = parse_int(key, value);
        else if (key == "fit_start") c.fit_start = parse_double(key, value);
        else if (key == "fit_stop") c.fit_stop = parse_double(key, value);
        else if (key == "separation") c.separation = parse_int(key, value);
        else throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_canonical(const ExperimentConfig& c) {
    std::ostringstream os;
    std::string hop;
    for (const auto& [x, v] : c.hopping) {
        if (!hop.empty()) hop += ",";
        hop += std::to_string(x) + ":" + format_double(v.real()) + ":" + format_double(v.imag());
    }
    os << "L = " << c.L << "\n"
       << "block_k = " << c.block_k << "\n"
       << "cap = " << c.cap << "\n"
       << "d = " << c.d << "\n"
       << "experiment = " << c.experiment << "\n"
       << "fit_start = " << format_double(c.fit_start) << "\n"
       << "fit_stop = " << format_double(c.fit_stop) << "\n"
       << "grid_n = " << c.grid_n << "\n"
       << "hopping = " << hop << "\n"
       << "j_minus = " << c.j_minus << "\n"
       << "j_plus = " << c.j_plus << "\n"
       << "output = " << c.output << "\n"
       << "separation = " << c.separation << "\n"
       << "t_grid = " << format_double(c.t_grid.start) << "," << format_double(c.t_grid.stop) << ","
       << c.t_grid.count << "\n";
    return os.str();
}

}  // namespace lab
