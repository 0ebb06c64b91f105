#pragma once

// Runtime configuration: tolerances, the k-grid, output format and thread
// count.  Defaults reproduce the reference settings (grid 0.1..150 step 0.1,
// |lambda| tolerance 1e-6).  Config files are plain key=value lines.

#include "common.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <thread>

namespace braidforge {

struct Config {
    double tol = 1e-6;
    double res_tol = 1e-10;
    double float_tol = 1e-8;
    double k_min = 0.1, k_max = 150.0, k_step = 0.1;
    std::string format = "json"; // json | table
    int threads = 0;             // 0 = hardware concurrency

    static Config from_env() {
        Config c;
        if (const char* t = std::getenv("BRAIDFORGE_THREADS")) {
            try {
                c.threads = std::stoi(t);
            } catch (const std::exception&) {
                throw domain_error("BRAIDFORGE_THREADS: not an integer");
            }
        }
        return c;
    }

    int effective_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? int(hw) : 1;
    }

    void apply_kv(const std::string& key, const std::string& value) {
        try {
            if (key == "tol") tol = std::stod(value);
            else if (key == "res_tol") res_tol = std::stod(value);
            else if (key == "float_tol") float_tol = std::stod(value);
            else if (key == "k_min") k_min = std::stod(value);
            else if (key == "k_max") k_max = std::stod(value);
            else if (key == "k_step") k_step = std::stod(value);
            else if (key == "format") format = value;
            else if (key == "threads") threads = std::stoi(value);
            else throw domain_error("config: unknown key '" + key + "'");
        } catch (const domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw domain_error("config: bad value for '" + key + "'");
        }
        if (format != "json" && format != "table")
            throw domain_error("config: format must be json or table");
    }

    void load_file(const std::string& path) {
        std::ifstream is(path);
        if (!is) throw domain_error("config: cannot open " + path);
        std::string line;
        while (std::getline(is, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            size_t eq = line.find('=');
            if (eq == std::string::npos) {
                bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
                if (!blank) throw domain_error("config: bad line '" + line + "'");
                continue;
            }
            auto trim = [](std::string s) {
                size_t a = s.find_first_not_of(" \t\r");
                size_t b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
};

} // namespace braidforge
