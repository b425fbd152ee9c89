#pragma once

// Pipeline configuration: per-rule probabilities, corpus composition and
// split controls, master seed. On disk it is a flat `key = value` file with
// '#' comments; see data/config/default.conf for the schema.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turgec/rules.hpp"

namespace turgec {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    std::map<RuleId, double> probabilities;  // p = 0 means the rule never fires
    double error_free_fraction = 0.5;
    std::array<double, 3> split_ratios = {0.70, 0.15, 0.15};
    uint64_t seed = 42;
    std::set<RuleId> enabled_rules;
    int max_passes = 8;  // corruption re-draws before accepting a zero-edit pass
    std::string lexicon_dir;

    static PipelineConfig defaults() {
        PipelineConfig c;
        for (const auto& r : rule_table()) {
            c.probabilities[r.id] = r.default_p;
            c.enabled_rules.insert(r.id);
        }
        return c;
    }

    double probability(RuleId id) const {
        if (!enabled_rules.count(id)) return 0.0;
        auto it = probabilities.find(id);
        return it == probabilities.end() ? rule_info(id).default_p : it->second;
    }

    void validate() const {
        double sum = split_ratios[0] + split_ratios[1] + split_ratios[2];
        if (sum < 1.0 - 1e-9 || sum > 1.0 + 1e-9)
            throw ConfigError("split ratios must sum to 1");
        for (double r : split_ratios)
            if (r < 0.0) throw ConfigError("split ratios must be non-negative");
        if (error_free_fraction < 0.0 || error_free_fraction > 1.0)
            throw ConfigError("error_free_fraction must be in [0,1]");
        for (const auto& [id, p] : probabilities)
            if (p < 0.0 || p > 1.0)
                throw ConfigError(std::string("probability out of [0,1] for ") +
                                  std::string(rule_name(id)));
        if (max_passes < 1) throw ConfigError("max_passes must be >= 1");
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline PipelineConfig parse_config(std::string_view text) {
    PipelineConfig cfg = PipelineConfig::defaults();
    size_t pos = 0;
    size_t line_no = 0;
    bool enabled_seen = false;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        bool last = (eol == std::string_view::npos);
        pos = last ? text.size() + 1 : eol + 1;
        ++line_no;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') {
            if (last) break;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        std::string key = detail::trim(std::string_view(line).substr(0, eq));
        std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        auto as_double = [&](const std::string& v) {
            try {
                size_t used = 0;
                double d = std::stod(v, &used);
                if (used != v.size()) throw std::invalid_argument(v);
                return d;
            } catch (const std::exception&) {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": expected a number, got '" + v + "'");
            }
        };
        if (key == "seed") {
            try {
                cfg.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": bad seed");
            }
        } else if (key == "error_free_fraction") {
            cfg.error_free_fraction = as_double(value);
        } else if (key == "split.train") {
            cfg.split_ratios[0] = as_double(value);
        } else if (key == "split.val") {
            cfg.split_ratios[1] = as_double(value);
        } else if (key == "split.test") {
            cfg.split_ratios[2] = as_double(value);
        } else if (key == "max_passes") {
            cfg.max_passes = static_cast<int>(as_double(value));
        } else if (key == "lexicon_dir") {
            cfg.lexicon_dir = value;
        } else if (key == "enabled") {
            if (!enabled_seen) {
                cfg.enabled_rules.clear();
                enabled_seen = true;
            }
            if (value == "all") {
                for (const auto& r : rule_table()) cfg.enabled_rules.insert(r.id);
            } else {
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    item = detail::trim(item);
                    if (item.empty()) continue;
                    auto id = rule_from_name(item);
                    if (!id)
                        throw ConfigError("config line " + std::to_string(line_no) +
                                          ": unknown rule '" + item + "'");
                    cfg.enabled_rules.insert(*id);
                }
            }
        } else if (key.rfind("p.", 0) == 0) {
            auto id = rule_from_name(std::string_view(key).substr(2));
            if (!id)
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": unknown rule '" + key.substr(2) + "'");
            cfg.probabilities[*id] = as_double(value);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
        if (last) break;
    }
    cfg.validate();
    return cfg;
}

// Stable digest of the effective configuration, for reports.
inline std::string config_digest(const PipelineConfig& cfg) {
    std::ostringstream os;
    os << "seed=" << cfg.seed << ";eff=" << cfg.error_free_fraction
       << ";split=" << cfg.split_ratios[0] << "," << cfg.split_ratios[1] << ","
       << cfg.split_ratios[2] << ";max_passes=" << cfg.max_passes << ";";
    for (const auto& r : rule_table()) {
        os << rule_name(r.id) << "="
           << (cfg.enabled_rules.count(r.id) ? cfg.probability(r.id) : -1.0)
           << ";";
    }
    std::string canon = os.str();
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hex[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace turgec
