#include "apsa/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apsa {

namespace {

const char* const kKnownKeys[] = {
    "n_taps",     "k_nonzero",  "alpha",      "beta",       "gamma",
    "delta",      "snr_db",     "iterations", "runs",       "seed",
    "mu",         "delta0",     "lambda_za",  "lambda_rza", "eps_rza",
    "lambda_rl1", "delta_rl1",  "mu_lms",     "lms_baseline",
    "algorithms"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double get_double(const KeyValueMap& kv, const std::string& key) {
    const std::string& s = kv.at(key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for key '" +
                                    key + "': " + s);
    }
}

std::uint64_t get_uint(const KeyValueMap& kv, const std::string& key) {
    const std::string& s = kv.at(key);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw std::invalid_argument("config: bad integer value for key '" +
                                    key + "': " + s);
    return v;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

KeyValueMap default_config() {
    return {
        {"n_taps", "128"},        {"k_nonzero", "4"},
        {"alpha", "1.2"},         {"beta", "0"},
        {"gamma", "0.6"},         {"delta", "0"},
        {"snr_db", "5"},          {"iterations", "3000"},
        {"runs", "100"},          {"seed", "20140915"},
        {"mu", "0.1"},            {"delta0", "1e-06"},
        {"lambda_za", "0.0004"},  {"lambda_rza", "0.004"},
        {"eps_rza", "20"},        {"lambda_rl1", "0.0001"},
        {"delta_rl1", "0.01"},    {"mu_lms", "0.005"},
        {"lms_baseline", "0"},    {"algorithms", "vss,za,rza,rl1"},
    };
}

KeyValueMap preset_config(const std::string& name) {
    KeyValueMap kv = default_config();
    if (name == "fig3") {
        kv["k_nonzero"] = "4";
    } else if (name == "fig4") {
        kv["k_nonzero"] = "8";
    } else if (name == "fig5") {
        kv["k_nonzero"] = "12";
        kv["snr_db"] = "-5";
    } else if (name == "fig6") {
        kv["k_nonzero"] = "8";
    } else if (name == "fig7") {
        kv["k_nonzero"] = "8";
        kv["gamma"] = "1.2";
    } else if (name == "fig8") {
        kv["k_nonzero"] = "8";
        kv["alpha"] = "1.8";
        kv["gamma"] = "1.2";
    } else {
        throw std::invalid_argument("config: unknown preset '" + name + "'");
    }
    return kv;
}

std::vector<std::string> preset_names() {
    return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

KeyValueMap parse_config_text(const std::string& text) {
    KeyValueMap kv;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(
                "config: line " + std::to_string(line_no) +
                " is not key=value: " + line);
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

KeyValueMap load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_overrides(KeyValueMap& base,
                     const std::vector<std::string>& overrides) {
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: override is not key=value: " +
                                        ov);
        base[trim(ov.substr(0, eq))] = trim(ov.substr(eq + 1));
    }
}

ExperimentConfig build_experiment(const KeyValueMap& kv_in,
                                  KeyValueMap* resolved) {
    KeyValueMap kv = default_config();
    for (const auto& [k, v] : kv_in) {
        bool known = false;
        for (const char* key : kKnownKeys)
            if (k == key) { known = true; break; }
        if (!known)
            throw std::invalid_argument("config: unknown key '" + k + "'");
        kv[k] = v;
    }

    ExperimentConfig cfg;
    cfg.n_taps = static_cast<std::size_t>(get_uint(kv, "n_taps"));
    cfg.k_nonzero = static_cast<std::size_t>(get_uint(kv, "k_nonzero"));
    cfg.noise = {get_double(kv, "alpha"), get_double(kv, "beta"),
                 get_double(kv, "gamma"), get_double(kv, "delta")};
    cfg.snr_db = get_double(kv, "snr_db");
    cfg.n_iterations = static_cast<std::size_t>(get_uint(kv, "iterations"));
    cfg.n_runs = static_cast<std::size_t>(get_uint(kv, "runs"));
    cfg.master_seed = get_uint(kv, "seed");

    const double mu = get_double(kv, "mu");
    const double delta0 = get_double(kv, "delta0");
    FilterConfig base{mu, delta0, Penalty::none(), cfg.n_taps};

    for (const std::string& name : split_list(kv.at("algorithms"))) {
        AlgorithmSpec spec;
        spec.config = base;
        if (name == "vss") {
            spec.label = "VSS-APSA";
        } else if (name == "za") {
            spec.label = "ZA-VSS-APSA";
            spec.config.penalty = Penalty::za(get_double(kv, "lambda_za"));
        } else if (name == "rza") {
            spec.label = "RZA-VSS-APSA";
            spec.config.penalty = Penalty::rza(get_double(kv, "lambda_rza"),
                                               get_double(kv, "eps_rza"));
        } else if (name == "rl1") {
            spec.label = "RL1-VSS-APSA";
            spec.config.penalty = Penalty::rl1(get_double(kv, "lambda_rl1"),
                                               get_double(kv, "delta_rl1"));
        } else {
            throw std::invalid_argument(
                "config: unknown algorithm '" + name +
                "' in key 'algorithms' (expected vss,za,rza,rl1)");
        }
        cfg.algorithms.push_back(std::move(spec));
    }
    if (get_uint(kv, "lms_baseline") != 0) {
        AlgorithmSpec lms;
        lms.label = "LMS";
        lms.is_lms = true;
        lms.config = base;
        lms.config.mu = get_double(kv, "mu_lms");
        cfg.algorithms.push_back(std::move(lms));
    }

    validate(cfg);
    if (resolved) *resolved = kv;
    return cfg;
}

bool operator==(const Penalty& a, const Penalty& b) {
    return a.kind == b.kind && a.lambda == b.lambda && a.eps == b.eps &&
           a.delta == b.delta;
}
bool operator==(const FilterConfig& a, const FilterConfig& b) {
    return a.mu == b.mu && a.delta0 == b.delta0 && a.penalty == b.penalty &&
           a.n_taps == b.n_taps;
}
bool operator==(const AlgorithmSpec& a, const AlgorithmSpec& b) {
    return a.label == b.label && a.config == b.config && a.is_lms == b.is_lms;
}
bool operator==(const StableParams& a, const StableParams& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
           a.delta == b.delta;
}
bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
    return a.n_taps == b.n_taps && a.k_nonzero == b.k_nonzero &&
           a.noise == b.noise && a.snr_db == b.snr_db &&
           a.n_iterations == b.n_iterations && a.n_runs == b.n_runs &&
           a.master_seed == b.master_seed && a.algorithms == b.algorithms;
}

} // namespace apsa
