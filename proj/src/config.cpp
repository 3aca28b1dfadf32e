#include "tbp/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace tbp {
namespace {

using nlohmann::json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known)
            throw std::invalid_argument("unknown key \"" + item.key() + "\" in " + where);
    }
}

PolicyKind kind_from_string(const std::string& s) {
    if (s == "LSA") return PolicyKind::LSA;
    if (s == "APT") return PolicyKind::APT;
    if (s == "UCBE") return PolicyKind::UCBE;
    if (s == "OptKG") return PolicyKind::OptKG;
    if (s == "Uniform") return PolicyKind::Uniform;
    throw std::invalid_argument("unknown policy kind \"" + s + "\"");
}

PolicyConfig policy_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("each policy must be a JSON object");
    check_keys(j, {"kind", "alpha", "epsilon", "exponent", "prior_a", "prior_b"},
               "policy");
    PolicyConfig p;
    p.kind = kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("alpha")) p.alpha = j.at("alpha").get<double>();
    if (j.contains("epsilon")) p.epsilon = j.at("epsilon").get<double>();
    if (j.contains("exponent")) p.exponent = j.at("exponent").get<int>();
    if (j.contains("prior_a")) p.prior_a = j.at("prior_a").get<double>();
    if (j.contains("prior_b")) p.prior_b = j.at("prior_b").get<double>();
    validate_policy(p);
    return p;
}

} // namespace

LoadedConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");
    check_keys(j,
               {"setup", "means", "threshold", "budgets", "runs", "seed", "threads",
                "policies", "alphas"},
               "config");

    try {
        const bool has_setup = j.contains("setup");
        const bool has_means = j.contains("means");
        if (has_setup == has_means)
            throw std::invalid_argument(
                "config must provide exactly one of \"setup\" and \"means\"");
        if (has_setup && j.contains("threshold"))
            throw std::invalid_argument(
                "\"threshold\" is only valid with explicit \"means\"");

        BanditInstance instance =
            has_setup ? make_setup(j.at("setup").get<int>())
                      : BanditInstance(j.at("means").get<std::vector<double>>(),
                                       j.value("threshold", 0.5));

        ExperimentConfig cfg{std::move(instance)};
        cfg.setup_id = has_setup ? j.at("setup").get<int>() : 0;

        if (!j.contains("budgets"))
            throw std::invalid_argument("config must list \"budgets\"");
        cfg.budgets = j.at("budgets").get<std::vector<long long>>();
        if (cfg.budgets.empty())
            throw std::invalid_argument("\"budgets\" must be non-empty");
        for (long long T : cfg.budgets)
            if (T < cfg.instance.num_arms())
                throw std::invalid_argument("every budget must cover one pull per arm");

        if (j.contains("policies")) {
            const json& pol = j.at("policies");
            if (!pol.is_array() || pol.empty())
                throw std::invalid_argument("\"policies\" must be a non-empty array");
            for (const auto& pj : pol) cfg.policies.push_back(policy_from_json(pj));
        } else {
            cfg.policies.push_back(PolicyConfig{});
        }

        cfg.runs = j.value("runs", static_cast<long long>(1000));
        if (cfg.runs < 1) throw std::invalid_argument("\"runs\" must be at least 1");
        cfg.threads = j.value("threads", 1);
        if (cfg.threads < 1) throw std::invalid_argument("\"threads\" must be at least 1");
        if (j.contains("alphas")) {
            cfg.alphas = j.at("alphas").get<std::vector<double>>();
            for (double a : cfg.alphas)
                if (!(a > 0.0))
                    throw std::invalid_argument("\"alphas\" entries must be positive");
        }

        LoadedConfig loaded{std::move(cfg)};
        if (j.contains("seed")) {
            const json& js = j.at("seed");
            if (!js.is_number_integer() ||
                (!js.is_number_unsigned() && js.get<long long>() < 0))
                throw std::invalid_argument("\"seed\" must be a non-negative integer");
            loaded.experiment.seed = js.get<std::uint64_t>();
            loaded.seed_set = true;
        }
        return loaded;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config field has wrong type: ") + e.what());
    }
}

LoadedConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

PolicyConfig parse_policy_spec(const std::string& spec) {
    std::string name = spec;
    std::vector<std::string> args;
    auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')')
            throw std::invalid_argument("malformed policy spec \"" + spec + "\"");
        name = spec.substr(0, open);
        std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        std::string cur;
        for (char ch : inner) {
            if (ch == ',') {
                args.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!inner.empty()) args.push_back(cur);
    }

    auto as_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument("bad number \"" + s + "\" in policy spec");
        return v;
    };

    PolicyConfig p;
    p.kind = kind_from_string(name);
    switch (p.kind) {
    case PolicyKind::LSA:
        if (args.size() > 1)
            throw std::invalid_argument("LSA takes at most one parameter (alpha)");
        if (args.size() == 1) p.alpha = as_double(args[0]);
        break;
    case PolicyKind::APT:
        if (args.size() > 1)
            throw std::invalid_argument("APT takes at most one parameter (epsilon)");
        if (args.size() == 1) p.epsilon = as_double(args[0]);
        break;
    case PolicyKind::UCBE:
        if (args.size() > 1)
            throw std::invalid_argument("UCBE takes at most one parameter (exponent)");
        if (args.size() == 1) {
            std::size_t used = 0;
            p.exponent = std::stoi(args[0], &used);
            if (used != args[0].size())
                throw std::invalid_argument("UCBE exponent must be an integer");
        }
        break;
    case PolicyKind::OptKG:
        if (args.size() != 0 && args.size() != 2)
            throw std::invalid_argument("OptKG takes zero or two parameters (a,b)");
        if (args.size() == 2) {
            p.prior_a = as_double(args[0]);
            p.prior_b = as_double(args[1]);
        }
        break;
    case PolicyKind::Uniform:
        if (!args.empty())
            throw std::invalid_argument("Uniform takes no parameters");
        break;
    }
    validate_policy(p);
    return p;
}

} // namespace tbp
