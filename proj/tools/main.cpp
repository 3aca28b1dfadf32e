#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tbp/config.hpp"
#include "tbp/csv.hpp"

namespace {

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!out) throw std::runtime_error("failed writing output file: " + out_path);
}

std::uint64_t parse_seed_env(const char* text) {
    std::string s(text);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != s.size() || s.find('-') != std::string::npos)
        throw std::invalid_argument("TBP_SEED must be an unsigned integer");
    return v;
}

// Comma-split policy tokens are rejoined until parentheses balance, so
// "OptKG(1,1)" survives the list delimiter.
std::vector<std::string> merge_policy_tokens(const std::vector<std::string>& raw) {
    std::vector<std::string> specs;
    std::string pending;
    for (const std::string& tok : raw) {
        pending = pending.empty() ? tok : pending + "," + tok;
        auto opens = std::count(pending.begin(), pending.end(), '(');
        auto closes = std::count(pending.begin(), pending.end(), ')');
        if (opens <= closes) {
            specs.push_back(pending);
            pending.clear();
        }
    }
    if (!pending.empty())
        throw std::invalid_argument("unbalanced parentheses in policy list");
    return specs;
}

// Options shared by the experiment-shaped subcommands.
struct ExperimentOpts {
    std::string config_path;
    int setup = 0;
    std::vector<double> means;
    double threshold = 0.5;
    std::vector<long long> budgets;
    std::vector<std::string> policies;
    long long runs = -1;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out_path;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* runs_opt = nullptr;
    CLI::Option* threads_opt = nullptr;
    CLI::Option* threshold_opt = nullptr;
};

void add_experiment_options(CLI::App* cmd, ExperimentOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment description");
    cmd->add_option("--setup", o.setup, "benchmark setup id (1..6)")
        ->check(CLI::Range(1, 6));
    cmd->add_option("--means", o.means, "explicit arm means")->delimiter(',');
    o.threshold_opt = cmd->add_option("--threshold", o.threshold,
                                      "decision threshold for explicit means");
    cmd->add_option("--budgets", o.budgets, "sample budgets")->delimiter(',');
    cmd->add_option("--policies", o.policies,
                    "policy specs, e.g. LSA,APT(0.05),UCBE(0),OptKG(1,1),Uniform")
        ->delimiter(',');
    o.seed_opt = cmd->add_option("--seed", o.seed, "master seed");
    o.runs_opt = cmd->add_option("--runs", o.runs, "independent runs");
    o.threads_opt = cmd->add_option("--threads", o.threads, "worker threads");
    cmd->add_option("--out", o.out_path, "output file (default: stdout)");
}

// Precedence for the seed: --seed flag, then the config file, then TBP_SEED,
// then 1. Everything else: flag over config over default.
tbp::ExperimentConfig build_experiment(const ExperimentOpts& o) {
    std::optional<tbp::ExperimentConfig> cfg;
    bool seed_from_file = false;
    if (!o.config_path.empty()) {
        tbp::LoadedConfig loaded = tbp::load_config_file(o.config_path);
        seed_from_file = loaded.seed_set;
        cfg = std::move(loaded.experiment);
        if (o.setup != 0 || !o.means.empty())
            throw std::invalid_argument("--setup/--means cannot be combined with --config");
    } else {
        if ((o.setup != 0) == (!o.means.empty()))
            throw std::invalid_argument("provide exactly one of --config, --setup, --means");
        tbp::BanditInstance instance =
            o.setup != 0 ? tbp::make_setup(o.setup)
                         : tbp::BanditInstance(o.means, o.threshold);
        if (o.setup != 0 && o.threshold_opt->count() > 0)
            throw std::invalid_argument("--threshold is only valid with --means");
        cfg = tbp::ExperimentConfig{std::move(instance)};
        cfg->setup_id = o.setup;
        cfg->policies.push_back(tbp::PolicyConfig{});
    }

    if (!o.budgets.empty()) cfg->budgets = o.budgets;
    if (cfg->budgets.empty())
        throw std::invalid_argument("no budgets given (use --budgets or the config file)");
    if (!o.policies.empty()) {
        cfg->policies.clear();
        for (const auto& spec : merge_policy_tokens(o.policies))
            cfg->policies.push_back(tbp::parse_policy_spec(spec));
    }
    if (o.runs_opt->count() > 0) cfg->runs = o.runs;
    if (o.threads_opt->count() > 0) cfg->threads = o.threads;

    if (o.seed_opt->count() > 0) {
        cfg->seed = o.seed;
    } else if (!seed_from_file) {
        if (const char* env = std::getenv("TBP_SEED")) cfg->seed = parse_seed_env(env);
    }
    return *std::move(cfg);
}

std::vector<double> gaps_for_oracle(const std::vector<double>& gaps, int setup) {
    if (gaps.empty() == (setup == 0))
        throw std::invalid_argument("provide exactly one of --gaps and --setup");
    if (!gaps.empty()) return gaps;
    return tbp::make_setup(setup).gaps();
}

int cmd_run(const ExperimentOpts& o) {
    tbp::ExperimentConfig cfg = build_experiment(o);
    tbp::RegretSummary summary = tbp::run_experiment(cfg);
    write_output(o.out_path, tbp::run_csv(cfg, summary));
    return 0;
}

int cmd_ttest(const ExperimentOpts& o, std::size_t baseline) {
    tbp::ExperimentConfig cfg = build_experiment(o);
    tbp::RegretSummary summary = tbp::run_experiment(cfg);
    tbp::PairwiseComparison cmp = tbp::compare_policies(summary, baseline);
    write_output(o.out_path, tbp::ttest_csv(cfg, summary, cmp));
    return 0;
}

int cmd_sweep_alpha(const ExperimentOpts& o, std::vector<double> alphas) {
    tbp::ExperimentConfig cfg = build_experiment(o);
    if (alphas.empty()) alphas = cfg.alphas;
    if (alphas.empty())
        throw std::invalid_argument("no alphas given (use --alphas or the config file)");
    cfg.policies.clear();
    for (double a : alphas) {
        tbp::PolicyConfig p;
        p.alpha = a;
        cfg.policies.push_back(p);
    }
    tbp::RegretSummary summary = tbp::run_experiment(cfg);
    write_output(o.out_path, tbp::sweep_csv(cfg, summary));
    return 0;
}

int cmd_hard_instance(int arms, std::vector<long long> budgets, long long runs,
                      std::uint64_t seed, int threads, const std::string& out_path) {
    std::string out;
    bool header = true;
    for (auto which : {tbp::HardInstance::I1, tbp::HardInstance::I2}) {
        tbp::ExperimentConfig cfg{tbp::make_hard_instance(arms, which)};
        cfg.budgets = budgets;
        cfg.policies.push_back(tbp::PolicyConfig{});
        tbp::PolicyConfig uniform;
        uniform.kind = tbp::PolicyKind::Uniform;
        cfg.policies.push_back(uniform);
        cfg.runs = runs;
        cfg.seed = seed;
        cfg.threads = threads;
        tbp::RegretSummary summary = tbp::run_experiment(cfg);
        out += tbp::hard_instance_csv(which == tbp::HardInstance::I1 ? "I1" : "I2",
                                      cfg, summary, header);
        header = false;
    }
    write_output(out_path, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thresholding bandit experiments and allocation oracles"};
    app.require_subcommand(1);

    ExperimentOpts run_opts;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate policies and report regret");
    add_experiment_options(run_cmd, run_opts);

    CLI::App* setups_cmd = app.add_subcommand("setups", "print the benchmark instances");
    std::string setups_out;
    setups_cmd->add_option("--out", setups_out, "output file (default: stdout)");

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "offline allocation solutions and bounds");
    std::vector<double> oracle_gaps;
    int oracle_setup = 0;
    double oracle_budget = 0.0;
    double oracle_c = 2.0;
    double oracle_alpha = 0.0;
    std::string oracle_out;
    oracle_cmd->add_option("--gaps", oracle_gaps, "arm gaps in (0, 1]")->delimiter(',');
    oracle_cmd->add_option("--setup", oracle_setup, "take gaps from a benchmark setup")
        ->check(CLI::Range(1, 6));
    oracle_cmd->add_option("--budget", oracle_budget, "sample budget")->required();
    oracle_cmd->add_option("--c", oracle_c, "objective coefficient (default 2)");
    CLI::Option* alpha_opt = oracle_cmd->add_option(
        "--alpha", oracle_alpha, "emit the per-arm profile and regret bound instead");
    oracle_cmd->add_option("--out", oracle_out, "output file (default: stdout)");

    CLI::App* vclb_cmd =
        app.add_subcommand("vclb", "confidence band failure rate, simulated");
    tbp::VclbConfig vclb_cfg;
    std::string vclb_out;
    CLI::Option* vclb_seed_opt =
        vclb_cmd->add_option("--seed", vclb_cfg.seed, "master seed");
    vclb_cmd->add_option("--horizon", vclb_cfg.horizon, "number of samples per trial");
    vclb_cmd->add_option("--a", vclb_cfg.a, "band parameter a")->required();
    vclb_cmd->add_option("--b", vclb_cfg.b, "band parameter b")->required();
    vclb_cmd->add_option("--mu", vclb_cfg.mu, "Bernoulli mean");
    vclb_cmd->add_option("--trials", vclb_cfg.trials, "Monte-Carlo trials");
    vclb_cmd->add_option("--out", vclb_out, "output file (default: stdout)");

    ExperimentOpts ttest_opts;
    std::size_t baseline = 0;
    CLI::App* ttest_cmd =
        app.add_subcommand("ttest", "paired t-tests against a baseline policy");
    add_experiment_options(ttest_cmd, ttest_opts);
    ttest_cmd->add_option("--baseline", baseline, "baseline policy index (default 0)");

    ExperimentOpts sweep_opts;
    std::vector<double> sweep_alphas;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep-alpha", "LSA regret across alpha values");
    add_experiment_options(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--alphas", sweep_alphas, "alpha values")->delimiter(',');

    CLI::App* hard_cmd =
        app.add_subcommand("hard-instance", "LSA vs Uniform on the two-sided family");
    int hard_arms = 20;
    std::vector<long long> hard_budgets{7600};
    long long hard_runs = 1000;
    std::uint64_t hard_seed = 1;
    int hard_threads = 1;
    std::string hard_out;
    hard_cmd->add_option("--arms", hard_arms, "number of arms (>= 20)");
    hard_cmd->add_option("--budgets", hard_budgets, "sample budgets")->delimiter(',');
    hard_cmd->add_option("--runs", hard_runs, "independent runs");
    CLI::Option* hard_seed_opt = hard_cmd->add_option("--seed", hard_seed, "master seed");
    hard_cmd->add_option("--threads", hard_threads, "worker threads");
    hard_cmd->add_option("--out", hard_out, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run_cmd)) return cmd_run(run_opts);
        if (app.got_subcommand(setups_cmd)) {
            write_output(setups_out, tbp::setups_csv());
            return 0;
        }
        if (app.got_subcommand(oracle_cmd)) {
            std::vector<double> gaps = gaps_for_oracle(oracle_gaps, oracle_setup);
            if (alpha_opt->count() > 0) {
                if (oracle_alpha > 8.0)
                    std::cerr << "warning: alpha > 8 is outside the guaranteed range; "
                                 "proceeding anyway\n";
                tbp::LambdaProfile prof =
                    tbp::lambda_profile(gaps, oracle_budget, oracle_alpha);
                double upper = tbp::regret_upper_bound(gaps, oracle_budget, oracle_alpha);
                write_output(oracle_out, tbp::profile_csv(gaps, prof, upper));
            } else {
                tbp::AllocationSolution sol =
                    tbp::optimal_allocation(gaps, oracle_budget, oracle_c);
                write_output(oracle_out, tbp::allocation_csv(gaps, sol));
            }
            return 0;
        }
        if (app.got_subcommand(vclb_cmd)) {
            if (vclb_seed_opt->count() == 0)
                if (const char* env = std::getenv("TBP_SEED"))
                    vclb_cfg.seed = parse_seed_env(env);
            tbp::VclbOutcome outcome = tbp::vclb_violation_rate(vclb_cfg);
            write_output(vclb_out, tbp::vclb_csv(vclb_cfg, outcome));
            return 0;
        }
        if (app.got_subcommand(ttest_cmd)) return cmd_ttest(ttest_opts, baseline);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep_alpha(sweep_opts, sweep_alphas);
        if (app.got_subcommand(hard_cmd)) {
            if (hard_seed_opt->count() == 0)
                if (const char* env = std::getenv("TBP_SEED"))
                    hard_seed = parse_seed_env(env);
            return cmd_hard_instance(hard_arms, hard_budgets, hard_runs, hard_seed,
                                     hard_threads, hard_out);
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
