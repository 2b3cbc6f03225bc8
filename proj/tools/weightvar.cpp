// Command-line front end for the weight-variety engine.
//
//   weightvar betti --type A --rank 2 --lambda 1,1 --mu 1/3,1/5

#include <iostream>

#include <CLI11.hpp>

#include <weightvar/cli.hpp>

namespace {

std::vector<weightvar::rational> parse_list(const std::string& text, const char* flag) {
    try {
        return weightvar::parse_rational_list(text);
    } catch (const weightvar::error& e) {
        throw weightvar::error(weightvar::errc::invalid_config, std::string(flag) + ": " + e.message());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology of weight varieties"};
    app.require_subcommand(1, 1);

    std::string type = "A", lambda, mu, cache_dir, format = "json";
    int rank = 1, threads = 1, max_rank = weightvar::default_max_rank, dmax = -1;
    std::uint64_t seed = 1;

    for (const auto& name : weightvar::commands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--type", type, "root system type A-G")->required();
        sub->add_option("--rank", rank, "rank")->required();
        sub->add_option("--lambda", lambda, "positive orbit coefficients c_1,...,c_l");
        sub->add_option("--mu", mu, "level in fundamental-weight coordinates");
        sub->add_option("--dmax", dmax, "largest half degree");
        sub->add_option("--format", format, "json, csv or latex");
        sub->add_option("--cache-dir", cache_dir, "restriction-table cache directory");
        sub->add_option("--threads", threads, "worker threads");
        sub->add_option("--seed", seed, "seed for randomized checks");
        sub->add_option("--max-rank", max_rank, "rank guard");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << weightvar::error_json("InvalidConfig", e.what());
        return 3;
    }

    weightvar::job_config config;
    try {
        config.command = app.get_subcommands().front()->get_name();
        if (type.size() != 1)
            throw weightvar::error(weightvar::errc::invalid_config, "--type must be a single letter");
        config.type_label = type[0];
        config.rank = rank;
        if (!lambda.empty())
            config.lambda = parse_list(lambda, "--lambda");
        if (!mu.empty())
            config.mu = parse_list(mu, "--mu");
        if (dmax >= 0)
            config.dmax = dmax;
        config.format = format;
        if (!cache_dir.empty())
            config.cache_dir = cache_dir;
        config.threads = threads;
        config.seed = seed;
        config.max_rank = max_rank;
        weightvar::apply_environment(config);
    } catch (const weightvar::error& e) {
        std::cerr << weightvar::error_json(weightvar::errc_name(e.code()), e.message());
        return weightvar::exit_code(e.code());
    }
    return weightvar::run(config, std::cout, std::cerr);
}
