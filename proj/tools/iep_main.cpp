#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "iep/driver.hpp"

namespace {

std::vector<iep::Int> parse_prime_list(const std::string& arg) {
    std::vector<iep::Int> out;
    std::string cur;
    for (char ch : arg + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.emplace_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver for the isogenous embedding problem"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run the main algorithm for a field config");
    std::string config_path, primes_arg, out_path, format;
    int jobs = 0;
    bool strict = false, no_two = false;
    run_cmd->add_option("config", config_path, "JSON config file")->required();
    run_cmd->add_option("--primes", primes_arg, "comma-separated prime list (overrides config)");
    run_cmd->add_option("--out", out_path, "output file (default stdout)");
    run_cmd->add_option("--format", format, "json|csv");
    run_cmd->add_option("--jobs", jobs, "worker count");
    run_cmd->add_flag("--strict-equivalence", strict, "only merge provably conjugate solutions");
    run_cmd->add_flag("--no-two", no_two, "exclude p = 2 from the auto budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        iep::RunConfig cfg = iep::load_config_file(config_path);
        if (!primes_arg.empty()) {
            try {
                cfg.primes = parse_prime_list(primes_arg);
            } catch (const std::invalid_argument&) {
                throw iep::config_error("--primes expects a comma-separated integer list");
            }
        }
        if (!out_path.empty()) cfg.output = out_path;
        if (!format.empty()) {
            if (format != "json" && format != "csv")
                throw iep::config_error("--format must be json or csv");
            cfg.format = format;
        }
        if (jobs > 0) cfg.jobs = jobs;
        if (strict) cfg.strict_equivalence = true;
        if (no_two) cfg.include_two = false;

        const iep::SolutionReport report = iep::run(cfg);
        const std::string doc = iep::serialize_report(report, cfg, cfg.format);
        if (cfg.output.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(cfg.output);
            if (!out) throw iep::config_error("cannot write output file: " + cfg.output);
            out << doc;
        }
        for (const auto& pr : report.per_prime)
            if (pr.internal_failure) {
                std::cerr << "internal invariant violation at p = " << pr.p.get_str() << ": "
                          << pr.error << "\n";
                return 3;
            }
        return 0;
    } catch (const iep::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const iep::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
